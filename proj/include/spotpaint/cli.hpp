#ifndef SPOTPAINT_CLI_HPP
#define SPOTPAINT_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spotpaint/engine.hpp"

namespace spotpaint::cli {

/// Bad flags, bad values, or an invalid parameter combination. Maps to exit 1.
class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raw option values as given on the command line or in a config file,
/// before validation. Every field is optional so that a config file and the
/// flags can be merged (flags win) before resolving.
struct Invocation {
    std::optional<std::string> input;
    std::optional<std::string> output;
    std::optional<std::string> report;
    std::optional<std::string> config;
    std::optional<std::string> mode;
    std::optional<std::string> background;
    std::optional<std::string> channels;
    std::optional<std::uint64_t> seed;
    std::optional<int> stride_min;
    std::optional<int> stride_max;
    std::optional<int> jitter;
    std::optional<int> radius;
    std::optional<int> lambda;
    std::optional<int> lambda_small;
    std::optional<int> lambda_big;
    std::optional<double> tau;
    std::optional<int> pi;
    std::optional<double> tau_prime;
    std::optional<int> passes;
    std::optional<double> coverage;
    std::optional<int> max_passes;
};

/// Parses command-line flags only. Throws UsageError on unknown flags,
/// missing values, or unparseable numbers.
Invocation parse_flags(const std::vector<std::string>& args);

/// Parses a key=value config file (same keys as the flags without the
/// leading dashes, # comments, blank lines allowed).
Invocation parse_config_text(const std::string& text);

/// Overlays flag values on top of config-file values.
Invocation merge(Invocation from_file, const Invocation& from_flags);

/// A fully validated run: where to read and write, and the render config.
/// When the seed was not given explicitly the caller draws one and discloses it.
struct RunPlan {
    std::string input;
    std::string output;
    std::optional<std::string> report;
    RenderConfig config;
    bool seed_explicit = false;
};

/// Validates a merged invocation into a runnable plan. Throws UsageError
/// listing every missing required flag, or describing the first bad value.
RunPlan resolve(const Invocation& inv);

/// parse_flags + config file load + merge + resolve.
RunPlan parse_invocation(const std::vector<std::string>& args);

/// The run report: resolved configuration followed by one line per pass.
std::string format_report(const RunPlan& plan, int width, int height,
                          const std::vector<PassReport>& reports);

std::string usage_text();

/// Full CLI entry point. Returns the process exit code:
/// 0 success, 1 usage/validation error, 2 I/O or image-format error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spotpaint::cli

#endif
