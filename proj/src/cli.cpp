#include "spotpaint/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string_view>

#include "spotpaint/ppm.hpp"

namespace spotpaint::cli {

namespace {

int parse_int(const std::string& key, const std::string& value) {
    int out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError("invalid integer for --" + key + ": '" + value + "'");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t out = 0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError("invalid unsigned integer for --" + key + ": '" + value + "'");
    }
    return out;
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* end = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        throw UsageError("invalid number for --" + key + ": '" + value + "'");
    }
    return out;
}

// One entry per option; flags and config-file keys share these names.
void assign(Invocation& inv, const std::string& key, const std::string& value) {
    if (key == "input") inv.input = value;
    else if (key == "output") inv.output = value;
    else if (key == "report") inv.report = value;
    else if (key == "config") inv.config = value;
    else if (key == "mode") inv.mode = value;
    else if (key == "background") inv.background = value;
    else if (key == "channels") inv.channels = value;
    else if (key == "seed") inv.seed = parse_u64(key, value);
    else if (key == "s-min") inv.stride_min = parse_int(key, value);
    else if (key == "s-max") inv.stride_max = parse_int(key, value);
    else if (key == "delta") inv.jitter = parse_int(key, value);
    else if (key == "rho") inv.radius = parse_int(key, value);
    else if (key == "lambda") inv.lambda = parse_int(key, value);
    else if (key == "lambda-small") inv.lambda_small = parse_int(key, value);
    else if (key == "lambda-big") inv.lambda_big = parse_int(key, value);
    else if (key == "tau") inv.tau = parse_double(key, value);
    else if (key == "pi") inv.pi = parse_int(key, value);
    else if (key == "tau-prime") inv.tau_prime = parse_double(key, value);
    else if (key == "passes") inv.passes = parse_int(key, value);
    else if (key == "coverage") inv.coverage = parse_double(key, value);
    else if (key == "max-passes") inv.max_passes = parse_int(key, value);
    else throw UsageError("unknown option '--" + key + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

template <typename T>
void overlay(std::optional<T>& base, const std::optional<T>& over) {
    if (over) {
        base = over;
    }
}

SpotMode parse_mode(const std::string& text) {
    if (text == "circle") return SpotMode::Circle;
    if (text == "rect-source") return SpotMode::RectSource;
    if (text == "rect-displaced") return SpotMode::RectDisplaced;
    if (text == "thresh-source") return SpotMode::ThreshSource;
    if (text == "thresh-displaced") return SpotMode::ThreshDisplaced;
    throw UsageError("unknown mode '" + text +
                     "' (expected circle, rect-source, rect-displaced, "
                     "thresh-source or thresh-displaced)");
}

BackgroundMode parse_background(const std::string& text) {
    if (text == "white") return BackgroundMode::White;
    if (text == "mean") return BackgroundMode::MeanHue;
    if (text == "source") return BackgroundMode::SourceCopy;
    throw UsageError("unknown background '" + text + "' (expected white, mean or source)");
}

std::string fmt_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::uint64_t entropy_seed() {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

Invocation parse_flags(const std::vector<std::string>& args) {
    Invocation inv;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg.size() < 3 || arg[0] != '-' || arg[1] != '-') {
            throw UsageError("unexpected argument '" + arg + "' (options start with --)");
        }
        if (i + 1 >= args.size()) {
            throw UsageError("option '" + arg + "' requires a value");
        }
        assign(inv, arg.substr(2), args[++i]);
    }
    return inv;
}

Invocation parse_config_text(const std::string& text) {
    Invocation inv;
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        std::string_view body = line;
        if (const auto hash = body.find('#'); hash != std::string_view::npos) {
            body = body.substr(0, hash);
        }
        body = trim(body);
        if (body.empty()) {
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string_view::npos) {
            throw UsageError("config file line " + std::to_string(line_no) +
                             ": expected key=value, got '" + std::string(body) + "'");
        }
        const std::string key{trim(body.substr(0, eq))};
        const std::string value{trim(body.substr(eq + 1))};
        if (key == "config") {
            throw UsageError("config file cannot set 'config'");
        }
        assign(inv, key, value);
    }
    return inv;
}

Invocation merge(Invocation from_file, const Invocation& from_flags) {
    overlay(from_file.input, from_flags.input);
    overlay(from_file.output, from_flags.output);
    overlay(from_file.report, from_flags.report);
    overlay(from_file.config, from_flags.config);
    overlay(from_file.mode, from_flags.mode);
    overlay(from_file.background, from_flags.background);
    overlay(from_file.channels, from_flags.channels);
    overlay(from_file.seed, from_flags.seed);
    overlay(from_file.stride_min, from_flags.stride_min);
    overlay(from_file.stride_max, from_flags.stride_max);
    overlay(from_file.jitter, from_flags.jitter);
    overlay(from_file.radius, from_flags.radius);
    overlay(from_file.lambda, from_flags.lambda);
    overlay(from_file.lambda_small, from_flags.lambda_small);
    overlay(from_file.lambda_big, from_flags.lambda_big);
    overlay(from_file.tau, from_flags.tau);
    overlay(from_file.pi, from_flags.pi);
    overlay(from_file.tau_prime, from_flags.tau_prime);
    overlay(from_file.passes, from_flags.passes);
    overlay(from_file.coverage, from_flags.coverage);
    overlay(from_file.max_passes, from_flags.max_passes);
    return from_file;
}

RunPlan resolve(const Invocation& inv) {
    std::vector<std::string> missing;
    auto require = [&](bool present, const char* flag) {
        if (!present) {
            missing.push_back(flag);
        }
    };

    require(inv.input.has_value(), "--input");
    require(inv.output.has_value(), "--output");
    require(inv.mode.has_value(), "--mode");
    require(inv.stride_min.has_value(), "--s-min");
    require(inv.stride_max.has_value(), "--s-max");
    require(inv.jitter.has_value(), "--delta");

    std::optional<SpotMode> mode;
    if (inv.mode) {
        mode = parse_mode(*inv.mode);
        switch (*mode) {
        case SpotMode::Circle:
            require(inv.radius.has_value(), "--rho");
            break;
        case SpotMode::RectSource:
        case SpotMode::RectDisplaced:
            require(inv.lambda.has_value(), "--lambda");
            require(inv.lambda_small.has_value(), "--lambda-small");
            require(inv.lambda_big.has_value(), "--lambda-big");
            require(inv.tau.has_value(), "--tau");
            break;
        case SpotMode::ThreshSource:
        case SpotMode::ThreshDisplaced:
            require(inv.pi.has_value(), "--pi");
            require(inv.tau_prime.has_value(), "--tau-prime");
            break;
        }
    }

    if (inv.passes && (inv.coverage || inv.max_passes)) {
        throw UsageError("--passes and --coverage/--max-passes are mutually exclusive");
    }
    if (!inv.passes) {
        if (inv.coverage && !inv.max_passes) {
            throw UsageError("--coverage requires --max-passes");
        }
        if (inv.max_passes && !inv.coverage) {
            throw UsageError("--max-passes requires --coverage");
        }
        if (!inv.coverage && !inv.max_passes) {
            missing.push_back("--passes (or --coverage with --max-passes)");
        }
    }

    if (!missing.empty()) {
        std::string message = "missing required flags: ";
        for (std::size_t i = 0; i < missing.size(); ++i) {
            if (i > 0) {
                message += ", ";
            }
            message += missing[i];
        }
        throw UsageError(message);
    }

    RunPlan plan;
    plan.input = *inv.input;
    plan.output = *inv.output;
    plan.report = inv.report;

    RenderConfig& cfg = plan.config;
    cfg.mode = *mode;
    cfg.background = inv.background ? parse_background(*inv.background) : BackgroundMode::White;
    cfg.grid = GridParams{*inv.stride_min, *inv.stride_max, *inv.jitter};
    if (inv.radius) cfg.radius = *inv.radius;
    if (inv.lambda) cfg.rect.lambda = *inv.lambda;
    if (inv.lambda_small) cfg.rect.lambda_small = *inv.lambda_small;
    if (inv.lambda_big) cfg.rect.lambda_big = *inv.lambda_big;
    if (inv.tau) cfg.rect.tau = *inv.tau;
    if (inv.pi) cfg.threshold.half_size = *inv.pi;
    if (inv.tau_prime) cfg.threshold.tau = *inv.tau_prime;
    cfg.stop = inv.passes ? StopRule::fixed(*inv.passes)
                          : StopRule::until_coverage(*inv.coverage, *inv.max_passes);

    if (inv.channels) {
        const auto mask = ChannelMask::parse(*inv.channels);
        if (!mask) {
            throw UsageError("invalid --channels '" + *inv.channels +
                             "': use a nonempty subset of \"rgb\"");
        }
        cfg.channels = *mask;
    }

    if (inv.seed) {
        cfg.seed = *inv.seed;
        plan.seed_explicit = true;
    }

    try {
        validate(cfg);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return plan;
}

RunPlan parse_invocation(const std::vector<std::string>& args) {
    const Invocation flags = parse_flags(args);
    if (!flags.config) {
        return resolve(flags);
    }
    std::ifstream in(*flags.config);
    if (!in) {
        throw IoError("cannot open config file " + *flags.config);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return resolve(merge(parse_config_text(buffer.str()), flags));
}

std::string format_report(const RunPlan& plan, int width, int height,
                          const std::vector<PassReport>& reports) {
    const RenderConfig& cfg = plan.config;
    std::ostringstream out;
    out << "# spotpaint run report\n";
    out << "report-version=1\n";
    out << "input=" << plan.input << "\n";
    out << "output=" << plan.output << "\n";

    const char* mode = nullptr;
    switch (cfg.mode) {
    case SpotMode::Circle: mode = "circle"; break;
    case SpotMode::RectSource: mode = "rect-source"; break;
    case SpotMode::RectDisplaced: mode = "rect-displaced"; break;
    case SpotMode::ThreshSource: mode = "thresh-source"; break;
    case SpotMode::ThreshDisplaced: mode = "thresh-displaced"; break;
    }
    out << "mode=" << mode << "\n";

    const char* background = nullptr;
    switch (cfg.background) {
    case BackgroundMode::White: background = "white"; break;
    case BackgroundMode::MeanHue: background = "mean"; break;
    case BackgroundMode::SourceCopy: background = "source"; break;
    }
    out << "background=" << background << "\n";
    out << "channels=" << cfg.channels.to_string() << "\n";
    out << "seed=" << cfg.seed << "\n";
    out << "s-min=" << cfg.grid.stride_min << "\n";
    out << "s-max=" << cfg.grid.stride_max << "\n";
    out << "delta=" << cfg.grid.jitter << "\n";

    switch (cfg.mode) {
    case SpotMode::Circle:
        out << "rho=" << cfg.radius << "\n";
        break;
    case SpotMode::RectSource:
    case SpotMode::RectDisplaced:
        out << "lambda=" << cfg.rect.lambda << "\n";
        out << "lambda-small=" << cfg.rect.lambda_small << "\n";
        out << "lambda-big=" << cfg.rect.lambda_big << "\n";
        out << "tau=" << fmt_double(cfg.rect.tau) << "\n";
        break;
    case SpotMode::ThreshSource:
    case SpotMode::ThreshDisplaced:
        out << "pi=" << cfg.threshold.half_size << "\n";
        out << "tau-prime=" << fmt_double(cfg.threshold.tau) << "\n";
        break;
    }

    if (cfg.stop.kind == StopRule::Kind::FixedPasses) {
        out << "stop=passes\n";
        out << "passes=" << cfg.stop.passes << "\n";
    } else {
        out << "stop=coverage\n";
        out << "coverage=" << fmt_double(cfg.stop.target) << "\n";
        out << "max-passes=" << cfg.stop.passes << "\n";
    }

    out << "image-width=" << width << "\n";
    out << "image-height=" << height << "\n";
    out << "passes-run=" << reports.size() << "\n";
    out << "final-coverage="
        << fmt_double(reports.empty() ? 0.0 : reports.back().coverage) << "\n";
    for (const PassReport& r : reports) {
        out << "pass=" << r.pass_index << " stride=" << r.stride_used
            << " spots=" << r.spots_painted << " pixels=" << r.pixels_written
            << " coverage=" << fmt_double(r.coverage) << "\n";
    }
    return out.str();
}

std::string usage_text() {
    return
        "usage: spotpaint --input IN.ppm --output OUT.ppm --mode MODE [options]\n"
        "\n"
        "modes: circle, rect-source, rect-displaced, thresh-source, thresh-displaced\n"
        "\n"
        "required for every mode:\n"
        "  --input PATH          source image (binary PPM, P6, maxval 255)\n"
        "  --output PATH         rendered image (PPM)\n"
        "  --mode MODE           spot shape / rendering rule\n"
        "  --s-min N             smallest per-pass grid stride (>= 1)\n"
        "  --s-max N             largest per-pass grid stride (>= s-min)\n"
        "  --delta N             jitter half-width for spot centres (>= 0)\n"
        "  --passes N            run exactly N passes, or instead:\n"
        "  --coverage F          stop once the covered fraction reaches F in [0,1]\n"
        "  --max-passes N        pass bound for --coverage\n"
        "\n"
        "mode parameters:\n"
        "  --rho N               circle: spot radius in pixels (>= 0)\n"
        "  --lambda N            rect: contrast probe distance and neutral side\n"
        "  --lambda-small N      rect: side under contrast (lambda-small < lambda)\n"
        "  --lambda-big N        rect: stretched side (lambda-big > lambda)\n"
        "  --tau F               rect: contrast threshold (>= 0)\n"
        "  --pi N                thresh: neighbourhood half-size (>= 1)\n"
        "  --tau-prime F         thresh: repaint threshold (>= 0)\n"
        "\n"
        "other options:\n"
        "  --background NAME     white (default), mean, or source\n"
        "  --channels SET        nonempty subset of rgb (default rgb)\n"
        "  --seed N              64-bit seed; chosen and disclosed when omitted\n"
        "  --report PATH         write a replayable key=value run report\n"
        "  --config PATH         key=value defaults (same keys, flags override)\n"
        "  --help                show this text\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    for (const std::string& arg : args) {
        if (arg == "--help" || arg == "-h") {
            out << usage_text();
            return 0;
        }
    }

    RunPlan plan;
    try {
        plan = parse_invocation(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << usage_text();
        return 1;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    if (!plan.seed_explicit) {
        plan.config.seed = entropy_seed();
    }
    // Disclose the seed up front so any run can be reproduced.
    out << "seed=" << plan.config.seed << "\n";

    try {
        const Raster src = load_ppm(plan.input);
        const RenderResult result = render(src, plan.config);
        save_ppm(result.canvas, plan.output);
        if (plan.report) {
            std::ofstream rep(*plan.report, std::ios::trunc);
            if (!rep) {
                throw IoError("cannot open " + *plan.report + " for writing");
            }
            rep << format_report(plan, src.width(), src.height(), result.reports);
            rep.flush();
            if (!rep) {
                throw IoError("error while writing " + *plan.report);
            }
        }
        out << "passes-run=" << result.reports.size() << "\n";
        out << "final-coverage="
            << fmt_double(result.reports.empty() ? 0.0 : result.reports.back().coverage)
            << "\n";
    } catch (const PpmError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace spotpaint::cli
