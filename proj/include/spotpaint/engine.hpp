#ifndef SPOTPAINT_ENGINE_HPP
#define SPOTPAINT_ENGINE_HPP

#include <cstdint>
#include <vector>

#include "spotpaint/raster.hpp"
#include "spotpaint/rng.hpp"
#include "spotpaint/sampler.hpp"
#include "spotpaint/spots.hpp"

namespace spotpaint {

enum class SpotMode {
    Circle,
    RectSource,
    RectDisplaced,
    ThreshSource,
    ThreshDisplaced,
};

enum class BackgroundMode {
    White,       // blank white canvas
    MeanHue,     // uniform fill with the source's mean colour
    SourceCopy,  // start from a copy of the source
};

/// When to stop iterating passes: after an exact number of them, or once the
/// covered fraction of the canvas reaches a target (bounded by max passes).
struct StopRule {
    enum class Kind { FixedPasses, CoverageTarget };

    Kind kind = Kind::FixedPasses;
    int passes = 1;       // FixedPasses: exact count; CoverageTarget: upper bound
    double target = 1.0;  // CoverageTarget only

    static StopRule fixed(int passes) {
        return StopRule{Kind::FixedPasses, passes, 1.0};
    }
    static StopRule until_coverage(double target, int max_passes) {
        return StopRule{Kind::CoverageTarget, max_passes, target};
    }
};

struct RenderConfig {
    SpotMode mode = SpotMode::Circle;
    BackgroundMode background = BackgroundMode::White;
    std::uint64_t seed = 0;
    GridParams grid;
    int radius = 3;             // Circle mode
    RectParams rect;            // Rect* modes
    ThresholdParams threshold;  // Thresh* modes
    ChannelMask channels;
    StopRule stop;
};

/// Validates the grid, the channel mask, the stop rule, and the parameter
/// group of the active mode (other groups are ignored). Throws
/// std::invalid_argument on the first violation.
void validate(const RenderConfig& cfg);

/// Per-pixel record of which canvas pixels any spot has written so far.
/// Bits only ever flip from uncovered to covered.
class CoverMap {
public:
    CoverMap(int width, int height);

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }

    void mark(PixelCoord p);
    bool covered(int x, int y) const;
    std::int64_t painted_count() const noexcept { return count_; }

private:
    int width_;
    int height_;
    std::vector<std::uint8_t> painted_;
    std::int64_t count_ = 0;
};

/// Covered pixels / total pixels, in [0, 1].
double coverage_fraction(const CoverMap& cover);

struct PassReport {
    int pass_index = 0;
    int stride_used = 0;
    std::int64_t spots_painted = 0;   // painter calls that wrote at least one pixel
    std::int64_t pixels_written = 0;  // total pixel writes, overlaps not deduplicated
    double coverage = 0.0;            // after this pass
};

/// Fresh canvas of the source's dimensions, initialized per the mode.
Raster init_background(const Raster& src, BackgroundMode mode);

/// Runs one pass: samples the jittered grid, stamps one spot per sample point
/// (rect and threshold modes run once per selected channel, in R, G, B order),
/// marks every written pixel in the cover map, and reports what happened.
PassReport run_pass(const Raster& src, Raster& canvas, CoverMap& cover,
                    RngStream& g, const RenderConfig& cfg, int pass_index = 0);

struct RenderResult {
    Raster canvas;
    std::vector<PassReport> reports;
};

/// Full render: initializes the background and iterates passes until the stop
/// rule fires. Deterministic function of (src, cfg); equal seeds give
/// bit-identical canvases.
RenderResult render(const Raster& src, const RenderConfig& cfg);

}  // namespace spotpaint

#endif
