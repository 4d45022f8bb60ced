#ifndef SPOTPAINT_SAMPLER_HPP
#define SPOTPAINT_SAMPLER_HPP

#include <vector>

#include "spotpaint/raster.hpp"
#include "spotpaint/rng.hpp"

namespace spotpaint {

/// Per-pass sampling parameters: stride range of the regular grid and the
/// half-width of the random displacement applied to every grid point.
struct GridParams {
    int stride_min = 1;
    int stride_max = 1;
    int jitter = 0;
};

/// Throws std::invalid_argument unless 1 <= stride_min <= stride_max and jitter >= 0.
void validate(const GridParams& p);

/// A grid point together with its randomly displaced counterpart. The
/// displaced point is always inside the image (clamped to the border).
struct SamplePoint {
    PixelCoord grid;
    PixelCoord jittered;
    bool operator==(const SamplePoint&) const = default;
};

/// Draws the stride for one pass, uniform in [stride_min, stride_max]. One draw.
int draw_stride(RngStream& g, const GridParams& p);

/// All lattice points (i*s, j*s) inside the image, row-major (y outer, x inner).
/// Deterministic; consumes no randomness.
std::vector<PixelCoord> grid_points(int width, int height, int stride);

/// Displaces p by two uniform draws from [-jitter, +jitter] (x first, then y)
/// and clamps the result into the image. Consumes exactly two draws.
PixelCoord jitter_point(RngStream& g, PixelCoord p, int jitter, int width, int height);

struct PassSample {
    int stride = 0;
    std::vector<SamplePoint> points;
};

/// One pass worth of sample points. Draw order is fixed: stride first, then
/// per grid point in row-major order the x displacement, then the y one.
PassSample sample_pass(RngStream& g, int width, int height, const GridParams& p);

}  // namespace spotpaint

#endif
