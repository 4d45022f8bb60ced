#include "spotpaint/sampler.hpp"

#include <stdexcept>

namespace spotpaint {

void validate(const GridParams& p) {
    if (p.stride_min < 1) {
        throw std::invalid_argument("stride_min must be >= 1");
    }
    if (p.stride_max < p.stride_min) {
        throw std::invalid_argument("stride_max must be >= stride_min");
    }
    if (p.jitter < 0) {
        throw std::invalid_argument("jitter must be >= 0");
    }
}

int draw_stride(RngStream& g, const GridParams& p) {
    return static_cast<int>(g.next_int_inclusive(p.stride_min, p.stride_max));
}

std::vector<PixelCoord> grid_points(int width, int height, int stride) {
    if (stride < 1) {
        throw std::invalid_argument("stride must be >= 1");
    }
    const int nx = (width + stride - 1) / stride;
    const int ny = (height + stride - 1) / stride;
    std::vector<PixelCoord> points;
    points.reserve(static_cast<std::size_t>(nx) * ny);
    for (int y = 0; y < height; y += stride) {
        for (int x = 0; x < width; x += stride) {
            points.push_back({x, y});
        }
    }
    return points;
}

PixelCoord jitter_point(RngStream& g, PixelCoord p, int jitter, int width, int height) {
    const std::int64_t dx = g.next_int_inclusive(-jitter, jitter);
    const std::int64_t dy = g.next_int_inclusive(-jitter, jitter);
    return PixelCoord{clamp_coord(p.x + dx, width), clamp_coord(p.y + dy, height)};
}

PassSample sample_pass(RngStream& g, int width, int height, const GridParams& p) {
    validate(p);
    PassSample out;
    out.stride = draw_stride(g, p);
    std::vector<PixelCoord> grid = grid_points(width, height, out.stride);
    out.points.reserve(grid.size());
    for (PixelCoord gp : grid) {
        out.points.push_back({gp, jitter_point(g, gp, p.jitter, width, height)});
    }
    return out;
}

}  // namespace spotpaint
