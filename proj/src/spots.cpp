#include "spotpaint/spots.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace spotpaint {

void validate(const RectParams& p) {
    if (p.lambda_small < 1) {
        throw std::invalid_argument("lambda-small must be >= 1");
    }
    if (!(p.lambda_small < p.lambda && p.lambda < p.lambda_big)) {
        throw std::invalid_argument("rect mode requires lambda-small < lambda < lambda-big");
    }
    if (p.tau < 0.0) {
        throw std::invalid_argument("tau must be >= 0");
    }
}

void validate(const ThresholdParams& p) {
    if (p.half_size < 1) {
        throw std::invalid_argument("pi must be >= 1");
    }
    if (p.tau < 0.0) {
        throw std::invalid_argument("tau-prime must be >= 0");
    }
}

double relative_diff(std::uint8_t reference, std::uint8_t other) {
    if (reference == 0) {
        return other == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return std::abs(static_cast<int>(other) - static_cast<int>(reference)) /
           static_cast<double>(reference);
}

ContrastPair contrast_pair(const Raster& src, PixelCoord p, int probe, Channel c) {
    const std::uint8_t center = src.tone(p.x, p.y, c);
    const std::uint8_t right =
        src.tone(clamp_coord(static_cast<std::int64_t>(p.x) + probe, src.width()), p.y, c);
    const std::uint8_t below =
        src.tone(p.x, clamp_coord(static_cast<std::int64_t>(p.y) + probe, src.height()), c);
    return ContrastPair{relative_diff(center, right), relative_diff(center, below)};
}

SpotSize rect_dims(double contrast_h, double contrast_v, const RectParams& p) {
    const bool flat_h = contrast_h <= p.tau;
    const bool flat_v = contrast_v <= p.tau;
    if (flat_h && flat_v) return SpotSize{p.lambda, p.lambda};
    if (!flat_h && !flat_v) return SpotSize{p.lambda_small, p.lambda_small};
    if (flat_h) return SpotSize{p.lambda_big, p.lambda_small};
    return SpotSize{p.lambda_small, p.lambda_big};
}

std::vector<PixelCoord> paint_circle(Raster& canvas, const Raster& src,
                                     const SamplePoint& sp, int radius,
                                     const ChannelMask& mask) {
    const Rgb tone = src.pixel(sp.grid.x, sp.grid.y);
    const PixelCoord center = sp.jittered;
    const std::int64_t r2 = static_cast<std::int64_t>(radius) * radius;

    std::vector<PixelCoord> painted;
    const int y_lo = std::max(center.y - radius, 0);
    const int y_hi = std::min(center.y + radius, canvas.height() - 1);
    const int x_lo = std::max(center.x - radius, 0);
    const int x_hi = std::min(center.x + radius, canvas.width() - 1);
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            const std::int64_t dx = x - center.x;
            const std::int64_t dy = y - center.y;
            if (dx * dx + dy * dy > r2) {
                continue;
            }
            if (mask.r) canvas.set_tone(x, y, Channel::R, tone.r);
            if (mask.g) canvas.set_tone(x, y, Channel::G, tone.g);
            if (mask.b) canvas.set_tone(x, y, Channel::B, tone.b);
            painted.push_back({x, y});
        }
    }
    return painted;
}

std::vector<PixelCoord> paint_rect(Raster& canvas, const Raster& src,
                                   const SamplePoint& sp, const RectParams& p,
                                   SpotVariant variant, Channel c) {
    const PixelCoord eval = variant == SpotVariant::Source ? sp.grid : sp.jittered;
    const ContrastPair contrast = contrast_pair(src, eval, p.lambda, c);
    const SpotSize size = rect_dims(contrast.horiz, contrast.vert, p);
    const std::uint8_t tone = src.tone(eval.x, eval.y, c);

    const int x_first = sp.jittered.x - size.width / 2;
    const int y_first = sp.jittered.y - size.height / 2;
    const int x_lo = std::max(x_first, 0);
    const int x_hi = std::min(x_first + size.width - 1, canvas.width() - 1);
    const int y_lo = std::max(y_first, 0);
    const int y_hi = std::min(y_first + size.height - 1, canvas.height() - 1);

    std::vector<PixelCoord> painted;
    painted.reserve(static_cast<std::size_t>(std::max(x_hi - x_lo + 1, 0)) *
                    std::max(y_hi - y_lo + 1, 0));
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            canvas.set_tone(x, y, c, tone);
            painted.push_back({x, y});
        }
    }
    return painted;
}

std::vector<PixelCoord> paint_threshold(Raster& canvas, const Raster& src,
                                        const SamplePoint& sp, const ThresholdParams& p,
                                        SpotVariant variant, Channel c) {
    const PixelCoord ref = variant == SpotVariant::Source ? sp.grid : sp.jittered;
    const std::uint8_t ref_tone = src.tone(ref.x, ref.y, c);

    const int x_lo = std::max(sp.jittered.x - p.half_size, 0);
    const int x_hi = std::min(sp.jittered.x + p.half_size, canvas.width() - 1);
    const int y_lo = std::max(sp.jittered.y - p.half_size, 0);
    const int y_hi = std::min(sp.jittered.y + p.half_size, canvas.height() - 1);

    std::vector<PixelCoord> painted;
    for (int y = y_lo; y <= y_hi; ++y) {
        for (int x = x_lo; x <= x_hi; ++x) {
            if (relative_diff(ref_tone, src.tone(x, y, c)) <= p.tau) {
                canvas.set_tone(x, y, c, ref_tone);
                painted.push_back({x, y});
            }
        }
    }
    return painted;
}

}  // namespace spotpaint
