#include "spotpaint/engine.hpp"

#include <array>
#include <stdexcept>

namespace spotpaint {

namespace {

constexpr std::array<Channel, 3> kChannelOrder{Channel::R, Channel::G, Channel::B};

void validate(const StopRule& stop) {
    switch (stop.kind) {
    case StopRule::Kind::FixedPasses:
        if (stop.passes < 1) {
            throw std::invalid_argument("pass count must be >= 1");
        }
        break;
    case StopRule::Kind::CoverageTarget:
        if (stop.target < 0.0 || stop.target > 1.0) {
            throw std::invalid_argument("coverage target must be in [0, 1]");
        }
        if (stop.passes < 1) {
            throw std::invalid_argument("max passes must be >= 1");
        }
        break;
    }
}

}  // namespace

void validate(const RenderConfig& cfg) {
    validate(cfg.grid);
    if (!cfg.channels.any()) {
        throw std::invalid_argument("at least one channel must be selected");
    }
    switch (cfg.mode) {
    case SpotMode::Circle:
        if (cfg.radius < 0) {
            throw std::invalid_argument("circle radius must be >= 0");
        }
        break;
    case SpotMode::RectSource:
    case SpotMode::RectDisplaced:
        validate(cfg.rect);
        break;
    case SpotMode::ThreshSource:
    case SpotMode::ThreshDisplaced:
        validate(cfg.threshold);
        break;
    }
    validate(cfg.stop);
}

CoverMap::CoverMap(int width, int height) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("cover map dimensions must be at least 1x1");
    }
    painted_.assign(static_cast<std::size_t>(width) * height, 0);
}

void CoverMap::mark(PixelCoord p) {
    std::uint8_t& bit = painted_[static_cast<std::size_t>(p.y) * width_ + p.x];
    if (!bit) {
        bit = 1;
        ++count_;
    }
}

bool CoverMap::covered(int x, int y) const {
    return painted_[static_cast<std::size_t>(y) * width_ + x] != 0;
}

double coverage_fraction(const CoverMap& cover) {
    return static_cast<double>(cover.painted_count()) /
           (static_cast<double>(cover.width()) * cover.height());
}

Raster init_background(const Raster& src, BackgroundMode mode) {
    switch (mode) {
    case BackgroundMode::White:
        return Raster(src.width(), src.height(), Rgb{255, 255, 255});
    case BackgroundMode::MeanHue:
        return Raster(src.width(), src.height(), mean_color(src));
    case BackgroundMode::SourceCopy:
        return src;
    }
    throw std::invalid_argument("unknown background mode");
}

PassReport run_pass(const Raster& src, Raster& canvas, CoverMap& cover,
                    RngStream& g, const RenderConfig& cfg, int pass_index) {
    PassReport report;
    report.pass_index = pass_index;

    const PassSample sample = sample_pass(g, src.width(), src.height(), cfg.grid);
    report.stride_used = sample.stride;

    auto absorb = [&](const std::vector<PixelCoord>& painted) {
        for (PixelCoord p : painted) {
            cover.mark(p);
        }
        report.pixels_written += static_cast<std::int64_t>(painted.size());
        if (!painted.empty()) {
            ++report.spots_painted;
        }
    };

    for (const SamplePoint& sp : sample.points) {
        switch (cfg.mode) {
        case SpotMode::Circle:
            absorb(paint_circle(canvas, src, sp, cfg.radius, cfg.channels));
            break;
        case SpotMode::RectSource:
        case SpotMode::RectDisplaced: {
            const SpotVariant variant = cfg.mode == SpotMode::RectSource
                                            ? SpotVariant::Source
                                            : SpotVariant::Displaced;
            for (Channel c : kChannelOrder) {
                if (cfg.channels.contains(c)) {
                    absorb(paint_rect(canvas, src, sp, cfg.rect, variant, c));
                }
            }
            break;
        }
        case SpotMode::ThreshSource:
        case SpotMode::ThreshDisplaced: {
            const SpotVariant variant = cfg.mode == SpotMode::ThreshSource
                                            ? SpotVariant::Source
                                            : SpotVariant::Displaced;
            for (Channel c : kChannelOrder) {
                if (cfg.channels.contains(c)) {
                    absorb(paint_threshold(canvas, src, sp, cfg.threshold, variant, c));
                }
            }
            break;
        }
        }
    }

    report.coverage = coverage_fraction(cover);
    return report;
}

RenderResult render(const Raster& src, const RenderConfig& cfg) {
    validate(cfg);

    RenderResult result{init_background(src, cfg.background), {}};
    CoverMap cover(src.width(), src.height());
    RngStream g(cfg.seed);

    switch (cfg.stop.kind) {
    case StopRule::Kind::FixedPasses:
        for (int i = 0; i < cfg.stop.passes; ++i) {
            result.reports.push_back(run_pass(src, result.canvas, cover, g, cfg, i));
        }
        break;
    case StopRule::Kind::CoverageTarget:
        while (static_cast<int>(result.reports.size()) < cfg.stop.passes &&
               coverage_fraction(cover) < cfg.stop.target) {
            result.reports.push_back(run_pass(src, result.canvas, cover, g, cfg,
                                              static_cast<int>(result.reports.size())));
        }
        break;
    }
    return result;
}

}  // namespace spotpaint
