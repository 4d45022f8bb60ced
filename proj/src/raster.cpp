#include "spotpaint/raster.hpp"

#include <stdexcept>

namespace spotpaint {

std::optional<ChannelMask> ChannelMask::parse(std::string_view text) {
    ChannelMask mask{false, false, false};
    for (char ch : text) {
        switch (ch) {
        case 'r': mask.r = true; break;
        case 'g': mask.g = true; break;
        case 'b': mask.b = true; break;
        default: return std::nullopt;
        }
    }
    if (!mask.any()) {
        return std::nullopt;
    }
    return mask;
}

std::string ChannelMask::to_string() const {
    std::string s;
    if (r) s += 'r';
    if (g) s += 'g';
    if (b) s += 'b';
    return s;
}

Raster::Raster(int width, int height, Rgb fill) : width_(width), height_(height) {
    if (width < 1 || height < 1) {
        throw std::invalid_argument("raster dimensions must be at least 1x1");
    }
    data_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < data_.size(); i += 3) {
        data_[i] = fill.r;
        data_[i + 1] = fill.g;
        data_[i + 2] = fill.b;
    }
}

std::size_t Raster::offset(int x, int y) const {
    if (!in_bounds(x, y)) {
        throw std::out_of_range("pixel (" + std::to_string(x) + ", " + std::to_string(y) +
                                ") outside " + std::to_string(width_) + "x" +
                                std::to_string(height_) + " raster");
    }
    return (static_cast<std::size_t>(y) * width_ + x) * 3;
}

std::uint8_t Raster::tone(int x, int y, Channel c) const {
    return data_[offset(x, y) + static_cast<int>(c)];
}

void Raster::set_tone(int x, int y, Channel c, std::uint8_t value) {
    data_[offset(x, y) + static_cast<int>(c)] = value;
}

Rgb Raster::pixel(int x, int y) const {
    const std::size_t at = offset(x, y);
    return Rgb{data_[at], data_[at + 1], data_[at + 2]};
}

void Raster::set_pixel(int x, int y, Rgb value) {
    const std::size_t at = offset(x, y);
    data_[at] = value.r;
    data_[at + 1] = value.g;
    data_[at + 2] = value.b;
}

int clamp_coord(std::int64_t v, int limit) {
    if (limit < 1) {
        throw std::invalid_argument("clamp_coord limit must be >= 1");
    }
    if (v < 0) return 0;
    if (v > limit - 1) return limit - 1;
    return static_cast<int>(v);
}

Rgb mean_color(const Raster& r) {
    std::uint64_t sum[3] = {0, 0, 0};
    const auto& bytes = r.bytes();
    for (std::size_t i = 0; i < bytes.size(); i += 3) {
        sum[0] += bytes[i];
        sum[1] += bytes[i + 1];
        sum[2] += bytes[i + 2];
    }
    const std::uint64_t n = static_cast<std::uint64_t>(r.pixel_count());
    return Rgb{static_cast<std::uint8_t>(sum[0] / n),
               static_cast<std::uint8_t>(sum[1] / n),
               static_cast<std::uint8_t>(sum[2] / n)};
}

}  // namespace spotpaint
