#ifndef SPOTPAINT_RASTER_HPP
#define SPOTPAINT_RASTER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spotpaint {

enum class Channel : int { R = 0, G = 1, B = 2 };

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
    bool operator==(const Rgb&) const = default;
};

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// Nonempty subset of the R, G, B channels a painter is allowed to write.
struct ChannelMask {
    bool r = true;
    bool g = true;
    bool b = true;

    bool contains(Channel c) const {
        switch (c) {
        case Channel::R: return r;
        case Channel::G: return g;
        case Channel::B: return b;
        }
        return false;
    }
    bool any() const { return r || g || b; }

    // Accepts any nonempty combination of the letters r, g, b ("r", "gb", "rgb", ...).
    static std::optional<ChannelMask> parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const ChannelMask&) const = default;
};

/**
 * 8-bit RGB image with row-major storage, three bytes per pixel.
 * Coordinates are 0-based; (0,0) is the top-left corner.
 */
class Raster {
public:
    Raster(int width, int height, Rgb fill = Rgb{255, 255, 255});

    int width() const noexcept { return width_; }
    int height() const noexcept { return height_; }
    std::int64_t pixel_count() const noexcept {
        return static_cast<std::int64_t>(width_) * height_;
    }
    bool in_bounds(int x, int y) const noexcept {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }

    std::uint8_t tone(int x, int y, Channel c) const;
    void set_tone(int x, int y, Channel c, std::uint8_t value);

    Rgb pixel(int x, int y) const;
    void set_pixel(int x, int y, Rgb value);

    const std::vector<std::uint8_t>& bytes() const noexcept { return data_; }
    std::vector<std::uint8_t>& bytes() noexcept { return data_; }

    bool operator==(const Raster&) const = default;

private:
    std::size_t offset(int x, int y) const;  // throws std::out_of_range

    int width_;
    int height_;
    std::vector<std::uint8_t> data_;
};

/// Clamps a signed coordinate into [0, limit-1]. limit must be >= 1.
int clamp_coord(std::int64_t v, int limit);

/// Per-channel arithmetic mean over all pixels, rounded down.
Rgb mean_color(const Raster& r);

}  // namespace spotpaint

#endif
