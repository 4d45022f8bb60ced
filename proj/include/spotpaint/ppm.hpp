#ifndef SPOTPAINT_PPM_HPP
#define SPOTPAINT_PPM_HPP

#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "spotpaint/raster.hpp"

namespace spotpaint {

class PpmError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed header: wrong magic, bad numbers, missing separators.
class PpmFormatError : public PpmError {
    using PpmError::PpmError;
};

/// Structurally valid but with a maxval other than 255.
class PpmDepthError : public PpmError {
    using PpmError::PpmError;
};

/// Pixel payload shorter than width * height * 3 bytes.
class PpmTruncatedError : public PpmError {
    using PpmError::PpmError;
};

/// File could not be opened, read, or written.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Decodes a binary P6 PPM with maxval 255. Header comments (# to end of
/// line) are allowed; exactly one whitespace byte separates the maxval from
/// the pixel bytes. Trailing bytes after the payload are ignored.
Raster read_ppm(std::span<const std::uint8_t> bytes);

/// Canonical encoder: "P6\n<width> <height>\n255\n" followed by the raw RGB
/// bytes. read_ppm(write_ppm(r)) == r, and re-encoding is byte-identical.
std::vector<std::uint8_t> write_ppm(const Raster& r);

Raster load_ppm(const std::filesystem::path& path);
void save_ppm(const Raster& r, const std::filesystem::path& path);

}  // namespace spotpaint

#endif
