#include "spotpaint/ppm.hpp"

#include <cstring>
#include <fstream>
#include <string>

namespace spotpaint {

namespace {

bool is_ppm_space(std::uint8_t b) {
    return b == ' ' || b == '\t' || b == '\n' || b == '\r' || b == '\v' || b == '\f';
}

// Header token scanner: whitespace separates tokens, '#' starts a comment
// that runs to end of line.
class HeaderScanner {
public:
    explicit HeaderScanner(std::span<const std::uint8_t> bytes, std::size_t pos)
        : bytes_(bytes), pos_(pos) {}

    std::size_t pos() const { return pos_; }
    bool at_end() const { return pos_ >= bytes_.size(); }
    std::uint8_t peek() const { return bytes_[pos_]; }
    void advance() { ++pos_; }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (is_ppm_space(peek())) {
                advance();
            } else if (peek() == '#') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    // Decimal integer token, capped to keep width*height*3 inside 64 bits.
    std::int64_t read_number(const char* what) {
        skip_space_and_comments();
        if (at_end() || peek() < '0' || peek() > '9') {
            throw PpmFormatError(std::string("ppm header: expected ") + what);
        }
        std::int64_t value = 0;
        while (!at_end() && peek() >= '0' && peek() <= '9') {
            value = value * 10 + (peek() - '0');
            if (value > 1'000'000'000) {
                throw PpmFormatError(std::string("ppm header: ") + what + " too large");
            }
            advance();
        }
        return value;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_;
};

}  // namespace

Raster read_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        throw PpmFormatError("not a binary ppm: magic is not P6");
    }
    HeaderScanner scan(bytes, 2);
    if (scan.at_end() || (!is_ppm_space(scan.peek()) && scan.peek() != '#')) {
        throw PpmFormatError("ppm header: expected whitespace after magic");
    }

    const std::int64_t width = scan.read_number("width");
    const std::int64_t height = scan.read_number("height");
    const std::int64_t maxval = scan.read_number("maxval");
    if (width < 1 || height < 1) {
        throw PpmFormatError("ppm header: dimensions must be at least 1x1");
    }
    if (maxval != 255) {
        throw PpmDepthError("ppm: only maxval 255 is supported, got " +
                            std::to_string(maxval));
    }
    // Exactly one whitespace byte between the maxval and the pixel bytes.
    if (scan.at_end() || !is_ppm_space(scan.peek())) {
        throw PpmFormatError("ppm header: expected single whitespace before pixel data");
    }
    scan.advance();

    const std::uint64_t need = static_cast<std::uint64_t>(width) * height * 3;
    if (bytes.size() - scan.pos() < need) {
        throw PpmTruncatedError("ppm: pixel data truncated (need " + std::to_string(need) +
                                " bytes, have " + std::to_string(bytes.size() - scan.pos()) +
                                ")");
    }

    Raster r(static_cast<int>(width), static_cast<int>(height));
    std::memcpy(r.bytes().data(), bytes.data() + scan.pos(), need);
    return r;
}

std::vector<std::uint8_t> write_ppm(const Raster& r) {
    const std::string header = "P6\n" + std::to_string(r.width()) + " " +
                               std::to_string(r.height()) + "\n255\n";
    std::vector<std::uint8_t> out;
    out.reserve(header.size() + r.bytes().size());
    out.insert(out.end(), header.begin(), header.end());
    out.insert(out.end(), r.bytes().begin(), r.bytes().end());
    return out;
}

Raster load_ppm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(in),
                                    std::istreambuf_iterator<char>()};
    if (in.bad()) {
        throw IoError("error while reading " + path.string());
    }
    return read_ppm(bytes);
}

void save_ppm(const Raster& r, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = write_ppm(r);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IoError("error while writing " + path.string());
    }
}

}  // namespace spotpaint
