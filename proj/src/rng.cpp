#include "spotpaint/rng.hpp"

#include <limits>
#include <stdexcept>

namespace spotpaint {

std::uint64_t RngStream::next_u64() noexcept {
    // splitmix64 (Steele, Lea, Flood; public-domain reference constants).
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::int64_t RngStream::next_int_inclusive(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) {
        throw std::invalid_argument("next_int_inclusive: lo > hi");
    }
    constexpr std::uint64_t u64_max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    if (span == u64_max) {
        return static_cast<std::int64_t>(next_u64());
    }
    const std::uint64_t bound = span + 1;
    // Accept only draws below the largest multiple of bound, so every
    // residue is equally likely (no modulo bias).
    const std::uint64_t zone = (u64_max / bound) * bound;
    std::uint64_t r = next_u64();
    while (r >= zone) {
        r = next_u64();
    }
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % bound);
}

}  // namespace spotpaint
