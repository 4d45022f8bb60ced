#ifndef SPOTPAINT_RNG_HPP
#define SPOTPAINT_RNG_HPP

#include <cstdint>

namespace spotpaint {

/**
 * Deterministic pseudo-random stream used for every random draw in a render.
 *
 * The generator is splitmix64: the 64-bit state starts at the seed and the
 * output function is fixed, so equal seeds give bit-identical sequences on
 * every platform. The generator choice is part of the output contract and
 * must not change between releases.
 *
 * Bounded draws are rejection-sampled, never reduced modulo the range, so
 * every value in [lo, hi] is exactly equally likely.
 */
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept : state_(seed), seed_(seed) {}

    std::uint64_t seed() const noexcept { return seed_; }

    /// Next raw 64-bit output; advances the state.
    std::uint64_t next_u64() noexcept;

    /// Uniform integer in [lo, hi]. Throws std::invalid_argument if lo > hi.
    std::int64_t next_int_inclusive(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
    std::uint64_t seed_;
};

}  // namespace spotpaint

#endif
