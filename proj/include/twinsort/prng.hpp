#pragma once

// splitmix64 generator. Chosen as the project-wide PRNG because the whole
// recurrence fits in four lines, seeds trivially, and produces identical
// streams in any language, which is what makes generated datasets portable.

#include <cstdint>
#include <limits>

#include "twinsort/core.hpp"

namespace twinsort {

// The splitmix64 state increment (2^64 / golden ratio).
inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

class prng {
public:
    explicit constexpr prng(std::uint64_t seed) noexcept : state_(seed) {}

    // Advances the state by golden_gamma and mixes it through the two
    // xor-shift-multiply rounds of the reference splitmix64 recurrence.
    constexpr std::uint64_t next() noexcept {
        state_ += golden_gamma;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound) by rejection, so no modulo bias and the
    // stream consumed is a pure function of the state.
    constexpr std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw zero_bound("uniform draw from empty range");
        }
        constexpr std::uint64_t word_max = std::numeric_limits<std::uint64_t>::max();
        // 2^64 mod bound; draws above word_max - rem fall in the biased tail.
        const std::uint64_t rem = (word_max % bound + 1) % bound;
        const std::uint64_t limit = word_max - rem;
        std::uint64_t draw = next();
        while (draw > limit) {
            draw = next();
        }
        return draw % bound;
    }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

} // namespace twinsort
