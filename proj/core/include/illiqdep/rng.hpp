#pragma once

#include <cstdint>
#include <limits>

namespace illiqdep {

/// SplitMix64 finalizer.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based generator: draw k of a stream is mix64(key + k * golden),
/// so any (seed, stream) pair addresses a reproducible sequence without
/// shared state. Satisfies UniformRandomBitGenerator. Draws are generated
/// here rather than through <random> distributions, whose output is
/// implementation-defined, so results are portable bit for bit.
class CounterRng {
public:
    using result_type = std::uint64_t;

    constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    /// Independent stream `stream` of the family identified by `seed`.
    [[nodiscard]] static constexpr CounterRng substream(std::uint64_t seed,
                                                        std::uint64_t stream) noexcept {
        return CounterRng(mix64(seed ^ mix64(stream ^ 0xD1B54A32D192ED03ULL)));
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept {
        return std::numeric_limits<result_type>::max();
    }

    constexpr result_type operator()() noexcept {
        return mix64(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL);
    }

    /// Uniform on [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    constexpr bool bernoulli(double p) noexcept { return uniform() < p; }

    [[nodiscard]] constexpr std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace illiqdep
