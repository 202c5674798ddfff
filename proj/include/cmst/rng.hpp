#pragma once

#include <cstdint>

namespace cmst {

// SplitMix64 finalizer (bijective on 64-bit words).
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based stream: element `counter` of stream `seed`. A pure function of
// (seed, counter), so parallel and sequential generation agree bit-for-bit.
inline constexpr std::uint64_t stream_bits(std::uint64_t seed, std::uint64_t counter) noexcept {
    return mix64(mix64(seed) ^ mix64(counter));
}

// Uniform draw in the open interval (0,1).
inline double stream_u01(std::uint64_t seed, std::uint64_t counter) noexcept {
    return (static_cast<double>(stream_bits(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

// Sequential view of one stream, for tools and tests.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t start = 0) : seed_(seed), ctr_(start) {}

    std::uint64_t next_bits() { return stream_bits(seed_, ctr_++); }
    double next_u01() { return stream_u01(seed_, ctr_++); }

    // Uniform integer in [0, bound); multiply-shift, bias < 2^-64.
    std::uint64_t next_below(std::uint64_t bound) {
        const auto wide = static_cast<unsigned __int128>(next_bits()) * bound;
        return static_cast<std::uint64_t>(wide >> 64);
    }

private:
    std::uint64_t seed_;
    std::uint64_t ctr_;
};

} // namespace cmst
