// rng.hpp — PCG32 with splittable per-trajectory streams

#pragma once

#include <cstdint>

namespace recoil {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// O'Neill's PCG-XSH-RR 64/32.
struct Pcg32 {
    std::uint64_t state = 0x853C49E6748FEA9BULL;
    std::uint64_t inc = 0xDA3E39CB94B95BDBULL;

    Pcg32() = default;
    Pcg32(std::uint64_t seed, std::uint64_t stream) {
        state = 0;
        inc = (stream << 1) | 1ULL;
        next();
        state += seed;
        next();
    }
    std::uint32_t next() {
        const std::uint64_t old = state;
        state = old * 6364136223846793005ULL + inc;
        const std::uint32_t xorshifted =
            static_cast<std::uint32_t>(((old >> 18) ^ old) >> 27);
        const std::uint32_t rot = static_cast<std::uint32_t>(old >> 59);
        return (xorshifted >> rot) | (xorshifted << ((32 - rot) & 31));
    }
    // uniform in (0, 1): 53-bit mantissa, zero mapped to the smallest step
    double uniform() {
        const std::uint64_t hi = next(), lo = next();
        const std::uint64_t u = ((hi << 32) | lo) >> 11;
        const double r = double(u) * 0x1.0p-53;
        return r > 0.0 ? r : 0x1.0p-53;
    }
};

// Independent stream for trajectory `index` under a user seed.
inline Pcg32 make_stream(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t s = splitmix64(seed ^ (0xA076'1D64'78BD'642FULL * (index + 1)));
    const std::uint64_t inc = splitmix64(s ^ 0xE703'7ED1'A0B4'28DBULL);
    return Pcg32(s, inc);
}

}  // namespace recoil
