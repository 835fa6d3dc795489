#pragma once

#include <bit>
#include <cmath>
#include <cstdint>

namespace randsel {

/// Identifies the generator scheme echoed into every trace so that runs can
/// be reproduced bit-for-bit. Integer draws use only integer arithmetic and
/// are portable across compilers and platforms.
inline constexpr const char* kPrngId = "splitmix64+xoshiro256** v1";

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Stateless counter access into the splitmix64 stream rooted at `seed`:
/// index -> the (index+1)-th output. Identical (seed, index) always yields
/// the identical value.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t state = seed + index * 0x9E3779B97F4A7C15ULL;
    return splitmix64_next(state);
}

/// xoshiro256** by Blackman and Vigna, seeded through splitmix64.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
            state_[0] = 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform integer in [0, n), unbiased (power-of-two mask rejection).
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t mask = ~0ULL >> std::countl_zero(n - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= n);
        return v;
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [-1, 1).
    double symmetric_unit() { return 2.0 * unit() - 1.0; }

    /// +1 or -1 with equal probability.
    int rademacher() { return (next() & 1ULL) != 0 ? 1 : -1; }

    /// Standard normal via Box-Muller; consumes two draws per call.
    double gaussian() {
        const double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

} // namespace randsel
