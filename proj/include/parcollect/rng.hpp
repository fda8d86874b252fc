#pragma once

#include <array>
#include <cstdint>

namespace parcollect {

/// SplitMix64 finalizer; out(seed, i) is the i-th element of the splittable
/// stream derived from seed.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/**
 * xoshiro256++ (Blackman & Vigna). Fixed, portable 64-bit generator so that
 * sampled streams are reproducible from (seed, stream) alone.
 */
class Xoshiro256pp {
public:
    /// Stream `stream` of master `seed`: state words are SplitMix64 outputs
    /// 4*stream .. 4*stream+3.
    Xoshiro256pp(std::uint64_t seed, std::uint64_t stream = 0) {
        for (int i = 0; i < 4; ++i) s_[i] = splitmix64_at(seed, 4 * stream + i);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;  // all-zero state is invalid
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double strictly inside (0,1): ((x >> 11) + 0.5) * 2^-53.
    /// Minimum value 2^-54, safe for log().
    double next_double01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::array<std::uint64_t, 4> s_;
};

}  // namespace parcollect
