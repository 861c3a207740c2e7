// Seedable, splittable pseudo-random generation for the sampling paths.
//
// Engine: xoshiro256** (Blackman & Vigna), state-initialized from a
// splitmix64 stream. Stream derivation rule for parallel/chunked sampling:
//
//     chunk_seed(seed, k) = splitmix64_mix(seed + (k + 1) * 0x9E3779B97F4A7C15)
//
// Every chunk of a sampling run draws from its own engine seeded this way,
// so merged results do not depend on how chunks are distributed over
// workers. The same rule derives per-restart solver seeds.

#pragma once

#include <cstdint>

namespace qlabel {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    return splitmix64_mix(seed + (chunk_index + 1) * 0x9E3779B97F4A7C15ULL);
}

class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed) {
        // splitmix64 expansion, the initialization recommended by the
        // xoshiro authors.
        std::uint64_t z = seed;
        for (auto& word : state_) {
            z += 0x9E3779B97F4A7C15ULL;
            std::uint64_t t = z;
            t = (t ^ (t >> 30)) * 0xBF58476D1CE4E5B9ULL;
            t = (t ^ (t >> 27)) * 0x94D049BB133111EBULL;
            word = t ^ (t >> 31);
        }
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }

    result_type operator()() {
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

    // Uniform double in [0, 1): top 53 bits scaled by 2^-53.
    double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Number of samples drawn per derived RNG stream in chunked Monte Carlo.
inline constexpr std::uint64_t kSampleChunkSize = 65536;

} // namespace qlabel
