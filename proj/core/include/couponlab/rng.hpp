#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace couponlab {

/// SplitMix64 (Steele, Lea, Flood). Used only to expand a 64-bit master seed
/// into generator state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman and Vigna). Satisfies UniformRandomBitGenerator.
/// jump() advances by 2^128 draws; substream i of a master seed is the seeded
/// generator jumped i times.
class Xoshiro256StarStar {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256StarStar(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() { return next(); }
    result_type next();

    void jump();

    const std::array<std::uint64_t, 4>& state() const { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
};

/// Unbiased integer in [0, bound) via Lemire's multiply-and-reject. bound >= 1.
std::uint64_t uniform_below(Xoshiro256StarStar& rng, std::uint64_t bound);

/// Generator for substream `index` of `master_seed`.
Xoshiro256StarStar substream(std::uint64_t master_seed, std::uint64_t index);

inline constexpr const char* kGeneratorId = "xoshiro256**/splitmix64-seed/jump-substreams";

}  // namespace couponlab
