#pragma once

#include <cstdint>

namespace xray {

// splitmix64 (Steele, Lea & Flood): fixed-increment mixer, used one-shot to
// hash seeds and to expand a 64-bit seed into larger generator states.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

inline std::uint64_t mix64(std::uint64_t x) {
    SplitMix64 s{x};
    return s.next();
}

// xoshiro256** (Blackman & Vigna): the library's only source of randomness.
// All published numbers are reproducible from (seed, draw index) alone.
class Xoshiro256StarStar {
  public:
    explicit Xoshiro256StarStar(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& word : s_) word = sm.next();
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9E3779B97F4A7C15ULL;
    }

    // Generator for one draw index. The index is hashed before seeding so
    // the expanded states of consecutive indices share no words; this is
    // what makes results independent of how draws are split over threads.
    static Xoshiro256StarStar substream(std::uint64_t seed, std::uint64_t index) {
        return Xoshiro256StarStar(mix64(seed + index * 0x9E3779B97F4A7C15ULL));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0, bound), bound >= 1, unbiased by rejecting the short
    // residue classes below 2^64 mod bound.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace xray
