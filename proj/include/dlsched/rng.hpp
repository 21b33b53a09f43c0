#pragma once

#include <cstdint>

namespace dlsched {

// SplitMix64 (Steele/Lea/Vigna). Portable across platforms so that instance
// files regenerate byte-identically from a seed anywhere.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // closed range [lo, hi]
    std::uint64_t uniform_u64(std::uint64_t lo, std::uint64_t hi) { return lo + next() % (hi - lo + 1); }

    // Stream-splitting rule: substream k of a master seed is seeded with
    // one SplitMix64 step of (seed XOR golden_gamma * (k + 1)).
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
        return g.next();
    }

  private:
    std::uint64_t state_;
};

} // namespace dlsched
