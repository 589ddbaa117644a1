#pragma once

#include <cstdint>

namespace torus_spectra {

// SplitMix64 (Steele/Lea/Flood). Used everywhere a seedable, splittable
// stream is needed: every random quantity in the library is derived from
// (seed, index) pairs, so parallel generation and prefix extension are
// reproducible by construction.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class SplitMix64 {
  public:
    using result_type = std::uint64_t;
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t operator()() { return splitmix64(state_++); }
    static constexpr std::uint64_t min() { return 0; }
    static constexpr std::uint64_t max() { return ~0ULL; }

  private:
    std::uint64_t state_;
};

// Seed of the substream attached to (seed, index).
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// Map 64 random bits to a double in [0, 1) with 53-bit resolution.
inline double uniform01(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform01(SplitMix64& rng) { return uniform01(rng()); }

} // namespace torus_spectra
