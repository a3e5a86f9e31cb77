// Deterministic, portable randomness.
//
// Every random draw in the library flows from a single user seed through a
// documented derivation, so outputs are byte-identical across runs, thread
// counts, and platforms:
//
//   stream = SplitMix64( mix(mix(seed ^ fnv1a(tag)) ^ index_0) ^ index_1 ... )
//
// std::uniform_real_distribution and friends are implementation-defined and
// are deliberately not used.

#ifndef NEARFOCUS_RNG_HPP
#define NEARFOCUS_RNG_HPP

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace nearfocus {

/// 64-bit finalizer from splitmix64 (Steele, Lea, Flood 2014).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), exactly (next() >> 11) * 2^-53.
    constexpr double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw from [lo, hi).
    constexpr double next_in(double lo, double hi) { return lo + next_double() * (hi - lo); }

    /// Uniform index in [0, n). n must be > 0.
    constexpr std::size_t next_index(std::size_t n) {
        return static_cast<std::size_t>(next_double() * static_cast<double>(n));
    }

  private:
    std::uint64_t state_;
};

/// Stream for one (seed, purpose, indices...) combination.
inline SplitMix64 derive_stream(std::uint64_t seed, std::string_view tag,
                                std::initializer_list<std::uint64_t> indices = {}) {
    std::uint64_t s = mix64(seed ^ fnv1a(tag));
    for (std::uint64_t idx : indices) s = mix64(s ^ idx);
    return SplitMix64(s);
}

}  // namespace nearfocus

#endif  // NEARFOCUS_RNG_HPP
