#pragma once

#include <cstdint>

namespace csd {

/// Counter-free 64-bit PRNG (splitmix64). Chosen over std::mt19937_64 so that
/// the stream of uniform doubles is fully pinned by this code, independent of
/// standard-library distribution internals. Byte-identical output for a given
/// seed on any platform with IEEE-754 doubles.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53 mantissa bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [0, scale).
  double next_uniform(double scale) { return next_unit() * scale; }

 private:
  std::uint64_t state_;
};

/// Order-sensitive 64-bit mix used to derive per-drop seeds from structured
/// keys. hash_mix(hash_mix(seed, a), b) != hash_mix(hash_mix(seed, b), a).
inline std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  SplitMix64 s(h);
  return s.next();
}

}  // namespace csd
