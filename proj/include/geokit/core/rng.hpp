#pragma once

#include <cstdint>
#include <vector>

namespace geokit::core {

/// SplitMix64 finalizer. Fully determined by its argument, so hashing a
/// (seed, counter) key gives a platform-independent random stream.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ b);
}

constexpr std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b) ^ c);
}

/// Maps a 64-bit word to a double in [0, 1) using the top 53 bits.
constexpr double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Counter-based generator: the i-th output is a pure function of
/// (seed, i), so identical seeds give identical sequences everywhere,
/// and disjoint child streams can be split off for parallel sections.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(mix64(seed)) {}

  std::uint64_t next_u64() { return mix64(seed_, ctr_++); }

  double next_double() { return unit_double(next_u64()); }

  /// Uniform integer in [0, n) via 128-bit multiply-shift.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Independent child stream; deterministic in (seed, stream).
  Rng split(std::uint64_t stream) const { return Rng(mix64(seed_, ~stream)); }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t ctr_ = 0;
};

/// Fisher-Yates shuffle of 0..n-1, deterministic per rng state.
inline std::vector<std::uint32_t> random_permutation(std::size_t n, Rng rng) {
  std::vector<std::uint32_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = rng.next_below(i);
    std::swap(perm[i - 1], perm[j]);
  }
  return perm;
}

}  // namespace geokit::core
