#pragma once

#include <cstdint>

#include "shiftlap/rational.hpp"

namespace shiftlap {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

// splitmix64; deterministic across platforms so seeded reports stay byte-identical.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

// Small exact rationals for seeded property checks: num in [-9, 9], den in [1, 9].
inline Rational random_small_rational(SplitMix64& rng) {
  const long long num = static_cast<long long>(rng.below(19)) - 9;
  const long long den = static_cast<long long>(rng.below(9)) + 1;
  return Rational(num, den);
}

}  // namespace shiftlap
