#pragma once

#include <cstdint>
#include <random>

#include "graded/field.hpp"

namespace graded {

// Seeded generator with a platform-independent bounded draw (the standard
// distributions are implementation-defined, which would break byte-identical
// reports across toolchains).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  // Independent stream for sub-task `index` of a computation seeded by `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed) ^ mix(index + 0x9e3779b97f4a7c15ULL));
  }

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::mt19937_64 engine_;
};

// Coefficient range used for random rational coordinates.
inline constexpr long long kRationalSampleBound = 1000000;

inline PrimeField::Elem random_scalar(const PrimeField& f, Rng& rng) {
  return static_cast<PrimeField::Elem>(rng.below(f.order()));
}

inline RationalField::Elem random_scalar(const RationalField&, Rng& rng) {
  return RationalField::Elem(
      static_cast<long>(rng.in_range(-kRationalSampleBound, kRationalSampleBound)));
}

}  // namespace graded
