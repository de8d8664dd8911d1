#pragma once

// Enumeration of vectors of GF(p)^k by index, for exhaustive searches.

#include <cstdint>
#include <optional>

#include "graded/linalg.hpp"

namespace graded {

// base^exp, or nullopt when it exceeds cap.
inline std::optional<std::uint64_t> power_within(std::uint64_t base, std::size_t exp,
                                                 std::uint64_t cap) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > cap / base) return std::nullopt;
    out *= base;
  }
  if (out > cap) return std::nullopt;
  return out;
}

// Coordinate i is the i-th base-p digit of index, so index 1 is e_0.
inline Vec<PrimeField> vector_at(const PrimeField& f, std::size_t k, std::uint64_t index) {
  Vec<PrimeField> v(k, 0);
  for (std::size_t i = 0; i < k && index; ++i) {
    v[i] = static_cast<PrimeField::Elem>(index % f.order());
    index /= f.order();
  }
  return v;
}

// Nonzero with first nonzero coordinate equal to one: one representative per
// line through the origin.
inline bool is_projective_rep(std::span<const PrimeField::Elem> v) {
  for (auto a : v)
    if (a != 0) return a == 1;
  return false;
}

}  // namespace graded
