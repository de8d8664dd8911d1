#pragma once

// Exact scalar domains. Every algebraic object in the library is templated on
// one of the two field policies below; the policy object carries the runtime
// parameters (the prime) and all arithmetic goes through it.

#include <concepts>
#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "graded/error.hpp"

namespace graded {

enum class FieldKind { Rationals, PrimeField };

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using Elem = std::uint32_t;
  static constexpr bool finite = true;
  static constexpr FieldKind kind = FieldKind::PrimeField;

  // p must be prime and below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // a + b*c
  Elem mul_add(Elem a, Elem b, Elem c) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(b) * c + a) % p_);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_int(long long v) const;
  // The i-th element in the fixed enumeration order 0, 1, ..., p-1.
  Elem element(std::uint64_t i) const { return static_cast<Elem>(i); }

  bool valid(Elem a) const { return a < p_; }
  std::string name() const;
  std::string format(Elem a) const { return std::to_string(a); }

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using Elem = mpq_class;
  static constexpr bool finite = false;
  static constexpr FieldKind kind = FieldKind::Rationals;

  std::uint32_t characteristic() const { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem mul_add(const Elem& a, const Elem& b, const Elem& c) const {
    return a + b * c;
  }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return a * inv(b); }

  Elem from_int(long long v) const { return Elem(static_cast<long>(v)); }
  // n/d in lowest terms; d != 0.
  Elem fraction(long n, long d) const;

  bool valid(const Elem&) const { return true; }
  std::string name() const { return "Q"; }
  // "n" for integers, "n/d" otherwise.
  std::string format(const Elem& a) const;
  // Accepts "n" or "n/d" with optional sign; throws InvalidInput otherwise.
  Elem parse(const std::string& text) const;

  bool operator==(const RationalField&) const = default;
};

template <class F>
concept Field = requires(const F f, const typename F::Elem a) {
  { f.zero() } -> std::convertible_to<typename F::Elem>;
  { f.add(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.mul(a, a) } -> std::convertible_to<typename F::Elem>;
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { F::finite } -> std::convertible_to<bool>;
};

}  // namespace graded
