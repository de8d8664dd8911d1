#include "doctest.h"

#include "graded/field.hpp"
#include "graded/poly.hpp"
#include "graded/rng.hpp"

using namespace graded;

TEST_CASE("prime field rejects composite and oversized moduli") {
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(0), Error);
  CHECK_THROWS_AS(PrimeField(2147483659u), Error);  // prime, but >= 2^31
  CHECK_NOTHROW(PrimeField(2147483647u));
  try {
    PrimeField f(9);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_int(-15) == 6);
  CHECK(f.mul_add(1, 3, 5) == 2);
  CHECK_THROWS_AS(f.inv(0), Error);

  PrimeField big(2147483647u);
  auto a = big.from_int(2147483646);
  CHECK(big.mul(a, a) == 1);
  CHECK(big.mul(big.inv(12345), 12345) == 1);
}

TEST_CASE("rationals format and parse") {
  RationalField q;
  CHECK(q.format(mpq_class(3)) == "3");
  CHECK(q.format(q.fraction(-6, 4)) == "-3/2");
  CHECK(q.parse("4/6") == mpq_class(2, 3));
  CHECK(q.parse("-7") == mpq_class(-7));
  CHECK(q.format(q.parse("10/5")) == "2");
  CHECK_THROWS_AS(q.parse("1/0"), Error);
  CHECK_THROWS_AS(q.parse("abc"), Error);
  CHECK_THROWS_AS(q.parse(""), Error);
  CHECK(q.div(mpq_class(1), mpq_class(3)) == mpq_class(1, 3));
  CHECK_THROWS_AS(q.inv(mpq_class(0)), Error);
}

TEST_CASE("primality") {
  int count = 0;
  for (std::uint64_t n = 0; n < 100; ++n) count += is_prime(n) ? 1 : 0;
  CHECK(count == 25);
  CHECK(is_prime(2147483647u));
  CHECK_FALSE(is_prime(2147483649u));
}

namespace {

template <Field F>
typename F::Elem det_at(const Matrix<F>& a, const typename F::Elem& t) {
  const F& f = a.field();
  Matrix<F> m(f, a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = f.neg(a(r, c));
  for (std::size_t i = 0; i < a.rows(); ++i) m(i, i) = f.add(m(i, i), t);
  return determinant(m);
}

template <Field F>
typename F::Elem eval(const F& f, const Poly<F>& p, const typename F::Elem& t) {
  auto acc = f.zero();
  for (std::size_t k = p.size(); k-- > 0;) acc = f.add(f.mul(acc, t), p[k]);
  return acc;
}

}  // namespace

TEST_CASE("characteristic polynomial agrees with det(tI - A)") {
  Rng rng(11);
  SUBCASE("GF(7)") {
    PrimeField f(7);
    for (int trial = 0; trial < 50; ++trial) {
      std::size_t n = 1 + rng.below(6);
      Matrix<PrimeField> a(f, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          a(r, c) = rng.below(3) == 0 ? 0 : random_scalar(f, rng);
      auto cp = charpoly(a);
      REQUIRE(cp.size() == n + 1);
      CHECK(cp.back() == 1);
      for (std::uint32_t t = 0; t < 7; ++t) CHECK(eval(f, cp, t) == det_at(a, t));
    }
  }
  SUBCASE("Q") {
    RationalField q;
    for (int trial = 0; trial < 20; ++trial) {
      std::size_t n = 1 + rng.below(5);
      Matrix<RationalField> a(q, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = q.fraction(static_cast<long>(rng.in_range(-5, 5)), static_cast<long>(1 + rng.below(3)));
      auto cp = charpoly(a);
      for (int t = -3; t <= 3; ++t) CHECK(eval(q, cp, mpq_class(t)) == det_at(a, mpq_class(t)));
    }
  }
}

TEST_CASE("Cayley-Hamilton") {
  PrimeField f(3);
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 1 + rng.below(6);
    Matrix<PrimeField> a(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = random_scalar(f, rng);
    CHECK(poly_eval(charpoly(a), a).is_zero());
  }
}

TEST_CASE("irreducible polynomials over small fields") {
  PrimeField f2(2), f3(3);
  // Necklace counts: monic irreducibles of degree d over GF(2): 2,1,2,3,6.
  std::vector<int> expected2{2, 1, 2, 3, 6};
  for (int d = 1; d <= 5; ++d) {
    int count = 0;
    for (std::uint64_t k = 0; k < (1u << d); ++k) count += is_irreducible(f2, monic_from_index(f2, d, k));
    CHECK(count == expected2[static_cast<std::size_t>(d - 1)]);
  }
  // Over GF(3): 3, 3, 8.
  std::vector<int> expected3{3, 3, 8};
  for (int d = 1; d <= 3; ++d) {
    int count = 0;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= 3;
    for (std::uint64_t k = 0; k < total; ++k) count += is_irreducible(f3, monic_from_index(f3, d, k));
    CHECK(count == expected3[static_cast<std::size_t>(d - 1)]);
  }
  CHECK(format_poly(f2, monic_from_index(f2, 2, 3)) == "x^2+x+1");
}

TEST_CASE("small irreducible factors reconstruct squarefree parts") {
  PrimeField f(2);
  // (x+1)^2 (x^2+x+1) x
  Poly<PrimeField> c{1, 1};
  c = poly_mul(f, c, Poly<PrimeField>{1, 1});
  c = poly_mul(f, c, Poly<PrimeField>{1, 1, 1});
  c = poly_mul(f, c, Poly<PrimeField>{0, 1});
  auto factors = small_irreducible_factors(f, c);
  REQUIRE(factors.size() == 3);
  CHECK(factors[0] == Poly<PrimeField>{0, 1});
  CHECK(factors[1] == Poly<PrimeField>{1, 1});
  CHECK(factors[2] == Poly<PrimeField>{1, 1, 1});
}
