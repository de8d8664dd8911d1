#include "doctest.h"

#include "graded/builders.hpp"

using namespace graded;

TEST_CASE("m3 example layout") {
  auto a = m3_example(PrimeField(2));
  CHECK(a.comp_dims() == std::vector<std::size_t>{5, 4});
  CHECK(validate_algebra(a).ok);
  CHECK(validate_algebra(m3_example(RationalField{})).ok);
  // R_1 R_1 = R_0
  CHECK(component_pair_product(a, 1, 1).dim() == 5);
}

TEST_CASE("galois skew dimensions are n^2") {
  struct Case { std::uint32_t p; int n; std::size_t dim; };
  for (auto c : {Case{2, 2, 4}, Case{3, 2, 4}, Case{2, 3, 9}, Case{2, 4, 16}}) {
    auto a = galois_skew_example(c.p, c.n);
    CHECK(a.dim() == c.dim);
    CHECK(validate_algebra(a).ok);
  }
  auto g4 = galois_skew_example(2, 2);
  bool found = false;
  for (const auto& [k, v] : g4.meta())
    if (k == "modulus") found = (v == "x^2+x+1");
  CHECK(found);
}

TEST_CASE("frobenius has order n") {
  PrimeField f(2);
  auto ext = finite_field_algebra(f, 4);
  auto s = frobenius_matrix(ext);
  auto id = Matrix<PrimeField>::identity(f, 4);
  auto acc = id;
  for (int k = 1; k <= 4; ++k) {
    acc = multiply(s, acc);
    CHECK((acc == id) == (k == 4));
  }
  CHECK(frobenius_matrix(ext, 2) == multiply(s, s));
}

TEST_CASE("crossed product data is validated") {
  PrimeField f(3);
  auto base = product_algebra(f, 1);
  auto g = FiniteGroup::cyclic(2);
  std::vector<Matrix<PrimeField>> sigma(2, Matrix<PrimeField>::identity(f, 1));

  CrossedProductData<PrimeField> ok{base, g, sigma, {{1}, {1}, {1}, {2}}};
  CHECK_FALSE(check_cocycle_data(ok).has_value());
  CHECK(validate_algebra(crossed_product(ok)).ok);

  CrossedProductData<PrimeField> unnormalized{base, g, sigma, {{2}, {1}, {1}, {2}}};
  auto v = check_cocycle_data(unnormalized);
  REQUIRE(v.has_value());
  CHECK(v->identity == 3);
  CHECK_THROWS_AS(crossed_product(unnormalized), Error);

  CrossedProductData<PrimeField> zero{base, g, sigma, {{1}, {1}, {1}, {0}}};
  auto z = check_cocycle_data(zero);
  REQUIRE(z.has_value());
  CHECK(z->identity == 4);

  // Non-cocycle over Z/3: alpha(1,1) = 2, all others 1.
  auto g3 = FiniteGroup::cyclic(3);
  std::vector<Vec<PrimeField>> alpha(9, Vec<PrimeField>{1});
  alpha[4] = {2};
  CrossedProductData<PrimeField> broken{base, g3, std::vector<Matrix<PrimeField>>(3, Matrix<PrimeField>::identity(f, 1)), alpha};
  auto b = check_cocycle_data(broken);
  REQUIRE(b.has_value());
  CHECK(b->identity == 2);
  CHECK(b->g >= 0);
  CHECK(b->k >= 0);
}

TEST_CASE("automorphism and identity checks") {
  PrimeField f(2);
  auto ext = finite_field_algebra(f, 2);
  // Swapping 1 and x is linear but does not fix the unit.
  Matrix<PrimeField> shear = Matrix<PrimeField>::from_ints(f, {{0, 1}, {1, 0}});
  auto bad = check_cocycle_data(CrossedProductData<PrimeField>{
      ext, FiniteGroup::cyclic(2), {Matrix<PrimeField>::identity(f, 2), shear},
      std::vector<Vec<PrimeField>>(4, ext.unit_dense())});
  REQUIRE(bad.has_value());
  CHECK(bad->identity == 0);

  // Frobenius on GF(8) does not square to the identity, so identity (1) fails over Z/2.
  auto ext8 = finite_field_algebra(f, 3);
  auto fr = frobenius_matrix(ext8);
  auto wrong = check_cocycle_data(CrossedProductData<PrimeField>{
      ext8, FiniteGroup::cyclic(2), {Matrix<PrimeField>::identity(f, 3), fr},
      std::vector<Vec<PrimeField>>(4, ext8.unit_dense())});
  REQUIRE(wrong.has_value());
  CHECK(wrong->identity == 1);
}

TEST_CASE("inner action on M2 and the diagonal swap") {
  for (std::uint32_t p : {2u, 3u}) {
    PrimeField f(p);
    auto m2 = matrix_algebra(f, 2);
    auto conj = inner_automorphism(m2, Vec<PrimeField>{0, 1, 1, 0});
    auto a = skew_group_ring(m2, FiniteGroup::cyclic(2), {Matrix<PrimeField>::identity(f, 4), conj});
    CHECK(a.dim() == 8);
    CHECK(validate_algebra(a).ok);

    auto d = product_algebra(f, 2);
    auto swap = Matrix<PrimeField>::from_ints(f, {{0, 1}, {1, 0}});
    CHECK(validate_algebra(skew_group_ring(d, FiniteGroup::cyclic(2), {Matrix<PrimeField>::identity(f, 2), swap})).ok);
  }
  CHECK_THROWS_AS(inner_automorphism(matrix_algebra(PrimeField(2), 2), Vec<PrimeField>{1, 1, 1, 1}), Error);
}

TEST_CASE("cyclic crossed products") {
  PrimeField f(3);
  auto ext = finite_field_algebra(f, 2);
  auto a = cyclic_crossed_product(ext, frobenius_matrix(ext), 2, ext.embed(0, Vec<PrimeField>{2, 0}));
  CHECK(a.dim() == 4);
  CHECK(validate_algebra(a).ok);
  // c = x is not fixed by Frobenius.
  CHECK_THROWS_AS(cyclic_crossed_product(ext, frobenius_matrix(ext), 2, Vec<PrimeField>{0, 1}), Error);
}

TEST_CASE("twisted group algebras") {
  PrimeField f(3);
  Rng rng(9);
  for (auto name : {"z2", "z3", "z2xz2", "s3"}) {
    auto g = named_group(name);
    auto alpha = random_coboundary(f, g, rng);
    CHECK(validate_algebra(twisted_group_algebra(f, g, alpha)).ok);
  }
  RationalField q;
  auto g = FiniteGroup::cyclic(4);
  CHECK(validate_algebra(twisted_group_algebra(q, g, random_coboundary(q, g, rng))).ok);
}

TEST_CASE("truncated polynomials and square-zero extensions") {
  PrimeField f(2);
  auto t = truncated_polynomial(f, 2, 3);
  CHECK(t.comp_dims() == std::vector<std::size_t>{1, 1, 0});
  CHECK(validate_algebra(t).ok);
  auto t2 = truncated_polynomial(PrimeField(3), 4, 2);
  CHECK(t2.comp_dims() == std::vector<std::size_t>{2, 2});
  CHECK(validate_algebra(t2).ok);

  auto ext = finite_field_algebra(f, 2);
  auto sq = square_zero_extension(ext, frobenius_matrix(ext));
  CHECK(validate_algebra(sq).ok);
  CHECK(component_pair_product(sq, 1, 1).is_zero());
  CHECK(component_pair_product(sq, 0, 1).dim() == 2);
}

TEST_CASE("quotient field algebra requires a monic modulus") {
  PrimeField f(3);
  CHECK_THROWS_AS(quotient_field_algebra(f, {1, 2}), Error);
  CHECK_THROWS_AS(quotient_field_algebra(f, {1}), Error);
  auto gf9 = quotient_field_algebra(f, default_modulus(f, 2));
  CHECK(validate_algebra(gf9).ok);
  CHECK(format_poly(f, default_modulus(f, 2)) == "x^2+1");
}
