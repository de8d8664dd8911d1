#include "doctest.h"

#include "graded/analysis.hpp"
#include "graded/builders.hpp"

using namespace graded;

namespace {

PrimeField f2(2), f3(3);
RationalField q;

GradedAlgebra<PrimeField> gf4_skew() { return galois_skew_example(2, 2); }

template <Field F>
GradedAlgebra<F> m2_inner_skew(F f) {
  auto m2 = matrix_algebra(f, 2);
  auto conj = inner_automorphism(m2, Vec<F>{f.zero(), f.one(), f.one(), f.zero()});
  return skew_group_ring(m2, FiniteGroup::cyclic(2), {Matrix<F>::identity(f, 4), conj});
}

}  // namespace

TEST_CASE("strong gradation") {
  CHECK(check_strongly_graded(group_algebra(f3, FiniteGroup::symmetric3())).strong);
  auto z = check_strongly_graded(truncated_polynomial(f2, 2, 3));
  CHECK_FALSE(z.strong);
  REQUIRE(z.witness.has_value());
  CHECK(check_strongly_graded(m3_example(f2)).strong);
  CHECK(check_strongly_graded(m3_example(q)).strong);
  // x^2 = 0 in degree 2 of Z/2: R_1 R_1 = 0.
  CHECK_FALSE(check_strongly_graded(truncated_polynomial(f2, 2, 2)).strong);
}

TEST_CASE("non-degeneracy") {
  CHECK(check_nondegenerate(group_algebra(f2, FiniteGroup::cyclic(4))).nondegenerate);
  auto z = check_nondegenerate(truncated_polynomial(f2, 2, 3));
  CHECK_FALSE(z.nondegenerate);
  CHECK(z.witness == 1);
  CHECK(check_nondegenerate(gf4_skew()).nondegenerate);
  CHECK(check_nondegenerate(m3_example(q)).nondegenerate);
  // Square-zero extension: u u = 0, so u pairs to zero with R_1.
  auto sq = square_zero_extension(finite_field_algebra(f2, 2), frobenius_matrix(finite_field_algebra(f2, 2)));
  CHECK_FALSE(check_nondegenerate(sq).nondegenerate);
}

TEST_CASE("centralizer condition") {
  auto ga = group_algebra(f2, FiniteGroup::cyclic(2));
  CHECK(centralizer_of_Re(ga).dim() == 2);
  CHECK_FALSE(check_centralizer_condition(ga));

  for (auto* label : {"GF(2)", "Q"}) {
    CAPTURE(label);
    auto check = [](const auto& a) {
      auto c = centralizer_of_Re(a);
      CHECK(c.dim() == 2);
      CHECK(c.component(1).is_zero());
      CHECK(c.component(0) == center_of_Re(a));
      CHECK(check_centralizer_condition(a));
    };
    if (std::string(label) == "Q") check(m3_example(q)); else check(m3_example(f2));
  }
  // e11+e33 and e22 in the R_0 basis (0,0),(0,2),(1,1),(2,0),(2,2).
  auto z = center_of_Re(m3_example(f3));
  CHECK(z.contains(Vec<PrimeField>{1, 0, 0, 0, 1}));
  CHECK(z.contains(Vec<PrimeField>{0, 0, 1, 0, 0}));

  CHECK(check_centralizer_condition(gf4_skew()));
  CHECK_FALSE(check_centralizer_condition(m2_inner_skew(f3)));
}

TEST_CASE("controlled") {
  auto ga = check_controlled(group_algebra(f2, FiniteGroup::cyclic(2)));
  CHECK(ga.verdict == ControlledKind::NotControlled);
  CHECK(ga.isomorphic_pair == GroupPair{0, 1});
  CHECK(ga.isomorphic[1] == Tri::Yes);

  auto m3 = check_controlled(m3_example(f2));
  CHECK(m3.verdict == ControlledKind::NotControlled);
  CHECK(m3.non_simple == 0);
  CHECK(check_controlled(m3_example(q)).verdict == ControlledKind::NotControlled);

  auto sk = check_controlled(gf4_skew());
  CHECK(sk.verdict == ControlledKind::Controlled);
  CHECK(sk.isomorphic[1] == Tri::No);
  CHECK(check_controlled(galois_skew_example(3, 2)).verdict == ControlledKind::Controlled);
  CHECK(check_controlled(galois_skew_example(2, 4)).verdict == ControlledKind::Controlled);

  auto trunc = check_controlled(truncated_polynomial(f2, 2, 3));
  CHECK(trunc.verdict == ControlledKind::NotControlled);
  CHECK(trunc.simplicity[2].method == "zero-component");

  SearchOptions serial;
  serial.mode = ExecMode::Serial;
  auto a = check_controlled(galois_skew_example(2, 3), serial);
  auto b = check_controlled(galois_skew_example(2, 3));
  CHECK(a.verdict == b.verdict);
  CHECK(a.isomorphic == b.isomorphic);
}

TEST_CASE("necessary conditions") {
  auto sk = check_necessary_conditions(gf4_skew());
  CHECK(sk.pairwise_non_isomorphic == Tri::Yes);
  CHECK(sk.components_simple == Tri::Yes);
  CHECK(sk.identity_component_simple == Tri::Yes);
  CHECK(sk.centralizer == Tri::Yes);
  CHECK(sk.ideals_graded == true);

  CHECK(check_necessary_conditions(group_algebra(f2, FiniteGroup::cyclic(2))).pairwise_non_isomorphic == Tri::No);

  auto m3 = check_necessary_conditions(m3_example(f2));
  CHECK(m3.components_simple == Tri::No);
  CHECK(m3.identity_component_simple == Tri::No);
  CHECK(m3.centralizer == Tri::Yes);
  CHECK(m3.ideals_graded == true);

  CHECK_FALSE(check_necessary_conditions(m3_example(q)).ideals_graded.has_value());
}

TEST_CASE("graded simplicity and simplicity") {
  auto field = finite_field_algebra(f3, 2);
  CHECK(check_graded_simple(field).kind == SimplicityKind::Simple);
  CHECK(check_simple(field).kind == SimplicityKind::Simple);

  for (auto* a : {"GF(2)", "GF(3)"}) {
    CAPTURE(a);
    auto m3 = m3_example(std::string(a) == "GF(2)" ? f2 : f3);
    CHECK(check_graded_simple(m3).kind == SimplicityKind::Simple);
    CHECK(check_simple(m3).kind == SimplicityKind::Simple);
  }
  CHECK(check_graded_simple(m3_example(q)).kind == SimplicityKind::Simple);
  CHECK(check_simple(m3_example(q)).kind == SimplicityKind::Simple);

  auto ga = group_algebra(f2, FiniteGroup::cyclic(2));
  CHECK(check_graded_simple(ga).kind == SimplicityKind::Simple);
  auto s = check_simple(ga);
  REQUIRE(s.kind == SimplicityKind::NotSimple);
  CHECK(*s.witness == Subspace<PrimeField>::span(f2, 2, {{1, 1}}));

  auto qz3 = group_algebra(q, FiniteGroup::cyclic(3));
  CHECK(check_graded_simple(qz3).kind == SimplicityKind::Simple);
  CHECK(check_simple(qz3).kind == SimplicityKind::NotSimple);

  auto trunc = truncated_polynomial(f2, 3, 3);
  auto g = check_graded_simple(trunc);
  REQUIRE(g.kind == SimplicityKind::NotSimple);
  CHECK(g.witness->dim() < 3);

  // Beyond the exhaustive budget the MeatAxe path must agree.
  SearchOptions small;
  small.exhaustive_budget = 4;
  CHECK(check_simple(m3_example(f2), small).kind == SimplicityKind::Simple);
  CHECK(check_graded_simple(m3_example(f2), small).kind == SimplicityKind::Simple);
  CHECK(check_simple(ga, small).kind == SimplicityKind::NotSimple);
  CHECK(check_simple(gf4_skew(), small).kind == SimplicityKind::Simple);
}

TEST_CASE("crossed product detection") {
  auto ga = group_algebra(f3, FiniteGroup::symmetric3());
  auto r = detect_crossed_product(ga);
  REQUIRE(r.verdict == Tri::Yes);
  for (int g = 0; g < 6; ++g) CHECK(r.structure->units[static_cast<std::size_t>(g)] == Vec<PrimeField>{1});
  CHECK_FALSE(verify_cocycle_identities(ga, *r.structure).has_value());
  CHECK_FALSE(verify_product_formula(ga, *r.structure).has_value());

  auto m3 = detect_crossed_product(m3_example(f2));
  CHECK(m3.verdict == Tri::No);
  CHECK(m3.scope == "exhaustive");
  auto m3q = detect_crossed_product(m3_example(q));
  CHECK(m3q.verdict == Tri::No);
  CHECK(m3q.scope == "dimension");

  auto sk = detect_crossed_product(gf4_skew());
  REQUIRE(sk.verdict == Tri::Yes);
  for (const auto& al : sk.structure->data.alpha) CHECK(al == Vec<PrimeField>{1, 0});

  auto qga = detect_crossed_product(group_algebra(q, FiniteGroup::cyclic(4)));
  CHECK(qga.verdict == Tri::Yes);

  // A twisted group algebra over Q recovers a nontrivial cocycle.
  Rng rng(5);
  auto tw = twisted_group_algebra(q, FiniteGroup::cyclic(3), random_coboundary(q, FiniteGroup::cyclic(3), rng));
  auto twr = detect_crossed_product(tw);
  REQUIRE(twr.verdict == Tri::Yes);
  CHECK_FALSE(verify_product_formula(tw, *twr.structure).has_value());

  // Perturbing sigma breaks the defining identities.
  auto broken = *sk.structure;
  broken.data.sigma[1] = Matrix<PrimeField>::identity(f2, 2);
  auto v = verify_cocycle_identities(gf4_skew(), broken);
  REQUIRE(v.has_value());
  CHECK(v->identity == 5);
  CHECK(verify_product_formula(gf4_skew(), broken).has_value());

  CHECK(detect_crossed_product(truncated_polynomial(f2, 2, 2)).verdict == Tri::No);
}

TEST_CASE("inner automorphisms") {
  auto ext = finite_field_algebra(f2, 2);
  CHECK(is_inner(ext, Matrix<PrimeField>::identity(f2, 2)).verdict == Tri::Yes);
  CHECK(is_inner(ext, frobenius_matrix(ext)).verdict == Tri::No);

  auto m2 = matrix_algebra(f3, 2);
  auto conj = inner_automorphism(m2, Vec<PrimeField>{1, 1, 0, 1});
  auto r = is_inner(m2, conj);
  CHECK(r.verdict == Tri::Yes);
  CHECK(r.method == "simple-base");

  auto d = product_algebra(f2, 2);
  CHECK(is_inner(d, Matrix<PrimeField>::from_ints(f2, {{0, 1}, {1, 0}})).verdict == Tri::No);
  auto id = is_inner(d, Matrix<PrimeField>::identity(f2, 2));
  CHECK(id.verdict == Tri::Yes);
  CHECK(id.method == "exhaustive");

  CHECK_THROWS_AS(is_inner(ext, Matrix<PrimeField>::from_ints(f2, {{0, 1}, {1, 0}})), Error);

  auto qm2 = matrix_algebra(q, 2);
  CHECK(is_inner(qm2, inner_automorphism(qm2, Vec<RationalField>{2, 1, 1, 1})).verdict == Tri::Yes);
}

TEST_CASE("crossed products: controlled, centralizer and outer agree") {
  auto sk = check_crossed_controlled(gf4_skew());
  CHECK(sk.controlled == Tri::Yes);
  CHECK(sk.simple_and_centralizer == Tri::Yes);
  CHECK(sk.simple_and_outer == Tri::Yes);

  auto ga = check_crossed_controlled(group_algebra(f2, FiniteGroup::cyclic(2)));
  CHECK(ga.controlled == Tri::No);
  CHECK(ga.simple_and_centralizer == Tri::No);
  CHECK(ga.simple_and_outer == Tri::No);

  auto inner = check_crossed_controlled(m2_inner_skew(f3));
  CHECK(inner.verdict == Tri::No);
  CHECK(inner.simple_and_outer == Tri::No);

  CHECK_THROWS_AS(check_crossed_controlled(m3_example(f2)), Error);
}

TEST_CASE("Picard injectivity") {
  CHECK(check_picard_injective(gf4_skew()).injective == Tri::Yes);
  auto ga = check_picard_injective(group_algebra(f2, FiniteGroup::cyclic(2)));
  CHECK(ga.injective == Tri::No);
  CHECK(ga.isomorphic_pair == GroupPair{0, 1});
  CHECK(check_picard_injective(m3_example(f2)).injective == Tri::Yes);
  CHECK_THROWS_AS(check_picard_injective(truncated_polynomial(f2, 2, 3)), Error);
}

TEST_CASE("subring correspondence") {
  auto sk = subring_correspondence(gf4_skew());
  CHECK(sk.size() == 2);
  CHECK(subring_correspondence(galois_skew_example(2, 4)).size() == 3);
  CHECK(subring_correspondence(matrix_algebra(f2, 2)).size() == 1);
  CHECK_THROWS_AS(subring_correspondence(group_algebra(f2, FiniteGroup::cyclic(2))), Error);
}
