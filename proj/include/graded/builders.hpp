#pragma once

// Constructors for the standard families of graded algebras.

#include <functional>
#include <string>

#include "graded/algebra.hpp"
#include "graded/poly.hpp"
#include "graded/rng.hpp"

namespace graded {

// "trivial", "z2", "z3", "z4", "zN", "z2xz2", "s3".
FiniteGroup named_group(const std::string& name);

// Algebra from a product rule on global basis indices returning dense global
// coordinates; the result must lie in the component of the expected degree.
template <Field F>
GradedAlgebra<F> algebra_from_rule(F field, FiniteGroup group, std::vector<std::size_t> comp_dims,
                                   const std::function<Vec<F>(std::size_t, std::size_t)>& rule,
                                   const Vec<F>& unit_dense, Metadata meta = {});

// F[G], basis u_g.
template <Field F>
GradedAlgebra<F> group_algebra(F field, FiniteGroup group);

// M_n(F) with the trivial grading, basis e_ij at index i*n + j.
template <Field F>
GradedAlgebra<F> matrix_algebra(F field, std::size_t n);

// F^k with the trivial grading (coordinate idempotents).
template <Field F>
GradedAlgebra<F> product_algebra(F field, std::size_t k);

// F[x]/(x^n) graded by Z/m with deg x = 1.
template <Field F>
GradedAlgebra<F> truncated_polynomial(F field, std::size_t n, int m);

// GF(p)[x]/(modulus) with the trivial grading, basis 1, x, ..., x^{d-1}.
GradedAlgebra<PrimeField> quotient_field_algebra(const PrimeField& f, const Poly<PrimeField>& modulus);

// Lowest-index monic irreducible of degree n over GF(p), in the order of
// monic_from_index.
Poly<PrimeField> default_modulus(const PrimeField& f, int n);

// GF(p^n) with the trivial grading, built on default_modulus.
GradedAlgebra<PrimeField> finite_field_algebra(const PrimeField& f, int n);

// Matrix of x -> x^(p^k) on the basis of a quotient field algebra.
Matrix<PrimeField> frobenius_matrix(const GradedAlgebra<PrimeField>& ext, int k = 1);

// Matrix of x -> u x u^{-1} on the basis of a trivially graded algebra.
template <Field F>
Matrix<F> inner_automorphism(const GradedAlgebra<F>& base, const Vec<F>& u);

// Empty when s is a unital algebra automorphism of the trivially graded
// base, otherwise a description of the first failure.
template <Field F>
std::string automorphism_failure(const GradedAlgebra<F>& base, const Matrix<F>& s);

template <Field F>
struct CrossedProductData {
  // R_e as a trivially graded algebra.
  GradedAlgebra<F> base;
  FiniteGroup group;
  // sigma[g] acts on base coordinates (column i is the image of basis i).
  std::vector<Matrix<F>> sigma;
  // alpha[g * |G| + h], invertible elements of the base.
  std::vector<Vec<F>> alpha;
};

struct CocycleViolation {
  // 0: sigma_g not an automorphism, 1: sigma_g sigma_h = i_alpha sigma_gh,
  // 2: the 2-cocycle identity, 3: normalization, 4: alpha not invertible,
  // 5: data extracted from an algebra does not match its units.
  int identity = -1;
  int g = -1, h = -1, k = -1;
  std::string message;
};

// First violated identity in a fixed scan order, or nothing.
template <Field F>
std::optional<CocycleViolation> check_cocycle_data(const CrossedProductData<F>& d);

// R_e * G with basis b_i u_g at index g*dim(R_e) + i and
// (a u_g)(b u_h) = a sigma_g(b) alpha(g,h) u_gh. Rejects invalid data.
template <Field F>
GradedAlgebra<F> crossed_product(const CrossedProductData<F>& d, Metadata meta = {});

template <Field F>
GradedAlgebra<F> skew_group_ring(const GradedAlgebra<F>& base, FiniteGroup group,
                                 std::vector<Matrix<F>> sigma, Metadata meta = {});

// Z/n crossed product with u^n = c for a sigma-fixed central unit c, sigma^n = id.
template <Field F>
GradedAlgebra<F> cyclic_crossed_product(const GradedAlgebra<F>& base, const Matrix<F>& sigma, int n,
                                        const Vec<F>& c, Metadata meta = {});

// F^alpha[G] for a normalized scalar 2-cocycle alpha[g*|G|+h].
template <Field F>
GradedAlgebra<F> twisted_group_algebra(F field, FiniteGroup group,
                                       const std::vector<typename F::Elem>& alpha);

// Scalar coboundary alpha(g,h) = l(g) l(h) / l(gh) for random nonzero l with l(e) = 1.
template <Field F>
std::vector<typename F::Elem> random_coboundary(const F& field, const FiniteGroup& group, Rng& rng);

// GF(p^n) * Z/n with the Frobenius action; dimension n^2.
GradedAlgebra<PrimeField> galois_skew_example(std::uint32_t p, int n);

// M_3(F) graded by Z/2 with deg e_ij = (i + j) mod 2.
template <Field F>
GradedAlgebra<F> m3_example(F field);

// Z/2-graded K + K u with u a = sigma(a) u and u^2 = 0.
template <Field F>
GradedAlgebra<F> square_zero_extension(const GradedAlgebra<F>& base, const Matrix<F>& sigma);

}  // namespace graded
