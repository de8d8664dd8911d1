#pragma once

// R_e-bimodule machinery: spinning, irreducibility testing, homomorphism
// spaces and isomorphism tests for bimodules given by operator matrices.

#include <optional>
#include <string>
#include <vector>

#include "graded/algebra.hpp"
#include "graded/options.hpp"

namespace graded {

// A bimodule of dimension `dim` over some algebra S with basis s_1..s_k:
// left_ops[i] is x -> s_i x and right_ops[i] is x -> x s_i on the carrier.
template <Field F>
struct BimoduleAction {
  F field;
  std::size_t dim = 0;
  std::vector<Matrix<F>> left_ops;
  std::vector<Matrix<F>> right_ops;
  std::string label;
  // Set when span(left_ops) and span(right_ops) are unital subalgebras that
  // commute with each other; the enveloping algebra is then span{L_i R_j}.
  bool spans_closed = false;
};

// R_H as an R_e-bimodule, on the concatenated bases of the components in H.
template <Field F>
BimoduleAction<F> component_action(const GradedAlgebra<F>& a, const SubsetOfG& h);

// R as a bimodule over itself.
template <Field F>
BimoduleAction<F> regular_bimodule(const GradedAlgebra<F>& a);

// Left and right operators commute across sides.
template <Field F>
bool sides_commute(const BimoduleAction<F>& act);

// Smallest subspace containing seed and invariant under every operator.
template <Field F>
Subspace<F> spin(const BimoduleAction<F>& act, const Vec<F>& seed);

// Basis of the algebra of operators generated by both sides (identity
// included).
template <Field F>
std::vector<Matrix<F>> enveloping_algebra(const BimoduleAction<F>& act);

// span{E_k v}; equals spin(v) when `env` spans the enveloping algebra.
template <Field F>
Subspace<F> cyclic_submodule(const std::vector<Matrix<F>>& env, const Vec<F>& v);

enum class SimplicityKind { Simple, NotSimple, Inconclusive };

inline const char* to_string(SimplicityKind k) {
  switch (k) {
    case SimplicityKind::Simple: return "simple";
    case SimplicityKind::NotSimple: return "not-simple";
    case SimplicityKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

template <Field F>
struct SimplicityVerdict {
  SimplicityKind kind = SimplicityKind::Inconclusive;
  // Proper nonzero invariant subspace when kind == NotSimple.
  std::optional<Subspace<F>> witness;
  // Which argument settled the verdict: "dimension-one", "burnside",
  // "basis-spin", "meataxe-spin", "meataxe-norton", "meataxe-dual",
  // "exhaustive", "random-spin", "endomorphism-kernel", "undecided".
  std::string method;
  int meataxe_elements_tried = 0;
};

// Over GF(p): the MeatAxe with Norton's criterion on random elements of the
// enveloping algebra, escalating to an exhaustive scan of cyclic submodules
// within the budget. Over Q: Burnside sufficiency and spin witnesses only, so
// the answer may be Inconclusive.
template <Field F>
SimplicityVerdict<F> is_simple(const BimoduleAction<F>& act, const SearchOptions& opts = {});

// All f: A -> B commuting with both operator families, flattened row-major as
// dim(B) x dim(A) matrices.
template <Field F>
Subspace<F> hom_space(const BimoduleAction<F>& a, const BimoduleAction<F>& b);

template <Field F>
Matrix<F> unflatten(const F& field, std::span<const typename F::Elem> v, std::size_t rows,
                    std::size_t cols);

// Both actions must be simple (InvalidInput otherwise); then they are
// isomorphic iff the dimensions agree and a nonzero homomorphism exists.
template <Field F>
bool are_isomorphic_simple(const BimoduleAction<F>& a, const SimplicityVerdict<F>& va,
                           const BimoduleAction<F>& b, const SimplicityVerdict<F>& vb);

template <Field F>
bool are_isomorphic_simple(const BimoduleAction<F>& a, const BimoduleAction<F>& b,
                           const SearchOptions& opts = {});

template <Field F>
struct IsomorphismResult {
  Tri verdict = Tri::Unknown;
  std::optional<Matrix<F>> iso;
  std::string method;
};

// General isomorphism test: look for an invertible element of the hom space,
// exhaustively over GF(p) within budget, otherwise by random combinations.
template <Field F>
IsomorphismResult<F> find_isomorphism(const BimoduleAction<F>& a, const BimoduleAction<F>& b,
                                      const SearchOptions& opts = {});

// Coefficients c (rows index left operators, columns right operators) with
// sum c_ij L_i R_j x != 0 on `a` and sum c_ij L_i R_j y = 0 on `b`; absent
// when every operator killing y also kills x.
template <Field F>
std::optional<Matrix<F>> separating_operator(const BimoduleAction<F>& a,
                                             const BimoduleAction<F>& b, const Vec<F>& x,
                                             const Vec<F>& y);

template <Field F>
Vec<F> apply_operator_word(const BimoduleAction<F>& act, const Matrix<F>& coeffs, const Vec<F>& v);

}  // namespace graded
