#pragma once

// Decision procedures for structural properties of a graded algebra. Each
// check is computed on its own; none consults another check's verdict, so the
// known equivalences between them can be used as cross-tests.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded/algebra.hpp"
#include "graded/bimodule.hpp"
#include "graded/builders.hpp"
#include "graded/options.hpp"

namespace graded {

using GroupPair = std::pair<int, int>;

inline Tri to_tri(SimplicityKind k) {
  return k == SimplicityKind::Simple ? Tri::Yes : k == SimplicityKind::NotSimple ? Tri::No : Tri::Unknown;
}

struct StrongReport {
  bool strong = true;
  // First pair (g, h) in row-major order with R_g R_h != R_gh.
  std::optional<GroupPair> witness;
};

template <Field F>
StrongReport check_strongly_graded(const GradedAlgebra<F>& a, ExecMode mode = ExecMode::Parallel);

struct NondegenerateReport {
  bool nondegenerate = true;
  // First g whose pairing R_g x R_{g^-1} -> R_e has a left or right kernel.
  std::optional<int> witness;
  std::string side;
};

template <Field F>
NondegenerateReport check_nondegenerate(const GradedAlgebra<F>& a);

// C_R(R_e) = {x : bx = xb for every b in R_e}; a graded subspace.
template <Field F>
GradedSubspace<F> centralizer_of_Re(const GradedAlgebra<F>& a);

// Z(R_e) in R_e coordinates.
template <Field F>
Subspace<F> center_of_Re(const GradedAlgebra<F>& a);

// C_R(R_e) = Z(R_e).
template <Field F>
bool check_centralizer_condition(const GradedAlgebra<F>& a);

enum class ControlledKind { Controlled, NotControlled, Inconclusive };

inline const char* to_string(ControlledKind k) {
  switch (k) {
    case ControlledKind::Controlled: return "controlled";
    case ControlledKind::NotControlled: return "not-controlled";
    case ControlledKind::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

template <Field F>
struct ControlledReport {
  ControlledKind verdict = ControlledKind::Inconclusive;
  std::string reason;
  // Per group element; a zero component is reported NotSimple with method
  // "zero-component".
  std::vector<SimplicityVerdict<F>> simplicity;
  // isomorphic[g * |G| + h]; the diagonal is Yes.
  std::vector<Tri> isomorphic;
  std::optional<int> non_simple;
  std::optional<GroupPair> isomorphic_pair;
};

// Every R_g a simple R_e-bimodule and R_g, R_h non-isomorphic for g != h.
template <Field F>
ControlledReport<F> check_controlled(const GradedAlgebra<F>& a, const SearchOptions& opts = {});

template <Field F>
struct NecessaryReport {
  Tri pairwise_non_isomorphic = Tri::Unknown;
  Tri components_simple = Tri::Unknown;
  Tri identity_component_simple = Tri::Unknown;
  Tri centralizer = Tri::Unknown;
  // Absent (skipped) outside oracle scale.
  std::optional<bool> ideals_graded;
};

template <Field F>
NecessaryReport<F> check_necessary_conditions(const GradedAlgebra<F>& a,
                                              const SearchOptions& opts = {});

// Witnesses are subspaces of R in global coordinates: a proper nonzero graded
// ideal, respectively a proper nonzero ideal.
template <Field F>
SimplicityVerdict<F> check_graded_simple(const GradedAlgebra<F>& a, const SearchOptions& opts = {});

template <Field F>
SimplicityVerdict<F> check_simple(const GradedAlgebra<F>& a, const SearchOptions& opts = {});

// Decomposition of a crossed product along chosen units.
template <Field F>
struct CrossedProductStructure {
  // units[g] in R_g coordinates; units[e] is the identity.
  std::vector<Vec<F>> units;
  std::vector<Vec<F>> inverses;
  // base = R_e, sigma[g](b) = u_g b u_g^-1, alpha(g,h) = u_g u_h u_gh^-1.
  CrossedProductData<F> data;
};

template <Field F>
struct CrossedProductReport {
  Tri verdict = Tri::Unknown;
  // For No: "dimension" or "exhaustive". For Yes/Unknown: the search used.
  std::string scope;
  std::optional<int> failing_component;
  int random_trials = 0;
  std::optional<CrossedProductStructure<F>> structure;
};

template <Field F>
CrossedProductReport<F> detect_crossed_product(const GradedAlgebra<F>& a,
                                               const SearchOptions& opts = {});

// The defining identities of the extracted data against the algebra, then
// the conditions on (sigma, alpha) alone.
template <Field F>
std::optional<CocycleViolation> verify_cocycle_identities(const GradedAlgebra<F>& a,
                                                          const CrossedProductStructure<F>& s);

// First basis pair (global indices) where a sigma_g(b) alpha(g,h) u_gh
// differs from the structure-constant product.
template <Field F>
std::optional<std::pair<std::size_t, std::size_t>> verify_product_formula(
    const GradedAlgebra<F>& a, const CrossedProductStructure<F>& s);

template <Field F>
struct InnerResult {
  Tri verdict = Tri::Unknown;
  // An element v with sigma(r) v = v r, so sigma is conjugation by v.
  std::optional<Vec<F>> unit;
  std::string method;
};

// base is a trivially graded algebra; sigma must be a unital automorphism.
template <Field F>
InnerResult<F> is_inner(const GradedAlgebra<F>& base, const Matrix<F>& sigma,
                        const SearchOptions& opts = {});

struct CrossedControlledReport {
  Tri controlled = Tri::Unknown;
  Tri simple_and_centralizer = Tri::Unknown;
  Tri simple_and_outer = Tri::Unknown;
  Tri verdict = Tri::Unknown;
};

// Requires a crossed product (InvalidInput otherwise). Throws
// InternalInconsistency if two decided conditions disagree.
template <Field F>
CrossedControlledReport check_crossed_controlled(const GradedAlgebra<F>& a,
                                                 const SearchOptions& opts = {});

struct PicardReport {
  Tri injective = Tri::Unknown;
  std::optional<GroupPair> isomorphic_pair;
};

// Requires a strongly graded algebra.
template <Field F>
PicardReport check_picard_injective(const GradedAlgebra<F>& a, const SearchOptions& opts = {});

template <Field F>
struct SubringEntry {
  SubsetOfG subset;
  GradedSubspace<F> subring;
};

// The subrings R_H for H a submonoid of G. Requires a controlled, strongly
// graded algebra.
template <Field F>
std::vector<SubringEntry<F>> subring_correspondence(const GradedAlgebra<F>& a,
                                                    const SearchOptions& opts = {});

}  // namespace graded
