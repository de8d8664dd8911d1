#pragma once

// Brute-force ground truth over small prime fields: exhaustive enumeration of
// subspaces, sub-bimodules, ideals and subrings. Nothing here uses the
// simplicity or isomorphism machinery of the analysis layer except hom_space,
// so its verdicts can be compared against those checks. Rational algebras are
// refused.

#include <cstdint>
#include <string>
#include <vector>

#include "graded/algebra.hpp"
#include "graded/parallel.hpp"

namespace graded {

enum class OracleStrategy {
  // Enumerate every subspace by RREF pivot pattern and keep the invariant ones.
  Filter,
  // Spin every vector, then close the cyclic submodules under sums.
  Closure,
  // Filter when the subspace count is within budget, otherwise Closure.
  Auto,
};

struct OracleOptions {
  // Largest number of subspaces Filter may visit.
  std::uint64_t subspace_budget = 1000000;
  // Largest number of vectors Closure may spin, and the largest lattice it
  // may build.
  std::uint64_t vector_budget = std::uint64_t{1} << 20;
  // Largest hom space (as |F|^dim) searched for an isomorphism.
  std::uint64_t hom_budget = std::uint64_t{1} << 16;
  OracleStrategy strategy = OracleStrategy::Auto;
  ExecMode mode = ExecMode::Parallel;
};

// Number of subspaces of GF(q)^n, saturating at cap + 1.
std::uint64_t count_subspaces(std::size_t n, std::uint64_t q, std::uint64_t cap);

// Every subspace of GF(p)^n exactly once, ordered by dimension, then pivot
// columns, then free entries. BudgetError when the count exceeds budget.
std::vector<Subspace<PrimeField>> enumerate_subspaces(std::size_t n, const PrimeField& f,
                                                      std::uint64_t budget = 1000000,
                                                      ExecMode mode = ExecMode::Parallel);

// Subspaces of GF(p)^n invariant under every operator, sorted by
// Subspace::operator< (dimension, then RREF basis entries).
std::vector<Subspace<PrimeField>> invariant_subspaces(std::size_t n, const PrimeField& f,
                                                      const std::vector<Matrix<PrimeField>>& ops,
                                                      const OracleOptions& opts = {});

// Subspaces of R closed under left and right multiplication by R_e. These
// need not be graded.
std::vector<Subspace<PrimeField>> enumerate_sub_bimodules(const GradedAlgebra<PrimeField>& a,
                                                          const OracleOptions& opts = {});

struct OracleControlledReport {
  bool controlled = false;
  std::string reason;
  std::size_t sub_bimodules = 0;
};

// Sub-bimodules are exactly the R_H for H a subset of G, all distinct, and
// R_S, R_T are isomorphic only for S = T.
OracleControlledReport controlled_oracle(const GradedAlgebra<PrimeField>& a,
                                         const OracleOptions& opts = {});

// Sub-bimodules containing R_e that are closed under multiplication.
std::vector<Subspace<PrimeField>> subring_oracle(const GradedAlgebra<PrimeField>& a,
                                                 const OracleOptions& opts = {});

struct IdealEntry {
  Subspace<PrimeField> ideal;
  bool graded = false;
};

// Every two-sided ideal, including 0 and R.
std::vector<IdealEntry> ideal_oracle(const GradedAlgebra<PrimeField>& a,
                                     const OracleOptions& opts = {});

}  // namespace graded
