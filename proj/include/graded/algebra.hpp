#pragma once

// Finite-dimensional unital G-graded algebras given by structure constants.
//
// The basis of R is the concatenation of the bases of the components R_g in
// group order; "global index" below means a position in that concatenation.
// The product of basis vectors a in R_g and b in R_h is stored only as a
// coefficient vector over the basis of R_{gh}, so a grading violation cannot
// be expressed.

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graded/group.hpp"
#include "graded/linalg.hpp"
#include "graded/parallel.hpp"

namespace graded {

using Metadata = std::vector<std::pair<std::string, std::string>>;

template <Field F>
class GradedAlgebra {
 public:
  using Elem = typename F::Elem;

  // products[a * dim + b] holds basis_a * basis_b over the basis of the
  // component of degree deg(a)deg(b); unit is over the basis of R_e.
  GradedAlgebra(F field, FiniteGroup group, std::vector<std::size_t> comp_dims,
                std::vector<Vec<F>> products, Vec<F> unit, Metadata meta = {});

  const F& field() const { return field_; }
  const FiniteGroup& group() const { return group_; }
  int identity() const { return group_.identity(); }
  std::size_t dim() const { return dim_; }
  std::size_t comp_dim(int g) const { return comp_dims_[static_cast<std::size_t>(g)]; }
  const std::vector<std::size_t>& comp_dims() const { return comp_dims_; }
  std::size_t offset(int g) const { return offsets_[static_cast<std::size_t>(g)]; }
  int degree(std::size_t a) const { return degree_[a]; }
  std::vector<std::size_t> component_indices(int g) const;

  std::span<const Elem> product(std::size_t a, std::size_t b) const {
    return products_[a * dim_ + b];
  }
  const Vec<F>& unit() const { return unit_; }
  Vec<F> unit_dense() const;
  const Metadata& meta() const { return meta_; }

  // Products of dense global coordinate vectors.
  Vec<F> multiply(std::span<const Elem> x, std::span<const Elem> y) const;

  // Left and right multiplication by the a-th basis vector, as n x n
  // matrices on global coordinates.
  const Matrix<F>& left_op(std::size_t a) const { return left_ops_[a]; }
  const Matrix<F>& right_op(std::size_t a) const { return right_ops_[a]; }
  Matrix<F> left_mult(std::span<const Elem> x) const;
  Matrix<F> right_mult(std::span<const Elem> x) const;

  // Embed a component vector of R_g into global coordinates, and back.
  Vec<F> embed(int g, std::span<const Elem> local) const;
  Vec<F> restrict_to(int g, std::span<const Elem> global) const;

 private:
  F field_;
  FiniteGroup group_;
  std::vector<std::size_t> comp_dims_;
  std::vector<std::size_t> offsets_;
  std::vector<int> degree_;
  std::size_t dim_ = 0;
  std::vector<Vec<F>> products_;
  Vec<F> unit_;
  Metadata meta_;
  std::vector<Matrix<F>> left_ops_;
  std::vector<Matrix<F>> right_ops_;
};

struct AlgebraDiagnostics {
  bool ok = true;
  std::string message;
  // Global basis indices of the first failing triple (associativity) or the
  // failing basis vector in slot 0 (unit law).
  std::optional<std::array<std::size_t, 3>> witness;
};

// Associativity on all basis triples and the two-sided unit law.
template <Field F>
AlgebraDiagnostics validate_algebra(const GradedAlgebra<F>& a, ExecMode mode = ExecMode::Parallel);

// Element of R, stored sparsely by component: parts[g] is empty exactly when
// the g-component is zero.
template <Field F>
class Element {
 public:
  using Elem = typename F::Elem;

  static Element zero(const GradedAlgebra<F>& a);
  static Element one(const GradedAlgebra<F>& a);
  static Element basis(const GradedAlgebra<F>& a, int g, std::size_t i);
  static Element homogeneous(const GradedAlgebra<F>& a, int g, Vec<F> local);
  static Element from_dense(const GradedAlgebra<F>& a, std::span<const Elem> global);

  const GradedAlgebra<F>& owner() const { return *owner_; }
  Vec<F> dense() const;
  // Coefficients of the g-component (zero-filled when absent).
  Vec<F> component(int g) const;
  bool has_component(int g) const { return !parts_[static_cast<std::size_t>(g)].empty(); }
  bool is_zero() const;

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element scaled(const Elem& c) const;

  friend bool operator==(const Element& x, const Element& y) {
    return x.owner_ == y.owner_ && x.parts_ == y.parts_;
  }

 private:
  explicit Element(const GradedAlgebra<F>& a);
  void normalize();
  void require_same_owner(const Element& o) const;

  const GradedAlgebra<F>* owner_;
  std::vector<Vec<F>> parts_;
};

// E_g(x).
template <Field F>
Element<F> project(const Element<F>& x, int g);

template <Field F>
SubsetOfG support(const Element<F>& x);

// The inverse when left multiplication by x is bijective.
template <Field F>
std::optional<Element<F>> is_invertible(const Element<F>& x);

// Per-component subspaces; component g lives in R_g.
template <Field F>
class GradedSubspace {
 public:
  static GradedSubspace zero(const GradedAlgebra<F>& a);
  static GradedSubspace full(const GradedAlgebra<F>& a);
  // R_H
  static GradedSubspace of_subset(const GradedAlgebra<F>& a, const SubsetOfG& h);
  static GradedSubspace from_components(std::vector<Subspace<F>> parts);
  // Homogeneous parts of a global subspace (which need not be graded).
  static GradedSubspace homogeneous_parts(const GradedAlgebra<F>& a, const Subspace<F>& s);

  const Subspace<F>& component(int g) const { return parts_[static_cast<std::size_t>(g)]; }
  std::size_t dim() const;
  Subspace<F> embed(const GradedAlgebra<F>& a) const;

  friend bool operator==(const GradedSubspace& x, const GradedSubspace& y) {
    return x.parts_ == y.parts_;
  }

 private:
  explicit GradedSubspace(std::vector<Subspace<F>> parts) : parts_(std::move(parts)) {}
  std::vector<Subspace<F>> parts_;
};

// Component-wise span of all products st.
template <Field F>
GradedSubspace<F> component_product(const GradedAlgebra<F>& a, const GradedSubspace<F>& s,
                                    const GradedSubspace<F>& t);

// span(R_g R_h) as a subspace of R_{gh}.
template <Field F>
Subspace<F> component_pair_product(const GradedAlgebra<F>& a, int g, int h);

// R_e as an algebra graded by the trivial group.
template <Field F>
GradedAlgebra<F> identity_component_algebra(const GradedAlgebra<F>& a);

// Global subspace of a set of components.
template <Field F>
Subspace<F> coordinate_subspace(const GradedAlgebra<F>& a, const SubsetOfG& h);

}  // namespace graded
