#include "graded/algebra.hpp"

namespace graded {

template <Field F>
GradedAlgebra<F>::GradedAlgebra(F field, FiniteGroup group, std::vector<std::size_t> comp_dims,
                                std::vector<Vec<F>> products, Vec<F> unit, Metadata meta)
    : field_(field),
      group_(std::move(group)),
      comp_dims_(std::move(comp_dims)),
      products_(std::move(products)),
      unit_(std::move(unit)),
      meta_(std::move(meta)) {
  const int order = group_.order();
  if (group_.identity() < 0) invalid_input("grading group has no identity element");
  if (comp_dims_.size() != static_cast<std::size_t>(order))
    invalid_input("need one component dimension per group element");
  if (comp_dims_[static_cast<std::size_t>(group_.identity())] == 0)
    invalid_input("the identity component must be nonzero");
  for (int g = 0; g < order; ++g) {
    offsets_.push_back(dim_);
    for (std::size_t i = 0; i < comp_dims_[static_cast<std::size_t>(g)]; ++i) degree_.push_back(g);
    dim_ += comp_dims_[static_cast<std::size_t>(g)];
  }
  if (products_.size() != dim_ * dim_) invalid_input("structure table must cover every basis pair");
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b) {
      const auto& p = products_[a * dim_ + b];
      if (p.size() != comp_dim(group_.mul(degree_[a], degree_[b])))
        invalid_input("structure vector has the wrong length for its target component");
      for (const auto& c : p)
        if (!field_.valid(c)) invalid_input("structure constant outside " + field_.name());
    }
  if (unit_.size() != comp_dim(group_.identity()))
    invalid_input("unit must be a vector over the identity component");

  left_ops_.reserve(dim_);
  right_ops_.reserve(dim_);
  for (std::size_t a = 0; a < dim_; ++a) {
    Matrix<F> l(field_, dim_, dim_), r(field_, dim_, dim_);
    for (std::size_t b = 0; b < dim_; ++b) {
      const auto& ab = products_[a * dim_ + b];
      const auto off_ab = offset(group_.mul(degree_[a], degree_[b]));
      for (std::size_t k = 0; k < ab.size(); ++k) l(off_ab + k, b) = ab[k];
      const auto& ba = products_[b * dim_ + a];
      const auto off_ba = offset(group_.mul(degree_[b], degree_[a]));
      for (std::size_t k = 0; k < ba.size(); ++k) r(off_ba + k, b) = ba[k];
    }
    left_ops_.push_back(std::move(l));
    right_ops_.push_back(std::move(r));
  }
}

template <Field F>
std::vector<std::size_t> GradedAlgebra<F>::component_indices(int g) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < comp_dim(g); ++i) out.push_back(offset(g) + i);
  return out;
}

template <Field F>
Vec<F> GradedAlgebra<F>::unit_dense() const {
  return embed(identity(), unit_);
}

template <Field F>
Vec<F> GradedAlgebra<F>::embed(int g, std::span<const Elem> local) const {
  if (local.size() != comp_dim(g)) invalid_input("component vector has the wrong length");
  Vec<F> out(dim_, field_.zero());
  std::copy(local.begin(), local.end(), out.begin() + static_cast<std::ptrdiff_t>(offset(g)));
  return out;
}

template <Field F>
Vec<F> GradedAlgebra<F>::restrict_to(int g, std::span<const Elem> global) const {
  auto first = global.begin() + static_cast<std::ptrdiff_t>(offset(g));
  return Vec<F>(first, first + static_cast<std::ptrdiff_t>(comp_dim(g)));
}

template <Field F>
Vec<F> GradedAlgebra<F>::multiply(std::span<const Elem> x, std::span<const Elem> y) const {
  if (x.size() != dim_ || y.size() != dim_) invalid_input("element length does not match algebra");
  Vec<F> out(dim_, field_.zero());
  for (std::size_t a = 0; a < dim_; ++a) {
    if (field_.is_zero(x[a])) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (field_.is_zero(y[b])) continue;
      auto c = field_.mul(x[a], y[b]);
      const auto& p = products_[a * dim_ + b];
      const auto off = offset(group_.mul(degree_[a], degree_[b]));
      for (std::size_t k = 0; k < p.size(); ++k)
        if (!field_.is_zero(p[k])) out[off + k] = field_.mul_add(out[off + k], c, p[k]);
    }
  }
  return out;
}

template <Field F>
Matrix<F> GradedAlgebra<F>::left_mult(std::span<const Elem> x) const {
  Matrix<F> m(field_, dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    if (!field_.is_zero(x[a])) m = add(m, scale(x[a], left_ops_[a]));
  return m;
}

template <Field F>
Matrix<F> GradedAlgebra<F>::right_mult(std::span<const Elem> x) const {
  Matrix<F> m(field_, dim_, dim_);
  for (std::size_t a = 0; a < dim_; ++a)
    if (!field_.is_zero(x[a])) m = add(m, scale(x[a], right_ops_[a]));
  return m;
}

template <Field F>
AlgebraDiagnostics validate_algebra(const GradedAlgebra<F>& alg, ExecMode mode) {
  const auto& f = alg.field();
  const auto& grp = alg.group();
  const std::size_t n = alg.dim();
  const auto unit = alg.unit_dense();

  for (std::size_t a = 0; a < n; ++a) {
    auto b = unit_vec(f, n, a);
    if (alg.multiply(unit, b) != b || alg.multiply(b, unit) != b)
      return {false, "unit law fails on basis vector " + std::to_string(a),
              std::array<std::size_t, 3>{a, a, a}};
  }

  // (ab)c - a(bc) for basis a, b, c, both sides living in R_{deg a deg b deg c}.
  auto triple_fails = [&](std::size_t a, std::size_t b, std::size_t c) {
    const int gab = grp.mul(alg.degree(a), alg.degree(b));
    const int gbc = grp.mul(alg.degree(b), alg.degree(c));
    const int gabc = grp.mul(gab, alg.degree(c));
    Vec<F> lhs(alg.comp_dim(gabc), f.zero()), rhs(alg.comp_dim(gabc), f.zero());
    auto ab = alg.product(a, b);
    for (std::size_t k = 0; k < ab.size(); ++k) {
      if (f.is_zero(ab[k])) continue;
      auto p = alg.product(alg.offset(gab) + k, c);
      for (std::size_t t = 0; t < p.size(); ++t) lhs[t] = f.mul_add(lhs[t], ab[k], p[t]);
    }
    auto bc = alg.product(b, c);
    for (std::size_t k = 0; k < bc.size(); ++k) {
      if (f.is_zero(bc[k])) continue;
      auto p = alg.product(a, alg.offset(gbc) + k);
      for (std::size_t t = 0; t < p.size(); ++t) rhs[t] = f.mul_add(rhs[t], bc[k], p[t]);
    }
    return lhs != rhs;
  };

  auto first_pair = first_index(
      static_cast<std::uint64_t>(n) * n,
      [&](std::uint64_t ab) {
        for (std::size_t c = 0; c < n; ++c)
          if (triple_fails(ab / n, ab % n, c)) return true;
        return false;
      },
      mode);
  if (first_pair) {
    std::size_t a = *first_pair / n, b = *first_pair % n;
    for (std::size_t c = 0; c < n; ++c)
      if (triple_fails(a, b, c))
        return {false,
                "associativity fails on basis triple (" + std::to_string(a) + "," +
                    std::to_string(b) + "," + std::to_string(c) + ")",
                std::array<std::size_t, 3>{a, b, c}};
  }
  return {};
}

template <Field F>
Element<F>::Element(const GradedAlgebra<F>& a)
    : owner_(&a), parts_(static_cast<std::size_t>(a.group().order())) {}

template <Field F>
Element<F> Element<F>::zero(const GradedAlgebra<F>& a) {
  return Element(a);
}

template <Field F>
Element<F> Element<F>::one(const GradedAlgebra<F>& a) {
  return homogeneous(a, a.identity(), a.unit());
}

template <Field F>
Element<F> Element<F>::basis(const GradedAlgebra<F>& a, int g, std::size_t i) {
  if (i >= a.comp_dim(g)) invalid_input("basis index out of range for component");
  return homogeneous(a, g, unit_vec(a.field(), a.comp_dim(g), i));
}

template <Field F>
Element<F> Element<F>::homogeneous(const GradedAlgebra<F>& a, int g, Vec<F> local) {
  if (local.size() != a.comp_dim(g)) invalid_input("component vector has the wrong length");
  Element x(a);
  x.parts_[static_cast<std::size_t>(g)] = std::move(local);
  x.normalize();
  return x;
}

template <Field F>
Element<F> Element<F>::from_dense(const GradedAlgebra<F>& a, std::span<const Elem> global) {
  if (global.size() != a.dim()) invalid_input("element length does not match algebra");
  Element x(a);
  for (int g = 0; g < a.group().order(); ++g)
    x.parts_[static_cast<std::size_t>(g)] = a.restrict_to(g, global);
  x.normalize();
  return x;
}

template <Field F>
void Element<F>::normalize() {
  const auto& f = owner_->field();
  for (auto& p : parts_)
    if (!p.empty() && is_zero_vec(f, std::span<const Elem>(p))) p.clear();
}

template <Field F>
void Element<F>::require_same_owner(const Element& o) const {
  if (owner_ != o.owner_) invalid_input("elements belong to different algebras");
}

template <Field F>
Vec<F> Element<F>::dense() const {
  Vec<F> out(owner_->dim(), owner_->field().zero());
  for (int g = 0; g < owner_->group().order(); ++g) {
    const auto& p = parts_[static_cast<std::size_t>(g)];
    std::copy(p.begin(), p.end(), out.begin() + static_cast<std::ptrdiff_t>(owner_->offset(g)));
  }
  return out;
}

template <Field F>
Vec<F> Element<F>::component(int g) const {
  const auto& p = parts_[static_cast<std::size_t>(g)];
  if (p.empty()) return zero_vec(owner_->field(), owner_->comp_dim(g));
  return p;
}

template <Field F>
bool Element<F>::is_zero() const {
  return std::all_of(parts_.begin(), parts_.end(), [](const Vec<F>& p) { return p.empty(); });
}

template <Field F>
Element<F> Element<F>::operator+(const Element& o) const {
  require_same_owner(o);
  Element out(*owner_);
  for (int g = 0; g < owner_->group().order(); ++g)
    if (has_component(g) || o.has_component(g))
      out.parts_[static_cast<std::size_t>(g)] =
          add(owner_->field(), std::span<const Elem>(component(g)), std::span<const Elem>(o.component(g)));
  out.normalize();
  return out;
}

template <Field F>
Element<F> Element<F>::operator-(const Element& o) const {
  require_same_owner(o);
  Element out(*owner_);
  for (int g = 0; g < owner_->group().order(); ++g)
    if (has_component(g) || o.has_component(g))
      out.parts_[static_cast<std::size_t>(g)] =
          sub(owner_->field(), std::span<const Elem>(component(g)), std::span<const Elem>(o.component(g)));
  out.normalize();
  return out;
}

template <Field F>
Element<F> Element<F>::scaled(const Elem& c) const {
  Element out(*owner_);
  for (std::size_t g = 0; g < parts_.size(); ++g)
    if (!parts_[g].empty()) out.parts_[g] = scale(owner_->field(), c, std::span<const Elem>(parts_[g]));
  out.normalize();
  return out;
}

// Only component pairs in the two supports contribute.
template <Field F>
Element<F> Element<F>::operator*(const Element& o) const {
  require_same_owner(o);
  const auto& alg = *owner_;
  const auto& f = alg.field();
  Element out(alg);
  const int order = alg.group().order();
  for (int g = 0; g < order; ++g) {
    const auto& x = parts_[static_cast<std::size_t>(g)];
    if (x.empty()) continue;
    for (int h = 0; h < order; ++h) {
      const auto& y = o.parts_[static_cast<std::size_t>(h)];
      if (y.empty()) continue;
      const int gh = alg.group().mul(g, h);
      auto& acc = out.parts_[static_cast<std::size_t>(gh)];
      if (acc.empty()) acc.assign(alg.comp_dim(gh), f.zero());
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (f.is_zero(x[i])) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
          if (f.is_zero(y[j])) continue;
          auto c = f.mul(x[i], y[j]);
          auto p = alg.product(alg.offset(g) + i, alg.offset(h) + j);
          for (std::size_t k = 0; k < p.size(); ++k)
            if (!f.is_zero(p[k])) acc[k] = f.mul_add(acc[k], c, p[k]);
        }
      }
    }
  }
  out.normalize();
  return out;
}

template <Field F>
Element<F> project(const Element<F>& x, int g) {
  if (!x.has_component(g)) return Element<F>::zero(x.owner());
  return Element<F>::homogeneous(x.owner(), g, x.component(g));
}

template <Field F>
SubsetOfG support(const Element<F>& x) {
  SubsetOfG s;
  for (int g = 0; g < x.owner().group().order(); ++g)
    if (x.has_component(g)) s.push_back(g);
  return s;
}

template <Field F>
std::optional<Element<F>> is_invertible(const Element<F>& x) {
  const auto& alg = x.owner();
  auto l = alg.left_mult(x.dense());
  auto rhs = Matrix<F>::from_columns(alg.field(), alg.dim(), {alg.unit_dense()});
  if (rank(l) != alg.dim()) return std::nullopt;
  auto y = solve(l, rhs);
  if (!y) return std::nullopt;
  return Element<F>::from_dense(alg, y->column(0));
}

template <Field F>
GradedSubspace<F> GradedSubspace<F>::zero(const GradedAlgebra<F>& a) {
  std::vector<Subspace<F>> parts;
  for (int g = 0; g < a.group().order(); ++g) parts.push_back(Subspace<F>::zero(a.field(), a.comp_dim(g)));
  return GradedSubspace(std::move(parts));
}

template <Field F>
GradedSubspace<F> GradedSubspace<F>::full(const GradedAlgebra<F>& a) {
  std::vector<Subspace<F>> parts;
  for (int g = 0; g < a.group().order(); ++g) parts.push_back(Subspace<F>::full(a.field(), a.comp_dim(g)));
  return GradedSubspace(std::move(parts));
}

template <Field F>
GradedSubspace<F> GradedSubspace<F>::of_subset(const GradedAlgebra<F>& a, const SubsetOfG& h) {
  auto s = zero(a);
  for (int g : h) s.parts_[static_cast<std::size_t>(g)] = Subspace<F>::full(a.field(), a.comp_dim(g));
  return s;
}

template <Field F>
GradedSubspace<F> GradedSubspace<F>::from_components(std::vector<Subspace<F>> parts) {
  return GradedSubspace(std::move(parts));
}

template <Field F>
GradedSubspace<F> GradedSubspace<F>::homogeneous_parts(const GradedAlgebra<F>& a,
                                                       const Subspace<F>& s) {
  std::vector<Subspace<F>> parts;
  for (int g = 0; g < a.group().order(); ++g) {
    auto comp = subspace_intersect(s, coordinate_subspace(a, SubsetOfG{g}));
    std::vector<Vec<F>> local;
    for (std::size_t i = 0; i < comp.dim(); ++i) local.push_back(a.restrict_to(g, comp.basis().row(i)));
    parts.push_back(Subspace<F>::span(a.field(), a.comp_dim(g), local));
  }
  return GradedSubspace(std::move(parts));
}

template <Field F>
std::size_t GradedSubspace<F>::dim() const {
  std::size_t d = 0;
  for (const auto& p : parts_) d += p.dim();
  return d;
}

template <Field F>
Subspace<F> GradedSubspace<F>::embed(const GradedAlgebra<F>& a) const {
  std::vector<Vec<F>> vs;
  for (int g = 0; g < a.group().order(); ++g) {
    const auto& p = parts_[static_cast<std::size_t>(g)];
    for (std::size_t i = 0; i < p.dim(); ++i) vs.push_back(a.embed(g, p.basis().row(i)));
  }
  return Subspace<F>::span(a.field(), a.dim(), vs);
}

template <Field F>
GradedSubspace<F> component_product(const GradedAlgebra<F>& a, const GradedSubspace<F>& s,
                                    const GradedSubspace<F>& t) {
  const auto& f = a.field();
  const int order = a.group().order();
  std::vector<EchelonBasis<F>> acc;
  for (int g = 0; g < order; ++g) acc.emplace_back(f, a.comp_dim(g));
  for (int g = 0; g < order; ++g) {
    const auto& sg = s.component(g);
    for (int h = 0; h < order; ++h) {
      const auto& th = t.component(h);
      const int gh = a.group().mul(g, h);
      for (std::size_t i = 0; i < sg.dim(); ++i)
        for (std::size_t j = 0; j < th.dim(); ++j) {
          if (acc[static_cast<std::size_t>(gh)].full()) break;
          auto prod = a.multiply(a.embed(g, sg.basis().row(i)), a.embed(h, th.basis().row(j)));
          acc[static_cast<std::size_t>(gh)].insert(a.restrict_to(gh, prod));
        }
    }
  }
  std::vector<Subspace<F>> parts;
  for (auto& e : acc) parts.push_back(Subspace<F>::row_span(e.matrix()));
  return GradedSubspace<F>::from_components(std::move(parts));
}

template <Field F>
Subspace<F> component_pair_product(const GradedAlgebra<F>& a, int g, int h) {
  const int gh = a.group().mul(g, h);
  EchelonBasis<F> acc(a.field(), a.comp_dim(gh));
  for (auto i : a.component_indices(g))
    for (auto j : a.component_indices(h)) {
      auto p = a.product(i, j);
      acc.insert(Vec<F>(p.begin(), p.end()));
    }
  return Subspace<F>::row_span(acc.matrix());
}

template <Field F>
GradedAlgebra<F> identity_component_algebra(const GradedAlgebra<F>& a) {
  const int e = a.identity();
  const auto idx = a.component_indices(e);
  std::vector<Vec<F>> products;
  for (auto i : idx)
    for (auto j : idx) {
      auto p = a.product(i, j);
      products.emplace_back(p.begin(), p.end());
    }
  return GradedAlgebra<F>(a.field(), FiniteGroup::trivial(), {a.comp_dim(e)}, std::move(products),
                          a.unit());
}

template <Field F>
Subspace<F> coordinate_subspace(const GradedAlgebra<F>& a, const SubsetOfG& h) {
  std::vector<std::size_t> coords;
  for (int g : h)
    for (auto i : a.component_indices(g)) coords.push_back(i);
  return Subspace<F>::coordinate(a.field(), a.dim(), coords);
}

#define GRADED_INSTANTIATE_ALGEBRA(F)                                                         \
  template class GradedAlgebra<F>;                                                            \
  template class Element<F>;                                                                  \
  template class GradedSubspace<F>;                                                           \
  template AlgebraDiagnostics validate_algebra(const GradedAlgebra<F>&, ExecMode);            \
  template Element<F> project(const Element<F>&, int);                                        \
  template SubsetOfG support(const Element<F>&);                                              \
  template std::optional<Element<F>> is_invertible(const Element<F>&);                        \
  template GradedSubspace<F> component_product(const GradedAlgebra<F>&,                       \
                                               const GradedSubspace<F>&,                      \
                                               const GradedSubspace<F>&);                     \
  template Subspace<F> component_pair_product(const GradedAlgebra<F>&, int, int);             \
  template GradedAlgebra<F> identity_component_algebra(const GradedAlgebra<F>&);              \
  template Subspace<F> coordinate_subspace(const GradedAlgebra<F>&, const SubsetOfG&);

GRADED_INSTANTIATE_ALGEBRA(PrimeField)
GRADED_INSTANTIATE_ALGEBRA(RationalField)

}  // namespace graded
