#pragma once

// Dense exact linear algebra: matrices, reduced row-echelon form, nullspaces,
// linear solves, and the subspace lattice. Vectors are plain std::vector of
// field elements and matrices act on column vectors.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graded/error.hpp"
#include "graded/field.hpp"

namespace graded {

template <Field F>
using Vec = std::vector<typename F::Elem>;

template <Field F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  // Rows of small integers, reduced into the field. Convenience for tests and
  // builders.
  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) invalid_input("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
    }
    return m;
  }

  static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) invalid_input("row length does not match column count");
      std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
    }
    return m;
  }

  // Columns given as vectors of length `rows`.
  static Matrix from_columns(F field, std::size_t rows, const std::vector<Vec<F>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) invalid_input("column length does not match row count");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Elem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec<F> row_vec(std::size_t r) const { return Vec<F>(row(r).begin(), row(r).end()); }
  Vec<F> column(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  std::span<const Elem> data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [this](const Elem& a) { return field_.is_zero(a); });
  }

  bool entries_valid() const {
    return std::all_of(data_.begin(), data_.end(),
                       [this](const Elem& a) { return field_.valid(a); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

namespace detail {

template <Field F>
void require_same_field(const F& a, const F& b) {
  if (!(a == b)) invalid_input("operands live over different fields");
}

template <Field F>
void require_valid(const Matrix<F>& m) {
  if (!m.entries_valid()) invalid_input("matrix entry outside " + m.field().name());
}

// row[dst] -= factor * row[src], from column `from` onward
template <Field F>
void row_axpy(const F& f, std::span<typename F::Elem> dst,
              std::span<const typename F::Elem> src, const typename F::Elem& factor,
              std::size_t from = 0) {
  auto neg = f.neg(factor);
  for (std::size_t c = from; c < dst.size(); ++c)
    if (!f.is_zero(src[c])) dst[c] = f.mul_add(dst[c], neg, src[c]);
}

}  // namespace detail

template <Field F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <Field F>
bool is_zero_vec(const F& f, std::span<const typename F::Elem> v) {
  return std::all_of(v.begin(), v.end(), [&f](const auto& a) { return f.is_zero(a); });
}

template <Field F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <Field F>
void add_into(const F& f, Vec<F>& acc, std::span<const typename F::Elem> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = f.add(acc[i], v[i]);
}

template <Field F>
Vec<F> add(const F& f, std::span<const typename F::Elem> a,
           std::span<const typename F::Elem> b) {
  if (a.size() != b.size()) invalid_input("vector length mismatch");
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

template <Field F>
Vec<F> sub(const F& f, std::span<const typename F::Elem> a,
           std::span<const typename F::Elem> b) {
  if (a.size() != b.size()) invalid_input("vector length mismatch");
  Vec<F> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

template <Field F>
Vec<F> scale(const F& f, const typename F::Elem& c, std::span<const typename F::Elem> v) {
  Vec<F> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(c, v[i]);
  return out;
}

// m * v
template <Field F>
Vec<F> apply(const Matrix<F>& m, std::span<const typename F::Elem> v) {
  if (v.size() != m.cols()) invalid_input("matrix-vector shape mismatch");
  const F& f = m.field();
  Vec<F> out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    typename F::Elem acc = f.zero();
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!f.is_zero(v[c]) && !f.is_zero(row[c])) acc = f.mul_add(acc, row[c], v[c]);
    out[r] = acc;
  }
  return out;
}

template <Field F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a.field(), b.field());
  if (a.cols() != b.rows()) invalid_input("matrix product shape mismatch");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (f.is_zero(aik)) continue;
      auto brow = b.row(k);
      auto orow = out.row(i);
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!f.is_zero(brow[j])) orow[j] = f.mul_add(orow[j], aik, brow[j]);
    }
  return out;
}

template <Field F>
Matrix<F> add(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols()) invalid_input("matrix sum shape mismatch");
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().add(a(r, c), b(r, c));
  return out;
}

template <Field F>
Matrix<F> subtract(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    invalid_input("matrix difference shape mismatch");
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().sub(a(r, c), b(r, c));
  return out;
}

template <Field F>
Matrix<F> scale(const typename F::Elem& s, const Matrix<F>& a) {
  Matrix<F> out(a.field(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a.field().mul(s, a(r, c));
  return out;
}

template <Field F>
Matrix<F> transpose(const Matrix<F>& a) {
  Matrix<F> out(a.field(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = a(r, c);
  return out;
}

template <Field F>
struct RrefResult {
  Matrix<F> matrix;  // zero rows removed
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

namespace detail {

// In-place reduction to RREF; returns the pivot columns. Rows past the rank
// are left zero.
template <Field F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  const F& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
    auto pr = m.row(r);
    if (!f.equal(pr[c], f.one())) {
      auto inv = f.inv(pr[c]);
      for (std::size_t k = c; k < m.cols(); ++k) pr[k] = f.mul(pr[k], inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || f.is_zero(m(i, c))) continue;
      auto factor = m(i, c);
      row_axpy(f, m.row(i), std::span<const typename F::Elem>(pr), factor, c);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <Field F>
Matrix<F> leading_rows(const Matrix<F>& m, std::size_t k) {
  Matrix<F> out(m.field(), k, m.cols());
  for (std::size_t r = 0; r < k; ++r) std::copy(m.row(r).begin(), m.row(r).end(), out.row(r).begin());
  return out;
}

}  // namespace detail

template <Field F>
RrefResult<F> rref(const Matrix<F>& m) {
  detail::require_valid(m);
  Matrix<F> work = m;
  auto pivots = detail::rref_in_place(work);
  std::size_t rank = pivots.size();
  return {detail::leading_rows(work, rank), rank, std::move(pivots)};
}

template <Field F>
std::size_t rank(const Matrix<F>& m) {
  Matrix<F> work = m;
  return detail::rref_in_place(work).size();
}

template <Field F>
typename F::Elem determinant(const Matrix<F>& m) {
  if (m.rows() != m.cols()) invalid_input("determinant of a non-square matrix");
  const F& f = m.field();
  Matrix<F> work = m;
  auto det = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && f.is_zero(work(sel, c))) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      std::swap_ranges(work.row(sel).begin(), work.row(sel).end(), work.row(c).begin());
      det = f.neg(det);
    }
    det = f.mul(det, work(c, c));
    auto inv = f.inv(work(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (f.is_zero(work(i, c))) continue;
      auto factor = f.mul(work(i, c), inv);
      detail::row_axpy(f, work.row(i), std::span<const typename F::Elem>(work.row(c)), factor, c);
    }
  }
  return det;
}

template <Field F>
class Subspace;

// Solution space of a * x = 0, as a subspace of F^{cols}.
template <Field F>
Subspace<F> nullspace(const Matrix<F>& a);

// Some x with a * x = b, or nullopt when the system is inconsistent.
template <Field F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  detail::require_same_field(a.field(), b.field());
  if (a.rows() != b.rows()) invalid_input("solve: row count mismatch");
  detail::require_valid(a);
  detail::require_valid(b);
  const F& f = a.field();
  const std::size_t n = a.cols();
  const std::size_t k = b.cols();
  Matrix<F> aug(f, a.rows(), n + k);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    std::copy(b.row(r).begin(), b.row(r).end(), aug.row(r).begin() + n);
  }
  auto pivots = detail::rref_in_place(aug);
  Matrix<F> x(f, n, k);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(pivots[r], j) = aug(r, n + j);
  }
  return x;
}

template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) invalid_input("inverse of a non-square matrix");
  Matrix<F> work = m;
  if (detail::rref_in_place(work).size() != m.rows()) return std::nullopt;
  return solve(m, Matrix<F>::identity(m.field(), m.rows()));
}

// Incremental echelon basis: vectors are reduced against the rows collected so
// far and kept when they are independent. Each stored row has a unit pivot and
// is zero at the pivots of earlier rows, so reducing in insertion order
// clears every pivot.
template <Field F>
class EchelonBasis {
 public:
  EchelonBasis(F field, std::size_t ambient) : field_(field), ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  bool full() const { return rows_.size() == ambient_; }
  const std::vector<Vec<F>>& rows() const { return rows_; }

  void reduce(Vec<F>& v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (field_.is_zero(c)) continue;
      auto factor = c;
      detail::row_axpy(field_, std::span<typename F::Elem>(v),
                       std::span<const typename F::Elem>(rows_[i]), factor);
    }
  }

  bool contains(Vec<F> v) const {
    reduce(v);
    return is_zero_vec(field_, std::span<const typename F::Elem>(v));
  }

  // Returns true when v was independent of the current rows.
  bool insert(Vec<F> v) {
    if (v.size() != ambient_) invalid_input("vector length does not match ambient dimension");
    reduce(v);
    std::size_t p = 0;
    while (p < v.size() && field_.is_zero(v[p])) ++p;
    if (p == v.size()) return false;
    if (!field_.equal(v[p], field_.one())) {
      auto inv = field_.inv(v[p]);
      for (auto& a : v) a = field_.mul(a, inv);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  Matrix<F> matrix() const { return Matrix<F>::from_rows(field_, ambient_, rows_); }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// A subspace of F^n, stored by its canonical RREF basis so that equality is
// structural.
template <Field F>
class Subspace {
 public:
  using Elem = typename F::Elem;

  static Subspace zero(F field, std::size_t n) { return Subspace(Matrix<F>(field, 0, n), {}); }

  static Subspace full(F field, std::size_t n) {
    std::vector<std::size_t> piv(n);
    for (std::size_t i = 0; i < n; ++i) piv[i] = i;
    return Subspace(Matrix<F>::identity(field, n), std::move(piv));
  }

  // Row span of m.
  static Subspace row_span(const Matrix<F>& m) {
    auto r = rref(m);
    return Subspace(std::move(r.matrix), std::move(r.pivots));
  }

  static Subspace span(F field, std::size_t n, const std::vector<Vec<F>>& vectors) {
    return row_span(Matrix<F>::from_rows(field, n, vectors));
  }

  // Span of the coordinate vectors e_i for i in `coords`.
  static Subspace coordinate(F field, std::size_t n, const std::vector<std::size_t>& coords) {
    std::vector<Vec<F>> vs;
    for (auto c : coords) vs.push_back(unit_vec(field, n, c));
    return span(field, n, vs);
  }

  // Takes an RREF matrix without zero rows. Not validated.
  static Subspace from_rref(Matrix<F> basis, std::vector<std::size_t> pivots) {
    return Subspace(std::move(basis), std::move(pivots));
  }

  const F& field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }
  const Matrix<F>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<F> basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec<F>> basis_vectors() const {
    std::vector<Vec<F>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vec(i));
    return out;
  }

  // v minus its reduction against the basis; zero iff v is in the subspace.
  Vec<F> residual(std::span<const Elem> v) const {
    if (v.size() != ambient_dim()) invalid_input("vector length does not match ambient dimension");
    Vec<F> w(v.begin(), v.end());
    const F& f = field();
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto& c = w[pivots_[i]];
      if (f.is_zero(c)) continue;
      auto factor = c;
      detail::row_axpy(f, std::span<Elem>(w), basis_.row(i), factor);
    }
    return w;
  }

  bool contains(std::span<const Elem> v) const {
    auto w = residual(v);
    return is_zero_vec(field(), std::span<const Elem>(w));
  }

  // Coordinates of v in the RREF basis (v must lie in the subspace).
  Vec<F> coordinates(std::span<const Elem> v) const {
    Vec<F> out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim();
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    auto da = a.basis_.data();
    auto db = b.basis_.data();
    return std::lexicographical_compare(da.begin(), da.end(), db.begin(), db.end());
  }

 private:
  Subspace(Matrix<F> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix<F> basis_;
  std::vector<std::size_t> pivots_;
};

namespace detail {

template <Field F>
void require_same_ambient(const Subspace<F>& u, const Subspace<F>& v) {
  require_same_field(u.field(), v.field());
  if (u.ambient_dim() != v.ambient_dim()) invalid_input("subspaces of different ambient dimension");
}

}  // namespace detail

template <Field F>
Subspace<F> nullspace(const Matrix<F>& a) {
  detail::require_valid(a);
  const F& f = a.field();
  Matrix<F> work = a;
  auto pivots = detail::rref_in_place(work);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> x(n, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.neg(work(r, free));
    basis.push_back(std::move(x));
  }
  return Subspace<F>::span(f, n, basis);
}

template <Field F>
Subspace<F> subspace_sum(const Subspace<F>& u, const Subspace<F>& v) {
  detail::require_same_ambient(u, v);
  if (u.is_zero()) return v;
  if (v.is_zero()) return u;
  Matrix<F> stacked(u.field(), u.dim() + v.dim(), u.ambient_dim());
  for (std::size_t r = 0; r < u.dim(); ++r)
    std::copy(u.basis().row(r).begin(), u.basis().row(r).end(), stacked.row(r).begin());
  for (std::size_t r = 0; r < v.dim(); ++r)
    std::copy(v.basis().row(r).begin(), v.basis().row(r).end(), stacked.row(u.dim() + r).begin());
  return Subspace<F>::row_span(stacked);
}

// Zassenhaus: reduce [[u, u], [v, 0]]; rows whose left half vanishes span the
// intersection.
template <Field F>
Subspace<F> subspace_intersect(const Subspace<F>& u, const Subspace<F>& v) {
  detail::require_same_ambient(u, v);
  const F& f = u.field();
  const std::size_t n = u.ambient_dim();
  if (u.is_zero() || v.is_zero()) return Subspace<F>::zero(f, n);
  Matrix<F> block(f, u.dim() + v.dim(), 2 * n);
  for (std::size_t r = 0; r < u.dim(); ++r) {
    auto row = u.basis().row(r);
    std::copy(row.begin(), row.end(), block.row(r).begin());
    std::copy(row.begin(), row.end(), block.row(r).begin() + n);
  }
  for (std::size_t r = 0; r < v.dim(); ++r) {
    auto row = v.basis().row(r);
    std::copy(row.begin(), row.end(), block.row(u.dim() + r).begin());
  }
  auto pivots = detail::rref_in_place(block);
  std::vector<Vec<F>> inter;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] < n) continue;
    auto row = block.row(r);
    inter.emplace_back(row.begin() + n, row.end());
  }
  return Subspace<F>::span(f, n, inter);
}

template <Field F>
bool contains(const Subspace<F>& u, std::span<const typename F::Elem> v) {
  return u.contains(v);
}

template <Field F>
bool is_subspace_of(const Subspace<F>& u, const Subspace<F>& v) {
  detail::require_same_ambient(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!v.contains(u.basis().row(i))) return false;
  return true;
}

// Image of u under m (m maps the ambient of u to some F^k).
template <Field F>
Subspace<F> image(const Matrix<F>& m, const Subspace<F>& u) {
  std::vector<Vec<F>> vs;
  for (std::size_t i = 0; i < u.dim(); ++i) vs.push_back(graded::apply(m, u.basis().row(i)));
  return Subspace<F>::span(m.field(), m.rows(), vs);
}

// True when every operator maps u into itself.
template <Field F>
bool is_invariant(const Subspace<F>& u, const std::vector<Matrix<F>>& ops) {
  for (const auto& op : ops)
    for (std::size_t i = 0; i < u.dim(); ++i)
      if (!u.contains(graded::apply(op, u.basis().row(i)))) return false;
  return true;
}

}  // namespace graded
