#pragma once

// Univariate polynomials (coefficients low to high) and characteristic
// polynomials. Used by the irreducibility test.

#include <cstdint>
#include <vector>

#include "graded/linalg.hpp"

namespace graded {

template <Field F>
using Poly = std::vector<typename F::Elem>;

template <Field F>
void trim(const F& f, Poly<F>& p) {
  while (!p.empty() && f.is_zero(p.back())) p.pop_back();
}

template <Field F>
int degree(const Poly<F>& p) {
  return static_cast<int>(p.size()) - 1;  // -1 for the zero polynomial (trimmed)
}

template <Field F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<F> out(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.mul_add(out[i + j], a[i], b[j]);
  trim(f, out);
  return out;
}

// a = q*b + r with deg r < deg b. b must be nonzero.
template <Field F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) invalid_input("polynomial division by zero");
  trim(f, a);
  if (a.size() < b.size()) return {{}, a};
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  auto lead_inv = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    auto coef = f.mul(a[k + b.size() - 1], lead_inv);
    q[k] = coef;
    if (f.is_zero(coef)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(coef, b[j]));
  }
  trim(f, a);
  trim(f, q);
  return {q, a};
}

// p(m) by Horner's rule.
template <Field F>
Matrix<F> poly_eval(const Poly<F>& p, const Matrix<F>& m) {
  const F& f = m.field();
  const std::size_t n = m.rows();
  Matrix<F> acc(f, n, n);
  for (std::size_t k = p.size(); k-- > 0;) {
    acc = multiply(acc, m);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = f.add(acc(i, i), p[k]);
  }
  return acc;
}

// Monic characteristic polynomial det(xI - m), via reduction to upper
// Hessenberg form by similarity followed by the standard recurrence.
template <Field F>
Poly<F> charpoly(const Matrix<F>& m) {
  if (m.rows() != m.cols()) invalid_input("characteristic polynomial of a non-square matrix");
  const F& f = m.field();
  const std::size_t n = m.rows();
  Matrix<F> h = m;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t i = k;
    while (i < n && f.is_zero(h(i, k - 1))) ++i;
    if (i == n) continue;
    if (i != k) {
      std::swap_ranges(h.row(i).begin(), h.row(i).end(), h.row(k).begin());
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, k));
    }
    auto t_inv = f.inv(h(k, k - 1));
    for (std::size_t r = k + 1; r < n; ++r) {
      auto u = f.mul(h(r, k - 1), t_inv);
      if (f.is_zero(u)) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(u, h(k, c)));
      for (std::size_t c = 0; c < n; ++c) h(c, k) = f.add(h(c, k), f.mul(u, h(c, r)));
    }
  }
  std::vector<Poly<F>> p(n + 1);
  p[0] = Poly<F>{f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    // (x - h[k-1][k-1]) * p[k-1]
    Poly<F> cur(p[k - 1].size() + 1, f.zero());
    for (std::size_t j = 0; j < p[k - 1].size(); ++j) {
      cur[j + 1] = f.add(cur[j + 1], p[k - 1][j]);
      cur[j] = f.sub(cur[j], f.mul(h(k - 1, k - 1), p[k - 1][j]));
    }
    auto t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      auto coef = f.mul(t, h(k - i - 1, k - 1));
      if (f.is_zero(coef)) continue;
      const auto& q = p[k - i - 1];
      for (std::size_t j = 0; j < q.size(); ++j) cur[j] = f.sub(cur[j], f.mul(coef, q[j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

// Distinct monic irreducible factors of c over GF(p), in increasing degree.
// Trial division by every monic polynomial of degree d, for d while p^d stays
// within `candidate_limit`; a cofactor with no factor of degree <= deg/2 is
// itself irreducible. Factors that would need a larger search are omitted.
std::vector<Poly<PrimeField>> small_irreducible_factors(const PrimeField& f, Poly<PrimeField> c,
                                                        std::uint64_t candidate_limit = 4096);

// Monic polynomial of degree d with index k in the enumeration order where the
// coefficient of x^i is the i-th base-p digit of k.
Poly<PrimeField> monic_from_index(const PrimeField& f, int d, std::uint64_t k);

bool is_irreducible(const PrimeField& f, const Poly<PrimeField>& c);

std::string format_poly(const PrimeField& f, const Poly<PrimeField>& c);

// Distinct rational roots, by the rational root test on the integer-scaled
// polynomial. Candidates come from divisors of the constant and leading
// coefficients; when either exceeds `divisor_limit` in absolute value only
// the root 0 is reported, so the list may be incomplete.
std::vector<mpq_class> rational_roots(const Poly<RationalField>& c,
                                      unsigned long divisor_limit = 1000000000000ul);

}  // namespace graded
