#include "graded/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "graded/bimodule.hpp"
#include "graded/enumerate.hpp"
#include "graded/error.hpp"

namespace graded {

namespace {

using P = PrimeField;
using Elem = P::Elem;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  return (a > cap || b > cap - std::min(a, cap)) ? cap + 1 : std::min(a + b, cap + 1);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
  if (a == 0 || b == 0) return 0;
  if (a > cap / b) return cap + 1;
  return std::min(a * b, cap + 1);
}

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    while (true) {
      out.push_back(c);
      // Next combination in lexicographic order.
      std::size_t i = k;
      while (i > 0 && c[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
    }
  }
  return out;
}

// Every RREF matrix with the given pivots, filtered by keep.
template <class Keep>
std::vector<Subspace<P>> subspaces_with_pivots(std::size_t n, const P& f,
                                               const std::vector<std::size_t>& pivots, Keep&& keep) {
  const std::size_t k = pivots.size();
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = pivots[r] + 1; c < n; ++c)
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(r, c);
  Matrix<P> m(f, k, n);
  for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = 1;
  std::vector<Subspace<P>> out;
  std::vector<Elem> digits(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) m(free[i].first, free[i].second) = digits[i];
    auto s = Subspace<P>::from_rref(m, pivots);
    if (keep(s)) out.push_back(std::move(s));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == f.order()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

template <class Keep>
std::vector<Subspace<P>> enumerate_filtered(std::size_t n, const P& f, ExecMode mode, Keep&& keep) {
  auto patterns = pivot_patterns(n);
  auto parts = map_indices(
      patterns.size(),
      [&](std::uint64_t i) { return subspaces_with_pivots(n, f, patterns[i], keep); }, mode);
  std::vector<Subspace<P>> out;
  for (auto& part : parts)
    for (auto& s : part) out.push_back(std::move(s));
  return out;
}

Subspace<P> closure(std::size_t n, const P& f, const std::vector<Matrix<P>>& ops, const Vec<P>& seed) {
  EchelonBasis<P> basis(f, n);
  std::deque<Vec<P>> queue;
  if (basis.insert(seed)) queue.push_back(seed);
  while (!queue.empty() && !basis.full()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (const auto& op : ops) {
      auto u = graded::apply(op, std::span<const Elem>(w));
      if (basis.insert(u)) queue.push_back(std::move(u));
    }
  }
  return Subspace<P>::span(f, n, basis.rows());
}

std::vector<Subspace<P>> invariant_by_closure(std::size_t n, const P& f, const std::vector<Matrix<P>>& ops,
                                              const OracleOptions& opts) {
  auto total = power_within(f.order(), n, opts.vector_budget);
  if (!total) budget_exceeded("oracle: too many vectors to spin in dimension " + std::to_string(n));

  std::set<Subspace<P>> cyclic;
  const std::uint64_t chunk = 4096;
  for (std::uint64_t start = 1; start < *total; start += chunk) {
    const std::uint64_t count = std::min(chunk, *total - start);
    auto spun = map_indices(
        count,
        [&](std::uint64_t i) -> std::optional<Subspace<P>> {
          auto v = vector_at(f, n, start + i);
          if (!is_projective_rep(std::span<const Elem>(v))) return std::nullopt;
          return closure(n, f, ops, v);
        },
        opts.mode);
    for (auto& s : spun)
      if (s) cyclic.insert(std::move(*s));
  }

  // Every invariant subspace is a sum of cyclic ones.
  std::set<Subspace<P>> lattice{Subspace<P>::zero(f, n)};
  std::deque<Subspace<P>> queue{Subspace<P>::zero(f, n)};
  while (!queue.empty()) {
    auto s = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : cyclic) {
      if (is_subspace_of(c, s)) continue;
      auto t = subspace_sum(s, c);
      if (lattice.insert(t).second) {
        if (lattice.size() > opts.vector_budget) budget_exceeded("oracle: invariant lattice too large");
        queue.push_back(std::move(t));
      }
    }
  }
  return {lattice.begin(), lattice.end()};
}

void require_oracle_scale(const GradedAlgebra<P>& a) {
  if (a.group().order() > 16) budget_exceeded("oracle: group order above 16");
}

std::vector<Matrix<P>> identity_component_ops(const GradedAlgebra<P>& a) {
  std::vector<Matrix<P>> ops;
  for (auto b : a.component_indices(a.identity())) {
    ops.push_back(a.left_op(b));
    ops.push_back(a.right_op(b));
  }
  return ops;
}

// Exhaustive search of the hom space for a bijection.
bool isomorphic_by_search(const BimoduleAction<P>& x, const BimoduleAction<P>& y,
                          const OracleOptions& opts) {
  if (x.dim != y.dim) return false;
  if (x.dim == 0) return true;
  auto h = hom_space(x, y);
  if (h.is_zero()) return false;
  auto total = power_within(x.field.order(), h.dim(), opts.hom_budget);
  if (!total) budget_exceeded("oracle: hom space too large to search");
  const auto& f = x.field;
  const std::size_t m = x.dim;
  auto hit = first_index(
      *total,
      [&](std::uint64_t idx) {
        auto c = vector_at(f, h.dim(), idx);
        if (!is_projective_rep(std::span<const Elem>(c))) return false;
        Vec<P> flat(m * m, 0);
        for (std::size_t k = 0; k < h.dim(); ++k)
          if (c[k]) detail::row_axpy(f, std::span<Elem>(flat), h.basis().row(k), f.neg(c[k]));
        return rank(unflatten(f, std::span<const Elem>(flat), m, m)) == m;
      },
      opts.mode);
  return hit.has_value();
}

}  // namespace

std::uint64_t count_subspaces(std::size_t n, std::uint64_t q, std::uint64_t cap) {
  // g[k] holds the q-binomial (i choose k) for the current i.
  std::vector<std::uint64_t> g(n + 1, 0);
  g[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = i; k >= 1; --k) {
      std::uint64_t qk = 1;
      for (std::size_t t = 0; t < k; ++t) qk = sat_mul(qk, q, cap);
      g[k] = sat_add(g[k - 1], sat_mul(qk, g[k], cap), cap);
    }
  }
  std::uint64_t total = 0;
  for (auto x : g) total = sat_add(total, x, cap);
  return total;
}

std::vector<Subspace<PrimeField>> enumerate_subspaces(std::size_t n, const PrimeField& f,
                                                      std::uint64_t budget, ExecMode mode) {
  auto count = count_subspaces(n, f.order(), budget);
  if (count > budget)
    budget_exceeded("oracle: GF(" + std::to_string(f.order()) + ")^" + std::to_string(n) +
                    " has more than " + std::to_string(budget) + " subspaces");
  return enumerate_filtered(n, f, mode, [](const Subspace<P>&) { return true; });
}

std::vector<Subspace<PrimeField>> invariant_subspaces(std::size_t n, const PrimeField& f,
                                                      const std::vector<Matrix<PrimeField>>& ops,
                                                      const OracleOptions& opts) {
  auto strategy = opts.strategy;
  if (strategy == OracleStrategy::Auto)
    strategy = count_subspaces(n, f.order(), opts.subspace_budget) <= opts.subspace_budget
                   ? OracleStrategy::Filter
                   : OracleStrategy::Closure;
  std::vector<Subspace<P>> out;
  if (strategy == OracleStrategy::Filter) {
    if (count_subspaces(n, f.order(), opts.subspace_budget) > opts.subspace_budget)
      budget_exceeded("oracle: subspace count above budget");
    out = enumerate_filtered(n, f, opts.mode, [&](const Subspace<P>& s) { return is_invariant(s, ops); });
  } else {
    out = invariant_by_closure(n, f, ops, opts);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace<PrimeField>> enumerate_sub_bimodules(const GradedAlgebra<PrimeField>& a,
                                                          const OracleOptions& opts) {
  require_oracle_scale(a);
  return invariant_subspaces(a.dim(), a.field(), identity_component_ops(a), opts);
}

OracleControlledReport controlled_oracle(const GradedAlgebra<PrimeField>& a, const OracleOptions& opts) {
  OracleControlledReport out;
  auto mods = enumerate_sub_bimodules(a, opts);
  out.sub_bimodules = mods.size();
  const int n = a.group().order();

  std::vector<Subspace<P>> expected;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    expected.push_back(coordinate_subspace(a, subset_from_mask(mask, n)));
  for (int g = 0; g < n; ++g)
    if (a.comp_dim(g) == 0) {
      out.reason = "component " + a.group().name(g) + " is zero";
      return out;
    }
  std::sort(expected.begin(), expected.end());
  if (mods != expected) {
    for (const auto& m : mods)
      if (!std::binary_search(expected.begin(), expected.end(), m)) {
        out.reason = "sub-bimodule of dimension " + std::to_string(m.dim()) + " is not a sum of components";
        return out;
      }
    out.reason = "sub-bimodule set differs from the component sums";
    return out;
  }

  std::vector<BimoduleAction<P>> actions;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    actions.push_back(component_action(a, subset_from_mask(mask, n)));
  for (std::size_t s = 0; s < actions.size(); ++s)
    for (std::size_t t = s + 1; t < actions.size(); ++t)
      if (isomorphic_by_search(actions[s], actions[t], opts)) {
        out.reason = "R_" + format_subset(a.group(), subset_from_mask(s, n)) + " and R_" +
                     format_subset(a.group(), subset_from_mask(t, n)) + " are isomorphic";
        return out;
      }
  out.controlled = true;
  return out;
}

std::vector<Subspace<PrimeField>> subring_oracle(const GradedAlgebra<PrimeField>& a,
                                                 const OracleOptions& opts) {
  auto re = coordinate_subspace(a, {a.identity()});
  std::vector<Subspace<P>> out;
  for (auto& m : enumerate_sub_bimodules(a, opts)) {
    if (!is_subspace_of(re, m)) continue;
    bool closed = true;
    for (std::size_t i = 0; i < m.dim() && closed; ++i)
      for (std::size_t j = 0; j < m.dim() && closed; ++j)
        closed = m.contains(a.multiply(m.basis().row(i), m.basis().row(j)));
    if (closed) out.push_back(std::move(m));
  }
  return out;
}

std::vector<IdealEntry> ideal_oracle(const GradedAlgebra<PrimeField>& a, const OracleOptions& opts) {
  require_oracle_scale(a);
  std::vector<Matrix<P>> ops;
  for (std::size_t b = 0; b < a.dim(); ++b) {
    ops.push_back(a.left_op(b));
    ops.push_back(a.right_op(b));
  }
  std::vector<IdealEntry> out;
  for (auto& s : invariant_subspaces(a.dim(), a.field(), ops, opts)) {
    bool graded = GradedSubspace<P>::homogeneous_parts(a, s).embed(a) == s;
    out.push_back({std::move(s), graded});
  }
  return out;
}

}  // namespace graded
