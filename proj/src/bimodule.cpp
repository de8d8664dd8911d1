#include "graded/bimodule.hpp"

#include <deque>

#include "graded/enumerate.hpp"
#include "graded/poly.hpp"
#include "graded/rng.hpp"

namespace graded {

namespace {

template <Field F>
Matrix<F> submatrix(const Matrix<F>& m, const std::vector<std::size_t>& idx) {
  Matrix<F> out(m.field(), idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
  return out;
}

template <Field F>
Vec<F> flatten(const Matrix<F>& m) {
  return Vec<F>(m.data().begin(), m.data().end());
}

template <Field F>
Matrix<F> combination(const F& f, const std::vector<Matrix<F>>& basis,
                      std::span<const typename F::Elem> coeffs, std::size_t n) {
  Matrix<F> out(f, n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (f.is_zero(coeffs[k])) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) = f.mul_add(out(r, c), coeffs[k], basis[k](r, c));
  }
  return out;
}

template <Field F>
Matrix<F> hom_combination(const F& f, const Subspace<F>& h, std::span<const typename F::Elem> coeffs,
                          std::size_t rows, std::size_t cols) {
  Vec<F> flat = zero_vec(f, rows * cols);
  for (std::size_t k = 0; k < h.dim(); ++k) {
    if (f.is_zero(coeffs[k])) continue;
    detail::row_axpy(f, std::span<typename F::Elem>(flat), h.basis().row(k), f.neg(coeffs[k]));
  }
  return unflatten(f, std::span<const typename F::Elem>(flat), rows, cols);
}

template <Field F>
void require_compatible(const BimoduleAction<F>& a, const BimoduleAction<F>& b) {
  detail::require_same_field(a.field, b.field);
  if (a.left_ops.size() != b.left_ops.size() || a.right_ops.size() != b.right_ops.size())
    invalid_input("bimodules are over different operator families");
}

template <Field F>
SimplicityVerdict<F> verdict(SimplicityKind kind, std::string method,
                             std::optional<Subspace<F>> witness = std::nullopt) {
  SimplicityVerdict<F> v;
  v.kind = kind;
  v.method = std::move(method);
  v.witness = std::move(witness);
  return v;
}

bool proper(std::size_t d, std::size_t m) { return d > 0 && d < m; }

// Shared prefix of both fields' simplicity tests: trivial dimensions, the
// Burnside criterion, and spins of the coordinate vectors.
template <Field F>
std::optional<SimplicityVerdict<F>> simplicity_prefix(const BimoduleAction<F>& act,
                                                      const std::vector<Matrix<F>>& env) {
  const std::size_t m = act.dim;
  if (m == 0) invalid_input("simplicity of the zero bimodule is undefined");
  if (m == 1) return verdict<F>(SimplicityKind::Simple, "dimension-one");
  if (env.size() == m * m) return verdict<F>(SimplicityKind::Simple, "burnside");
  for (std::size_t i = 0; i < m; ++i) {
    auto s = cyclic_submodule(env, unit_vec(act.field, m, i));
    if (proper(s.dim(), m)) return verdict<F>(SimplicityKind::NotSimple, "basis-spin", s);
  }
  return std::nullopt;
}

// One MeatAxe round on a random element of the enveloping algebra; nothing
// when the element gave no decision.
std::optional<SimplicityVerdict<PrimeField>> meataxe_round(
    const PrimeField& f, std::size_t m, const std::vector<Matrix<PrimeField>>& env,
    const std::vector<Matrix<PrimeField>>& env_t, Rng& rng) {
  Vec<PrimeField> coeffs(env.size());
  for (auto& c : coeffs) c = random_scalar(f, rng);
  auto a = combination(f, env, std::span<const PrimeField::Elem>(coeffs), m);
  for (const auto& fac : small_irreducible_factors(f, charpoly(a))) {
    auto fa = poly_eval(fac, a);
    auto n = nullspace(fa);
    if (n.is_zero()) continue;
    auto s = cyclic_submodule(env, n.basis_vector(0));
    if (proper(s.dim(), m)) return verdict<PrimeField>(SimplicityKind::NotSimple, "meataxe-spin", s);
    if (n.dim() != static_cast<std::size_t>(degree<PrimeField>(fac))) continue;
    // Norton: ker f(A) is a single F[A]-line, so either the transposed spin
    // is proper (its annihilator is a submodule) or the module is simple.
    auto w = cyclic_submodule(env_t, nullspace(transpose(fa)).basis_vector(0));
    if (proper(w.dim(), m))
      return verdict<PrimeField>(SimplicityKind::NotSimple, "meataxe-dual", nullspace(w.basis()));
    return verdict<PrimeField>(SimplicityKind::Simple, "meataxe-norton");
  }
  return std::nullopt;
}

SimplicityVerdict<PrimeField> simplicity_finite(const BimoduleAction<PrimeField>& act,
                                                const std::vector<Matrix<PrimeField>>& env,
                                                const SearchOptions& opts) {
  const auto& f = act.field;
  const std::size_t m = act.dim;
  std::vector<Matrix<PrimeField>> env_t;
  env_t.reserve(env.size());
  for (const auto& e : env) env_t.push_back(transpose(e));

  Rng rng = Rng::stream(opts.seed, opts.stream);
  int tried = 0;
  auto stamp = [&](SimplicityVerdict<PrimeField> v) {
    v.meataxe_elements_tried = tried;
    return v;
  };
  for (; tried < opts.meataxe_tries;) {
    ++tried;
    if (auto v = meataxe_round(f, m, env, env_t, rng)) return stamp(std::move(*v));
  }

  if (auto total = power_within(f.order(), m, opts.exhaustive_budget)) {
    auto hit = first_index(
        *total,
        [&](std::uint64_t idx) {
          auto x = vector_at(f, m, idx);
          if (!is_projective_rep(std::span<const PrimeField::Elem>(x))) return false;
          return cyclic_submodule(env, x).dim() < m;
        },
        opts.mode);
    if (hit)
      return stamp(verdict<PrimeField>(SimplicityKind::NotSimple, "exhaustive",
                                       cyclic_submodule(env, vector_at(f, m, *hit))));
    return stamp(verdict<PrimeField>(SimplicityKind::Simple, "exhaustive"));
  }

  // Too large to enumerate: keep sampling before giving up.
  for (const int limit = opts.meataxe_tries * 16; tried < limit;) {
    ++tried;
    if (auto v = meataxe_round(f, m, env, env_t, rng)) return stamp(std::move(*v));
  }
  return stamp(verdict<PrimeField>(SimplicityKind::Inconclusive, "undecided"));
}

// A nonzero singular endomorphism has a proper nonzero kernel, which is a
// submodule. Tries every hom-space basis element shifted by its rational
// eigenvalues.
std::optional<Subspace<RationalField>> singular_endomorphism_kernel(
    const BimoduleAction<RationalField>& act) {
  const auto& q = act.field;
  const std::size_t m = act.dim;
  auto end = hom_space(act, act);
  for (std::size_t k = 0; k < end.dim(); ++k) {
    auto f = unflatten(q, end.basis().row(k), m, m);
    for (const auto& lambda : rational_roots(charpoly(f))) {
      auto g = f;
      for (std::size_t i = 0; i < m; ++i) g(i, i) -= lambda;
      if (g.is_zero()) continue;
      auto ker = nullspace(g);
      if (proper(ker.dim(), m)) return ker;
    }
  }
  return std::nullopt;
}

SimplicityVerdict<RationalField> simplicity_rational(const BimoduleAction<RationalField>& act,
                                                     const std::vector<Matrix<RationalField>>& env,
                                                     const SearchOptions& opts) {
  Rng rng = Rng::stream(opts.seed, opts.stream);
  for (int t = 0; t < opts.random_trials; ++t) {
    Vec<RationalField> x(act.dim);
    for (auto& c : x) c = random_scalar(act.field, rng);
    auto s = cyclic_submodule(env, x);
    if (proper(s.dim(), act.dim))
      return verdict<RationalField>(SimplicityKind::NotSimple, "random-spin", s);
  }
  if (auto ker = singular_endomorphism_kernel(act))
    return verdict<RationalField>(SimplicityKind::NotSimple, "endomorphism-kernel", *ker);
  return verdict<RationalField>(SimplicityKind::Inconclusive, "undecided");
}

}  // namespace

template <Field F>
BimoduleAction<F> component_action(const GradedAlgebra<F>& a, const SubsetOfG& h) {
  std::vector<std::size_t> idx;
  for (int g : h) {
    if (g < 0 || g >= a.group().order()) invalid_input("group element out of range");
    auto c = a.component_indices(g);
    idx.insert(idx.end(), c.begin(), c.end());
  }
  BimoduleAction<F> act{a.field(), idx.size(), {}, {}, {}, true};
  for (auto i : a.component_indices(a.identity())) {
    act.left_ops.push_back(submatrix(a.left_op(i), idx));
    act.right_ops.push_back(submatrix(a.right_op(i), idx));
  }
  act.label = "R_" + format_subset(a.group(), h);
  act.spans_closed = true;
  return act;
}

template <Field F>
BimoduleAction<F> regular_bimodule(const GradedAlgebra<F>& a) {
  BimoduleAction<F> act{a.field(), a.dim(), {}, {}, {}, true};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    act.left_ops.push_back(a.left_op(i));
    act.right_ops.push_back(a.right_op(i));
  }
  act.label = "R";
  act.spans_closed = true;
  return act;
}

template <Field F>
bool sides_commute(const BimoduleAction<F>& act) {
  for (const auto& l : act.left_ops)
    for (const auto& r : act.right_ops)
      if (!(multiply(l, r) == multiply(r, l))) return false;
  return true;
}

template <Field F>
Subspace<F> spin(const BimoduleAction<F>& act, const Vec<F>& seed) {
  if (seed.size() != act.dim) invalid_input("seed length does not match bimodule dimension");
  EchelonBasis<F> eb(act.field, act.dim);
  std::deque<Vec<F>> work;
  if (eb.insert(seed)) work.push_back(seed);
  while (!work.empty() && !eb.full()) {
    Vec<F> v = std::move(work.front());
    work.pop_front();
    for (const auto* ops : {&act.left_ops, &act.right_ops})
      for (const auto& op : *ops) {
        auto w = graded::apply(op, std::span<const typename F::Elem>(v));
        if (eb.insert(w)) work.push_back(std::move(w));
      }
  }
  return Subspace<F>::row_span(eb.matrix());
}

template <Field F>
std::vector<Matrix<F>> enveloping_algebra(const BimoduleAction<F>& act) {
  const std::size_t m = act.dim;
  const F& f = act.field;
  EchelonBasis<F> eb(f, m * m);
  if (act.spans_closed) {
    for (const auto& l : act.left_ops) {
      for (const auto& r : act.right_ops) {
        eb.insert(flatten(multiply(l, r)));
        if (eb.full()) break;
      }
      if (eb.full()) break;
    }
  } else {
    std::vector<const Matrix<F>*> gens;
    for (const auto& l : act.left_ops) gens.push_back(&l);
    for (const auto& r : act.right_ops) gens.push_back(&r);
    std::deque<Matrix<F>> work;
    auto id = Matrix<F>::identity(f, m);
    eb.insert(flatten(id));
    work.push_back(id);
    while (!work.empty() && !eb.full()) {
      auto x = std::move(work.front());
      work.pop_front();
      for (const auto* g : gens) {
        auto y = multiply(*g, x);
        if (eb.insert(flatten(y))) work.push_back(std::move(y));
      }
    }
  }
  std::vector<Matrix<F>> out;
  out.reserve(eb.dim());
  for (const auto& row : eb.rows())
    out.push_back(unflatten(f, std::span<const typename F::Elem>(row), m, m));
  return out;
}

template <Field F>
Subspace<F> cyclic_submodule(const std::vector<Matrix<F>>& env, const Vec<F>& v) {
  if (env.empty()) invalid_input("empty enveloping algebra");
  const F& f = env.front().field();
  EchelonBasis<F> eb(f, v.size());
  for (const auto& e : env) {
    eb.insert(graded::apply(e, std::span<const typename F::Elem>(v)));
    if (eb.full()) break;
  }
  return Subspace<F>::row_span(eb.matrix());
}

template <Field F>
SimplicityVerdict<F> is_simple(const BimoduleAction<F>& act, const SearchOptions& opts) {
  if (act.dim == 0) invalid_input("simplicity of the zero bimodule is undefined");
  if (act.dim == 1) return verdict<F>(SimplicityKind::Simple, "dimension-one");
  auto env = enveloping_algebra(act);
  if (auto v = simplicity_prefix(act, env)) return *v;
  if constexpr (F::finite)
    return simplicity_finite(act, env, opts);
  else
    return simplicity_rational(act, env, opts);
}

template <Field F>
Matrix<F> unflatten(const F& field, std::span<const typename F::Elem> v, std::size_t rows,
                    std::size_t cols) {
  if (v.size() != rows * cols) invalid_input("flattened matrix has the wrong length");
  Matrix<F> out(field, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = v[r * cols + c];
  return out;
}

template <Field F>
Subspace<F> hom_space(const BimoduleAction<F>& a, const BimoduleAction<F>& b) {
  require_compatible(a, b);
  const F& f = a.field;
  const std::size_t ma = a.dim, mb = b.dim, n = ma * mb;
  EchelonBasis<F> eb(f, n);
  // f A = B f for every operator pair; unknown f(r, c) sits at r * ma + c.
  auto add_equations = [&](const Matrix<F>& A, const Matrix<F>& B) {
    for (std::size_t r = 0; r < mb && !eb.full(); ++r)
      for (std::size_t c = 0; c < ma && !eb.full(); ++c) {
        Vec<F> row = zero_vec(f, n);
        for (std::size_t k = 0; k < ma; ++k) row[r * ma + k] = f.add(row[r * ma + k], A(k, c));
        for (std::size_t k = 0; k < mb; ++k) row[k * ma + c] = f.sub(row[k * ma + c], B(r, k));
        eb.insert(std::move(row));
      }
  };
  for (std::size_t i = 0; i < a.left_ops.size(); ++i) add_equations(a.left_ops[i], b.left_ops[i]);
  for (std::size_t i = 0; i < a.right_ops.size(); ++i)
    add_equations(a.right_ops[i], b.right_ops[i]);
  if (eb.full()) return Subspace<F>::zero(f, n);
  if (eb.dim() == 0) return Subspace<F>::full(f, n);
  return nullspace(eb.matrix());
}

template <Field F>
bool are_isomorphic_simple(const BimoduleAction<F>& a, const SimplicityVerdict<F>& va,
                           const BimoduleAction<F>& b, const SimplicityVerdict<F>& vb) {
  if (va.kind != SimplicityKind::Simple || vb.kind != SimplicityKind::Simple)
    invalid_input("are_isomorphic_simple requires two simple bimodules");
  if (a.dim != b.dim) return false;
  return !hom_space(a, b).is_zero();
}

template <Field F>
bool are_isomorphic_simple(const BimoduleAction<F>& a, const BimoduleAction<F>& b,
                           const SearchOptions& opts) {
  auto va = is_simple(a, opts.with_stream(opts.stream * 2));
  auto vb = is_simple(b, opts.with_stream(opts.stream * 2 + 1));
  return are_isomorphic_simple(a, va, b, vb);
}

template <Field F>
IsomorphismResult<F> find_isomorphism(const BimoduleAction<F>& a, const BimoduleAction<F>& b,
                                      const SearchOptions& opts) {
  require_compatible(a, b);
  const F& f = a.field;
  IsomorphismResult<F> out;
  if (a.dim != b.dim) {
    out.verdict = Tri::No;
    out.method = "dimension";
    return out;
  }
  const std::size_t m = a.dim;
  auto h = hom_space(a, b);
  if (h.is_zero()) {
    out.verdict = Tri::No;
    out.method = "hom-zero";
    return out;
  }
  auto accept = [&](Matrix<F> cand, const char* method) {
    if (rank(cand) != m) return false;
    out.verdict = Tri::Yes;
    out.iso = std::move(cand);
    out.method = method;
    return true;
  };
  for (std::size_t k = 0; k < h.dim(); ++k) {
    auto cand = unflatten(f, h.basis().row(k), m, m);
    if (accept(std::move(cand), "hom-basis")) return out;
  }
  if constexpr (F::finite) {
    if (auto total = power_within(f.order(), h.dim(), opts.exhaustive_budget)) {
      auto hit = first_index(
          *total,
          [&](std::uint64_t idx) {
            auto c = vector_at(f, h.dim(), idx);
            if (!is_projective_rep(std::span<const typename F::Elem>(c))) return false;
            return rank(hom_combination(f, h, std::span<const typename F::Elem>(c), m, m)) == m;
          },
          opts.mode);
      if (hit) {
        auto c = vector_at(f, h.dim(), *hit);
        accept(hom_combination(f, h, std::span<const typename F::Elem>(c), m, m), "exhaustive");
      } else {
        out.verdict = Tri::No;
        out.method = "exhaustive";
      }
      return out;
    }
  }
  Rng rng = Rng::stream(opts.seed, opts.stream);
  Vec<F> c(h.dim());
  for (int t = 0; t < opts.random_trials; ++t) {
    for (auto& x : c) x = random_scalar(f, rng);
    if (accept(hom_combination(f, h, std::span<const typename F::Elem>(c), m, m), "random"))
      return out;
  }
  out.verdict = Tri::Unknown;
  out.method = "random";
  return out;
}

template <Field F>
Vec<F> apply_operator_word(const BimoduleAction<F>& act, const Matrix<F>& coeffs, const Vec<F>& v) {
  if (coeffs.rows() != act.left_ops.size() || coeffs.cols() != act.right_ops.size())
    invalid_input("operator coefficients have the wrong shape");
  const F& f = act.field;
  Vec<F> out = zero_vec(f, act.dim);
  for (std::size_t j = 0; j < act.right_ops.size(); ++j) {
    bool any = false;
    for (std::size_t i = 0; i < act.left_ops.size(); ++i) any = any || !f.is_zero(coeffs(i, j));
    if (!any) continue;
    auto rv = graded::apply(act.right_ops[j], std::span<const typename F::Elem>(v));
    for (std::size_t i = 0; i < act.left_ops.size(); ++i) {
      if (f.is_zero(coeffs(i, j))) continue;
      auto lrv = graded::apply(act.left_ops[i], std::span<const typename F::Elem>(rv));
      detail::row_axpy(f, std::span<typename F::Elem>(out), std::span<const typename F::Elem>(lrv),
                       f.neg(coeffs(i, j)));
    }
  }
  return out;
}

template <Field F>
std::optional<Matrix<F>> separating_operator(const BimoduleAction<F>& a,
                                             const BimoduleAction<F>& b, const Vec<F>& x,
                                             const Vec<F>& y) {
  require_compatible(a, b);
  if (x.size() != a.dim || y.size() != b.dim) invalid_input("vector length does not match bimodule");
  const F& f = a.field;
  const std::size_t dl = a.left_ops.size(), dr = a.right_ops.size();
  std::vector<Vec<F>> on_x, on_y;
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dr; ++j) {
      on_x.push_back(graded::apply(a.left_ops[i], std::span<const typename F::Elem>(graded::apply(
                                              a.right_ops[j], std::span<const typename F::Elem>(x)))));
      on_y.push_back(graded::apply(b.left_ops[i], std::span<const typename F::Elem>(graded::apply(
                                              b.right_ops[j], std::span<const typename F::Elem>(y)))));
    }
  auto kernel = nullspace(Matrix<F>::from_columns(f, b.dim, on_y));
  for (std::size_t k = 0; k < kernel.dim(); ++k) {
    auto c = kernel.basis_vector(k);
    Vec<F> img = zero_vec(f, a.dim);
    for (std::size_t t = 0; t < c.size(); ++t)
      if (!f.is_zero(c[t]))
        detail::row_axpy(f, std::span<typename F::Elem>(img), std::span<const typename F::Elem>(on_x[t]),
                         f.neg(c[t]));
    if (!is_zero_vec(f, std::span<const typename F::Elem>(img)))
      return unflatten(f, std::span<const typename F::Elem>(c), dl, dr);
  }
  return std::nullopt;
}

#define GRADED_INSTANTIATE_BIMODULE(F)                                                        \
  template BimoduleAction<F> component_action(const GradedAlgebra<F>&, const SubsetOfG&);     \
  template BimoduleAction<F> regular_bimodule(const GradedAlgebra<F>&);                       \
  template bool sides_commute(const BimoduleAction<F>&);                                      \
  template Subspace<F> spin(const BimoduleAction<F>&, const Vec<F>&);                         \
  template std::vector<Matrix<F>> enveloping_algebra(const BimoduleAction<F>&);               \
  template Subspace<F> cyclic_submodule(const std::vector<Matrix<F>>&, const Vec<F>&);        \
  template SimplicityVerdict<F> is_simple(const BimoduleAction<F>&, const SearchOptions&);    \
  template Subspace<F> hom_space(const BimoduleAction<F>&, const BimoduleAction<F>&);         \
  template Matrix<F> unflatten(const F&, std::span<const typename F::Elem>, std::size_t,      \
                               std::size_t);                                                  \
  template bool are_isomorphic_simple(const BimoduleAction<F>&, const SimplicityVerdict<F>&,  \
                                      const BimoduleAction<F>&, const SimplicityVerdict<F>&); \
  template bool are_isomorphic_simple(const BimoduleAction<F>&, const BimoduleAction<F>&,     \
                                      const SearchOptions&);                                  \
  template IsomorphismResult<F> find_isomorphism(const BimoduleAction<F>&,                    \
                                                 const BimoduleAction<F>&,                    \
                                                 const SearchOptions&);                       \
  template Vec<F> apply_operator_word(const BimoduleAction<F>&, const Matrix<F>&,             \
                                      const Vec<F>&);                                         \
  template std::optional<Matrix<F>> separating_operator(                                      \
      const BimoduleAction<F>&, const BimoduleAction<F>&, const Vec<F>&, const Vec<F>&);

GRADED_INSTANTIATE_BIMODULE(PrimeField)
GRADED_INSTANTIATE_BIMODULE(RationalField)

}  // namespace graded
