// Acceptance checks, one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "graded/analysis.hpp"
#include "graded/builders.hpp"
#include "graded/error.hpp"
#include "graded/io.hpp"
#include "graded/oracle.hpp"

#ifndef GRADEDCTL_PATH
#error "GRADEDCTL_PATH must point at the gradedctl binary"
#endif

using namespace graded;
using Clock = std::chrono::steady_clock;

namespace {

PrimeField f2(2), f3(3), f7(7);
RationalField q;

class Criterion {
 public:
  Criterion(int id, std::string label) : id_(id), label_(std::move(label)), start_(Clock::now()) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

  bool finish(double limit_seconds) {
    double t = seconds();
    if (t >= limit_seconds) failures_.push_back("runtime " + fixed(t) + " s over the " + fixed(limit_seconds) + " s limit");
    bool ok = failures_.empty();
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id_ << ": " << label_ << " (" << checks_ << " checks, "
              << fixed(t) << " s";
    for (const auto& n : notes_) std::cout << ", " << n;
    std::cout << ")\n";
    for (std::size_t i = 0; i < failures_.size() && i < 10; ++i) std::cout << "    " << failures_[i] << "\n";
    if (failures_.size() > 10) std::cout << "    ... " << failures_.size() - 10 << " more\n";
    return ok;
  }

 private:
  static std::string fixed(double t) {
    std::ostringstream s;
    s.precision(2);
    s << std::fixed << t;
    return s.str();
  }

  int id_;
  std::string label_;
  Clock::time_point start_;
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

template <Field F>
struct Instance {
  std::string name;
  GradedAlgebra<F> a;
};

template <Field F>
using Corpus = std::vector<Instance<F>>;

template <Field F>
GradedAlgebra<F> m2_skew(F f, bool inner) {
  auto m2 = matrix_algebra(f, 2);
  auto id = Matrix<F>::identity(f, 4);
  auto s = inner ? inner_automorphism(m2, Vec<F>{f.zero(), f.one(), f.one(), f.zero()}) : id;
  return skew_group_ring(m2, FiniteGroup::cyclic(2), {id, s});
}

template <Field F>
GradedAlgebra<F> diag_skew(F f, bool swap) {
  auto d = product_algebra(f, 2);
  auto id = Matrix<F>::identity(f, 2);
  return skew_group_ring(d, FiniteGroup::cyclic(2), {id, swap ? Matrix<F>::from_ints(f, {{0, 1}, {1, 0}}) : id});
}

template <Field F>
GradedAlgebra<F> twisted(F f, const std::string& group, std::uint64_t seed) {
  auto g = named_group(group);
  Rng rng(seed);
  return twisted_group_algebra(f, g, random_coboundary(f, g, rng));
}

GradedAlgebra<PrimeField> cyclic_over_extension(std::uint32_t p, long long c) {
  PrimeField f(p);
  auto ext = finite_field_algebra(f, 2);
  auto cvec = scale(f, f.from_int(c), std::span<const PrimeField::Elem>(ext.unit()));
  return cyclic_crossed_product(ext, frobenius_matrix(ext), 2, cvec);
}

// GF(2)/GF(3), every instance of dimension at most 8.
Corpus<PrimeField> oracle_corpus() {
  Corpus<PrimeField> c;
  for (const PrimeField& f : {f2, f3}) {
    const std::string p = "gf" + std::to_string(f.order());
    for (const char* g : {"z2", "z3", "z4", "v4", "s3", "z5"})
      c.push_back({p + " group algebra " + g, group_algebra(f, named_group(g))});
    std::uint64_t seed = 1;
    for (const char* g : {"z2", "z3", "v4", "s3"}) c.push_back({p + " twisted " + g, twisted(f, g, seed++)});
    c.push_back({p + " M2 inner skew", m2_skew(f, true)});
    c.push_back({p + " M2 trivial skew", m2_skew(f, false)});
    c.push_back({p + " diag2 swap skew", diag_skew(f, true)});
    c.push_back({p + " diag2 trivial skew", diag_skew(f, false)});
    c.push_back({p + " M2 trivially graded", matrix_algebra(f, 2)});
    c.push_back({p + " diag2 trivially graded", product_algebra(f, 2)});
    for (auto [n, m] : {std::pair{2, 2}, {3, 3}, {4, 2}, {4, 4}})
      c.push_back({p + " truncated x^" + std::to_string(n) + " mod Z" + std::to_string(m),
                   truncated_polynomial(f, static_cast<std::size_t>(n), m)});
    c.push_back({p + " M2 square-zero", square_zero_extension(matrix_algebra(f, 2), Matrix<PrimeField>::identity(f, 4))});
    c.push_back({p + " diag2 square-zero swap",
                 square_zero_extension(product_algebra(f, 2), Matrix<PrimeField>::from_ints(f, {{0, 1}, {1, 0}}))});
    c.push_back({p + " galois skew n=2", galois_skew_example(f.order(), 2)});
    auto ext = finite_field_algebra(f, 2);
    c.push_back({p + " extension square-zero frobenius", square_zero_extension(ext, frobenius_matrix(ext))});
  }
  c.push_back({"gf3 cyclic u^2=2", cyclic_over_extension(3, 2)});
  return c;
}

Corpus<PrimeField> prime_extras() {
  return {{"gf2 M3", m3_example(f2)},
          {"gf3 M3", m3_example(f3)},
          {"gf2 galois skew n=3", galois_skew_example(2, 3)},
          {"gf2 twisted z6", twisted(f2, "z6", 5)},
          {"gf7 group algebra z3", group_algebra(f7, FiniteGroup::cyclic(3))}};
}

Corpus<RationalField> rational_corpus() {
  return {{"Q M3", m3_example(q)},
          {"Q group algebra z2", group_algebra(q, FiniteGroup::cyclic(2))},
          {"Q group algebra s3", group_algebra(q, FiniteGroup::symmetric3())},
          {"Q twisted s3", twisted(q, "s3", 11)},
          {"Q twisted v4", twisted(q, "v4", 12)},
          {"Q M2 inner skew", m2_skew(q, true)},
          {"Q M2 trivial skew", m2_skew(q, false)},
          {"Q diag2 swap skew", diag_skew(q, true)},
          {"Q M2 trivially graded", matrix_algebra(q, 2)},
          {"Q truncated x^2 mod Z2", truncated_polynomial(q, 2, 2)}};
}

// Restriction of a bimodule action to an invariant subspace, on the basis of
// that subspace.
template <Field F>
std::optional<BimoduleAction<F>> restrict_action(const BimoduleAction<F>& act, const Subspace<F>& s) {
  const F& f = act.field;
  auto restrict_op = [&](const Matrix<F>& m) -> std::optional<Matrix<F>> {
    Matrix<F> r(f, s.dim(), s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) {
      auto img = graded::apply(m, std::span<const typename F::Elem>(s.basis_vector(j)));
      if (!s.contains(img)) return std::nullopt;
      auto c = s.coordinates(img);
      for (std::size_t i = 0; i < s.dim(); ++i) r(i, j) = c[i];
    }
    return r;
  };
  BimoduleAction<F> out{f, s.dim(), {}, {}, act.label + " restricted", false};
  for (const auto& m : act.left_ops) {
    auto r = restrict_op(m);
    if (!r) return std::nullopt;
    out.left_ops.push_back(*r);
  }
  for (const auto& m : act.right_ops) {
    auto r = restrict_op(m);
    if (!r) return std::nullopt;
    out.right_ops.push_back(*r);
  }
  return out;
}

// Nontrivial two-sided ideals of R_0, certified: R_0 = I + J directly with
// I, J simple and non-isomorphic, so the submodule lattice is {0, I, J, R_0}.
template <Field F>
std::optional<std::pair<Subspace<F>, Subspace<F>>> split_identity_component(const GradedAlgebra<F>& a,
                                                                            Criterion& c, const std::string& tag) {
  const F& f = a.field();
  auto re = identity_component_algebra(a);
  auto center = center_of_Re(a);
  std::optional<Vec<F>> idem;
  for (const auto& z : center.basis_vectors()) {
    auto z2 = re.multiply(z, z);
    if (z2 == z && !is_zero_vec(f, std::span<const typename F::Elem>(z)) && z != re.unit()) idem = z;
  }
  c.expect(idem.has_value(), tag + ": no central idempotent among the center basis");
  if (!idem) return std::nullopt;
  auto one_minus = sub(f, std::span<const typename F::Elem>(re.unit()), std::span<const typename F::Elem>(*idem));
  auto reg = regular_bimodule(re);
  auto i = spin(reg, *idem);
  auto j = spin(reg, one_minus);
  c.expect(i.dim() + j.dim() == re.dim() && subspace_sum(i, j).is_full(), tag + ": I + J is not a direct sum equal to R_0");
  auto ai = restrict_action(reg, i);
  auto aj = restrict_action(reg, j);
  c.expect(ai && aj, tag + ": spun ideals are not invariant");
  if (!ai || !aj) return std::nullopt;
  auto vi = is_simple(*ai), vj = is_simple(*aj);
  c.expect(vi.kind == SimplicityKind::Simple && vj.kind == SimplicityKind::Simple, tag + ": I or J not simple");
  c.expect(hom_space(*ai, *aj).is_zero(), tag + ": I and J are isomorphic");
  if (i.dim() > j.dim()) std::swap(i, j);
  return std::pair{i, j};
}

template <Field F>
void m3_checks(Criterion& c, const F& f) {
  const std::string tag = "M3 over " + f.name();
  auto a = m3_example(f);
  SearchOptions opts;
  c.expect(validate_group(a.group()).ok && validate_algebra(a).ok, tag + ": validate failed");
  c.expect(check_strongly_graded(a).strong, tag + ": not strongly graded");
  c.expect(check_graded_simple(a, opts).kind == SimplicityKind::Simple, tag + ": graded simple not Simple");
  c.expect(check_simple(a, opts).kind == SimplicityKind::Simple, tag + ": simple not Simple");
  auto cp = detect_crossed_product(a, opts);
  c.expect(cp.verdict == Tri::No, tag + ": crossed product not No");
  if constexpr (F::finite)
    if (f.order() == 2) c.expect(cp.scope == "exhaustive", tag + ": crossed product No not proved exhaustively");
  c.expect(check_controlled(a, opts).verdict == ControlledKind::NotControlled, tag + ": controlled not false");
  auto cent = centralizer_of_Re(a);
  auto center = center_of_Re(a);
  c.expect(cent.dim() == 2 && center.dim() == 2, tag + ": centralizer or center not of dimension 2");
  int e = a.identity();
  for (int g = 0; g < a.group().order(); ++g)
    if (g != e) c.expect(cent.component(g).is_zero(), tag + ": centralizer leaves R_0");
  c.expect(cent.component(e) == center, tag + ": C_R(R_0) differs from Z(R_0)");

  auto ij = split_identity_component(a, c, tag);
  if (!ij) return;
  auto [i, j] = *ij;
  c.expect(i.dim() == 1 && j.dim() == 4, tag + ": ideal dimensions are not {1, 4}");
  if constexpr (F::finite) {
    // Cross-check the ideal list against brute force.
    auto ideals = ideal_oracle(identity_component_algebra(a));
    std::vector<Subspace<F>> nontrivial;
    for (const auto& x : ideals)
      if (!x.ideal.is_zero() && !x.ideal.is_full()) nontrivial.push_back(x.ideal);
    std::vector<Subspace<F>> expected{i, j};
    std::sort(expected.begin(), expected.end());
    c.expect(nontrivial == expected, tag + ": oracle ideal list differs from {I, J}");
  }
  // R_1 I R_1 in J and R_1 J R_1 in I.
  const int g1 = e == 0 ? 1 : 0;
  auto global = [&](const Subspace<F>& s) {
    std::vector<Vec<F>> vs;
    for (const auto& v : s.basis_vectors()) vs.push_back(a.embed(e, v));
    return Subspace<F>::span(f, a.dim(), vs);
  };
  auto gi = global(i), gj = global(j);
  auto sandwich_inside = [&](const Subspace<F>& from, const Subspace<F>& into) {
    for (auto x : a.component_indices(g1))
      for (auto y : a.component_indices(g1))
        for (const auto& m : from.basis_vectors()) {
          auto xm = a.multiply(unit_vec(f, a.dim(), x), m);
          auto xmy = a.multiply(xm, unit_vec(f, a.dim(), y));
          if (!into.contains(xmy)) return false;
        }
    return true;
  };
  c.expect(sandwich_inside(gi, gj), tag + ": R_1 I R_1 not inside J");
  c.expect(sandwich_inside(gj, gi), tag + ": R_1 J R_1 not inside I");
}

// -- criterion 3 ------------------------------------------------------------

struct Tally {
  int oracle = 0, strong_equiv = 0, controlled_equiv = 0, simple_from_components = 0, simple_from_re = 0, simple_nilpotent = 0, crossed_equiv = 0, pair_products = 0, sum_iso = 0;
};

template <Field F>
void equivalence_suite(const Instance<F>& inst, std::size_t index, Criterion& c, Tally& t) {
  const auto& a = inst.a;
  const std::string& name = inst.name;
  SearchOptions opts;
  opts.seed = 17;
  const int n = a.group().order();
  const int e = a.identity();

  bool strong = check_strongly_graded(a).strong;
  bool nondeg = check_nondegenerate(a).nondegenerate;
  bool cent = check_centralizer_condition(a);
  auto ctl = check_controlled(a, opts);
  Tri controlled = ctl.verdict == ControlledKind::Controlled      ? Tri::Yes
                   : ctl.verdict == ControlledKind::NotControlled ? Tri::No
                                                                  : Tri::Unknown;
  Tri comps = Tri::Yes;
  for (const auto& v : ctl.simplicity) comps = tri_and(comps, to_tri(v.kind));
  Tri re_simple = to_tri(ctl.simplicity[static_cast<std::size_t>(e)].kind);
  Tri gs = to_tri(check_graded_simple(a, opts).kind);
  Tri si = to_tri(check_simple(a, opts).kind);

  if constexpr (F::finite) {
    if (a.dim() <= 9 && controlled != Tri::Unknown) {
      try {
        auto o = controlled_oracle(a);
        c.expect(o.controlled == (controlled == Tri::Yes), name + ": characterization differs from the oracle");
        ++t.oracle;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Budget) throw;
      }
    }
  }

  if (strong) {
    auto pic = check_picard_injective(a, opts);
    Tri ii = tri_and(comps, tri_from(cent));
    Tri iii = tri_and(comps, pic.injective);
    if (controlled != Tri::Unknown && ii != Tri::Unknown && iii != Tri::Unknown) {
      c.expect(controlled == ii && ii == iii, name + ": strongly graded equivalences disagree");
      ++t.strong_equiv;
    }
  }

  if (controlled == Tri::Yes && gs != Tri::Unknown && si != Tri::Unknown) {
    bool b = gs == Tri::Yes;
    c.expect((si == Tri::Yes) == b && strong == b && nondeg == b, name + ": controlled four-way equivalence fails");
    ++t.controlled_equiv;
  }
  if (comps == Tri::Yes && cent && strong) {
    c.expect(si == Tri::Yes, name + ": simple components + centralizer + strong does not give simple");
    ++t.simple_from_components;
  }
  if (strong && re_simple == Tri::Yes && cent) {
    c.expect(si == Tri::Yes, name + ": strong + simple R_e + centralizer does not give simple");
    ++t.simple_from_re;
  }
  if (is_nilpotent(a.group()) && strong && gs == Tri::Yes && cent) {
    c.expect(si == Tri::Yes, name + ": nilpotent + graded simple + centralizer does not give simple");
    ++t.simple_nilpotent;
  }

  auto cp = detect_crossed_product(a, opts);
  if (cp.verdict == Tri::Yes) {
    try {
      auto r = check_crossed_controlled(a, opts);
      if (r.controlled != Tri::Unknown && r.simple_and_centralizer != Tri::Unknown && r.simple_and_outer != Tri::Unknown) {
        c.expect(r.controlled == r.simple_and_centralizer && r.controlled == r.simple_and_outer,
                 name + ": crossed-product three-way equivalence fails");
        ++t.crossed_equiv;
      }
    } catch (const Error& err) {
      c.expect(false, name + ": crossed-product equivalence check raised: " + err.what());
    }
  }

  if (controlled == Tri::Yes) {
    for (int g = 0; g < n; ++g) {
      auto gg = component_pair_product(a, g, a.group().inverse(g));
      auto gg2 = component_pair_product(a, a.group().inverse(g), g);
      c.expect(gg.is_zero() || gg.is_full(), name + ": span(R_g R_g^-1) neither 0 nor R_e");
      c.expect(gg.is_zero() == gg2.is_zero(), name + ": one-sided vanishing of R_g R_g^-1");
    }
    ++t.pair_products;

    Rng rng(1000 + index);
    const std::uint64_t masks = (std::uint64_t{1} << n) - 1;
    for (int trial = 0; trial < 4; ++trial) {
      auto s = subset_from_mask(1 + rng.below(masks), n);
      auto u = trial == 0 ? s : subset_from_mask(1 + rng.below(masks), n);
      auto iso = find_isomorphism(component_action(a, s), component_action(a, u), opts.with_stream(trial));
      if (iso.verdict == Tri::Unknown) continue;
      c.expect((iso.verdict == Tri::Yes) == (s == u), name + ": R_S ~ R_T does not match S = T");
      ++t.sum_iso;
    }
  }
}

// -- criterion 5 ------------------------------------------------------------

template <Field F>
int cocycle_checks(const Instance<F>& inst, Criterion& c) {
  SearchOptions opts;
  auto cp = detect_crossed_product(inst.a, opts);
  if (cp.verdict != Tri::Yes) return 0;
  c.expect(cp.structure.has_value(), inst.name + ": crossed product without extracted data");
  if (!cp.structure) return 0;
  auto v = verify_cocycle_identities(inst.a, *cp.structure);
  c.expect(!v, inst.name + ": cocycle identity " + (v ? std::to_string(v->identity) + " " + v->message : "") + " fails");
  auto p = verify_product_formula(inst.a, *cp.structure);
  c.expect(!p, inst.name + ": product formula fails at a basis pair");
  return 1;
}

// -- criterion 6 ------------------------------------------------------------

template <Field F>
Matrix<F> random_matrix(const F& f, std::size_t r, std::size_t cols, Rng& rng) {
  Matrix<F> m(f, r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

// Random matrix of rank at most k.
template <Field F>
Matrix<F> low_rank(const F& f, std::size_t r, std::size_t cols, std::size_t k, Rng& rng) {
  return multiply(random_matrix(f, r, k, rng), random_matrix(f, k, cols, rng));
}

template <Field F>
void kernel_case(const F& f, Rng& rng, Criterion& c, const std::string& tag) {
  const std::size_t rows = 1 + rng.below(7), cols = 1 + rng.below(7);
  auto m = low_rank(f, rows, cols, 1 + rng.below(std::min(rows, cols)), rng);
  auto r = rref(m);
  auto ns = nullspace(m);
  c.expect(r.rank + ns.dim() == cols, tag + ": rank + nullity != columns");
  for (const auto& v : ns.basis_vectors())
    c.expect(is_zero_vec(f, std::span<const typename F::Elem>(graded::apply(m, std::span<const typename F::Elem>(v)))),
             tag + ": nullspace vector not killed");
  auto rr = rref(r.matrix);
  c.expect(rr.matrix == r.matrix && rr.pivots == r.pivots, tag + ": rref not idempotent");

  // Canonical equality under an invertible change of rows.
  Matrix<F> p = random_matrix(f, rows, rows, rng);
  while (!inverse(p)) p = random_matrix(f, rows, rows, rng);
  c.expect(Subspace<F>::row_span(multiply(p, m)) == Subspace<F>::row_span(m), tag + ": row space not canonical");

  // Dimension formula.
  auto u = Subspace<F>::row_span(low_rank(f, 1 + rng.below(4), cols, 1 + rng.below(cols), rng));
  auto w = Subspace<F>::row_span(low_rank(f, 1 + rng.below(4), cols, 1 + rng.below(cols), rng));
  auto sum = subspace_sum(u, w);
  auto meet = subspace_intersect(u, w);
  c.expect(sum.dim() + meet.dim() == u.dim() + w.dim(), tag + ": dim(U+W) + dim(U∩W) != dim U + dim W");
  for (const auto& v : meet.basis_vectors())
    c.expect(u.contains(v) && w.contains(v), tag + ": intersection not inside both");
  c.expect(subspace_sum(sum, u) == sum && subspace_intersect(meet, u) == meet, tag + ": lattice operations not idempotent");
}

// -- criterion 7 ------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(const std::string& args, const std::filesystem::path& out) {
  std::string cmd = std::string("\"") + GRADEDCTL_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

int main() {
  int failed = 0;

  {
    Criterion c(1, "M3 regression over GF(2) and Q");
    m3_checks(c, f2);
    m3_checks(c, q);
    failed += !c.finish(5.0);
  }

  const auto corpus = oracle_corpus();
  {
    Criterion c(2, "oracle agreement on the GF(2)/GF(3) corpus");
    int controlled = 0, subring_cmp = 0;
    for (const auto& inst : corpus) {
      const auto& a = inst.a;
      c.expect(a.dim() <= 8, inst.name + ": dimension over 8");
      auto ctl = check_controlled(a);
      c.expect(ctl.verdict != ControlledKind::Inconclusive, inst.name + ": check_controlled inconclusive");
      auto o = controlled_oracle(a);
      bool decided = ctl.verdict == ControlledKind::Controlled;
      c.expect(o.controlled == decided, inst.name + ": oracle says " + (o.controlled ? "controlled" : "not controlled") +
                                            ", analysis says " + to_string(ctl.verdict));
      if (!o.controlled) continue;
      ++controlled;
      for (const auto& ideal : ideal_oracle(a))
        c.expect(ideal.graded, inst.name + ": controlled instance has an ungraded ideal");
      if (check_strongly_graded(a).strong) {
        std::vector<Subspace<PrimeField>> from_theory;
        for (const auto& s : subring_correspondence(a)) from_theory.push_back(s.subring.embed(a));
        std::sort(from_theory.begin(), from_theory.end());
        c.expect(from_theory == subring_oracle(a), inst.name + ": subring lists differ");
        ++subring_cmp;
      }
    }
    c.expect(corpus.size() >= 30, "corpus has fewer than 30 instances");
    c.expect(controlled > 0 && controlled < static_cast<int>(corpus.size()), "corpus lacks positive or negative instances");
    c.note(std::to_string(corpus.size()) + " instances, " + std::to_string(controlled) + " controlled, " +
           std::to_string(subring_cmp) + " subring comparisons");
    failed += !c.finish(120.0);
  }

  const auto extras = prime_extras();
  const auto rationals = rational_corpus();
  {
    Criterion c(3, "equivalent characterizations agree");
    Tally t;
    std::size_t idx = 0;
    for (const auto& inst : corpus) equivalence_suite(inst, idx++, c, t);
    for (const auto& inst : extras) equivalence_suite(inst, idx++, c, t);
    for (const auto& inst : rationals) equivalence_suite(inst, idx++, c, t);
    const std::pair<const char*, int> counts[] = {{"oracle", t.oracle}, {"strong-equiv", t.strong_equiv}, {"controlled-equiv", t.controlled_equiv},
                                                  {"simple-from-components", t.simple_from_components}, {"simple-from-Re", t.simple_from_re}, {"nilpotent", t.simple_nilpotent},
                                                  {"crossed-equiv", t.crossed_equiv}, {"pair-products", t.pair_products}, {"sum-iso", t.sum_iso}};
    std::string tally;
    for (auto [label, k] : counts) {
      c.expect(k > 0, std::string(label) + " never exercised");
      tally += (tally.empty() ? "" : " ") + std::string(label) + "=" + std::to_string(k);
    }
    c.note(tally);
    failed += !c.finish(120.0);
  }

  {
    Criterion c(4, "galois skew examples are controlled");
    for (auto [p, n] : {std::pair{2u, 2}, {3u, 2}, {2u, 4}}) {
      auto a = galois_skew_example(p, n);
      std::string tag = "galois(" + std::to_string(p) + "," + std::to_string(n) + ")";
      c.expect(check_controlled(a).verdict == ControlledKind::Controlled, tag + ": not Controlled by the characterization");
      try {
        c.expect(controlled_oracle(a).controlled, tag + ": oracle disagrees");
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::Budget) throw;
        c.note(tag + " oracle over budget");
      }
    }
    auto a = galois_skew_example(2, 4);
    auto subs = subring_correspondence(a);
    c.expect(subs.size() == 3, "galois(2,4): expected 3 intermediate subrings");
    std::vector<SubsetOfG> got, want = subgroups(a.group());
    for (const auto& s : subs) got.push_back(s.subset);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    c.expect(got == want, "galois(2,4): subring subsets are not the subgroups of Z/4");
    std::vector<Subspace<PrimeField>> spaces;
    for (const auto& s : subs) spaces.push_back(s.subring.embed(a));
    std::sort(spaces.begin(), spaces.end());
    c.expect(spaces == subring_oracle(a), "galois(2,4): subring oracle disagrees");
    failed += !c.finish(120.0);
  }

  {
    Criterion c(5, "cocycle identities and product formula");
    int n = 0;
    for (const auto& inst : corpus) n += cocycle_checks(inst, c);
    for (const auto& inst : extras) n += cocycle_checks(inst, c);
    for (const auto& inst : rationals) n += cocycle_checks(inst, c);
    n += cocycle_checks(Instance<PrimeField>{"galois(2,4)", galois_skew_example(2, 4)}, c);
    c.expect(n >= 10, "fewer than 10 crossed products checked");
    c.note(std::to_string(n) + " crossed products");
    failed += !c.finish(60.0);
  }

  {
    Criterion c(6, "randomized linear-algebra kernels");
    Rng rng(2024);
    for (int i = 0; i < 250; ++i) {
      kernel_case(f2, rng, c, "GF(2) case " + std::to_string(i));
      kernel_case(f3, rng, c, "GF(3) case " + std::to_string(i));
      kernel_case(f7, rng, c, "GF(7) case " + std::to_string(i));
      kernel_case(q, rng, c, "Q case " + std::to_string(i));
    }
    c.note("1000 cases");
    failed += !c.finish(30.0);
  }

  {
    Criterion c(7, "CLI determinism and JSON round trip");
    auto dir = std::filesystem::temp_directory_path() / ("gradedctl-acceptance-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    auto alg = dir / "alg.json";
    auto alg2 = dir / "alg2.json";
    auto sink = dir / "sink.txt";
    c.expect(run("build crossed-product --field gf3 --group s3 --seed 7 --out \"" + alg.string() + "\"", sink) == 0,
             "build failed: " + slurp(sink));
    c.expect(run("build crossed-product --field gf3 --group s3 --seed 7 --out \"" + alg2.string() + "\"", sink) == 0,
             "second build failed");
    c.expect(slurp(alg) == slurp(alg2), "builds with the same seed differ");
    for (const char* prop : {"controlled", "crossed-product", "simple", "necessary"}) {
      auto r1 = dir / "r1.json", r2 = dir / "r2.json";
      std::string args = std::string("check \"") + alg.string() + "\" --property " + prop + " --seed 42 --json";
      int c1 = run(args, r1), c2 = run(args, r2);
      c.expect(c1 == c2 && c1 != 2, std::string(prop) + ": exit codes " + std::to_string(c1) + "/" + std::to_string(c2));
      c.expect(!slurp(r1).empty() && slurp(r1) == slurp(r2), std::string(prop) + ": reports differ");
    }
    auto r1 = dir / "o1.json", r2 = dir / "o2.json";
    std::string oargs = "oracle \"" + alg.string() + "\" --what sub-bimodules --json";
    run(oargs, r1);
    run(oargs, r2);
    c.expect(slurp(r1) == slurp(r2), "oracle reports differ");
    try {
      auto text = slurp(alg);
      auto back = algebra_from_json(Json::parse(text));
      auto again = std::visit([](const auto& b) { return dump_json(algebra_to_json(b)); }, back);
      c.expect(again == text, "JSON round trip is not byte-identical");
    } catch (const std::exception& err) {
      c.expect(false, std::string("round trip raised: ") + err.what());
    }
    std::filesystem::remove_all(dir);
    failed += !c.finish(60.0);
  }

  return failed;
}
