#include "graded/cli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

#include "graded/analysis.hpp"
#include "graded/builders.hpp"
#include "graded/rng.hpp"

namespace graded::cli {

namespace {

using AnyField = std::variant<PrimeField, RationalField>;

AnyField parse_field(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "q" || s == "qq" || s == "rationals") return RationalField();
  std::string digits;
  if (s.rfind("gf(", 0) == 0 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  else if (s.rfind("gf", 0) == 0)
    digits = s.substr(2);
  if (digits.empty() || digits.size() > 10 || !std::all_of(digits.begin(), digits.end(), ::isdigit))
    invalid_input("unknown field '" + s + "' (use gf<p> or q)");
  return PrimeField(static_cast<std::uint32_t>(std::stoull(digits)));
}

PrimeField require_prime(const AnyField& f, const std::string& kind) {
  if (!std::holds_alternative<PrimeField>(f)) invalid_input(kind + " needs a prime field");
  return std::get<PrimeField>(f);
}

Json build_skew(const BuildRequest& req, const AnyField& field) {
  auto go = [&](auto f) -> Json {
    using F = decltype(f);
    const auto z2 = FiniteGroup::cyclic(2);
    if (req.base == "m2") {
      auto m2 = matrix_algebra(f, 2);
      auto id = Matrix<F>::identity(f, 4);
      if (req.action == "identity") return algebra_to_json(skew_group_ring(m2, z2, {id, id}));
      if (req.action != "inner") invalid_input("base m2 supports actions identity and inner");
      auto conj = inner_automorphism(m2, Vec<F>{f.zero(), f.one(), f.one(), f.zero()});
      return algebra_to_json(skew_group_ring(m2, z2, {id, conj}));
    }
    if (req.base == "diag2") {
      auto d = product_algebra(f, 2);
      auto id = Matrix<F>::identity(f, 2);
      if (req.action == "identity") return algebra_to_json(skew_group_ring(d, z2, {id, id}));
      if (req.action != "swap") invalid_input("base diag2 supports actions identity and swap");
      auto swap = Matrix<F>::from_ints(f, {{0, 1}, {1, 0}});
      return algebra_to_json(skew_group_ring(d, z2, {id, swap}));
    }
    if (req.base == "field") {
      if constexpr (std::is_same_v<F, PrimeField>) {
        const int n = req.n.value_or(2);
        if (n < 1) invalid_input("--n must be positive");
        auto ext = finite_field_algebra(f, n);
        std::vector<Matrix<PrimeField>> sigma;
        for (int k = 0; k < n; ++k)
          sigma.push_back(req.action == "identity" ? Matrix<PrimeField>::identity(f, static_cast<std::size_t>(n))
                                                   : frobenius_matrix(ext, k));
        if (req.action != "identity" && req.action != "frobenius")
          invalid_input("base field supports actions identity and frobenius");
        return algebra_to_json(skew_group_ring(ext, FiniteGroup::cyclic(n), sigma));
      } else {
        invalid_input("base field needs a prime field");
      }
    }
    invalid_input("unknown base '" + req.base + "' (m2, diag2, field)");
  };
  return std::visit(go, field);
}

Json build_crossed(const BuildRequest& req, const AnyField& field) {
  if (req.p || req.n) {
    if (!req.p || !req.n) invalid_input("the cyclic crossed product needs both --p and --n");
    PrimeField f(*req.p);
    auto ext = finite_field_algebra(f, *req.n);
    long long c = req.c.value_or(1);
    auto cvec = scale(f, f.from_int(c), std::span<const PrimeField::Elem>(ext.unit()));
    return algebra_to_json(cyclic_crossed_product(ext, frobenius_matrix(ext), *req.n, cvec,
                                                  {{"c", std::to_string(c)}}));
  }
  auto go = [&](auto f) -> Json {
    auto g = named_group(req.group);
    Rng rng(req.seed);
    return algebra_to_json(twisted_group_algebra(f, g, random_coboundary(f, g, rng)));
  };
  return std::visit(go, field);
}

// -- report helpers ---------------------------------------------------------

template <Field F>
Json subspace_json(const F& f, const Subspace<F>& s) {
  Json out = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) out.push_back(vector_to_json(f, s.basis_vector(i)));
  return out;
}

template <Field F>
Json matrix_json(const Matrix<F>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.field(), m.row_vec(r)));
  return out;
}

template <Field F>
Json verdict_json(const F& f, const SimplicityVerdict<F>& v) {
  Json j{{"kind", to_string(v.kind)}, {"method", v.method}};
  if (v.meataxe_elements_tried) j["meataxe_elements_tried"] = v.meataxe_elements_tried;
  if (v.witness) j["witness"] = subspace_json(f, *v.witness);
  return j;
}

int exit_of(Tri t) { return t == Tri::Yes ? kHolds : t == Tri::No ? kFails : kInconclusive; }
int exit_of(bool b) { return b ? kHolds : kFails; }
int exit_of(SimplicityKind k) { return exit_of(to_tri(k)); }

const char* verdict_word(int code) {
  return code == kHolds ? "holds" : code == kFails ? "fails" : "inconclusive";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

Outcome finish(Json header, int code, Json details) {
  Outcome out;
  out.exit_code = code;
  header["verdict"] = verdict_word(code);
  header["details"] = details;
  out.report = std::move(header);
  std::ostringstream text;
  text << "property: " << out.report["property"].get<std::string>() << "\n";
  text << "verdict: " << verdict_word(code) << "\n";
  for (const auto& [k, v] : details.items())
    if (v.is_primitive()) text << k << ": " << scalar_text(v) << "\n";
  out.text = text.str();
  return out;
}

template <Field F>
void require_valid(const GradedAlgebra<F>& a) {
  auto g = validate_group(a.group());
  if (!g.ok) invalid_input("grading group is not a group: " + g.message);
  auto d = validate_algebra(a);
  if (!d.ok) invalid_input("not a valid graded algebra: " + d.message);
}

template <Field F>
std::string name_of(const GradedAlgebra<F>& a, int g) {
  return a.group().name(g);
}

template <Field F>
Outcome check_impl(const GradedAlgebra<F>& a, const std::string& property, const SearchOptions& opts) {
  const F& f = a.field();
  Json header{{"property", property},
              {"field", f.name()},
              {"dim", a.dim()},
              {"seed", opts.seed},
              {"exhaustive_budget", opts.exhaustive_budget},
              {"random_trials", opts.random_trials},
              {"meataxe_tries", opts.meataxe_tries}};
  Json d = Json::object();

  if (property == "valid") {
    auto g = validate_group(a.group());
    d["group_ok"] = g.ok;
    if (!g.ok) {
      d["message"] = g.message;
      return finish(header, kFails, d);
    }
    auto v = validate_algebra(a, opts.mode);
    d["algebra_ok"] = v.ok;
    if (!v.ok) {
      d["message"] = v.message;
      if (v.witness) d["witness"] = *v.witness;
    }
    return finish(header, exit_of(v.ok), d);
  }

  require_valid(a);
  const int n = a.group().order();

  if (property == "strong") {
    auto r = check_strongly_graded(a, opts.mode);
    if (r.witness) d["witness"] = Json::array({name_of(a, r.witness->first), name_of(a, r.witness->second)});
    return finish(header, exit_of(r.strong), d);
  }
  if (property == "nondegenerate") {
    auto r = check_nondegenerate(a);
    if (r.witness) {
      d["witness"] = name_of(a, *r.witness);
      d["side"] = r.side;
    }
    return finish(header, exit_of(r.nondegenerate), d);
  }
  if (property == "graded-simple" || property == "simple") {
    auto v = property == "simple" ? check_simple(a, opts) : check_graded_simple(a, opts);
    d = verdict_json(f, v);
    return finish(header, exit_of(v.kind), d);
  }
  if (property == "controlled") {
    auto r = check_controlled(a, opts);
    if (!r.reason.empty()) d["reason"] = r.reason;
    Json comps = Json::array();
    for (int g = 0; g < n; ++g) {
      auto v = verdict_json(f, r.simplicity[static_cast<std::size_t>(g)]);
      v.erase("witness");
      comps.push_back(Json{{"element", name_of(a, g)}, {"dim", a.comp_dim(g)}, {"simplicity", v}});
    }
    d["components"] = comps;
    Json iso = Json::array();
    for (int g = 0; g < n; ++g) {
      Json row = Json::array();
      for (int h = 0; h < n; ++h) row.push_back(to_string(r.isomorphic[static_cast<std::size_t>(g * n + h)]));
      iso.push_back(row);
    }
    d["isomorphic"] = iso;
    if (r.non_simple) d["non_simple"] = name_of(a, *r.non_simple);
    if (r.isomorphic_pair)
      d["isomorphic_pair"] = Json::array({name_of(a, r.isomorphic_pair->first), name_of(a, r.isomorphic_pair->second)});
    int code = r.verdict == ControlledKind::Controlled ? kHolds
               : r.verdict == ControlledKind::NotControlled ? kFails
                                                              : kInconclusive;
    return finish(header, code, d);
  }
  if (property == "crossed-product") {
    auto r = detect_crossed_product(a, opts);
    d["scope"] = r.scope;
    d["random_trials_used"] = r.random_trials;
    if (r.failing_component) d["failing_component"] = name_of(a, *r.failing_component);
    if (r.structure) {
      Json units = Json::object(), sigma = Json::object(), alpha = Json::array();
      for (int g = 0; g < n; ++g) {
        units[name_of(a, g)] = vector_to_json(f, r.structure->units[static_cast<std::size_t>(g)]);
        sigma[name_of(a, g)] = matrix_json(r.structure->data.sigma[static_cast<std::size_t>(g)]);
      }
      for (int g = 0; g < n; ++g) {
        Json row = Json::array();
        for (int h = 0; h < n; ++h) row.push_back(vector_to_json(f, r.structure->data.alpha[static_cast<std::size_t>(g * n + h)]));
        alpha.push_back(row);
      }
      d["units"] = units;
      d["sigma"] = sigma;
      d["alpha"] = alpha;
    }
    return finish(header, exit_of(r.verdict), d);
  }
  if (property == "centralizer") {
    auto c = centralizer_of_Re(a);
    Json dims = Json::object();
    for (int g = 0; g < n; ++g) dims[name_of(a, g)] = c.component(g).dim();
    d["centralizer_dims"] = dims;
    d["center_dim"] = center_of_Re(a).dim();
    return finish(header, exit_of(check_centralizer_condition(a)), d);
  }
  if (property == "picard-injective") {
    auto r = check_picard_injective(a, opts);
    if (r.isomorphic_pair)
      d["isomorphic_pair"] = Json::array({name_of(a, r.isomorphic_pair->first), name_of(a, r.isomorphic_pair->second)});
    return finish(header, exit_of(r.injective), d);
  }
  if (property == "necessary") {
    auto r = check_necessary_conditions(a, opts);
    d["pairwise_non_isomorphic"] = to_string(r.pairwise_non_isomorphic);
    d["components_simple"] = to_string(r.components_simple);
    d["identity_component_simple"] = to_string(r.identity_component_simple);
    d["centralizer"] = to_string(r.centralizer);
    d["ideals_graded"] = r.ideals_graded ? (*r.ideals_graded ? "yes" : "no") : "skipped";
    Tri all = tri_and(tri_and(r.pairwise_non_isomorphic, r.components_simple),
                      tri_and(r.identity_component_simple, r.centralizer));
    if (r.ideals_graded) all = tri_and(all, tri_from(*r.ideals_graded));
    return finish(header, exit_of(all), d);
  }
  if (property == "crossed-controlled") {
    auto r = check_crossed_controlled(a, opts);
    d["controlled"] = to_string(r.controlled);
    d["simple_and_centralizer"] = to_string(r.simple_and_centralizer);
    d["simple_and_outer"] = to_string(r.simple_and_outer);
    return finish(header, exit_of(r.verdict), d);
  }
  if (property == "subrings") {
    auto r = subring_correspondence(a, opts);
    Json list = Json::array();
    for (const auto& e : r)
      list.push_back(Json{{"subset", format_subset(a.group(), e.subset)}, {"dim", e.subring.dim()}});
    d["count"] = r.size();
    d["subrings"] = list;
    return finish(header, kHolds, d);
  }
  invalid_input("unknown property '" + property + "'");
}

Outcome oracle_impl(const GradedAlgebra<PrimeField>& a, const std::string& what, const OracleOptions& opts) {
  const auto& f = a.field();
  Json header{{"property", "oracle:" + what},
              {"field", f.name()},
              {"dim", a.dim()},
              {"subspace_budget", opts.subspace_budget},
              {"vector_budget", opts.vector_budget}};
  Json d = Json::object();
  require_valid(a);
  auto list_json = [&](const std::vector<Subspace<PrimeField>>& xs) {
    Json out = Json::array();
    for (const auto& s : xs) out.push_back(Json{{"dim", s.dim()}, {"basis", subspace_json(f, s)}});
    return out;
  };
  if (what == "sub-bimodules" || what == "subrings") {
    auto xs = what == "subrings" ? subring_oracle(a, opts) : enumerate_sub_bimodules(a, opts);
    d["count"] = xs.size();
    d[what == "subrings" ? "subrings" : "sub_bimodules"] = list_json(xs);
    return finish(header, kHolds, d);
  }
  if (what == "ideals") {
    auto ideal_list = [&](const std::vector<IdealEntry>& xs) {
      Json out = Json::array();
      for (const auto& e : xs)
        out.push_back(Json{{"dim", e.ideal.dim()}, {"graded", e.graded}, {"basis", subspace_json(f, e.ideal)}});
      return out;
    };
    auto ideals = ideal_oracle(a, opts);
    auto re_ideals = ideal_oracle(identity_component_algebra(a), opts);
    bool all_graded = std::all_of(ideals.begin(), ideals.end(), [](const IdealEntry& e) { return e.graded; });
    d["count"] = ideals.size();
    d["all_graded"] = all_graded;
    d["identity_component_count"] = re_ideals.size();
    d["ideals"] = ideal_list(ideals);
    d["identity_component_ideals"] = ideal_list(re_ideals);
    return finish(header, kHolds, d);
  }
  if (what == "controlled") {
    auto r = controlled_oracle(a, opts);
    d["sub_bimodules"] = r.sub_bimodules;
    d["reason"] = r.reason;
    return finish(header, exit_of(r.controlled), d);
  }
  invalid_input("unknown oracle query '" + what + "'");
}

}  // namespace

Json build(const BuildRequest& req) {
  if (req.kind == "galois-skew") {
    if (!req.p || !req.n) invalid_input("galois-skew needs --p and --n");
    return algebra_to_json(galois_skew_example(*req.p, *req.n));
  }
  if (req.kind == "crossed-product" && (req.p || req.n)) return build_crossed(req, RationalField());
  auto field = parse_field(req.field);
  if (req.kind == "group-algebra")
    return std::visit([&](auto f) { return algebra_to_json(group_algebra(f, named_group(req.group))); }, field);
  if (req.kind == "m3") return std::visit([](auto f) { return algebra_to_json(m3_example(f)); }, field);
  if (req.kind == "skew-group") return build_skew(req, field);
  if (req.kind == "crossed-product") return build_crossed(req, field);
  (void)require_prime;
  invalid_input("unknown kind '" + req.kind + "' (group-algebra, skew-group, crossed-product, galois-skew, m3)");
}

Outcome check(const AnyAlgebra& a, const std::string& property, const SearchOptions& opts) {
  return guarded([&] { return std::visit([&](const auto& alg) { return check_impl(alg, property, opts); }, a); });
}

Outcome oracle(const AnyAlgebra& a, const std::string& what, const OracleOptions& opts) {
  return guarded([&] {
    if (!std::holds_alternative<GradedAlgebra<PrimeField>>(a)) invalid_input("the oracle only runs over GF(p)");
    return oracle_impl(std::get<GradedAlgebra<PrimeField>>(a), what, opts);
  });
}

}  // namespace graded::cli
