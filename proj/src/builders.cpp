#include "graded/builders.hpp"

#include <cctype>

#include "graded/enumerate.hpp"

namespace graded {

namespace {

template <Field F>
Vec<F> base_basis(const GradedAlgebra<F>& base, std::size_t i) {
  return unit_vec(base.field(), base.dim(), i);
}

template <Field F>
Matrix<F> matrix_power(const Matrix<F>& m, int k) {
  auto out = Matrix<F>::identity(m.field(), m.rows());
  for (int i = 0; i < k; ++i) out = multiply(m, out);
  return out;
}

template <Field F>
Metadata with_builder(std::string builder, Metadata extra) {
  Metadata meta{{"builder", std::move(builder)}};
  meta.insert(meta.end(), extra.begin(), extra.end());
  return meta;
}

}  // namespace

template <Field F>
std::string automorphism_failure(const GradedAlgebra<F>& base, const Matrix<F>& s) {
  const std::size_t d = base.dim();
  if (s.rows() != d || s.cols() != d) return "matrix has the wrong shape";
  if (rank(s) != d) return "not invertible";
  auto one = base.unit_dense();
  if (graded::apply(s, std::span<const typename F::Elem>(one)) != one) return "does not fix the unit";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto bi = base_basis(base, i), bj = base_basis(base, j);
      auto lhs = graded::apply(s, std::span<const typename F::Elem>(base.multiply(bi, bj)));
      auto si = graded::apply(s, std::span<const typename F::Elem>(bi));
      auto sj = graded::apply(s, std::span<const typename F::Elem>(bj));
      if (lhs != base.multiply(si, sj))
        return "not multiplicative on basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return {};
}

FiniteGroup named_group(const std::string& raw) {
  std::string name;
  for (char c : raw) name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (name == "trivial" || name == "1") return FiniteGroup::trivial();
  if (name == "s3") return FiniteGroup::symmetric3();
  if (name == "z2xz2" || name == "klein" || name == "v4")
    return FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
  if (name.size() >= 2 && name[0] == 'z' &&
      name.find_first_not_of("0123456789", 1) == std::string::npos && name.size() <= 4) {
    int n = std::stoi(name.substr(1));
    if (n >= 1) return FiniteGroup::cyclic(n);
  }
  invalid_input("unknown group '" + raw + "'");
}

template <Field F>
GradedAlgebra<F> algebra_from_rule(F field, FiniteGroup group, std::vector<std::size_t> comp_dims,
                                   const std::function<Vec<F>(std::size_t, std::size_t)>& rule,
                                   const Vec<F>& unit_dense, Metadata meta) {
  if (comp_dims.size() != static_cast<std::size_t>(group.order()))
    invalid_input("need one component dimension per group element");
  std::vector<std::size_t> offsets;
  std::vector<int> degree;
  std::size_t dim = 0;
  for (int g = 0; g < group.order(); ++g) {
    offsets.push_back(dim);
    for (std::size_t i = 0; i < comp_dims[static_cast<std::size_t>(g)]; ++i) degree.push_back(g);
    dim += comp_dims[static_cast<std::size_t>(g)];
  }
  auto local = [&](const Vec<F>& v, int g, const char* what) {
    if (v.size() != dim) invalid_input(std::string(what) + " has the wrong length");
    const auto lo = offsets[static_cast<std::size_t>(g)];
    const auto hi = lo + comp_dims[static_cast<std::size_t>(g)];
    for (std::size_t k = 0; k < dim; ++k)
      if ((k < lo || k >= hi) && !field.is_zero(v[k]))
        invalid_input(std::string(what) + " is not homogeneous of the expected degree");
    return Vec<F>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                  v.begin() + static_cast<std::ptrdiff_t>(hi));
  };
  std::vector<Vec<F>> products;
  products.reserve(dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b)
      products.push_back(local(rule(a, b), group.mul(degree[a], degree[b]), "product"));
  auto unit = local(unit_dense, group.identity(), "unit");
  return GradedAlgebra<F>(field, std::move(group), std::move(comp_dims), std::move(products),
                          std::move(unit), std::move(meta));
}

template <Field F>
GradedAlgebra<F> group_algebra(F field, FiniteGroup group) {
  const auto n = static_cast<std::size_t>(group.order());
  const FiniteGroup& g = group;
  auto rule = [&](std::size_t a, std::size_t b) {
    return unit_vec(field, n, static_cast<std::size_t>(g.mul(static_cast<int>(a), static_cast<int>(b))));
  };
  auto unit = unit_vec(field, n, static_cast<std::size_t>(group.identity()));
  return algebra_from_rule<F>(field, group, std::vector<std::size_t>(n, 1), rule, unit,
                              with_builder<F>("group-algebra", {}));
}

template <Field F>
GradedAlgebra<F> matrix_algebra(F field, std::size_t n) {
  if (n == 0) invalid_input("matrix algebra of size zero");
  const std::size_t d = n * n;
  auto rule = [&](std::size_t a, std::size_t b) {
    Vec<F> out = zero_vec(field, d);
    if (a % n == b / n) out[(a / n) * n + b % n] = field.one();
    return out;
  };
  Vec<F> unit = zero_vec(field, d);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = field.one();
  return algebra_from_rule<F>(field, FiniteGroup::trivial(), {d}, rule, unit,
                              with_builder<F>("matrix", {{"n", std::to_string(n)}}));
}

template <Field F>
GradedAlgebra<F> product_algebra(F field, std::size_t k) {
  if (k == 0) invalid_input("product of zero copies");
  auto rule = [&](std::size_t a, std::size_t b) {
    Vec<F> out = zero_vec(field, k);
    if (a == b) out[a] = field.one();
    return out;
  };
  Vec<F> unit(k, field.one());
  return algebra_from_rule<F>(field, FiniteGroup::trivial(), {k}, rule, unit,
                              with_builder<F>("product", {{"copies", std::to_string(k)}}));
}

template <Field F>
GradedAlgebra<F> truncated_polynomial(F field, std::size_t n, int m) {
  if (n == 0 || m <= 0) invalid_input("truncated polynomial needs n >= 1 and m >= 1");
  // Global position of x^k: components in residue order, exponents increasing.
  std::vector<std::size_t> comp_dims(static_cast<std::size_t>(m), 0);
  for (std::size_t k = 0; k < n; ++k) ++comp_dims[k % static_cast<std::size_t>(m)];
  std::vector<std::size_t> pos(n), offset(static_cast<std::size_t>(m), 0);
  for (int r = 1; r < m; ++r)
    offset[static_cast<std::size_t>(r)] =
        offset[static_cast<std::size_t>(r - 1)] + comp_dims[static_cast<std::size_t>(r - 1)];
  std::vector<std::size_t> exponent(n);
  for (std::size_t k = 0; k < n; ++k) {
    pos[k] = offset[k % static_cast<std::size_t>(m)] + k / static_cast<std::size_t>(m);
    exponent[pos[k]] = k;
  }
  auto rule = [&](std::size_t a, std::size_t b) {
    Vec<F> out = zero_vec(field, n);
    auto e = exponent[a] + exponent[b];
    if (e < n) out[pos[e]] = field.one();
    return out;
  };
  return algebra_from_rule<F>(
      field, FiniteGroup::cyclic(m), comp_dims, rule, unit_vec(field, n, pos[0]),
      with_builder<F>("truncated-polynomial", {{"n", std::to_string(n)}, {"m", std::to_string(m)}}));
}

GradedAlgebra<PrimeField> quotient_field_algebra(const PrimeField& f,
                                                 const Poly<PrimeField>& modulus) {
  Poly<PrimeField> mod = modulus;
  trim(f, mod);
  if (mod.size() < 2 || mod.back() != 1) invalid_input("modulus must be monic of degree >= 1");
  const std::size_t d = mod.size() - 1;
  auto rule = [&](std::size_t a, std::size_t b) {
    Poly<PrimeField> x(a + 1, 0), y(b + 1, 0);
    x[a] = 1;
    y[b] = 1;
    auto r = poly_divmod(f, poly_mul(f, x, y), mod).second;
    Vec<PrimeField> out(d, 0);
    std::copy(r.begin(), r.end(), out.begin());
    return out;
  };
  return algebra_from_rule<PrimeField>(
      f, FiniteGroup::trivial(), {d}, rule, unit_vec(f, d, 0),
      with_builder<PrimeField>("quotient-field", {{"modulus", format_poly(f, mod)}}));
}

Poly<PrimeField> default_modulus(const PrimeField& f, int n) {
  if (n < 1) invalid_input("extension degree must be at least 1");
  auto total = power_within(f.order(), static_cast<std::size_t>(n), std::uint64_t{1} << 32);
  if (!total) budget_exceeded("extension degree too large for the modulus search");
  for (std::uint64_t k = 0; k < *total; ++k) {
    auto c = monic_from_index(f, n, k);
    if (is_irreducible(f, c)) return c;
  }
  internal_inconsistency("no irreducible polynomial of degree " + std::to_string(n));
}

GradedAlgebra<PrimeField> finite_field_algebra(const PrimeField& f, int n) {
  return quotient_field_algebra(f, default_modulus(f, n));
}

Matrix<PrimeField> frobenius_matrix(const GradedAlgebra<PrimeField>& ext, int k) {
  const auto& f = ext.field();
  const std::size_t d = ext.dim();
  std::uint64_t e = 1;
  for (int i = 0; i < k; ++i) e *= f.order();
  auto power = [&](Vec<PrimeField> x) {
    Vec<PrimeField> acc = ext.unit_dense();
    for (std::uint64_t bits = e; bits; bits >>= 1) {
      if (bits & 1) acc = ext.multiply(acc, x);
      x = ext.multiply(x, x);
    }
    return acc;
  };
  std::vector<Vec<PrimeField>> cols;
  for (std::size_t i = 0; i < d; ++i) cols.push_back(power(unit_vec(f, d, i)));
  return Matrix<PrimeField>::from_columns(f, d, cols);
}

template <Field F>
Matrix<F> inner_automorphism(const GradedAlgebra<F>& base, const Vec<F>& u) {
  auto inv = is_invertible(Element<F>::from_dense(base, u));
  if (!inv) invalid_input("inner automorphism by a non-invertible element");
  auto uinv = inv->dense();
  std::vector<Vec<F>> cols;
  for (std::size_t i = 0; i < base.dim(); ++i)
    cols.push_back(base.multiply(base.multiply(u, base_basis(base, i)), uinv));
  return Matrix<F>::from_columns(base.field(), base.dim(), cols);
}

template <Field F>
std::optional<CocycleViolation> check_cocycle_data(const CrossedProductData<F>& d) {
  const auto& base = d.base;
  const auto& G = d.group;
  const int n = G.order();
  const std::size_t dim = base.dim();
  if (base.group().order() != 1) invalid_input("crossed product base must be trivially graded");
  if (d.sigma.size() != static_cast<std::size_t>(n)) invalid_input("need one automorphism per group element");
  if (d.alpha.size() != static_cast<std::size_t>(n * n)) invalid_input("need one cocycle value per pair");
  for (const auto& a : d.alpha)
    if (a.size() != dim) invalid_input("cocycle value has the wrong length");
  auto sig = [&](int g, const Vec<F>& x) {
    return graded::apply(d.sigma[static_cast<std::size_t>(g)], std::span<const typename F::Elem>(x));
  };
  auto alpha = [&](int g, int h) -> const Vec<F>& {
    return d.alpha[static_cast<std::size_t>(g * n + h)];
  };
  auto mul = [&](const Vec<F>& x, const Vec<F>& y) { return base.multiply(x, y); };
  auto fail = [](int id, int g, int h, int k, std::string msg) {
    CocycleViolation v;
    v.identity = id;
    v.g = g;
    v.h = h;
    v.k = k;
    v.message = std::move(msg);
    return v;
  };

  for (int g = 0; g < n; ++g) {
    auto why = automorphism_failure(base, d.sigma[static_cast<std::size_t>(g)]);
    if (!why.empty()) return fail(0, g, -1, -1, "sigma_" + G.name(g) + " " + why);
  }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      if (!is_invertible(Element<F>::from_dense(base, alpha(g, h))))
        return fail(4, g, h, -1, "alpha(" + G.name(g) + "," + G.name(h) + ") is not invertible");
  const int e = G.identity();
  const auto one = base.unit_dense();
  if (!(d.sigma[static_cast<std::size_t>(e)] == Matrix<F>::identity(base.field(), dim)))
    return fail(3, e, -1, -1, "sigma_e is not the identity");
  for (int g = 0; g < n; ++g)
    if (alpha(g, e) != one || alpha(e, g) != one)
      return fail(3, g, e, -1, "alpha is not normalized at " + G.name(g));
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      const auto& a = alpha(g, h);
      for (std::size_t i = 0; i < dim; ++i) {
        auto b = base_basis(base, i);
        if (mul(sig(g, sig(h, b)), a) != mul(a, sig(G.mul(g, h), b)))
          return fail(1, g, h, -1,
                      "sigma_g sigma_h differs from alpha(g,h) sigma_gh alpha(g,h)^-1 on basis " +
                          std::to_string(i));
      }
    }
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      for (int k = 0; k < n; ++k) {
        auto lhs = mul(alpha(g, h), alpha(G.mul(g, h), k));
        auto rhs = mul(sig(g, alpha(h, k)), alpha(g, G.mul(h, k)));
        if (lhs != rhs)
          return fail(2, g, h, k,
                      "cocycle identity fails at (" + G.name(g) + "," + G.name(h) + "," + G.name(k) + ")");
      }
  return std::nullopt;
}

template <Field F>
GradedAlgebra<F> crossed_product(const CrossedProductData<F>& d, Metadata meta) {
  if (auto v = check_cocycle_data(d)) invalid_input("invalid crossed product data: " + v->message);
  const auto& base = d.base;
  const int n = d.group.order();
  const std::size_t dim = base.dim(), total = dim * static_cast<std::size_t>(n);
  auto rule = [&](std::size_t a, std::size_t b) {
    const int g = static_cast<int>(a / dim), h = static_cast<int>(b / dim);
    auto s = graded::apply(d.sigma[static_cast<std::size_t>(g)],
                   std::span<const typename F::Elem>(base_basis(base, b % dim)));
    auto t = base.multiply(base.multiply(base_basis(base, a % dim), s),
                           d.alpha[static_cast<std::size_t>(g * n + h)]);
    Vec<F> out = zero_vec(base.field(), total);
    std::copy(t.begin(), t.end(),
              out.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(d.group.mul(g, h)) * dim));
    return out;
  };
  Vec<F> unit = zero_vec(base.field(), total);
  auto one = base.unit_dense();
  std::copy(one.begin(), one.end(),
            unit.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(d.group.identity()) * dim));
  if (meta.empty()) meta = with_builder<F>("crossed-product", {});
  return algebra_from_rule<F>(base.field(), d.group,
                              std::vector<std::size_t>(static_cast<std::size_t>(n), dim), rule, unit,
                              std::move(meta));
}

template <Field F>
GradedAlgebra<F> skew_group_ring(const GradedAlgebra<F>& base, FiniteGroup group,
                                 std::vector<Matrix<F>> sigma, Metadata meta) {
  const auto n = static_cast<std::size_t>(group.order());
  std::vector<Vec<F>> alpha(n * n, base.unit_dense());
  if (meta.empty()) meta = with_builder<F>("skew-group", {});
  return crossed_product(CrossedProductData<F>{base, std::move(group), std::move(sigma), std::move(alpha)},
                         std::move(meta));
}

template <Field F>
GradedAlgebra<F> cyclic_crossed_product(const GradedAlgebra<F>& base, const Matrix<F>& sigma, int n,
                                        const Vec<F>& c, Metadata meta) {
  if (n < 1) invalid_input("cyclic crossed product needs n >= 1");
  std::vector<Matrix<F>> sig;
  for (int k = 0; k < n; ++k) sig.push_back(matrix_power(sigma, k));
  std::vector<Vec<F>> alpha;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) alpha.push_back(i + j >= n ? c : base.unit_dense());
  if (meta.empty()) meta = with_builder<F>("cyclic-crossed-product", {});
  return crossed_product(CrossedProductData<F>{base, FiniteGroup::cyclic(n), std::move(sig), std::move(alpha)},
                         std::move(meta));
}

template <Field F>
GradedAlgebra<F> twisted_group_algebra(F field, FiniteGroup group,
                                       const std::vector<typename F::Elem>& alpha) {
  const auto n = static_cast<std::size_t>(group.order());
  if (alpha.size() != n * n) invalid_input("need one cocycle value per pair");
  auto base = product_algebra(field, 1);
  std::vector<Matrix<F>> sigma(n, Matrix<F>::identity(field, 1));
  std::vector<Vec<F>> a;
  for (const auto& x : alpha) a.push_back(Vec<F>{x});
  return crossed_product(CrossedProductData<F>{base, std::move(group), std::move(sigma), std::move(a)},
                         with_builder<F>("twisted-group-algebra", {}));
}

template <Field F>
std::vector<typename F::Elem> random_coboundary(const F& field, const FiniteGroup& group, Rng& rng) {
  const int n = group.order();
  std::vector<typename F::Elem> l(static_cast<std::size_t>(n), field.one());
  for (int g = 0; g < n; ++g) {
    if (g == group.identity()) continue;
    auto x = random_scalar(field, rng);
    while (field.is_zero(x)) x = random_scalar(field, rng);
    l[static_cast<std::size_t>(g)] = x;
  }
  std::vector<typename F::Elem> out;
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h)
      out.push_back(field.div(field.mul(l[static_cast<std::size_t>(g)], l[static_cast<std::size_t>(h)]),
                              l[static_cast<std::size_t>(group.mul(g, h))]));
  return out;
}

GradedAlgebra<PrimeField> galois_skew_example(std::uint32_t p, int n) {
  PrimeField f(p);
  auto modulus = default_modulus(f, n);
  auto ext = quotient_field_algebra(f, modulus);
  std::vector<Matrix<PrimeField>> sigma;
  for (int k = 0; k < n; ++k) sigma.push_back(frobenius_matrix(ext, k));
  return skew_group_ring(ext, FiniteGroup::cyclic(n), std::move(sigma),
                         with_builder<PrimeField>("galois-skew", {{"p", std::to_string(p)},
                                                                  {"n", std::to_string(n)},
                                                                  {"modulus", format_poly(f, modulus)}}));
}

template <Field F>
GradedAlgebra<F> m3_example(F field) {
  std::vector<std::pair<std::size_t, std::size_t>> entries;
  for (std::size_t parity = 0; parity < 2; ++parity)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if ((i + j) % 2 == parity) entries.emplace_back(i, j);
  auto index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < entries.size(); ++k)
      if (entries[k] == std::make_pair(i, j)) return k;
    internal_inconsistency("matrix unit missing");
  };
  auto rule = [&](std::size_t a, std::size_t b) {
    Vec<F> out = zero_vec(field, 9);
    if (entries[a].second == entries[b].first) out[index(entries[a].first, entries[b].second)] = field.one();
    return out;
  };
  Vec<F> unit = zero_vec(field, 9);
  for (std::size_t i = 0; i < 3; ++i) unit[index(i, i)] = field.one();
  return algebra_from_rule<F>(field, FiniteGroup::cyclic(2), {5, 4}, rule, unit,
                              with_builder<F>("m3", {}));
}

template <Field F>
GradedAlgebra<F> square_zero_extension(const GradedAlgebra<F>& base, const Matrix<F>& sigma) {
  if (base.group().order() != 1) invalid_input("square-zero extension base must be trivially graded");
  auto why = automorphism_failure(base, sigma);
  if (!why.empty()) invalid_input("square-zero extension: automorphism " + why);
  const std::size_t d = base.dim();
  auto rule = [&](std::size_t a, std::size_t b) {
    Vec<F> out = zero_vec(base.field(), 2 * d);
    if (a >= d && b >= d) return out;
    auto x = base_basis(base, a % d);
    auto y = base_basis(base, b % d);
    if (a >= d) y = graded::apply(sigma, std::span<const typename F::Elem>(y));
    auto t = base.multiply(x, y);
    std::copy(t.begin(), t.end(), out.begin() + static_cast<std::ptrdiff_t>(a >= d || b >= d ? d : 0));
    return out;
  };
  Vec<F> unit = zero_vec(base.field(), 2 * d);
  auto one = base.unit_dense();
  std::copy(one.begin(), one.end(), unit.begin());
  return algebra_from_rule<F>(base.field(), FiniteGroup::cyclic(2), {d, d}, rule, unit,
                              with_builder<F>("square-zero", {}));
}

#define GRADED_INSTANTIATE_BUILDERS(F)                                                           \
  template GradedAlgebra<F> algebra_from_rule(F, FiniteGroup, std::vector<std::size_t>,          \
                                              const std::function<Vec<F>(std::size_t, std::size_t)>&, \
                                              const Vec<F>&, Metadata);                          \
  template GradedAlgebra<F> group_algebra(F, FiniteGroup);                                       \
  template GradedAlgebra<F> matrix_algebra(F, std::size_t);                                      \
  template GradedAlgebra<F> product_algebra(F, std::size_t);                                     \
  template GradedAlgebra<F> truncated_polynomial(F, std::size_t, int);                           \
  template Matrix<F> inner_automorphism(const GradedAlgebra<F>&, const Vec<F>&);                 \
  template std::string automorphism_failure(const GradedAlgebra<F>&, const Matrix<F>&);          \
  template std::optional<CocycleViolation> check_cocycle_data(const CrossedProductData<F>&);     \
  template GradedAlgebra<F> crossed_product(const CrossedProductData<F>&, Metadata);             \
  template GradedAlgebra<F> skew_group_ring(const GradedAlgebra<F>&, FiniteGroup,                \
                                            std::vector<Matrix<F>>, Metadata);                   \
  template GradedAlgebra<F> cyclic_crossed_product(const GradedAlgebra<F>&, const Matrix<F>&,    \
                                                   int, const Vec<F>&, Metadata);                \
  template GradedAlgebra<F> twisted_group_algebra(F, FiniteGroup,                                \
                                                  const std::vector<typename F::Elem>&);         \
  template std::vector<typename F::Elem> random_coboundary(const F&, const FiniteGroup&, Rng&);  \
  template GradedAlgebra<F> m3_example(F);                                                       \
  template GradedAlgebra<F> square_zero_extension(const GradedAlgebra<F>&, const Matrix<F>&);

GRADED_INSTANTIATE_BUILDERS(PrimeField)
GRADED_INSTANTIATE_BUILDERS(RationalField)

}  // namespace graded
