#include "graded/poly.hpp"

#include <algorithm>
#include <string>

namespace graded {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

bool divides(const PrimeField& f, const Poly<PrimeField>& d, const Poly<PrimeField>& c) {
  return poly_divmod(f, c, d).second.empty();
}

}  // namespace

Poly<PrimeField> monic_from_index(const PrimeField& f, int d, std::uint64_t k) {
  Poly<PrimeField> out(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<PrimeField::Elem>(k % f.order());
    k /= f.order();
  }
  out[static_cast<std::size_t>(d)] = 1;
  return out;
}

std::vector<Poly<PrimeField>> small_irreducible_factors(const PrimeField& f, Poly<PrimeField> c,
                                                        std::uint64_t candidate_limit) {
  trim(f, c);
  if (c.empty()) invalid_input("factoring the zero polynomial");
  auto lead_inv = f.inv(c.back());
  for (auto& a : c) a = f.mul(a, lead_inv);

  std::vector<Poly<PrimeField>> factors;
  bool truncated = false;
  for (int d = 1; 2 * d <= degree<PrimeField>(c); ++d) {
    auto count = saturating_pow(f.order(), d, candidate_limit);
    if (count > candidate_limit) {
      truncated = true;
      break;
    }
    for (std::uint64_t k = 0; k < count && 2 * d <= degree<PrimeField>(c); ++k) {
      auto q = monic_from_index(f, d, k);
      bool found = false;
      while (degree<PrimeField>(c) >= d && divides(f, q, c)) {
        c = poly_divmod(f, c, q).first;
        found = true;
      }
      if (found) factors.push_back(std::move(q));
    }
  }
  if (!truncated && degree<PrimeField>(c) >= 1) factors.push_back(c);
  return factors;
}

bool is_irreducible(const PrimeField& f, const Poly<PrimeField>& c) {
  int n = degree<PrimeField>(c);
  if (n < 1) return false;
  for (int d = 1; 2 * d <= n; ++d) {
    auto count = saturating_pow(f.order(), d, std::uint64_t{1} << 40);
    for (std::uint64_t k = 0; k < count; ++k)
      if (divides(f, monic_from_index(f, d, k), c)) return false;
  }
  return true;
}

std::string format_poly(const PrimeField& f, const Poly<PrimeField>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (f.is_zero(c[k])) continue;
    if (!out.empty()) out += "+";
    std::string coef = (c[k] == 1 && k > 0) ? "" : std::to_string(c[k]);
    if (k == 0) out += coef;
    else if (k == 1) out += coef + "x";
    else out += coef + "x^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> small, large;
  mpz_class a = abs(n);
  for (mpz_class d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    small.push_back(d);
    if (d * d != a) large.push_back(a / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<mpq_class> rational_roots(const Poly<RationalField>& c, unsigned long divisor_limit) {
  RationalField q;
  Poly<RationalField> p = c;
  trim(q, p);
  std::vector<mpq_class> roots;
  if (p.size() < 2) return roots;
  std::size_t low = 0;
  while (sgn(p[low]) == 0) ++low;
  if (low > 0) roots.push_back(mpq_class(0));
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  if (p.size() < 2) return roots;

  mpz_class scale = 1;
  for (const auto& a : p) scale = lcm(scale, mpz_class(a.get_den()));
  std::vector<mpz_class> z;
  for (const auto& a : p) z.push_back(mpz_class(a * scale));
  const mpz_class limit(divisor_limit);
  if (abs(z.front()) > limit || abs(z.back()) > limit) return roots;

  auto value = [&](const mpq_class& x) {
    mpq_class acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + p[k];
    return acc;
  };
  auto nums = positive_divisors(z.front());
  auto dens = positive_divisors(z.back());
  std::vector<mpq_class> found;
  for (const auto& n : nums)
    for (const auto& d : dens)
      for (int s : {1, -1}) {
        mpq_class x(s * n, d);
        x.canonicalize();
        if (sgn(value(x)) == 0) found.push_back(x);
      }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

}  // namespace graded
