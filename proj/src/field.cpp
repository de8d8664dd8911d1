#include "graded/field.hpp"

#include <cctype>

namespace graded {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    invalid_input("GF(p) requires a prime p < 2^31, got " + std::to_string(p));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) invalid_input("division by zero in " + name());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string PrimeField::name() const { return "GF(" + std::to_string(p_) + ")"; }

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (sgn(a) == 0) invalid_input("division by zero in Q");
  return Elem(1) / a;
}

RationalField::Elem RationalField::fraction(long n, long d) const {
  if (d == 0) invalid_input("zero denominator");
  Elem q{mpz_class(n), mpz_class(d)};
  q.canonicalize();
  return q;
}

std::string RationalField::format(const Elem& a) const {
  if (a.get_den() == 1) return a.get_num().get_str();
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

RationalField::Elem RationalField::parse(const std::string& text) const {
  auto is_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+')
    invalid_input("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) invalid_input("zero denominator in '" + text + "'");
  Elem q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace graded
