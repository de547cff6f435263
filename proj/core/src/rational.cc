#include "multijoint/rational.h"

#include <cctype>
#include <cmath>

#include "multijoint/errors.h"

namespace multijoint {
namespace {

bool IsIntegerText(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer ParseInteger(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

Integer Floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const size_t slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!IsIntegerText(num) || !IsIntegerText(den) || den[0] == '-') {
    throw ValidationError("malformed rational '" + std::string(text) + "'");
  }
  Integer d = ParseInteger(den);
  if (d == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  Rational r(ParseInteger(num), d);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational DyadicRound(double value, int bits) {
  if (!std::isfinite(value)) throw ValidationError("cannot round a non-finite value");
  Rational v(value);  // exact
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  Rational scaled = v * scale;
  Rational half(1, 2);
  Integer rounded = Sign(scaled) >= 0 ? Floor(scaled + half) : -Floor(-scaled + half);
  Rational out(rounded, scale);
  out.canonicalize();
  return out;
}

Integer Gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer Lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rational SimplestRationalBetween(const Rational& lo, const Rational& hi) {
  if (lo > hi) return SimplestRationalBetween(hi, lo);
  if (Sign(lo) <= 0 && Sign(hi) >= 0) return 0;
  if (Sign(hi) < 0) return -SimplestRationalBetween(-hi, -lo);
  Integer fl = Floor(lo);
  if (fl == lo) return lo;
  if (fl + 1 <= hi) return Rational(fl + 1);
  Rational inner = SimplestRationalBetween(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / inner;
}

}  // namespace multijoint
