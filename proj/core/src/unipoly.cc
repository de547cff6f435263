#include "multijoint/unipoly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "multijoint/errors.h"

namespace multijoint {
namespace {

using IntPoly = std::vector<Integer>;  // ascending, trimmed

void TrimInt(IntPoly& p) {
  while (!p.empty() && Sign(p.back()) == 0) p.pop_back();
}

int Deg(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer Content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = Gcd(g, c);
  return g;
}

IntPoly PrimitivePart(IntPoly p) {
  Integer g = Content(p);
  if (g == 0) return p;
  if (Sign(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

IntPoly ToIntPoly(const UniPoly& u) {
  Integer den = 1;
  for (const auto& c : u.coeffs()) den = Lcm(den, c.get_den());
  IntPoly out;
  out.reserve(u.coeffs().size());
  for (const auto& c : u.coeffs()) out.push_back(c.get_num() * (den / c.get_den()));
  return out;
}

UniPoly FromIntPoly(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return UniPoly(std::move(c));
}

// lc(b)^(deg a - deg b + 1) * a = q b + r; returns r.
IntPoly PseudoRemainder(IntPoly a, const IntPoly& b) {
  const int db = Deg(b);
  const int delta = Deg(a) - db + 1;
  const Integer& lb = b.back();
  int steps = 0;
  while (Deg(a) >= db && !a.empty()) {
    const int shift = Deg(a) - db;
    const Integer la = a.back();
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    TrimInt(a);
    ++steps;
  }
  if (steps < delta) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), delta - steps);
    for (auto& c : a) c *= f;
  }
  return a;
}

Integer Pow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { Trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { Trim(); }

UniPoly UniPoly::Constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::Monomial(const Rational& c, int degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::Linear(const Rational& c0, const Rational& c1) {
  return UniPoly(std::vector<Rational>{c0, c1});
}

void UniPoly::Trim() {
  while (!coeffs_.empty() && Sign(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double UniPoly::EvaluateDouble(double t) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

UniPoly UniPoly::Derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::Compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Constant(*it);
  }
  return acc;
}

UniPoly UniPoly::Monic() const {
  if (IsZero()) return *this;
  UniPoly out = *this;
  out *= Rational(1) / leading();
  return out;
}

UniPoly UniPoly::ContentFree() const {
  if (IsZero()) return *this;
  IntPoly p = ToIntPoly(*this);
  Integer g = Content(p);
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return FromIntPoly(p);
}

UniPoly UniPoly::PrimitiveInteger() const {
  if (IsZero()) return *this;
  return FromIntPoly(PrimitivePart(ToIntPoly(*this)));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  Trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  Trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  if (IsZero() || o.IsZero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (Sign(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  Trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (Sign(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

std::string UniPoly::ToString(char var) const {
  if (IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (Sign(c) == 0) continue;
    if (!first) os << (Sign(c) < 0 ? " - " : " + ");
    else if (Sign(c) < 0) os << "-";
    const Rational a = abs(c);
    if (a != 1 || i == 0) os << a;
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.ToString(); }

DivModResult DivMod(const UniPoly& a, const UniPoly& b) {
  if (b.IsZero()) throw ZeroPolynomial("division by the zero polynomial");
  std::vector<Rational> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (Sign(r[i]) == 0) continue;
    const Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly Rem(const UniPoly& a, const UniPoly& b) { return DivMod(a, b).remainder; }

UniPoly ExactQuotient(const UniPoly& a, const UniPoly& b) {
  DivModResult qr = DivMod(a, b);
  if (!qr.remainder.IsZero()) throw std::domain_error("ExactQuotient: inexact division");
  return qr.quotient;
}

UniPoly Gcd(const UniPoly& a_in, const UniPoly& b_in) {
  if (a_in.IsZero()) return b_in.Monic();
  if (b_in.IsZero()) return a_in.Monic();
  IntPoly a = PrimitivePart(ToIntPoly(a_in));
  IntPoly b = PrimitivePart(ToIntPoly(b_in));
  if (Deg(a) < Deg(b)) std::swap(a, b);
  Integer g = 1, h = 1;
  while (true) {
    if (Deg(b) == 0) return UniPoly::Constant(1);
    const int delta = Deg(a) - Deg(b);
    IntPoly r = PseudoRemainder(a, b);
    if (r.empty()) break;
    if (Deg(r) == 0) return UniPoly::Constant(1);
    a = std::move(b);
    const Integer div = g * Pow(h, delta);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = Pow(g, delta);
      Integer den = Pow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return FromIntPoly(PrimitivePart(b)).Monic();
}

ExtendedGcdResult ExtendedGcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::Constant(1), s1;
  UniPoly t0, t1 = UniPoly::Constant(1);
  while (!r1.IsZero()) {
    DivModResult qr = DivMod(r0, r1);
    UniPoly r2 = qr.remainder;
    UniPoly s2 = s0 - qr.quotient * s1;
    UniPoly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.IsZero()) return {UniPoly(), UniPoly(), UniPoly()};
  const Rational inv = Rational(1) / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly SquareFreePart(const UniPoly& u) {
  if (u.IsZero()) throw ZeroPolynomial("square-free part of the zero polynomial");
  if (u.degree() == 0) return UniPoly::Constant(1);
  return ExactQuotient(u, Gcd(u, u.Derivative())).PrimitiveInteger();
}

Rational RootBound(const UniPoly& u) {
  if (u.degree() <= 0) return 1;
  Rational m = 0;
  const Rational lead = abs(u.leading());
  for (int i = 0; i < u.degree(); ++i) m = std::max(m, Rational(abs(u.coeffs()[i]) / lead));
  return m + 1;
}

std::pair<Rational, Rational> IntervalEvaluate(const UniPoly& u, const Rational& lo,
                                               const Rational& hi) {
  if (u.IsZero()) return {0, 0};
  Rational L = u.leading(), U = u.leading();
  for (int i = u.degree() - 1; i >= 0; --i) {
    const Rational c[4] = {L * lo, L * hi, U * lo, U * hi};
    L = *std::min_element(c, c + 4) + u.coeffs()[i];
    U = *std::max_element(c, c + 4) + u.coeffs()[i];
  }
  return {L, U};
}

}  // namespace multijoint
