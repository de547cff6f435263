#include "multijoint/tripoly.h"

#include <algorithm>
#include <sstream>

namespace multijoint {

bool GradedLexLess(const Exponent& a, const Exponent& b) {
  const int da = a[0] + a[1] + a[2];
  const int db = b[0] + b[1] + b[2];
  if (da != db) return da < db;
  return a < b;
}

TriPoly TriPoly::Constant(const Rational& c) { return Term({0, 0, 0}, c); }

TriPoly TriPoly::Variable(int var) {
  Exponent e{0, 0, 0};
  e[var] = 1;
  return Term(e, 1);
}

TriPoly TriPoly::Term(const Exponent& e, const Rational& c) {
  TriPoly p;
  p.AddTerm(e, c);
  return p;
}

TriPoly TriPoly::FromTerms(const std::vector<std::pair<Exponent, Rational>>& terms) {
  TriPoly p;
  for (const auto& [e, c] : terms) p.AddTerm(e, c);
  return p;
}

TriPoly TriPoly::Affine(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d) {
  return FromTerms({{{1, 0, 0}, a}, {{0, 1, 0}, b}, {{0, 0, 1}, c}, {{0, 0, 0}, d}});
}

void TriPoly::AddTerm(const Exponent& e, const Rational& c) {
  if (Sign(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (Sign(it->second) == 0) terms_.erase(it);
  }
}

int TriPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

int TriPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational TriPoly::Evaluate(const Point3& p) const {
  if (terms_.empty()) return 0;
  std::array<std::vector<Rational>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    const int dv = degree_in(v);
    pw[v].resize(dv + 1);
    pw[v][0] = 1;
    for (int k = 1; k <= dv; ++k) pw[v][k] = pw[v][k - 1] * p[v];
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
  return acc;
}

double TriPoly::EvaluateDouble(double x, double y, double z) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) {
    double t = c.get_d();
    for (int k = 0; k < e[0]; ++k) t *= x;
    for (int k = 0; k < e[1]; ++k) t *= y;
    for (int k = 0; k < e[2]; ++k) t *= z;
    acc += t;
  }
  return acc;
}

TriPoly TriPoly::Partial(int var) const {
  TriPoly d;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    --f[var];
    d.AddTerm(f, c * e[var]);
  }
  return d;
}

TriPoly TriPoly::Pow(int e) const {
  TriPoly r = Constant(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

TriPoly TriPoly::ContentFree() const {
  if (IsZero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& [e, c] : terms_) {
    den = Lcm(den, c.get_den());
    num = Gcd(num, c.get_num());
  }
  return *this * Frac(den, num);
}

TriPoly TriPoly::PrimitiveInteger() const {
  if (IsZero()) return *this;
  TriPoly p = ContentFree();
  auto lead = std::max_element(p.terms_.begin(), p.terms_.end(), [](const auto& a, const auto& b) {
    return GradedLexLess(a.first, b.first);
  });
  if (Sign(lead->second) < 0) p *= Rational(-1);
  return p;
}

TriPoly TriPoly::operator-() const {
  TriPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, c);
  return *this;
}

TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [e, c] : o.terms_) AddTerm(e, -c);
  return *this;
}

TriPoly& TriPoly::operator*=(const TriPoly& o) {
  TriPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      r.AddTerm({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

TriPoly& TriPoly::operator*=(const Rational& c) {
  if (Sign(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

std::string TriPoly::ToString() const {
  if (IsZero()) return "0";
  std::vector<std::pair<Exponent, Rational>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return GradedLexLess(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  static const char kVars[3] = {'x', 'y', 'z'};
  for (const auto& [e, c] : ts) {
    if (!first) os << (Sign(c) < 0 ? " - " : " + ");
    else if (Sign(c) < 0) os << "-";
    const Rational a = abs(c);
    const bool constant = e[0] + e[1] + e[2] == 0;
    if (a != 1 || constant) os << a;
    bool need_mul = a != 1 && !constant;
    for (int v = 0; v < 3; ++v) {
      if (e[v] == 0) continue;
      if (need_mul) os << "*";
      os << kVars[v];
      if (e[v] > 1) os << "^" << e[v];
      need_mul = true;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TriPoly& p) { return os << p.ToString(); }

}  // namespace multijoint
