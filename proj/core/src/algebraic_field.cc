#include "multijoint/algebraic_field.h"

#include "multijoint/errors.h"

namespace multijoint {

AlgebraicField::AlgebraicField(RealAlgebraic alpha)
    : alpha_(std::move(alpha)), modulus_(alpha_.poly()) {}

AlgebraicField::Elem AlgebraicField::Reduce(const UniPoly& a) const {
  return Rem(a, modulus_);
}

bool AlgebraicField::IsZero(const Elem& a) {
  const UniPoly r = Reduce(a);
  if (r.IsZero()) return true;
  const UniPoly g = Gcd(r, modulus_);
  if (g.degree() == 0) return false;
  if (alpha_.SignAt(g) == 0) {
    modulus_ = g;
    return true;
  }
  modulus_ = ExactQuotient(modulus_, g).Monic();
  return false;
}

int AlgebraicField::Sign(const Elem& a) {
  if (IsZero(a)) return 0;
  return alpha_.SignAt(Reduce(a));
}

AlgebraicField::Elem AlgebraicField::Inverse(const Elem& a) {
  if (IsZero(a)) throw std::domain_error("AlgebraicField: inverse of zero");
  const ExtendedGcdResult eg = ExtendedGcd(Reduce(a), modulus_);
  return Reduce(eg.s);
}

void TrimFieldPoly(FieldPoly& p, AlgebraicField& field) {
  for (auto& c : p) c = field.Reduce(c);
  while (!p.empty() && field.IsZero(p.back())) p.pop_back();
}

FieldPoly FieldPolyRem(FieldPoly a, const FieldPoly& b, AlgebraicField& field) {
  TrimFieldPoly(a, field);
  const int db = static_cast<int>(b.size()) - 1;
  const UniPoly inv = field.Inverse(b.back());
  while (static_cast<int>(a.size()) - 1 >= db) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const UniPoly f = field.Mul(a.back(), inv);
    for (int i = 0; i < db; ++i) a[i + shift] = field.Reduce(a[i + shift] - f * b[i]);
    a.pop_back();
    TrimFieldPoly(a, field);
  }
  return a;
}

FieldPoly FieldPolyGcd(FieldPoly a, FieldPoly b, AlgebraicField& field) {
  TrimFieldPoly(a, field);
  TrimFieldPoly(b, field);
  while (!b.empty()) {
    FieldPoly r = FieldPolyRem(a, b, field);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const UniPoly inv = field.Inverse(a.back());
  for (auto& c : a) c = field.Mul(c, inv);
  return a;
}

FieldPoly FieldPolyDerivative(const FieldPoly& p, AlgebraicField& field) {
  FieldPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  TrimFieldPoly(d, field);
  return d;
}

FieldPoly DivideOutRoot(FieldPoly p, const UniPoly& root, AlgebraicField& field) {
  TrimFieldPoly(p, field);
  while (p.size() >= 2) {
    // Synthetic division by (s - root).
    const size_t n = p.size() - 1;
    FieldPoly q(n);
    UniPoly carry;
    for (size_t i = n; i-- > 0;) {
      carry = field.Reduce(p[i + 1] + field.Mul(carry, root));
      q[i] = carry;
    }
    const UniPoly remainder = field.Reduce(p[0] + field.Mul(carry, root));
    if (!field.IsZero(remainder)) break;
    p = std::move(q);
    TrimFieldPoly(p, field);
  }
  return p;
}

int CountRealRoots(const FieldPoly& p_in, AlgebraicField& field) {
  FieldPoly p = p_in;
  TrimFieldPoly(p, field);
  if (p.size() <= 1) return 0;
  std::vector<FieldPoly> chain;
  chain.push_back(p);
  chain.push_back(FieldPolyDerivative(p, field));
  while (true) {
    FieldPoly r = FieldPolyRem(chain[chain.size() - 2], chain.back(), field);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  auto variations = [&](bool neg_inf) {
    int v = 0, last = 0;
    for (const auto& q : chain) {
      int s = field.Sign(q.back());
      if (neg_inf && (q.size() - 1) % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(true) - variations(false);
}

}  // namespace multijoint
