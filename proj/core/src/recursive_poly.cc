#include "recursive_poly.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "multijoint/unipoly.h"

namespace multijoint::internal {
namespace {

// Variable index (into an Exponent) represented by a level.
int VarOf(int level) { return 3 - level; }

const Rational& InnermostLead(const RPoly& p) {
  const RPoly* q = &p;
  while (q->level > 0) q = &q->lead();
  return q->value;
}

// Sign normalization only, so integer inputs stay integral.
RPoly Normalize(const RPoly& p) {
  if (p.IsZero() || Sign(InnermostLead(p)) > 0) return p;
  return Scale(p, -1);
}

// lc(b)^k * a reduced modulo b in the main variable.
RPoly PseudoRem(RPoly a, const RPoly& b) {
  const int db = b.degree();
  while (!a.IsZero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    RPoly la = a.lead();
    for (auto& c : a.coeffs) c = Mul(c, b.lead());
    for (int i = 0; i <= db; ++i) {
      a.coeffs[i + shift] = Sub(a.coeffs[i + shift], Mul(la, b.coeffs[i]));
    }
    a.Trim();
  }
  return a;
}

RPoly Content(const RPoly& p) {
  RPoly g = RPoly::Zero(p.level - 1);
  for (const auto& c : p.coeffs) g = Gcd(g, c);
  return g;
}

RPoly PrimitivePart(const RPoly& p) {
  if (p.IsZero()) return p;
  const RPoly c = Content(p);
  RPoly out = p;
  for (auto& x : out.coeffs) x = ExactDiv(x, c);
  return out;
}

RPoly Lift(const RPoly& c) {
  RPoly p = RPoly::Zero(c.level + 1);
  if (!c.IsZero()) p.coeffs.push_back(c);
  return p;
}

bool IsOne(const RPoly& p) {
  if (p.level == 0) return p.value == 1;
  return p.coeffs.size() == 1 && IsOne(p.coeffs[0]);
}

// gcd of all coefficients of a and b, stopping early at 1.
RPoly JointContent(const RPoly& a, const RPoly& b) {
  RPoly g = RPoly::Zero(a.level - 1);
  for (const RPoly* p : {&a, &b}) {
    for (const auto& c : p->coeffs) {
      g = Gcd(g, c);
      if (IsOne(g)) return g;
    }
  }
  return g;
}

// p with the variable of each level l replaced by vals[l].
Rational EvaluateAll(const RPoly& p, const std::vector<Rational>& vals) {
  if (p.level == 0) return p.value;
  Rational acc = 0;
  for (size_t i = p.coeffs.size(); i-- > 0;) acc = acc * vals[p.level] + EvaluateAll(p.coeffs[i], vals);
  return acc;
}

// Image in Q[main variable] with the inner variables fixed.
UniPoly Specialize(const RPoly& p, const std::vector<Rational>& vals) {
  std::vector<Rational> c;
  c.reserve(p.coeffs.size());
  for (const auto& x : p.coeffs) c.push_back(EvaluateAll(x, vals));
  return UniPoly(std::move(c));
}

// True when a and b are shown coprime in the main variable. Under a
// specialization keeping both leading coefficients nonzero, the image of
// the gcd divides the gcd of the images, so a constant image gcd rules out
// common factors of positive main degree.
bool CoprimeInMainVariable(const RPoly& a, const RPoly& b) {
  if (a.level < 2 || a.degree() < 1 || b.degree() < 1) return false;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<Rational> vals(a.level, Rational(0));
    for (int l = 1; l < a.level; ++l) vals[l] = 2 + 5 * attempt + 3 * l * (attempt + 1);
    if (Sign(EvaluateAll(a.lead(), vals)) == 0 || Sign(EvaluateAll(b.lead(), vals)) == 0) continue;
    return multijoint::Gcd(Specialize(a, vals), Specialize(b, vals)).degree() == 0;
  }
  return false;
}

// Heuristic gcd for integer coefficients: evaluate the main variable at a
// large integer xi, take the gcd of the images recursively, rebuild the
// candidate from its balanced base-xi digits and accept it only if it
// divides both inputs. Gives up (nullopt) after a few choices of xi.
bool AllInteger(const RPoly& p) {
  if (p.level == 0) return p.value.get_den() == 1;
  return std::all_of(p.coeffs.begin(), p.coeffs.end(), AllInteger);
}

Integer MaxNorm(const RPoly& p) {
  if (p.level == 0) return abs(p.value.get_num());
  Integer m = 0;
  for (const auto& c : p.coeffs) m = std::max(m, MaxNorm(c));
  return m;
}

Integer IntegerContent(const RPoly& p) {
  if (p.level == 0) return abs(p.value.get_num());
  Integer g = 0;
  for (const auto& c : p.coeffs) {
    g = multijoint::Gcd(g, IntegerContent(c));
    if (g == 1) break;
  }
  return g;
}

RPoly DivideGround(const RPoly& p, const Integer& k) {
  return Scale(p, Frac(1, k));
}

RPoly EvaluateMain(const RPoly& p, const Integer& xi) {
  RPoly acc = RPoly::Zero(p.level - 1);
  for (size_t i = p.coeffs.size(); i-- > 0;) acc = Add(Scale(acc, Rational(xi)), p.coeffs[i]);
  return acc;
}

// Balanced residues of the integer leaves modulo xi.
RPoly SymmetricMod(const RPoly& p, const Integer& xi) {
  if (p.level == 0) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), p.value.get_num_mpz_t(), xi.get_mpz_t());
    if (2 * r > xi) r -= xi;
    RPoly out;
    out.value = Rational(r);
    return out;
  }
  RPoly out = RPoly::Zero(p.level);
  for (const auto& c : p.coeffs) out.coeffs.push_back(SymmetricMod(c, xi));
  out.Trim();
  return out;
}

RPoly Interpolate(RPoly h, const Integer& xi) {
  RPoly out = RPoly::Zero(h.level + 1);
  while (!h.IsZero()) {
    RPoly digit = SymmetricMod(h, xi);
    h = Scale(Sub(h, digit), Frac(1, xi));
    out.coeffs.push_back(std::move(digit));
  }
  out.Trim();
  return out;
}

bool Divides(const RPoly& d, const RPoly& p) {
  try {
    ExactDiv(p, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

std::optional<RPoly> HeuristicGcd(const RPoly& a, const RPoly& b) {
  if (a.level == 0) {
    return RPoly::Constant(0, Rational(multijoint::Gcd(a.value.get_num(), b.value.get_num())));
  }
  const Integer ground = multijoint::Gcd(IntegerContent(a), IntegerContent(b));
  const RPoly f = DivideGround(a, ground), g = DivideGround(b, ground);
  const Integer fn = MaxNorm(f), gn = MaxNorm(g);
  const Integer bound = 2 * std::min(fn, gn) + 29;
  const Integer lf = abs(InnermostLead(f).get_num()), lg = abs(InnermostLead(g).get_num());
  Integer xi = std::max(std::min(bound, Integer(99 * sqrt(bound))),
                        Integer(2 * std::min(Integer(fn / lf), Integer(gn / lg)) + 2));
  for (int attempt = 0; attempt < 6; ++attempt) {
    const RPoly ff = EvaluateMain(f, xi), gg = EvaluateMain(g, xi);
    if (!ff.IsZero() && !gg.IsZero()) {
      if (auto h = HeuristicGcd(ff, gg)) {
        RPoly cand = Interpolate(*h, xi);
        if (!cand.IsZero()) {
          cand = DivideGround(cand, IntegerContent(cand));
          if (Divides(cand, f) && Divides(cand, g)) return Scale(cand, Rational(ground));
        }
      }
    }
    xi = 73794 * xi * Integer(sqrt(Integer(sqrt(xi)))) / 27011;
  }
  return std::nullopt;
}

}  // namespace

RPoly RPoly::Zero(int level) {
  RPoly p;
  p.level = level;
  return p;
}

RPoly RPoly::Constant(int level, const Rational& c) {
  RPoly p;
  p.level = 0;
  p.value = c;
  for (int l = 1; l <= level; ++l) p = Lift(p);
  return p;
}

bool RPoly::IsZero() const { return level == 0 ? Sign(value) == 0 : coeffs.empty(); }

void RPoly::Trim() {
  while (!coeffs.empty() && coeffs.back().IsZero()) coeffs.pop_back();
}

RPoly Add(const RPoly& a, const RPoly& b) {
  if (a.level == 0) {
    RPoly r;
    r.value = a.value + b.value;
    return r;
  }
  RPoly r = RPoly::Zero(a.level);
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), RPoly::Zero(a.level - 1));
  for (size_t i = 0; i < r.coeffs.size(); ++i) {
    if (i < a.coeffs.size() && i < b.coeffs.size()) {
      r.coeffs[i] = Add(a.coeffs[i], b.coeffs[i]);
    } else {
      r.coeffs[i] = i < a.coeffs.size() ? a.coeffs[i] : b.coeffs[i];
    }
  }
  r.Trim();
  return r;
}

RPoly Scale(const RPoly& a, const Rational& c) {
  if (a.level == 0) {
    RPoly r;
    r.value = a.value * c;
    return r;
  }
  RPoly r = RPoly::Zero(a.level);
  if (Sign(c) == 0) return r;
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& x : a.coeffs) r.coeffs.push_back(Scale(x, c));
  return r;
}

RPoly Sub(const RPoly& a, const RPoly& b) { return Add(a, Scale(b, -1)); }

RPoly Mul(const RPoly& a, const RPoly& b) {
  if (a.level == 0) {
    RPoly r;
    r.value = a.value * b.value;
    return r;
  }
  RPoly r = RPoly::Zero(a.level);
  if (a.IsZero() || b.IsZero()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, RPoly::Zero(a.level - 1));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i].IsZero()) continue;
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      r.coeffs[i + j] = Add(r.coeffs[i + j], Mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  r.Trim();
  return r;
}

RPoly ExactDiv(const RPoly& a, const RPoly& b) {
  if (b.IsZero()) throw std::domain_error("RPoly: division by zero");
  if (a.level == 0) {
    RPoly r;
    r.value = a.value / b.value;
    return r;
  }
  RPoly q = RPoly::Zero(a.level);
  RPoly r = a;
  const int db = b.degree();
  while (!r.IsZero()) {
    if (r.degree() < db) throw std::domain_error("RPoly: inexact division");
    const int shift = r.degree() - db;
    RPoly t = ExactDiv(r.lead(), b.lead());
    if (static_cast<int>(q.coeffs.size()) <= shift) {
      q.coeffs.resize(shift + 1, RPoly::Zero(a.level - 1));
    }
    q.coeffs[shift] = t;
    for (int i = 0; i <= db; ++i) {
      r.coeffs[i + shift] = Sub(r.coeffs[i + shift], Mul(t, b.coeffs[i]));
    }
    r.Trim();
  }
  q.Trim();
  return q;
}

RPoly Gcd(const RPoly& a, const RPoly& b) {
  if (a.IsZero()) return Normalize(b);
  if (b.IsZero()) return Normalize(a);
  if (a.level == 0) {
    if (a.value.get_den() != 1 || b.value.get_den() != 1) return RPoly::Constant(0, 1);
    return RPoly::Constant(0, Rational(multijoint::Gcd(a.value.get_num(), b.value.get_num())));
  }
  if (CoprimeInMainVariable(a, b)) return Normalize(Lift(JointContent(a, b)));
  if (AllInteger(a) && AllInteger(b)) {
    if (auto h = HeuristicGcd(a, b)) return Normalize(*h);
  }
  const RPoly content = Gcd(Content(a), Content(b));
  RPoly pa = PrimitivePart(a);
  RPoly pb = PrimitivePart(b);
  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  RPoly g;
  while (true) {
    if (pb.degree() == 0) {
      g = RPoly::Constant(a.level, 1);
      break;
    }
    RPoly r = PseudoRem(pa, pb);
    if (r.IsZero()) {
      g = pb;
      break;
    }
    if (r.degree() == 0) {
      g = RPoly::Constant(a.level, 1);
      break;
    }
    pa = std::move(pb);
    pb = PrimitivePart(r);
  }
  g = PrimitivePart(g);
  return Normalize(Mul(Lift(content), g));
}

RPoly FromTriPoly(const TriPoly& p) {
  RPoly out = RPoly::Zero(3);
  for (const auto& [e, c] : p.terms()) {
    RPoly mono = RPoly::Constant(0, c);
    for (int level = 1; level <= 3; ++level) {
      RPoly up = RPoly::Zero(level);
      up.coeffs.assign(e[VarOf(level)] + 1, RPoly::Zero(level - 1));
      up.coeffs.back() = mono;
      mono = std::move(up);
    }
    out = Add(out, mono);
  }
  return out;
}

namespace {

void Collect(const RPoly& p, Exponent& e, TriPoly& out) {
  if (p.level == 0) {
    out += TriPoly::Term(e, p.value);
    return;
  }
  for (size_t i = 0; i < p.coeffs.size(); ++i) {
    e[VarOf(p.level)] = static_cast<int>(i);
    Collect(p.coeffs[i], e, out);
  }
  e[VarOf(p.level)] = 0;
}

}  // namespace

TriPoly ToTriPoly(const RPoly& p) {
  TriPoly out;
  Exponent e{0, 0, 0};
  Collect(p, e, out);
  return out;
}

}  // namespace multijoint::internal
