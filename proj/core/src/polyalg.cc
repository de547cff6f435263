#include "multijoint/polyalg.h"

#include <stdexcept>

#include "multijoint/errors.h"
#include "multijoint/sturm.h"
#include "recursive_poly.h"

namespace multijoint {
namespace {

// Restriction of p along t -> (f0(t), f1(t), f2(t)).
UniPoly Substitute(const TriPoly& p, const std::array<UniPoly, 3>& f) {
  std::array<std::vector<UniPoly>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    const int dv = std::max(p.degree_in(v), 0);
    pw[v].reserve(dv + 1);
    pw[v].push_back(UniPoly::Constant(1));
    for (int k = 1; k <= dv; ++k) pw[v].push_back(pw[v].back() * f[v]);
  }
  UniPoly acc;
  for (const auto& [e, c] : p.terms()) acc += pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * c;
  return acc;
}

std::array<UniPoly, 3> LineComponents(const Line3& l) {
  return {UniPoly::Linear(l.base().x, Rational(l.dir()[0])),
          UniPoly::Linear(l.base().y, Rational(l.dir()[1])),
          UniPoly::Linear(l.base().z, Rational(l.dir()[2]))};
}

ZeroSetIncidence Classify(const UniPoly& u) {
  if (u.IsZero()) return {true, 0};
  return {false, SturmDistinctRealRoots(u)};
}

}  // namespace

GradientTriple Gradient(const TriPoly& p) { return {p.Partial(0), p.Partial(1), p.Partial(2)}; }

TriPoly MultivariateGcd(const TriPoly& a, const TriPoly& b) {
  return internal::ToTriPoly(internal::Gcd(internal::FromTriPoly(a.ContentFree()),
                                           internal::FromTriPoly(b.ContentFree())))
      .PrimitiveInteger();
}

TriPoly ExactQuotient(const TriPoly& a, const TriPoly& b) {
  return internal::ToTriPoly(
      internal::ExactDiv(internal::FromTriPoly(a), internal::FromTriPoly(b)));
}

TriPoly SquareFreePart(const TriPoly& p) {
  if (p.IsZero()) throw ZeroPolynomial("square-free part of the zero polynomial");
  if (p.degree() == 0) return TriPoly::Constant(1);
  using internal::RPoly;
  // Integer coefficients keep the gcd computation over Z.
  const TriPoly pi = p.ContentFree();
  const RPoly rp = internal::FromTriPoly(pi);
  RPoly g = rp;
  for (int v = 0; v < 3; ++v) g = internal::Gcd(g, internal::FromTriPoly(pi.Partial(v)));
  return internal::ToTriPoly(internal::ExactDiv(rp, g)).PrimitiveInteger();
}

UniPoly RestrictToLine(const TriPoly& p, const Line3& line) {
  return Substitute(p, LineComponents(line));
}

UniPoly RestrictToCurve(const TriPoly& p, const ParamCurve& curve) {
  return Substitute(p, curve.components());
}

ZeroSetIncidence LineZeroSetIncidences(const TriPoly& p, const Line3& line) {
  if (p.IsZero()) throw ZeroPolynomial("incidences against the zero polynomial");
  return Classify(RestrictToLine(p, line));
}

ZeroSetIncidence CurveZeroSetIncidences(const TriPoly& p, const ParamCurve& curve) {
  if (p.IsZero()) throw ZeroPolynomial("incidences against the zero polynomial");
  return Classify(RestrictToCurve(p, curve));
}

bool IsCriticalPoint(const TriPoly& p, const Point3& x) {
  const TriPoly sf = SquareFreePart(p);
  if (sf.SignAt(x) != 0) return false;
  for (int v = 0; v < 3; ++v) {
    if (sf.Partial(v).SignAt(x) != 0) return false;
  }
  return true;
}

namespace {

bool GradientVanishesOnLine(const GradientTriple& grad, const Line3& line) {
  for (int v = 0; v < 3; ++v) {
    if (!RestrictToLine(grad[v], line).IsZero()) return false;
  }
  return true;
}

}  // namespace

bool IsCriticalLine(const TriPoly& p, const Line3& line) {
  const TriPoly sf = SquareFreePart(p);
  if (!RestrictToLine(sf, line).IsZero()) {
    throw LineNotInZeroSet("line is not contained in the zero set");
  }
  return GradientVanishesOnLine(Gradient(sf), line);
}

std::vector<Line3> CriticalLineCensus(const TriPoly& p, const std::vector<Line3>& candidates) {
  const TriPoly sf = SquareFreePart(p);
  const GradientTriple grad = Gradient(sf);
  std::vector<Line3> out;
  for (const auto& line : candidates) {
    if (!RestrictToLine(sf, line).IsZero()) continue;
    if (GradientVanishesOnLine(grad, line)) out.push_back(line);
  }
  return out;
}

}  // namespace multijoint
