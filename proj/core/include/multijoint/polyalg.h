#ifndef MULTIJOINT_POLYALG_H_
#define MULTIJOINT_POLYALG_H_

#include <vector>

#include "multijoint/curve.h"
#include "multijoint/geometry.h"
#include "multijoint/tripoly.h"
#include "multijoint/unipoly.h"

namespace multijoint {

struct GradientTriple {
  TriPoly px, py, pz;

  const TriPoly& operator[](int i) const { return i == 0 ? px : (i == 1 ? py : pz); }
};

GradientTriple Gradient(const TriPoly& p);

// Gcd over Q[x, y, z], made integer-primitive. Gcd(0, 0) = 0.
TriPoly MultivariateGcd(const TriPoly& a, const TriPoly& b);
// Throws std::domain_error when b does not divide a.
TriPoly ExactQuotient(const TriPoly& a, const TriPoly& b);

// p / gcd(p, px, py, pz): the product of the distinct irreducible factors,
// integer-primitive. Throws ZeroPolynomial.
TriPoly SquareFreePart(const TriPoly& p);

// t -> p(base + t dir).
UniPoly RestrictToLine(const TriPoly& p, const Line3& line);
// t -> p(curve(t)).
UniPoly RestrictToCurve(const TriPoly& p, const ParamCurve& curve);

struct ZeroSetIncidence {
  bool contained = false;
  int count = 0;  // distinct real intersection points when not contained
};

// Contained when the restriction vanishes identically, otherwise the number
// of distinct points of the line on Z(p).
ZeroSetIncidence LineZeroSetIncidences(const TriPoly& p, const Line3& line);
ZeroSetIncidence CurveZeroSetIncidences(const TriPoly& p, const ParamCurve& curve);

// x lies on Z and the gradient of the square-free part vanishes there.
bool IsCriticalPoint(const TriPoly& p, const Point3& x);

// Every point of the line is critical. Throws LineNotInZeroSet when the line
// is not contained in Z(p).
bool IsCriticalLine(const TriPoly& p, const Line3& line);

// The candidates that are critical lines of Z(p); lines not in Z are skipped.
std::vector<Line3> CriticalLineCensus(const TriPoly& p, const std::vector<Line3>& candidates);

}  // namespace multijoint

#endif  // MULTIJOINT_POLYALG_H_
