#ifndef MULTIJOINT_REAL_ALGEBRAIC_H_
#define MULTIJOINT_REAL_ALGEBRAIC_H_

#include <ostream>
#include <string>
#include <vector>

#include "multijoint/rational.h"
#include "multijoint/unipoly.h"

namespace multijoint {

// An exact real algebraic number. Rationals are stored directly. Otherwise
// the number is the unique root of a square-free integer polynomial inside
// an open interval (lo, hi) at whose endpoints the polynomial is nonzero.
class RealAlgebraic {
 public:
  RealAlgebraic() = default;
  RealAlgebraic(const Rational& r);  // NOLINT(runtime/explicit)

  // `poly` must have exactly one distinct root in (lo, hi), lo < hi. A
  // rational root is detected and stored as such.
  static RealAlgebraic FromIsolated(const UniPoly& poly, const Rational& lo,
                                    const Rational& hi);
  // All distinct real roots of a nonzero polynomial, ascending.
  static std::vector<RealAlgebraic> RealRoots(const UniPoly& u);

  bool is_rational() const { return rational_; }
  // Exact value; only valid when is_rational().
  const Rational& rational() const { return lo_; }
  // Square-free defining polynomial (t - r for rationals).
  const UniPoly& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Same number with the isolating interval halved (identity for rationals).
  RealAlgebraic Refined() const;
  // Isolating interval no wider than `width`.
  RealAlgebraic RefinedTo(const Rational& width) const;

  // Exact sign of q at this number.
  int SignAt(const UniPoly& q) const;

  double ToDouble() const;
  std::string ToString() const;

  friend int Compare(const RealAlgebraic& a, const RealAlgebraic& b);
  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
    return Compare(a, b) == 0;
  }
  friend bool operator<(const RealAlgebraic& a, const RealAlgebraic& b) {
    return Compare(a, b) < 0;
  }

 private:
  bool rational_ = true;
  UniPoly poly_ = UniPoly::Linear(0, 1);
  Rational lo_, hi_;
};

std::ostream& operator<<(std::ostream& os, const RealAlgebraic& a);

// Exact value q(a).
RealAlgebraic EvaluateAt(const UniPoly& q, const RealAlgebraic& a);

// Characteristic polynomial of multiplication by q in Q[t]/(m).
UniPoly MultiplicationCharPoly(const UniPoly& q, const UniPoly& m);

}  // namespace multijoint

#endif  // MULTIJOINT_REAL_ALGEBRAIC_H_
