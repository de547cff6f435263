#ifndef MULTIJOINT_SRC_RECURSIVE_POLY_H_
#define MULTIJOINT_SRC_RECURSIVE_POLY_H_

#include <vector>

#include "multijoint/rational.h"
#include "multijoint/tripoly.h"

namespace multijoint::internal {

// Dense recursive polynomial: a polynomial in the variable of `level` whose
// coefficients are polynomials one level down. Level 0 is a rational
// constant. Used for multivariate gcd and exact division.
struct RPoly {
  int level = 0;
  Rational value;              // level 0
  std::vector<RPoly> coeffs;   // level > 0, ascending, leading nonzero

  static RPoly Zero(int level);
  static RPoly Constant(int level, const Rational& c);

  bool IsZero() const;
  int degree() const { return level == 0 ? (Sign(value) == 0 ? -1 : 0) : static_cast<int>(coeffs.size()) - 1; }
  const RPoly& lead() const { return coeffs.back(); }
  void Trim();
};

RPoly Add(const RPoly& a, const RPoly& b);
RPoly Sub(const RPoly& a, const RPoly& b);
RPoly Mul(const RPoly& a, const RPoly& b);
RPoly Scale(const RPoly& a, const Rational& c);
// Throws std::domain_error if b does not divide a.
RPoly ExactDiv(const RPoly& a, const RPoly& b);
// Gcd with a positive innermost leading coefficient. For integer inputs the
// result is the primitive gcd over Z (integer content included).
RPoly Gcd(const RPoly& a, const RPoly& b);

// Variables: level 3 -> x, level 2 -> y, level 1 -> z.
RPoly FromTriPoly(const TriPoly& p);
TriPoly ToTriPoly(const RPoly& p);

}  // namespace multijoint::internal

#endif  // MULTIJOINT_SRC_RECURSIVE_POLY_H_
