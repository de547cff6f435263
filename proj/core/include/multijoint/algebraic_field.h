#ifndef MULTIJOINT_ALGEBRAIC_FIELD_H_
#define MULTIJOINT_ALGEBRAIC_FIELD_H_

#include <vector>

#include "multijoint/real_algebraic.h"
#include "multijoint/unipoly.h"

namespace multijoint {

// Arithmetic in Q(alpha) for a real algebraic alpha. Elements are
// polynomials in t read at t = alpha. The working modulus starts as the
// defining polynomial of alpha and shrinks to the factor containing alpha
// whenever a zero test splits it, so no factorization is ever needed.
class AlgebraicField {
 public:
  using Elem = UniPoly;

  explicit AlgebraicField(RealAlgebraic alpha);

  const RealAlgebraic& alpha() const { return alpha_; }
  const UniPoly& modulus() const { return modulus_; }

  Elem Generator() const { return Reduce(UniPoly::Linear(0, 1)); }
  Elem Reduce(const UniPoly& a) const;
  Elem Mul(const Elem& a, const Elem& b) const { return Reduce(a * b); }

  bool IsZero(const Elem& a);
  int Sign(const Elem& a);
  // Requires !IsZero(a).
  Elem Inverse(const Elem& a);

 private:
  RealAlgebraic alpha_;
  UniPoly modulus_;
};

// Polynomial in s over Q(alpha), ascending coefficients.
using FieldPoly = std::vector<UniPoly>;

// Drops leading coefficients that vanish at alpha.
void TrimFieldPoly(FieldPoly& p, AlgebraicField& field);
FieldPoly FieldPolyRem(FieldPoly a, const FieldPoly& b, AlgebraicField& field);
// Monic gcd; both inputs trimmed.
FieldPoly FieldPolyGcd(FieldPoly a, FieldPoly b, AlgebraicField& field);
FieldPoly FieldPolyDerivative(const FieldPoly& p, AlgebraicField& field);
// Removes every factor (s - root) from p.
FieldPoly DivideOutRoot(FieldPoly p, const UniPoly& root, AlgebraicField& field);
// Distinct real roots of a nonzero trimmed polynomial over Q(alpha).
int CountRealRoots(const FieldPoly& p, AlgebraicField& field);

}  // namespace multijoint

#endif  // MULTIJOINT_ALGEBRAIC_FIELD_H_
