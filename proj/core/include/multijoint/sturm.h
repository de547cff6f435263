#ifndef MULTIJOINT_STURM_H_
#define MULTIJOINT_STURM_H_

#include <vector>

#include "multijoint/rational.h"
#include "multijoint/unipoly.h"

namespace multijoint {

// Signed remainder sequence u, u', -rem(...), ... divided through by
// gcd(u, u'), so counts are exact at any endpoint, roots included. Members
// are scaled by positive rationals to keep coefficients integral.
class SturmSequence {
 public:
  // Throws ZeroPolynomial.
  explicit SturmSequence(const UniPoly& u);

  int VariationsAt(const Rational& x) const;
  int VariationsAtNegInf() const;
  int VariationsAtPosInf() const;

  // Number of distinct real roots.
  int CountAll() const { return VariationsAtNegInf() - VariationsAtPosInf(); }
  // Number of distinct real roots in the half-open interval (a, b], a < b.
  int CountIn(const Rational& a, const Rational& b) const;

  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

// Distinct real roots of u over all of R. Throws ZeroPolynomial.
int SturmDistinctRealRoots(const UniPoly& u);
// Distinct real roots in (a, b]. Throws ZeroPolynomial.
int SturmRootsInInterval(const UniPoly& u, const Rational& a, const Rational& b);

// Open interval (lo, hi) holding exactly one distinct root of u, with u
// nonzero at both endpoints.
struct IsolatingInterval {
  Rational lo, hi;
};

// Disjoint isolating intervals for all distinct real roots, ascending.
std::vector<IsolatingInterval> IsolateRealRoots(const UniPoly& u);

}  // namespace multijoint

#endif  // MULTIJOINT_STURM_H_
