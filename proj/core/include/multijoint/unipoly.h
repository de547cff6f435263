#ifndef MULTIJOINT_UNIPOLY_H_
#define MULTIJOINT_UNIPOLY_H_

#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "multijoint/rational.h"

namespace multijoint {

// Dense univariate polynomial over Q, coefficients by ascending degree. The
// leading coefficient is nonzero; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly Constant(const Rational& c);
  static UniPoly Monomial(const Rational& c, int degree);
  // c0 + c1 t
  static UniPoly Linear(const Rational& c0, const Rational& c1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  bool IsConstant() const { return coeffs_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;
  double EvaluateDouble(double t) const;

  UniPoly Derivative() const;
  // this(inner(t))
  UniPoly Compose(const UniPoly& inner) const;
  UniPoly Monic() const;
  // Positive rational multiple with coprime integer coefficients and a
  // positive leading coefficient.
  UniPoly PrimitiveInteger() const;
  // Positive rational multiple with coprime integer coefficients; keeps sign.
  UniPoly ContentFree() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string ToString(char var = 't') const;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const UniPoly& p);

struct DivModResult {
  UniPoly quotient;
  UniPoly remainder;
};

// Euclidean division over Q. Throws ZeroPolynomial if b is zero.
DivModResult DivMod(const UniPoly& a, const UniPoly& b);
UniPoly Rem(const UniPoly& a, const UniPoly& b);
// Throws std::domain_error when b does not divide a.
UniPoly ExactQuotient(const UniPoly& a, const UniPoly& b);

// Monic gcd via the subresultant polynomial remainder sequence over Z.
// Gcd(0, 0) is 0.
UniPoly Gcd(const UniPoly& a, const UniPoly& b);

// Returns g = gcd(a, b) (monic) and s, t with s a + t b = g.
struct ExtendedGcdResult {
  UniPoly gcd, s, t;
};
ExtendedGcdResult ExtendedGcd(const UniPoly& a, const UniPoly& b);

// u / gcd(u, u'), made integer-primitive. Throws ZeroPolynomial.
UniPoly SquareFreePart(const UniPoly& u);

// A bound B with every real root strictly inside (-B, B).
Rational RootBound(const UniPoly& u);

// Enclosure of {u(t) : lo <= t <= hi} by Horner interval arithmetic.
std::pair<Rational, Rational> IntervalEvaluate(const UniPoly& u, const Rational& lo,
                                               const Rational& hi);

}  // namespace multijoint

#endif  // MULTIJOINT_UNIPOLY_H_
