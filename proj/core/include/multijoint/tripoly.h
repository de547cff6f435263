#ifndef MULTIJOINT_TRIPOLY_H_
#define MULTIJOINT_TRIPOLY_H_

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "multijoint/geometry.h"
#include "multijoint/rational.h"

namespace multijoint {

// Exponents of x, y, z.
using Exponent = std::array<int, 3>;

// Sparse polynomial in Q[x, y, z]. Zero coefficients are never stored.
class TriPoly {
 public:
  TriPoly() = default;

  static TriPoly Constant(const Rational& c);
  // 0 -> x, 1 -> y, 2 -> z
  static TriPoly Variable(int var);
  static TriPoly Term(const Exponent& e, const Rational& c);
  static TriPoly FromTerms(const std::vector<std::pair<Exponent, Rational>>& terms);
  // a*x + b*y + c*z + d
  static TriPoly Affine(const Rational& a, const Rational& b, const Rational& c,
                        const Rational& d);

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  // Maximum total degree; -1 for zero.
  int degree() const;
  // Maximum exponent of one variable; -1 for zero.
  int degree_in(int var) const;
  bool IsZero() const { return terms_.empty(); }

  Rational Evaluate(const Point3& p) const;
  int SignAt(const Point3& p) const { return Sign(Evaluate(p)); }
  double EvaluateDouble(double x, double y, double z) const;

  TriPoly Partial(int var) const;
  TriPoly Pow(int e) const;

  // Positive rational multiple with coprime integer coefficients; the
  // coefficient of the graded-lex largest monomial is made positive.
  TriPoly PrimitiveInteger() const;
  // Positive rational multiple with coprime integer coefficients.
  TriPoly ContentFree() const;

  TriPoly operator-() const;
  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly& operator*=(const TriPoly& o);
  TriPoly& operator*=(const Rational& c);

  friend TriPoly operator+(TriPoly a, const TriPoly& b) { return a += b; }
  friend TriPoly operator-(TriPoly a, const TriPoly& b) { return a -= b; }
  friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
    TriPoly r = a;
    return r *= b;
  }
  friend TriPoly operator*(TriPoly a, const Rational& c) { return a *= c; }
  friend TriPoly operator*(const Rational& c, TriPoly a) { return a *= c; }
  friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

  std::string ToString() const;

 private:
  void AddTerm(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const TriPoly& p);

// Graded-lex comparison: total degree first, then exponents of x, y, z.
bool GradedLexLess(const Exponent& a, const Exponent& b);

}  // namespace multijoint

#endif  // MULTIJOINT_TRIPOLY_H_
