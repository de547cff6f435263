#ifndef MULTIJOINT_CURVE_H_
#define MULTIJOINT_CURVE_H_

#include <array>
#include <compare>
#include <ostream>

#include "multijoint/geometry.h"
#include "multijoint/unipoly.h"

namespace multijoint {

// t -> (x(t), y(t), z(t)) with rational polynomial components, not all
// constant, each of degree at most degree_bound.
class ParamCurve {
 public:
  // Throws ValidationError when every component is constant or a component
  // exceeds the degree bound.
  ParamCurve(UniPoly x, UniPoly y, UniPoly z, int degree_bound);

  // base + t * dir, degree bound 1.
  static ParamCurve FromLine(const Line3& line);

  const UniPoly& component(int i) const { return c_[i]; }
  const std::array<UniPoly, 3>& components() const { return c_; }
  int degree_bound() const { return degree_bound_; }
  // Maximum component degree.
  int degree() const;

  Point3 At(const Rational& t) const;
  std::array<UniPoly, 3> Derivative() const;

  friend bool operator==(const ParamCurve& a, const ParamCurve& b) { return a.c_ == b.c_; }
  // Arbitrary but fixed total order on the component coefficients.
  friend bool operator<(const ParamCurve& a, const ParamCurve& b);

 private:
  std::array<UniPoly, 3> c_;
  int degree_bound_;
};

std::ostream& operator<<(std::ostream& os, const ParamCurve& c);

}  // namespace multijoint

#endif  // MULTIJOINT_CURVE_H_
