#include "multijoint/curve.h"

#include <algorithm>

#include "multijoint/errors.h"

namespace multijoint {

ParamCurve::ParamCurve(UniPoly x, UniPoly y, UniPoly z, int degree_bound)
    : c_{std::move(x), std::move(y), std::move(z)}, degree_bound_(degree_bound) {
  if (degree_bound_ < 1) throw ValidationError("curve degree bound must be positive");
  if (std::all_of(c_.begin(), c_.end(), [](const UniPoly& p) { return p.IsConstant(); })) {
    throw ValidationError("curve components are all constant");
  }
  if (degree() > degree_bound_) {
    throw ValidationError("curve degree " + std::to_string(degree()) +
                          " exceeds bound " + std::to_string(degree_bound_));
  }
}

ParamCurve ParamCurve::FromLine(const Line3& line) {
  const Point3& b = line.base();
  const Dir3& d = line.dir();
  return ParamCurve(UniPoly::Linear(b.x, Rational(d[0])), UniPoly::Linear(b.y, Rational(d[1])),
                    UniPoly::Linear(b.z, Rational(d[2])), 1);
}

int ParamCurve::degree() const {
  return std::max({c_[0].degree(), c_[1].degree(), c_[2].degree(), 0});
}

Point3 ParamCurve::At(const Rational& t) const { return {c_[0](t), c_[1](t), c_[2](t)}; }

std::array<UniPoly, 3> ParamCurve::Derivative() const {
  return {c_[0].Derivative(), c_[1].Derivative(), c_[2].Derivative()};
}

bool operator<(const ParamCurve& a, const ParamCurve& b) {
  for (int i = 0; i < 3; ++i) {
    const auto& ca = a.c_[i].coeffs();
    const auto& cb = b.c_[i].coeffs();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    for (size_t k = 0; k < ca.size(); ++k) {
      if (ca[k] != cb[k]) return ca[k] < cb[k];
    }
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const ParamCurve& c) {
  return os << "(" << c.component(0) << ", " << c.component(1) << ", " << c.component(2) << ")";
}

}  // namespace multijoint
