#ifndef MULTIJOINT_CURVEGEOM_H_
#define MULTIJOINT_CURVEGEOM_H_

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "multijoint/curve.h"
#include "multijoint/geometry.h"
#include "multijoint/incidence.h"
#include "multijoint/real_algebraic.h"
#include "multijoint/transversal.h"

namespace multijoint {

// A point of R^3 with real algebraic coordinates. Equality and order are
// exact (lexicographic by x, y, z).
struct AlgebraicPoint3 {
  RealAlgebraic x, y, z;

  static AlgebraicPoint3 FromPoint3(const Point3& p) { return {p.x, p.y, p.z}; }
  const RealAlgebraic& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  bool is_rational() const { return x.is_rational() && y.is_rational() && z.is_rational(); }
  // Requires is_rational().
  Point3 ToPoint3() const { return {x.rational(), y.rational(), z.rational()}; }

  friend bool operator==(const AlgebraicPoint3& a, const AlgebraicPoint3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  friend bool operator<(const AlgebraicPoint3& a, const AlgebraicPoint3& b);
};

std::ostream& operator<<(std::ostream& os, const AlgebraicPoint3& p);

// A direction scaled so that its first nonzero component is 1. Parallel
// vectors of either orientation give equal directions.
class AlgebraicDir {
 public:
  const RealAlgebraic& operator[](int i) const { return c_[i]; }
  bool is_rational() const;
  // Requires is_rational().
  Dir3 ToDir3() const;

  // Direction of v(t); throws ZeroDirection when v(t) = 0.
  static AlgebraicDir OfVectorAt(const std::array<UniPoly, 3>& v, const RealAlgebraic& t);

  friend bool operator==(const AlgebraicDir& a, const AlgebraicDir& b) { return a.c_ == b.c_; }
  friend bool operator<(const AlgebraicDir& a, const AlgebraicDir& b) { return a.c_ < b.c_; }

 private:
  std::array<RealAlgebraic, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const AlgebraicDir& d);

// Real parameters t with c(t) = x, ascending.
std::vector<RealAlgebraic> ParametersAt(const ParamCurve& c, const AlgebraicPoint3& x);

// Directions of c'(t) over the parameters with c(t) = x and c'(t) != 0,
// sorted and distinct. Empty when c misses x or only passes it at cusps.
std::vector<AlgebraicDir> TangentDirsAt(const ParamCurve& c, const AlgebraicPoint3& x);
std::vector<AlgebraicDir> TangentDirsAt(const ParamCurve& c, const Point3& x);

struct CurveIntersection {
  enum class Kind { kIdentical, kPoints };
  Kind kind = Kind::kPoints;
  std::vector<AlgebraicPoint3> points;  // sorted; kPoints only
};

// kIdentical iff the component polynomials agree. Otherwise the exact set of
// common points, at most deg a * deg b of them. Throws NotZeroDimensional
// when the elimination leaves a curve of common solutions (for instance two
// parametrizations of one curve).
CurveIntersection CurveCurveIntersections(const ParamCurve& a, const ParamCurve& b);

// Points c(s) = c(t) with s != t, sorted. Throws NotZeroDimensional when
// such pairs form a curve (a parametrization that traces a piece twice).
std::vector<AlgebraicPoint3> SelfCrossings(const ParamCurve& c);

class CurveFamilies {
 public:
  CurveFamilies() = default;
  // Drops repeated curves within a family (logging a warning). Throws
  // ValidationError for an empty family unless `allow_empty`.
  explicit CurveFamilies(std::array<std::vector<ParamCurve>, 3> families,
                         bool allow_empty = false);

  const std::vector<ParamCurve>& operator[](int i) const { return fam_[i]; }
  int size(int i) const { return static_cast<int>(fam_[i].size()); }
  int duplicates_removed(int i) const { return dropped_[i]; }
  // Largest degree bound over all curves (0 when there are none).
  int degree_bound() const { return degree_bound_; }

 private:
  std::array<std::vector<ParamCurve>, 3> fam_;
  std::array<int, 3> dropped_{0, 0, 0};
  int degree_bound_ = 0;
};

// Each line as base + t dir.
CurveFamilies LinesAsCurves(const LineFamilies& f);

// Points where some curve of each family passes with tangents v1, v2, v3
// that span R^3. Candidates are intersections of curves from different
// families (self-crossings when such curves coincide). Sorted.
std::vector<AlgebraicPoint3> CurveMultijoints(const CurveFamilies& f);

// Points admitting subfamilies of sizes >= q[i] through it such that every
// choice of one curve per subfamily has spanning tangents at the point.
std::vector<AlgebraicPoint3> CurveJThreshold(const CurveFamilies& f, const ThresholdQuery& q,
                                             const SearchOptions& options = {});

}  // namespace multijoint

#endif  // MULTIJOINT_CURVEGEOM_H_
