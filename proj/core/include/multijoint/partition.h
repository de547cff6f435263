#ifndef MULTIJOINT_PARTITION_H_
#define MULTIJOINT_PARTITION_H_

#include <cstdint>
#include <map>
#include <vector>

#include "multijoint/curve.h"
#include "multijoint/geometry.h"
#include "multijoint/rational.h"
#include "multijoint/tripoly.h"

namespace multijoint {

// Number of monomials of total degree 1..d in three variables.
int LiftDimension(int d);

struct DegreeSchedule {
  int rounds = 0;
  // degrees[j-1] = min{d : LiftDimension(d) >= 2^(j-1)}, enough to bisect
  // the up to 2^(j-1) classes present in round j.
  std::vector<int> degrees;
  int total_degree = 0;

  // Throws ValidationError unless 1 <= rounds <= kMaxRounds.
  static DegreeSchedule ForRounds(int rounds);
  // total_degree / 2^(rounds/3); advisory.
  double c0() const;
  // total_degree <= 8 * 2^(rounds/3), decided exactly as
  // total_degree^3 <= 512 * 2^rounds.
  bool WithinCubeRootBound() const;

  static constexpr int kMaxRounds = 15;
};

// Values of the monomials of degree 1..d at x in graded-lex order
// x, y, z, x^2, xy, xz, y^2, yz, z^2, ...
std::vector<Rational> VeroneseLift(const Point3& x, int d);
// Exponents in the same order.
std::vector<Exponent> LiftExponents(int d);

// Largest open-side count allowed for a set of size s: floor((1/2 + eps) s).
int64_t SideCap(int64_t s, const Rational& eps);

struct BisectOptions {
  int restarts = 64;
  // Projection iterations per restart before pins are added.
  int median_iterations = 60;
  // Further iterations that may pin boundary points to the zero set.
  int pin_iterations = 40;
};

// A nonzero polynomial of degree <= d such that for every set with at least
// two points, each open side holds at most SideCap(|S|, eps) of its points.
// Verified exactly. Throws ValidationError when there are more sets than
// LiftDimension(d) and BisectionFailed after the restart budget.
TriPoly BisectSets(const std::vector<std::vector<Point3>>& sets, int d, const Rational& eps,
                   uint64_t seed, const BisectOptions& options = {});

using CellLabel = std::vector<int8_t>;  // +1 / -1 per round

struct Partition {
  DegreeSchedule schedule;
  Rational eps;
  uint64_t seed = 0;
  std::vector<TriPoly> round_polys;
  // Face planes added by AugmentWithCube, empty otherwise.
  std::vector<TriPoly> cube_planes;
  // Cube [lo, hi]^3 before shifts; valid when cube_planes is non-empty.
  Rational cube_lo, cube_hi;
  TriPoly product;
};

struct CellLabelResult {
  bool on_z = false;
  CellLabel label;  // empty when on_z
};

// Signs of the round polynomials at x; on Z when any round polynomial or
// cube plane vanishes there.
CellLabelResult CellLabelOf(const Partition& part, const Point3& x);

struct CellHistogram {
  std::map<CellLabel, int64_t> counts;
  int64_t on_z = 0;
  int64_t max_count() const;
};

CellHistogram MakeCellHistogram(const Partition& part, const std::vector<Point3>& points);

// Round j bisects every sign class of size >= 2 left by rounds 1..j-1 with a
// polynomial of degree schedule.degrees[j-1]. Duplicate points are merged.
// Afterwards each class holds at most |points| (1/2 + eps)^rounds points or
// a single point. Throws ValidationError for empty input or bad rounds and
// BisectionFailed from a round.
Partition GkPartition(const std::vector<Point3>& points, int rounds, const Rational& eps,
                      uint64_t seed, const BisectOptions& options = {});

// Exact form of the occupancy guarantee: count <= n (1/2 + eps)^rounds.
bool WithinOccupancyBound(int64_t count, int64_t n, const Rational& eps, int rounds);

// Multiplies the product by the six face planes of an axis-aligned cube
// [lo, hi]^3 with lo = min coordinate - 2 and hi = max coordinate + 2 over
// the points (the cube [-2, 2]^3 for no points). A face is moved outward by
// 1/2, 1/4, ... until no given line lies in its plane and no given curve
// restricts to zero on it.
Partition AugmentWithCube(const Partition& part, const std::vector<Point3>& points,
                          const std::vector<Line3>& lines,
                          const std::vector<ParamCurve>& curves);

}  // namespace multijoint

#endif  // MULTIJOINT_PARTITION_H_
