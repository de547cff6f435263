#ifndef MULTIJOINT_GENERATORS_H_
#define MULTIJOINT_GENERATORS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "multijoint/curve.h"
#include "multijoint/geometry.h"
#include "multijoint/incidence.h"
#include "multijoint/rng.h"

namespace multijoint {

// Axis-parallel lines through {0..n-1}^3: family 1 is parallel to the x-axis,
// family 2 to y, family 3 to z. L_i = n^2 and the multijoints are the n^3
// grid points.
LineFamilies GridConfig(int n);

struct BushConfig {
  LineFamilies families;
  std::vector<Point3> centers;
};

// m centers on a scaled moment curve; through each, n_i lines of family i
// whose directions make every cross-family triple at that center span. No
// line passes through a second center. Throws GenericityFailure when the
// rejection budget runs out and ValidationError for bad sizes.
BushConfig MakeBushConfig(int n1, int n2, int n3, int m, uint64_t seed);

// Lines through two distinct points of {-range..range}^3, deduplicated
// within each family, L_i lines each.
LineFamilies RandomConfig(int l1, int l2, int l3, uint64_t seed, int range = 2);

enum class DegenerateKind { kCoplanar, kConcurrentCoplanar, kDuplicated };

// Throws ValidationError for an unknown name.
DegenerateKind ParseDegenerateKind(const std::string& name);
std::string ToString(DegenerateKind kind);

// kCoplanar: nine lines of z = 0, three per family. kConcurrentCoplanar:
// three lines per family through the origin, all in z = 0. kDuplicated: the
// n = 2 grid with every line listed twice (deduplicated on construction).
LineFamilies DegenerateConfig(DegenerateKind kind);

// Curve with components of degree <= degree_bound and small integer
// coefficients; at least one component has degree exactly degree_bound.
ParamCurve RandomCurve(Rng& rng, int degree_bound, int coeff_range = 3);

}  // namespace multijoint

#endif  // MULTIJOINT_GENERATORS_H_
