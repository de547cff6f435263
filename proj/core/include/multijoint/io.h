#ifndef MULTIJOINT_IO_H_
#define MULTIJOINT_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "multijoint/curvegeom.h"
#include "multijoint/geometry.h"
#include "multijoint/incidence.h"
#include "multijoint/partition.h"

namespace multijoint {

// JSON text formats, all carrying "schema": 1 at the top level. Rationals
// are "num/den" strings, lines {"base": [..], "dir": [..]}, curves
// {"x": [..], "y": [..], "z": [..], "b": bound} with ascending coefficients,
// polynomials lists of [ex, ey, ez, "num/den"] terms. Output is compact
// with sorted keys; parsers throw ValidationError with the failing field.

std::string SerializeLineFamilies(const LineFamilies& f);
LineFamilies ParseLineFamilies(std::string_view text);

// Curves without a "b" field get `default_bound`, or their own degree when
// it is negative.
std::string SerializeCurveFamilies(const CurveFamilies& f);
CurveFamilies ParseCurveFamilies(std::string_view text, int default_bound = -1);

// Schedule, eps, seed, round polynomials and the cube when augmented. The
// product is recomputed on parsing.
std::string SerializePartition(const Partition& p);
Partition ParsePartition(std::string_view text);

// Sorted, deduplicated JSON array of points.
std::string SerializePoints(std::vector<Point3> points);
// Rational coordinates as "num/den"; irrational ones as
// {"poly": [..], "lo": .., "hi": ..}.
std::string SerializeAlgebraicPoints(std::vector<AlgebraicPoint3> points);

// Whole-file helpers; throw IoError naming the path.
std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, std::string_view text);

}  // namespace multijoint

#endif  // MULTIJOINT_IO_H_
