#ifndef MULTIJOINT_SRC_JSON_CODEC_H_
#define MULTIJOINT_SRC_JSON_CODEC_H_

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "multijoint/curve.h"
#include "multijoint/curvegeom.h"
#include "multijoint/geometry.h"
#include "multijoint/incidence.h"
#include "multijoint/partition.h"
#include "multijoint/rational.h"
#include "multijoint/real_algebraic.h"
#include "multijoint/tripoly.h"
#include "multijoint/unipoly.h"

// nlohmann::json stores objects in a std::map, so dumps have sorted keys.
// Every decoder throws ValidationError naming the offending field.
namespace multijoint::internal {

using Json = nlohmann::json;

Json ParseJson(std::string_view text, std::string_view context);

// "num/den" strings; decoding also accepts JSON integers.
Json RationalToJson(const Rational& r);
Rational RationalFromJson(const Json& j, std::string_view what);

int64_t IntFromJson(const Json& j, std::string_view what, int64_t lo, int64_t hi);
uint64_t SeedFromJson(const Json& j, std::string_view what);

Json PointToJson(const Point3& p);
Point3 PointFromJson(const Json& j, std::string_view what);

// {"base": [...], "dir": [...]}; decoding canonicalizes.
Json LineToJson(const Line3& l);
Line3 LineFromJson(const Json& j, std::string_view what);

// Ascending coefficients.
Json UniPolyToJson(const UniPoly& u);
UniPoly UniPolyFromJson(const Json& j, std::string_view what);

// [[ex, ey, ez, "num/den"], ...] in graded-lex order.
Json TriPolyToJson(const TriPoly& p);
TriPoly TriPolyFromJson(const Json& j, std::string_view what);

// {"x": [...], "y": [...], "z": [...], "b": bound}. A missing "b" falls back
// to default_bound, and to the curve degree when that is negative.
Json CurveToJson(const ParamCurve& c);
ParamCurve CurveFromJson(const Json& j, std::string_view what, int default_bound);

// A rational as "num/den"; otherwise {"poly": [...], "lo": .., "hi": ..}
// with exactly one root of poly in the open interval.
Json RealAlgebraicToJson(const RealAlgebraic& a);
RealAlgebraic RealAlgebraicFromJson(const Json& j, std::string_view what);

Json AlgebraicPointToJson(const AlgebraicPoint3& p);

Json LineFamiliesToJson(const LineFamilies& f);
LineFamilies LineFamiliesFromJson(const Json& j);
Json CurveFamiliesToJson(const CurveFamilies& f);
CurveFamilies CurveFamiliesFromJson(const Json& j, int default_bound);

Json PartitionToJson(const Partition& p);
Partition PartitionFromJson(const Json& j);

// Rejects keys outside `allowed`.
void CheckKeys(const Json& obj, std::string_view what,
               std::initializer_list<std::string_view> allowed);
void CheckSchema(const Json& obj, std::string_view what);

}  // namespace multijoint::internal

#endif  // MULTIJOINT_SRC_JSON_CODEC_H_
