#include "json_codec.h"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "multijoint/errors.h"
#include "multijoint/sturm.h"

namespace multijoint::internal {
namespace {

[[noreturn]] void Bad(std::string_view what, const std::string& why) {
  throw ValidationError(std::string(what) + ": " + why);
}

std::string Child(std::string_view what, std::string_view key) {
  return std::string(what) + "." + std::string(key);
}

std::string Child(std::string_view what, size_t i) {
  return std::string(what) + "[" + std::to_string(i) + "]";
}

const Json& Field(const Json& obj, std::string_view what, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) Bad(what, std::string("missing field '") + key + "'");
  return *it;
}

const Json& ArrayOf(const Json& j, std::string_view what, size_t size) {
  if (!j.is_array()) Bad(what, "expected an array");
  if (size != 0 && j.size() != size) Bad(what, "expected " + std::to_string(size) + " entries");
  return j;
}

}  // namespace

Json ParseJson(std::string_view text, std::string_view context) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string(context) + ": " + e.what());
  }
}

void CheckKeys(const Json& obj, std::string_view what,
               std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) Bad(what, "expected an object");
  for (const auto& item : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
      Bad(what, "unknown field '" + item.key() + "'");
    }
  }
}

void CheckSchema(const Json& obj, std::string_view what) {
  if (!obj.is_object()) Bad(what, "expected an object");
  const Json& s = Field(obj, what, "schema");
  if (!s.is_number_integer() || s.get<int64_t>() != 1) Bad(what, "unsupported schema (want 1)");
}

Json RationalToJson(const Rational& r) { return ToString(r); }

Rational RationalFromJson(const Json& j, std::string_view what) {
  if (j.is_string()) {
    try {
      return ParseRational(j.get<std::string>());
    } catch (const ValidationError& e) {
      Bad(what, e.what());
    }
  }
  if (j.is_number_unsigned()) return Rational(Integer(std::to_string(j.get<uint64_t>())));
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<int64_t>())));
  Bad(what, "expected a \"num/den\" string or an integer");
}

int64_t IntFromJson(const Json& j, std::string_view what, int64_t lo, int64_t hi) {
  if (!j.is_number_integer()) Bad(what, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<uint64_t>() > static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
    Bad(what, "out of range");
  }
  const int64_t v = j.get<int64_t>();
  if (v < lo || v > hi) {
    Bad(what, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

uint64_t SeedFromJson(const Json& j, std::string_view what) {
  if (j.is_number_unsigned()) return j.get<uint64_t>();
  if (j.is_number_integer() && j.get<int64_t>() >= 0) return j.get<int64_t>();
  // Seeds above 2^53 survive JSON tooling only as strings.
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (!s.empty() && s.size() <= 20 &&
        std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      const Integer v(s, 10);
      if (v <= Integer(std::to_string(std::numeric_limits<uint64_t>::max()))) {
        return std::stoull(s);
      }
    }
  }
  Bad(what, "expected a non-negative 64-bit integer");
}

Json PointToJson(const Point3& p) {
  return Json::array({RationalToJson(p.x), RationalToJson(p.y), RationalToJson(p.z)});
}

Point3 PointFromJson(const Json& j, std::string_view what) {
  ArrayOf(j, what, 3);
  return {RationalFromJson(j[0], Child(what, 0)), RationalFromJson(j[1], Child(what, 1)),
          RationalFromJson(j[2], Child(what, 2))};
}

Json LineToJson(const Line3& l) {
  Json dir = Json::array();
  for (int i = 0; i < 3; ++i) dir.push_back(RationalToJson(Rational(l.dir()[i])));
  return Json{{"base", PointToJson(l.base())}, {"dir", std::move(dir)}};
}

Line3 LineFromJson(const Json& j, std::string_view what) {
  CheckKeys(j, what, {"base", "dir"});
  const Point3 base = PointFromJson(Field(j, what, "base"), Child(what, "base"));
  const Point3 dir = PointFromJson(Field(j, what, "dir"), Child(what, "dir"));
  try {
    return MakeLine(base, dir.x, dir.y, dir.z);
  } catch (const ZeroDirection&) {
    Bad(what, "zero direction");
  }
}

Json UniPolyToJson(const UniPoly& u) {
  Json out = Json::array();
  for (const auto& c : u.coeffs()) out.push_back(RationalToJson(c));
  return out;
}

UniPoly UniPolyFromJson(const Json& j, std::string_view what) {
  ArrayOf(j, what, 0);
  std::vector<Rational> c;
  for (size_t i = 0; i < j.size(); ++i) c.push_back(RationalFromJson(j[i], Child(what, i)));
  return UniPoly(std::move(c));
}

Json TriPolyToJson(const TriPoly& p) {
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return GradedLexLess(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e[0], e[1], e[2], RationalToJson(c)}));
  return out;
}

TriPoly TriPolyFromJson(const Json& j, std::string_view what) {
  ArrayOf(j, what, 0);
  TriPoly p;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string w = Child(what, i);
    ArrayOf(j[i], w, 4);
    Exponent e;
    for (int v = 0; v < 3; ++v) e[v] = static_cast<int>(IntFromJson(j[i][v], w, 0, 1 << 16));
    p += TriPoly::Term(e, RationalFromJson(j[i][3], w));
  }
  return p;
}

Json CurveToJson(const ParamCurve& c) {
  return Json{{"x", UniPolyToJson(c.component(0))},
              {"y", UniPolyToJson(c.component(1))},
              {"z", UniPolyToJson(c.component(2))},
              {"b", c.degree_bound()}};
}

ParamCurve CurveFromJson(const Json& j, std::string_view what, int default_bound) {
  CheckKeys(j, what, {"x", "y", "z", "b"});
  std::array<UniPoly, 3> comp;
  const char* names[3] = {"x", "y", "z"};
  int degree = 0;
  for (int i = 0; i < 3; ++i) {
    comp[i] = UniPolyFromJson(Field(j, what, names[i]), Child(what, names[i]));
    degree = std::max(degree, comp[i].degree());
  }
  int b = default_bound >= 0 ? default_bound : degree;
  if (j.contains("b")) b = static_cast<int>(IntFromJson(j["b"], Child(what, "b"), 1, 64));
  try {
    return ParamCurve(comp[0], comp[1], comp[2], b);
  } catch (const ValidationError& e) {
    Bad(what, e.what());
  }
}

Json RealAlgebraicToJson(const RealAlgebraic& a) {
  if (a.is_rational()) return RationalToJson(a.rational());
  return Json{{"poly", UniPolyToJson(a.poly())},
              {"lo", RationalToJson(a.lo())},
              {"hi", RationalToJson(a.hi())}};
}

RealAlgebraic RealAlgebraicFromJson(const Json& j, std::string_view what) {
  if (!j.is_object()) return RationalFromJson(j, what);
  CheckKeys(j, what, {"poly", "lo", "hi"});
  const UniPoly poly = UniPolyFromJson(Field(j, what, "poly"), Child(what, "poly"));
  const Rational lo = RationalFromJson(Field(j, what, "lo"), Child(what, "lo"));
  const Rational hi = RationalFromJson(Field(j, what, "hi"), Child(what, "hi"));
  if (poly.degree() < 1) Bad(what, "defining polynomial must be nonconstant");
  if (!(lo < hi)) Bad(what, "need lo < hi");
  const UniPoly sf = SquareFreePart(poly);
  if (Sign(sf(lo)) == 0 || Sign(sf(hi)) == 0 || SturmRootsInInterval(sf, lo, hi) != 1) {
    Bad(what, "interval does not isolate exactly one root");
  }
  return RealAlgebraic::FromIsolated(poly, lo, hi);
}

Json AlgebraicPointToJson(const AlgebraicPoint3& p) {
  if (p.is_rational()) return PointToJson(p.ToPoint3());
  return Json::array(
      {RealAlgebraicToJson(p.x), RealAlgebraicToJson(p.y), RealAlgebraicToJson(p.z)});
}

Json LineFamiliesToJson(const LineFamilies& f) {
  Json fams = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json fam = Json::array();
    for (const auto& l : f[i]) fam.push_back(LineToJson(l));
    fams.push_back(std::move(fam));
  }
  return Json{{"schema", 1}, {"families", std::move(fams)}};
}

LineFamilies LineFamiliesFromJson(const Json& j) {
  const std::string what = "line families";
  CheckSchema(j, what);
  CheckKeys(j, what, {"schema", "families"});
  const Json& fams = ArrayOf(Field(j, what, "families"), Child(what, "families"), 3);
  std::array<std::vector<Line3>, 3> out;
  for (int i = 0; i < 3; ++i) {
    const std::string w = Child(Child(what, "families"), i);
    ArrayOf(fams[i], w, 0);
    for (size_t k = 0; k < fams[i].size(); ++k) out[i].push_back(LineFromJson(fams[i][k], Child(w, k)));
  }
  return LineFamilies(std::move(out));
}

Json CurveFamiliesToJson(const CurveFamilies& f) {
  Json fams = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json fam = Json::array();
    for (const auto& c : f[i]) fam.push_back(CurveToJson(c));
    fams.push_back(std::move(fam));
  }
  return Json{{"schema", 1}, {"families", std::move(fams)}};
}

CurveFamilies CurveFamiliesFromJson(const Json& j, int default_bound) {
  const std::string what = "curve families";
  CheckSchema(j, what);
  CheckKeys(j, what, {"schema", "families"});
  const Json& fams = ArrayOf(Field(j, what, "families"), Child(what, "families"), 3);
  std::array<std::vector<ParamCurve>, 3> out;
  for (int i = 0; i < 3; ++i) {
    const std::string w = Child(Child(what, "families"), i);
    ArrayOf(fams[i], w, 0);
    for (size_t k = 0; k < fams[i].size(); ++k) {
      out[i].push_back(CurveFromJson(fams[i][k], Child(w, k), default_bound));
    }
  }
  return CurveFamilies(std::move(out));
}

Json PartitionToJson(const Partition& p) {
  Json rounds = Json::array();
  for (const auto& r : p.round_polys) rounds.push_back(TriPolyToJson(r));
  Json out{{"schema", 1},
           {"rounds", p.schedule.rounds},
           {"degrees", p.schedule.degrees},
           {"total_degree", p.schedule.total_degree},
           {"eps", RationalToJson(p.eps)},
           {"seed", p.seed},
           {"round_polys", std::move(rounds)}};
  if (!p.cube_planes.empty()) {
    Json planes = Json::array();
    for (const auto& c : p.cube_planes) planes.push_back(TriPolyToJson(c));
    out["cube"] = Json{{"lo", RationalToJson(p.cube_lo)},
                       {"hi", RationalToJson(p.cube_hi)},
                       {"planes", std::move(planes)}};
  }
  return out;
}

Partition PartitionFromJson(const Json& j) {
  const std::string what = "partition";
  CheckSchema(j, what);
  CheckKeys(j, what,
            {"schema", "rounds", "degrees", "total_degree", "eps", "seed", "round_polys", "cube"});
  Partition p;
  const int rounds = static_cast<int>(IntFromJson(Field(j, what, "rounds"), Child(what, "rounds"),
                                                  1, DegreeSchedule::kMaxRounds));
  p.schedule = DegreeSchedule::ForRounds(rounds);
  p.eps = RationalFromJson(Field(j, what, "eps"), Child(what, "eps"));
  p.seed = SeedFromJson(Field(j, what, "seed"), Child(what, "seed"));
  if (j.contains("degrees") && j["degrees"] != Json(p.schedule.degrees)) {
    Bad(what, "degrees disagree with the schedule for " + std::to_string(rounds) + " rounds");
  }
  const Json& polys = ArrayOf(Field(j, what, "round_polys"), Child(what, "round_polys"), rounds);
  p.product = TriPoly::Constant(1);
  for (int r = 0; r < rounds; ++r) {
    TriPoly q = TriPolyFromJson(polys[r], Child(Child(what, "round_polys"), r));
    if (q.IsZero() || q.degree() > p.schedule.degrees[r]) {
      Bad(what, "round polynomial " + std::to_string(r + 1) + " is zero or exceeds its degree");
    }
    p.product *= q;
    p.round_polys.push_back(std::move(q));
  }
  if (j.contains("cube")) {
    const std::string w = Child(what, "cube");
    const Json& c = j["cube"];
    CheckKeys(c, w, {"lo", "hi", "planes"});
    p.cube_lo = RationalFromJson(Field(c, w, "lo"), Child(w, "lo"));
    p.cube_hi = RationalFromJson(Field(c, w, "hi"), Child(w, "hi"));
    const Json& planes = ArrayOf(Field(c, w, "planes"), Child(w, "planes"), 6);
    for (size_t k = 0; k < 6; ++k) {
      TriPoly q = TriPolyFromJson(planes[k], Child(Child(w, "planes"), k));
      if (q.degree() != 1) Bad(w, "cube planes must have degree 1");
      p.product *= q;
      p.cube_planes.push_back(std::move(q));
    }
  }
  return p;
}

}  // namespace multijoint::internal
