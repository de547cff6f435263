#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "multijoint/curvegeom.h"
#include "multijoint/errors.h"
#include "multijoint/generators.h"
#include "multijoint/incidence.h"

namespace multijoint {
namespace {

const UniPoly kT = UniPoly::Linear(0, 1);
UniPoly K(const Rational& c) { return UniPoly::Constant(c); }
ParamCurve C(UniPoly x, UniPoly y, UniPoly z) {
  const int b = std::max({x.degree(), y.degree(), z.degree(), 1});
  return ParamCurve(std::move(x), std::move(y), std::move(z), b);
}
Point3 P(const Rational& x, const Rational& y, const Rational& z) { return {x, y, z}; }
AlgebraicPoint3 A(const Rational& x, const Rational& y, const Rational& z) {
  return AlgebraicPoint3::FromPoint3(P(x, y, z));
}

std::vector<Dir3> RationalDirs(const std::vector<AlgebraicDir>& dirs) {
  std::vector<Dir3> out;
  for (const auto& d : dirs) {
    EXPECT_TRUE(d.is_rational());
    out.push_back(d.ToDir3());
  }
  return out;
}

// Exact check that p lies on c, by rational evaluation when the parameter
// is rational and by exact algebraic evaluation otherwise.
bool OnCurve(const ParamCurve& c, const AlgebraicPoint3& p) {
  const auto params = ParametersAt(c, p);
  for (const auto& t : params) {
    for (int i = 0; i < 3; ++i) {
      if (t.is_rational() && p[i].is_rational()) {
        if (c.component(i)(t.rational()) != p[i].rational()) return false;
      } else if (EvaluateAt(c.component(i), t) != p[i]) {
        return false;
      }
    }
  }
  return !params.empty();
}

UniPoly RandomPoly(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> c(-range, range);
  std::vector<Rational> co(degree + 1);
  for (auto& x : co) x = c(rng);
  return UniPoly(std::move(co));
}

ParamCurve RandomCurveOf(std::mt19937_64& rng, int max_degree) {
  while (true) {
    std::uniform_int_distribution<int> d(1, max_degree);
    UniPoly x = RandomPoly(rng, d(rng), 3), y = RandomPoly(rng, d(rng), 3),
            z = RandomPoly(rng, d(rng), 3);
    if (x.IsConstant() && y.IsConstant() && z.IsConstant()) continue;
    return ParamCurve(x, y, z, max_degree);
  }
}

TEST(TangentDirsTest, Examples) {
  const ParamCurve twisted = C(kT, kT * kT, kT * kT * kT);
  EXPECT_EQ(RationalDirs(TangentDirsAt(twisted, P(0, 0, 0))),
            std::vector<Dir3>{Dir3::FromInts(1, 0, 0)});
  // Node at the origin from t = 1 and t = -1: c'(+-1) = (+-2, 2, 0).
  const ParamCurve nodal = C(kT * kT - K(1), kT * (kT * kT - K(1)), K(0));
  EXPECT_EQ(RationalDirs(TangentDirsAt(nodal, P(0, 0, 0))),
            (std::vector<Dir3>{Dir3::FromInts(1, -1, 0), Dir3::FromInts(1, 1, 0)}));
  const ParamCurve cusp = C(kT * kT, kT * kT * kT, K(0));
  EXPECT_TRUE(TangentDirsAt(cusp, P(0, 0, 0)).empty());
  EXPECT_EQ(TangentDirsAt(cusp, P(1, 1, 0)).size(), 1u);
  EXPECT_TRUE(TangentDirsAt(twisted, P(1, 2, 3)).empty());
}

TEST(TangentDirsTest, IrrationalParameterAtRationalPoint) {
  // (t^2, t^3 - 2t, 0) passes (2, 0, 0) at t = +-sqrt(2) with tangents
  // (+-2 sqrt(2), 4, 0), i.e. directions (1, +-sqrt(2), 0).
  const ParamCurve c = C(kT * kT, kT * kT * kT - K(2) * kT, K(0));
  const auto dirs = TangentDirsAt(c, P(2, 0, 0));
  ASSERT_EQ(dirs.size(), 2u);
  for (const auto& d : dirs) {
    EXPECT_FALSE(d.is_rational());
    EXPECT_EQ(d[0], RealAlgebraic(1));
    EXPECT_EQ(EvaluateAt(UniPoly{0, 0, 1}, d[1]), RealAlgebraic(2));
  }
}

TEST(TangentDirsTest, InvariantUnderAffineReparametrization) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const ParamCurve c = RandomCurveOf(rng, 3);
    const UniPoly phi = UniPoly::Linear(static_cast<long>(trial % 5) - 2, trial % 3 + 1);
    const ParamCurve r(c.component(0).Compose(phi), c.component(1).Compose(phi),
                       c.component(2).Compose(phi), c.degree_bound());
    for (int t = -2; t <= 2; ++t) {
      const Point3 x = c.At(t);
      EXPECT_EQ(TangentDirsAt(c, x), TangentDirsAt(r, x));
    }
  }
}

TEST(CurveIntersectionTest, Examples) {
  const auto r = CurveCurveIntersections(C(kT, kT * kT, K(0)), C(kT, kT, K(0)));
  ASSERT_EQ(r.kind, CurveIntersection::Kind::kPoints);
  EXPECT_EQ(r.points, (std::vector<AlgebraicPoint3>{A(0, 0, 0), A(1, 1, 0)}));
  const ParamCurve twisted = C(kT, kT * kT, kT * kT * kT);
  EXPECT_EQ(CurveCurveIntersections(twisted, twisted).kind, CurveIntersection::Kind::kIdentical);
  const auto none = CurveCurveIntersections(C(kT, K(0), K(0)), C(K(0), kT, K(1)));
  EXPECT_EQ(none.kind, CurveIntersection::Kind::kPoints);
  EXPECT_TRUE(none.points.empty());
}

TEST(CurveIntersectionTest, IrrationalPoints) {
  const ParamCurve a = C(kT, kT * kT, K(0));
  const ParamCurve b = C(kT, K(2), K(0));
  const auto r = CurveCurveIntersections(a, b);
  ASSERT_EQ(r.points.size(), 2u);
  for (const auto& p : r.points) {
    EXPECT_FALSE(p.is_rational());
    EXPECT_TRUE(OnCurve(a, p));
    EXPECT_TRUE(OnCurve(b, p));
  }
  EXPECT_TRUE(r.points[0] < r.points[1]);
}

TEST(CurveIntersectionTest, SharedCurveIsReported) {
  EXPECT_THROW(CurveCurveIntersections(C(kT, kT * kT, K(0)), C(-kT, kT * kT, K(0))),
               NotZeroDimensional);
  EXPECT_THROW(CurveCurveIntersections(C(kT, K(0), K(0)), C(K(2) * kT + K(1), K(0), K(0))),
               NotZeroDimensional);
}

TEST(CurveIntersectionTest, ConstructedCommonPoints) {
  std::mt19937_64 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const ParamCurve a = RandomCurveOf(rng, 3);
    // b passes a(s_k) at t = t_k by interpolation plus a random multiple of
    // (t - t_1)(t - t_2).
    const Rational s1 = static_cast<long>(trial % 3) - 1, s2 = 2, t1 = -2, t2 = Frac(1, 2);
    const Point3 p1 = a.At(s1), p2 = a.At(s2);
    const UniPoly vanish = (kT - K(t1)) * (kT - K(t2));
    std::array<UniPoly, 3> comps;
    for (int i = 0; i < 3; ++i) {
      const UniPoly interp = K(p1[i]) * (kT - K(t2)) * Rational(1 / (t1 - t2)) +
                             K(p2[i]) * (kT - K(t1)) * Rational(1 / (t2 - t1));
      comps[i] = interp + vanish * RandomPoly(rng, 1, 2);
    }
    if (comps[0].IsConstant() && comps[1].IsConstant() && comps[2].IsConstant()) continue;
    const ParamCurve b(comps[0], comps[1], comps[2], 3);
    CurveIntersection r;
    try {
      r = CurveCurveIntersections(a, b);
    } catch (const NotZeroDimensional&) {
      continue;
    }
    ASSERT_EQ(r.kind, CurveIntersection::Kind::kPoints);
    EXPECT_LE(static_cast<int>(r.points.size()), a.degree() * b.degree());
    for (const Point3& known : {p1, p2}) {
      EXPECT_TRUE(std::find(r.points.begin(), r.points.end(),
                            AlgebraicPoint3::FromPoint3(known)) != r.points.end());
    }
    for (const auto& p : r.points) {
      EXPECT_TRUE(OnCurve(a, p));
      EXPECT_TRUE(OnCurve(b, p));
    }
    // Swapping the roles of the curves gives the same set.
    EXPECT_EQ(CurveCurveIntersections(b, a).points, r.points);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(SelfCrossingsTest, Examples) {
  const ParamCurve nodal = C(kT * kT - K(1), kT * (kT * kT - K(1)), K(0));
  EXPECT_EQ(SelfCrossings(nodal), std::vector<AlgebraicPoint3>{A(0, 0, 0)});
  EXPECT_TRUE(SelfCrossings(C(kT, kT * kT, kT * kT * kT)).empty());
  EXPECT_TRUE(SelfCrossings(C(kT, K(0), K(0))).empty());
  // s = -t and t^3 = 3t meet at t = +-sqrt(3), both mapping to (3, 0, 0).
  EXPECT_EQ(SelfCrossings(C(kT * kT, kT * kT * kT - K(3) * kT, K(1))),
            std::vector<AlgebraicPoint3>{A(3, 0, 1)});
  // A cusp is not a crossing.
  EXPECT_TRUE(SelfCrossings(C(kT * kT, kT * kT * kT, K(0))).empty());
  EXPECT_TRUE(SelfCrossings(C(kT * kT * kT, K(1), K(2))).empty());
}

TEST(SelfCrossingsTest, DegenerateParametrizations) {
  EXPECT_THROW(SelfCrossings(C(kT * kT, kT * kT * kT * kT, K(0))), NotZeroDimensional);
  EXPECT_THROW(SelfCrossings(C(kT * kT, K(0), K(0))), NotZeroDimensional);
  EXPECT_THROW(SelfCrossings(C(kT * kT * kT - K(3) * kT, K(0), K(0))), NotZeroDimensional);
}

TEST(SelfCrossingsTest, PointsLieOnTwoBranches) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const ParamCurve c = RandomCurveOf(rng, 3);
    std::vector<AlgebraicPoint3> pts;
    try {
      pts = SelfCrossings(c);
    } catch (const NotZeroDimensional&) {
      continue;
    }
    for (const auto& p : pts) {
      const auto params = ParametersAt(c, p);
      EXPECT_GE(params.size(), 2u);
      EXPECT_LE(static_cast<int>(params.size()), c.degree());
    }
  }
}

CurveFamilies Fams(std::vector<ParamCurve> a, std::vector<ParamCurve> b, std::vector<ParamCurve> c) {
  return CurveFamilies({std::move(a), std::move(b), std::move(c)});
}

TEST(CurveMultijointsTest, Examples) {
  const auto axes = Fams({C(kT, K(0), K(0))}, {C(K(0), kT, K(0))}, {C(K(0), K(0), kT)});
  EXPECT_EQ(CurveMultijoints(axes), std::vector<AlgebraicPoint3>{A(0, 0, 0)});
  const auto flat = Fams({C(kT, kT * kT, K(0))}, {C(K(0), kT, kT)}, {C(kT, K(0), kT * kT)});
  EXPECT_TRUE(CurveMultijoints(flat).empty());
  const auto bent = Fams({C(kT, K(0), K(0))}, {C(K(0), kT, K(0))}, {C(kT * kT, kT * kT, kT)});
  EXPECT_EQ(CurveMultijoints(bent), std::vector<AlgebraicPoint3>{A(0, 0, 0)});
}

TEST(CurveMultijointsTest, IrrationalPoints) {
  // Both families meet the x-axis at (+-sqrt(2), 0, 0); tangents e1,
  // (1, 2 sqrt(2), 0) and (1, 0, 2 sqrt(2)) span.
  const auto f = Fams({C(kT, K(0), K(0))}, {C(kT, kT * kT - K(2), K(0))},
                      {C(kT, K(0), kT * kT - K(2))});
  const auto j = CurveMultijoints(f);
  ASSERT_EQ(j.size(), 2u);
  for (const auto& p : j) {
    EXPECT_FALSE(p.is_rational());
    EXPECT_EQ(EvaluateAt(UniPoly{0, 0, 1}, p.x), RealAlgebraic(2));
  }
  // The third family tangent to the plane z = 0 cannot span.
  const auto g = Fams({C(kT, K(0), K(0))}, {C(kT, kT * kT - K(2), K(0))},
                      {C(kT, K(2) * kT * kT - K(4), K(0))});
  EXPECT_TRUE(CurveMultijoints(g).empty());
}

TEST(CurveMultijointsTest, NodeGivesTwoTangents) {
  // The nodal cubic alone has tangents (1, 1, 0) and (1, -1, 0) at the
  // origin; with the z-axis and the x-axis the node is a multijoint.
  const ParamCurve nodal = C(kT * kT - K(1), kT * (kT * kT - K(1)), K(0));
  const auto f = Fams({C(kT, K(0), K(0))}, {nodal}, {C(K(0), K(0), kT)});
  EXPECT_EQ(CurveMultijoints(f), std::vector<AlgebraicPoint3>{A(0, 0, 0)});
  // The same curve in all three families spans only with three branches.
  const auto same = Fams({nodal}, {nodal}, {nodal});
  EXPECT_TRUE(CurveMultijoints(same).empty());
}

std::vector<AlgebraicPoint3> Lift(const std::vector<Point3>& pts) {
  std::vector<AlgebraicPoint3> out;
  for (const auto& p : pts) out.push_back(AlgebraicPoint3::FromPoint3(p));
  return out;
}

TEST(LinesAsCurvesTest, AgreesWithIncidence) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const int l1 = 2 + seed % 3, l2 = 2 + (seed / 3) % 3, l3 = 2 + (seed / 9) % 3;
    const LineFamilies f = RandomConfig(l1, l2, l3, seed);
    const CurveFamilies c = LinesAsCurves(f);
    EXPECT_EQ(CurveMultijoints(c), Lift(Multijoints(f))) << seed;
    for (const ThresholdQuery& q : {ThresholdQuery(1, 1, 1), ThresholdQuery(2, 1, 1),
                                    ThresholdQuery(1, 2, 2), ThresholdQuery(2, 2, 2)}) {
      EXPECT_EQ(CurveJThreshold(c, q), Lift(JThreshold(f, q))) << seed;
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const LineFamilies g = GridConfig(n);
    EXPECT_EQ(CurveMultijoints(LinesAsCurves(g)), Lift(Multijoints(g)));
  }
  for (auto kind : {DegenerateKind::kCoplanar, DegenerateKind::kConcurrentCoplanar,
                    DegenerateKind::kDuplicated}) {
    const LineFamilies d = DegenerateConfig(kind);
    EXPECT_EQ(CurveMultijoints(LinesAsCurves(d)), Lift(Multijoints(d)));
  }
}

TEST(CurveJThresholdTest, BushAndLimits) {
  const BushConfig bush = MakeBushConfig(3, 2, 2, 1, 5);
  const CurveFamilies c = LinesAsCurves(bush.families);
  const auto hit = CurveJThreshold(c, ThresholdQuery(3, 2, 2));
  EXPECT_EQ(hit, Lift(JThreshold(bush.families, ThresholdQuery(3, 2, 2))));
  EXPECT_EQ(hit, Lift({bush.centers[0]}));
  EXPECT_TRUE(CurveJThreshold(c, ThresholdQuery(4, 1, 1)).empty());
  EXPECT_EQ(CurveJThreshold(c, ThresholdQuery(1, 1, 1)), CurveMultijoints(c));
}

TEST(CurveFamiliesTest, DedupAndValidation) {
  const ParamCurve a = C(kT, kT * kT, K(0));
  using Arr = std::array<std::vector<ParamCurve>, 3>;
  const CurveFamilies f(Arr{{{a, a}, {a}, {C(K(0), K(0), kT)}}});
  EXPECT_EQ(f.size(0), 1);
  EXPECT_EQ(f.duplicates_removed(0), 1);
  EXPECT_EQ(f.degree_bound(), 2);
  EXPECT_THROW(CurveFamilies(Arr{{{a}, {}, {a}}}), ValidationError);
  EXPECT_NO_THROW(CurveFamilies(Arr{{{a}, {}, {a}}}, true));
}

}  // namespace
}  // namespace multijoint
