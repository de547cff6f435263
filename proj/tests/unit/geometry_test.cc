#include <algorithm>
#include <array>
#include <random>

#include <gtest/gtest.h>

#include "multijoint/errors.h"
#include "multijoint/geometry.h"
#include "multijoint/rational.h"

namespace multijoint {
namespace {

Point3 P(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }
Line3 Axis(int i) {
  return CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(i == 0, i == 1, i == 2));
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ParseRational("6/4"), Frac(3, 2));
  EXPECT_EQ(ParseRational("-7"), Rational(-7));
  EXPECT_EQ(ParseRational("0/5"), Rational(0));
  EXPECT_EQ(ToString(Rational(0)), "0/1");
  EXPECT_EQ(ToString(Frac(-6, 4)), "-3/2");
  EXPECT_EQ(ToString(Rational(3)), "3/1");
  EXPECT_THROW(ParseRational("1/0"), ValidationError);
  EXPECT_THROW(ParseRational("abc"), ValidationError);
  EXPECT_THROW(ParseRational(""), ValidationError);
}

TEST(RationalTest, DyadicRoundIsExact) {
  EXPECT_EQ(DyadicRound(0.75, 2), Frac(3, 4));
  EXPECT_EQ(DyadicRound(0.3, 1), Frac(1, 2));
  EXPECT_EQ(DyadicRound(-0.25, 1), Frac(-1, 2));
  EXPECT_EQ(DyadicRound(0.1, 0), Rational(0));
}

TEST(RationalTest, SimplestRationalBetween) {
  EXPECT_EQ(SimplestRationalBetween(Frac(3, 10), Frac(2, 5)), Frac(1, 3));
  EXPECT_EQ(SimplestRationalBetween(Frac(-7, 3), Rational(-2)), Rational(-2));
  EXPECT_EQ(SimplestRationalBetween(Frac(1, 7), Frac(1, 7)), Frac(1, 7));
  EXPECT_EQ(SimplestRationalBetween(Frac(-1, 2), Frac(1, 3)), Rational(0));
}

TEST(CanonicalizeLineTest, XAxisFromShiftedPoint) {
  const Line3 l = CanonicalizeLine(P(5, 0, 0), Dir3::FromInts(2, 0, 0));
  EXPECT_EQ(l.base(), P(0, 0, 0));
  EXPECT_EQ(l.dir(), Dir3::FromInts(1, 0, 0));
}

TEST(CanonicalizeLineTest, SignNormalization) {
  const Line3 l = CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(0, 0, -3));
  EXPECT_EQ(l.dir()[2], 1);
  EXPECT_EQ(l.dir()[0], 0);
  EXPECT_EQ(l.base(), P(0, 0, 0));
}

TEST(CanonicalizeLineTest, ProjectsToPivotZero) {
  const Line3 l = CanonicalizeLine(P(1, 1, 0), Dir3::FromInts(1, 1, 0));
  EXPECT_EQ(l.base(), P(0, 0, 0));
  EXPECT_EQ(l.dir(), Dir3::FromInts(1, 1, 0));
}

TEST(CanonicalizeLineTest, ZeroDirectionThrows) {
  EXPECT_THROW(Dir3::FromInts(0, 0, 0), ZeroDirection);
  EXPECT_THROW(LineThrough(P(1, 2, 3), P(1, 2, 3)), ZeroDirection);
}

TEST(CanonicalizeLineTest, SamePointSetSameRecord) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const Point3 p = P(c(rng), c(rng), c(rng));
    long dx = c(rng), dy = c(rng), dz = c(rng);
    if (dx == 0 && dy == 0 && dz == 0) dx = 1;
    const Line3 l = MakeLine(p, dx, dy, dz);
    // Another point of the same line, and a rescaled, reversed direction.
    const Rational t = Frac(c(rng), 1 + std::abs(c(rng)));
    const Point3 q = l.At(t);
    const Rational s = Frac(-(1 + std::abs(c(rng))), 3);
    const Line3 l2 = MakeLine(q, s * dx, s * dy, s * dz);
    EXPECT_EQ(l, l2);
    EXPECT_EQ(CanonicalizeLine(l.base(), l.dir()), l);  // idempotent
    EXPECT_EQ(Sign(l.base()[l.dir().pivot()]), 0);
  }
}

TEST(Span3Test, Examples) {
  EXPECT_TRUE(Span3(Dir3::FromInts(1, 0, 0), Dir3::FromInts(0, 1, 0), Dir3::FromInts(0, 0, 1)));
  EXPECT_FALSE(Span3(Dir3::FromInts(1, 0, 0), Dir3::FromInts(0, 1, 0), Dir3::FromInts(1, 1, 0)));
  EXPECT_TRUE(Span3(Dir3::FromInts(1, 1, 0), Dir3::FromInts(0, 1, 1), Dir3::FromInts(1, 0, 1)));
  EXPECT_EQ(Det3({1, 1, 0}, {0, 1, 1}, {1, 0, 1}), Rational(2));
}

TEST(Span3Test, PermutationAndScalingInvariance) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-3, 3);
  auto rand_dir = [&] {
    for (;;) {
      long a = c(rng), b = c(rng), d = c(rng);
      if (a || b || d) return std::array<long, 3>{a, b, d};
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::array<std::array<long, 3>, 3> v{rand_dir(), rand_dir(), rand_dir()};
    std::array<Dir3, 3> d{Dir3::FromInts(v[0][0], v[0][1], v[0][2]),
                          Dir3::FromInts(v[1][0], v[1][1], v[1][2]),
                          Dir3::FromInts(v[2][0], v[2][1], v[2][2])};
    const bool base = Span3(d[0], d[1], d[2]);
    std::array<int, 3> perm{0, 1, 2};
    do {
      EXPECT_EQ(Span3(d[perm[0]], d[perm[1]], d[perm[2]]), base);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational k = Frac(-5, 7);
    const Dir3 scaled = Dir3::FromRational(k * v[1][0], k * v[1][1], k * v[1][2]);
    EXPECT_EQ(Span3(d[0], scaled, d[2]), base);
    // Independent route: rational determinant of the raw integer vectors.
    const Rational det = Det3({v[0][0], v[0][1], v[0][2]}, {v[1][0], v[1][1], v[1][2]},
                              {v[2][0], v[2][1], v[2][2]});
    EXPECT_EQ(base, Sign(det) != 0);
  }
}

TEST(LineIntersectTest, Examples) {
  const LineIntersection a = LineIntersect(Axis(0), Axis(1));
  ASSERT_EQ(a.kind, LineIntersection::Kind::kPoint);
  EXPECT_EQ(a.point, P(0, 0, 0));
  const Line3 shifted = CanonicalizeLine(P(0, 0, 1), Dir3::FromInts(1, 0, 0));
  EXPECT_EQ(LineIntersect(Axis(0), shifted).kind, LineIntersection::Kind::kEmpty);
  EXPECT_EQ(LineIntersect(Axis(0), Axis(0)).kind, LineIntersection::Kind::kIdentical);
  // Skew lines.
  EXPECT_EQ(LineIntersect(Axis(0), CanonicalizeLine(P(0, 0, 1), Dir3::FromInts(0, 1, 0))).kind,
            LineIntersection::Kind::kEmpty);
}

TEST(LineIntersectTest, SymmetricAndIncident) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> c(-2, 2);
  int points = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Point3 a = P(c(rng), c(rng), c(rng)), b = P(c(rng), c(rng), c(rng));
    Point3 e = P(c(rng), c(rng), c(rng)), f = P(c(rng), c(rng), c(rng));
    if (a == b || e == f) continue;
    const Line3 l1 = LineThrough(a, b), l2 = LineThrough(e, f);
    const LineIntersection x = LineIntersect(l1, l2);
    const LineIntersection y = LineIntersect(l2, l1);
    EXPECT_EQ(x.kind, y.kind);
    if (x.kind == LineIntersection::Kind::kPoint) {
      ++points;
      EXPECT_EQ(x.point, y.point);
      EXPECT_TRUE(PointOnLine(x.point, l1));
      EXPECT_TRUE(PointOnLine(x.point, l2));
      EXPECT_NE(l1.dir(), l2.dir());
    }
    if (x.kind == LineIntersection::Kind::kIdentical) EXPECT_EQ(l1, l2);
  }
  EXPECT_GT(points, 50);
}

TEST(PointOnLineTest, Examples) {
  EXPECT_TRUE(PointOnLine(P(3, 0, 0), Axis(0)));
  EXPECT_FALSE(PointOnLine(P(0, 1, 0), Axis(0)));
  const Line3 diag = CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(1, 1, 0));
  EXPECT_TRUE(PointOnLine({Frac(1, 2), Frac(1, 2), Rational(0)}, diag));
}

}  // namespace
}  // namespace multijoint
