#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "multijoint/errors.h"
#include "multijoint/polyalg.h"
#include "multijoint/sturm.h"
#include "root_oracle.h"

namespace multijoint {
namespace {

const TriPoly kX = TriPoly::Variable(0);
const TriPoly kY = TriPoly::Variable(1);
const TriPoly kZ = TriPoly::Variable(2);
TriPoly C(const Rational& c) { return TriPoly::Constant(c); }

Point3 P(const Rational& x, const Rational& y, const Rational& z) { return {x, y, z}; }
Line3 L(const Point3& p, long dx, long dy, long dz) {
  return CanonicalizeLine(p, Dir3::FromInts(dx, dy, dz));
}
Line3 Axis(int i) { return L(P(0, 0, 0), i == 0, i == 1, i == 2); }

bool SameUpToScalar(const TriPoly& a, const TriPoly& b) {
  return a.PrimitiveInteger() == b.PrimitiveInteger();
}

TEST(SquareFreePartTest, Examples) {
  EXPECT_TRUE(SameUpToScalar(SquareFreePart(kX * kX * kY), kX * kY));
  EXPECT_TRUE(SameUpToScalar(SquareFreePart(kX), kX));
  EXPECT_TRUE(SameUpToScalar(SquareFreePart((kX + kY).Pow(3) * (kZ - C(1))),
                             (kX + kY) * (kZ - C(1))));
  EXPECT_THROW(SquareFreePart(TriPoly()), ZeroPolynomial);
  EXPECT_EQ(SquareFreePart(C(7)), C(1));
}

TEST(SquareFreePartTest, ConstructedProducts) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> c(-3, 3);
  std::uniform_int_distribution<int> pw(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    // Distinct factors: random affine forms and a quadric.
    std::vector<TriPoly> factors;
    for (int k = 0; k < 2; ++k) {
      TriPoly f = TriPoly::Affine(c(rng), c(rng), c(rng), c(rng));
      if (f.degree() < 1) f = f + kX;
      bool dup = false;
      for (const auto& g : factors) dup |= SameUpToScalar(g, f);
      if (!dup) factors.push_back(f);
    }
    factors.push_back(kX * kX + kY * kY - kZ + C(c(rng)));
    const long scale = c(rng);
    TriPoly p = C(scale == 0 ? 2 : scale);
    TriPoly expected = C(1);
    for (const auto& f : factors) {
      p *= f.Pow(pw(rng));
      expected *= f;
    }
    const TriPoly sf = SquareFreePart(p);
    EXPECT_TRUE(SameUpToScalar(sf, expected)) << p;
    EXPECT_EQ(SquareFreePart(sf), sf);  // idempotent
  }
}

TEST(SquareFreePartTest, FactorsFreeOfTheMainVariable) {
  // Factors without x sit in the content; coprime parts take the fast path.
  const TriPoly a = (kY - C(1)).Pow(2) * (kX + kY * kZ);
  EXPECT_TRUE(SameUpToScalar(SquareFreePart(a), (kY - C(1)) * (kX + kY * kZ)));
  const TriPoly b = (kZ + C(2)).Pow(3) * (kY - kZ).Pow(2) * (kX * kX - C(3));
  EXPECT_TRUE(SameUpToScalar(SquareFreePart(b), (kZ + C(2)) * (kY - kZ) * (kX * kX - C(3))));
  const TriPoly c = (kX - C(Frac(1, 3))) * (kY - C(1)) * (kZ - C(2)) * (kX + kY + kZ);
  EXPECT_TRUE(SameUpToScalar(SquareFreePart(c), c));
  EXPECT_EQ(MultivariateGcd(a, b.Partial(1)).degree(), 0);
  EXPECT_TRUE(SameUpToScalar(MultivariateGcd((kY - C(1)) * kX, (kY - C(1)) * kZ), kY - C(1)));
}

TEST(MultivariateGcdTest, RecoversASharedFactor) {
  // a and b are irreducible (each linear in some variable with coprime
  // coefficients) and distinct, so gcd(g a, g b) = g.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TriPoly g = TriPoly::Affine(c(rng), c(rng), c(rng), c(rng)) + kZ;
    g *= kX * kY - kZ * kZ + C(c(rng));
    if (trial % 2 == 0) g *= g;
    const TriPoly a = kX * kX + kY + C(c(rng));
    const TriPoly b = kX * kZ + kY * kY + C(c(rng));
    EXPECT_TRUE(SameUpToScalar(MultivariateGcd(g * a, g * b), g)) << g;
    EXPECT_TRUE(SameUpToScalar(MultivariateGcd(g * a * C(Frac(3, 7)), g * b * C(6)), g));
  }
}

TEST(GradientTest, Examples) {
  const GradientTriple g = Gradient(kX * kY);
  EXPECT_EQ(g.px, kY);
  EXPECT_EQ(g.py, kX);
  EXPECT_TRUE(g.pz.IsZero());
  const GradientTriple s = Gradient(kX * kX + kY * kY + kZ * kZ - C(1));
  EXPECT_EQ(s.px, C(2) * kX);
  EXPECT_EQ(s.py, C(2) * kY);
  EXPECT_EQ(s.pz, C(2) * kZ);
  const GradientTriple k = Gradient(C(5));
  EXPECT_TRUE(k.px.IsZero() && k.py.IsZero() && k.pz.IsZero());
}

TEST(GradientTest, Linearity) {
  const TriPoly a = kX * kX * kY - C(3) * kZ + kX * kY * kZ;
  const TriPoly b = kY.Pow(3) + C(Frac(1, 2)) * kX * kZ;
  const Rational s = Frac(-4, 3);
  for (int v = 0; v < 3; ++v) {
    EXPECT_EQ(Gradient(a + b)[v], Gradient(a)[v] + Gradient(b)[v]);
    EXPECT_EQ(Gradient(s * a)[v], s * Gradient(a)[v]);
  }
}

TEST(RestrictTest, LineExamples) {
  const TriPoly sphere = kX * kX + kY * kY + kZ * kZ - C(1);
  EXPECT_EQ(RestrictToLine(sphere, Axis(0)), (UniPoly{-1, 0, 1}));
  EXPECT_TRUE(RestrictToLine(kZ, Axis(0)).IsZero());
  EXPECT_EQ(RestrictToLine(kX * kY, L(P(1, 1, 0), 0, 0, 1)), UniPoly::Constant(1));
}

TEST(RestrictTest, CurveExamples) {
  const UniPoly t = UniPoly::Linear(0, 1);
  const ParamCurve twisted(t, t * t, t * t * t, 3);
  const UniPoly r = RestrictToCurve(kZ, twisted);
  EXPECT_EQ(r, t * t * t);
  EXPECT_EQ(r.degree(), twisted.degree() * kZ.degree());
  EXPECT_TRUE(RestrictToCurve(kX - kY, ParamCurve(t, t, UniPoly(), 1)).IsZero());
  EXPECT_EQ(RestrictToCurve(kX * kX + kY * kY - C(1), ParamCurve(t, UniPoly(), UniPoly(), 1)),
            (UniPoly{-1, 0, 1}));
}

TEST(RestrictTest, AgreesWithPointwiseEvaluation) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-4, 4);
  const TriPoly p = kX * kX * kY - C(2) * kY * kZ + kZ.Pow(3) - C(1) + kX;
  for (int trial = 0; trial < 30; ++trial) {
    long dx = c(rng), dy = c(rng), dz = c(rng);
    if (!dx && !dy && !dz) dz = 1;
    const Line3 l = L(P(c(rng), c(rng), c(rng)), dx, dy, dz);
    const UniPoly u = RestrictToLine(p, l);
    EXPECT_LE(u.degree(), p.degree());
    for (int k = -3; k <= 3; ++k) EXPECT_EQ(u(Rational(k)), p.Evaluate(l.At(Rational(k))));
  }
}

TEST(IncidenceCountTest, Examples) {
  const TriPoly sphere = kX * kX + kY * kY + kZ * kZ - C(1);
  ZeroSetIncidence a = LineZeroSetIncidences(sphere, Axis(0));
  EXPECT_FALSE(a.contained);
  EXPECT_EQ(a.count, 2);
  EXPECT_TRUE(LineZeroSetIncidences(kZ, Axis(0)).contained);
  ZeroSetIncidence b = LineZeroSetIncidences(kX * kY * kZ, L(P(1, 1, 0), 0, 0, 1));
  EXPECT_FALSE(b.contained);
  EXPECT_EQ(b.count, 1);
  EXPECT_THROW(LineZeroSetIncidences(TriPoly(), Axis(0)), ZeroPolynomial);
}

TEST(IncidenceCountTest, SquareFreeKeepsRestrictionRoots) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-3, 3);
  const TriPoly base = (kX - kY) * (kX * kX + kZ - C(2));
  const TriPoly p = base.Pow(2) * (kY + kZ + C(1)).Pow(3);
  const TriPoly sf = SquareFreePart(p);
  for (int trial = 0; trial < 20; ++trial) {
    long dx = c(rng), dy = c(rng), dz = c(rng);
    if (!dx && !dy && !dz) dx = 1;
    const Line3 l = L(P(c(rng), c(rng), c(rng)), dx, dy, dz);
    const UniPoly u = RestrictToLine(p, l), v = RestrictToLine(sf, l);
    ASSERT_EQ(u.IsZero(), v.IsZero());
    if (u.IsZero()) continue;
    for (int k = -5; k < 5; ++k) {
      EXPECT_EQ(SturmRootsInInterval(u, k, k + 1), SturmRootsInInterval(v, k, k + 1));
    }
    EXPECT_EQ(SturmDistinctRealRoots(u), oracle::DistinctRealRoots(v.coeffs()));
  }
}

TEST(CriticalTest, Points) {
  EXPECT_TRUE(IsCriticalPoint(kX * kY, P(0, 0, 5)));
  EXPECT_FALSE(IsCriticalPoint(kX, P(0, 3, 1)));
  EXPECT_FALSE(IsCriticalPoint(kX * kX, P(0, 1, 0)));
  EXPECT_FALSE(IsCriticalPoint(kX * kY, P(1, 1, 0)));  // not on Z
}

TEST(CriticalTest, Lines) {
  EXPECT_TRUE(IsCriticalLine(kX * kY, Axis(2)));
  EXPECT_FALSE(IsCriticalLine(kX * kY, Axis(0)));
  EXPECT_FALSE(IsCriticalLine(kX, Axis(1)));
  EXPECT_THROW(IsCriticalLine(kX, Axis(0)), LineNotInZeroSet);
  // Squared factors do not create critical lines.
  EXPECT_FALSE(IsCriticalLine(kX * kX, Axis(1)));
}

TEST(CriticalTest, Census) {
  const std::vector<Line3> axes{Axis(0), Axis(1), Axis(2)};
  EXPECT_EQ(CriticalLineCensus(kX * kY, axes), std::vector<Line3>{Axis(2)});
  const TriPoly p = kX * kY * (kX - kY);
  const auto census = CriticalLineCensus(p, {Axis(2)});
  EXPECT_EQ(census, std::vector<Line3>{Axis(2)});
  EXPECT_LE(static_cast<int>(census.size()), p.degree() * p.degree());
  const TriPoly sphere = kX * kX + kY * kY + kZ * kZ - C(1);
  EXPECT_TRUE(CriticalLineCensus(sphere, {Axis(0), L(P(1, 0, 0), 0, 1, 0)}).empty());
}

}  // namespace
}  // namespace multijoint
