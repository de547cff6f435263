#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "multijoint/curvegeom.h"
#include "multijoint/errors.h"
#include "multijoint/generators.h"
#include "multijoint/io.h"
#include "multijoint/partition.h"

namespace multijoint {
namespace {

using nlohmann::json;

Point3 P(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

TEST(LineFileTest, RoundTrip) {
  const LineFamilies f = RandomConfig(5, 4, 3, 99);
  const std::string text = SerializeLineFamilies(f);
  const LineFamilies g = ParseLineFamilies(text);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(f[i], g[i]);
  EXPECT_EQ(SerializeLineFamilies(g), text);
}

TEST(LineFileTest, HandWrittenInput) {
  // Non-canonical input: base off the pivot plane, scaled direction.
  const std::string text = R"({"schema": 1, "families": [
      [{"base": ["1/2", 0, 3], "dir": ["2/1", 0, 0]}],
      [{"base": [0, 0, 0], "dir": [0, "-3", 0]}],
      [{"base": [0, 0, 0], "dir": [0, 0, 1]}, {"base": [0, 0, 5], "dir": [0, 0, 7]}]]})";
  const LineFamilies f = ParseLineFamilies(text);
  EXPECT_EQ(f[0][0], MakeLine(P(0, 0, 3), 1, 0, 0));
  EXPECT_EQ(f[1][0], MakeLine(P(0, 0, 0), 0, 1, 0));
  EXPECT_EQ(f.size(2), 1);  // same line twice
  EXPECT_EQ(f.duplicates_removed(2), 1);
}

TEST(LineFileTest, Rejections) {
  const auto parse = [](const std::string& t) { return ParseLineFamilies(t); };
  EXPECT_THROW(parse("{"), ValidationError);
  EXPECT_THROW(parse(R"({"families": [[], [], []]})"), ValidationError);
  EXPECT_THROW(parse(R"({"schema": 2, "families": [[], [], []]})"), ValidationError);
  const std::string line = R"({"base": [0, 0, 0], "dir": [1, 0, 0]})";
  EXPECT_THROW(parse(R"({"schema": 1, "families": [[)" + line + "], [" + line + "]]}"),
               ValidationError);
  EXPECT_THROW(parse(R"({"schema": 1, "families": [[], [], []]})"), ValidationError);
  EXPECT_THROW(parse(R"({"schema": 1, "families": [[{"base": [0, 0, 0], "dir": [0, 0, 0]}], [)" +
                     line + "], [" + line + "]]}"),
               ValidationError);
  EXPECT_THROW(parse(R"({"schema": 1, "families": [[{"base": [0.5, 0, 0], "dir": [1, 0, 0]}], [)" +
                     line + "], [" + line + "]]}"),
               ValidationError);
  EXPECT_THROW(parse(R"({"schema": 1, "families": [[{"base": ["1/0", 0, 0], "dir": [1, 0, 0]}], [)" +
                     line + "], [" + line + "]]}"),
               ValidationError);
  EXPECT_THROW(parse(R"({"schema": 1, "extra": 0, "families": [[], [], []]})"), ValidationError);
}

TEST(CurveFileTest, RoundTripAndDefaults) {
  const UniPoly t = UniPoly::Linear(0, 1);
  const ParamCurve twisted(t, t * t, t * t * t, 3);
  const ParamCurve bounded(t, UniPoly{Frac(1, 3)}, UniPoly(), 4);
  const CurveFamilies f({{{twisted, bounded}, {ParamCurve(t * t, t, UniPoly(), 2)},
                          {ParamCurve(UniPoly(), UniPoly(), t, 1)}}});
  const std::string text = SerializeCurveFamilies(f);
  const CurveFamilies g = ParseCurveFamilies(text);
  for (int i = 0; i < 3; ++i) {
    ASSERT_EQ(f.size(i), g.size(i));
    for (int k = 0; k < f.size(i); ++k) {
      EXPECT_EQ(f[i][k], g[i][k]);
      EXPECT_EQ(f[i][k].degree_bound(), g[i][k].degree_bound());
    }
  }
  const std::string no_b = R"({"schema": 1, "families": [
      [{"x": [0, 1], "y": [0, 0, 1], "z": []}], [{"x": [], "y": [0, 1], "z": []}],
      [{"x": [], "y": [], "z": ["0/1", "1/1"]}]]})";
  EXPECT_EQ(ParseCurveFamilies(no_b)[0][0].degree_bound(), 2);
  EXPECT_EQ(ParseCurveFamilies(no_b, 5)[0][0].degree_bound(), 5);
  EXPECT_THROW(ParseCurveFamilies(no_b, 1), ValidationError);  // degree 2 > b
}

TEST(PartitionFileTest, RoundTrip) {
  std::vector<Point3> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      for (int z = 0; z < 2; ++z) pts.push_back(P(x, y, z));
  Partition part = GkPartition(pts, 3, Frac(1, 10), 5);
  part = AugmentWithCube(part, pts, {}, {});
  const std::string text = SerializePartition(part);
  const Partition back = ParsePartition(text);
  EXPECT_EQ(back.round_polys, part.round_polys);
  EXPECT_EQ(back.cube_planes, part.cube_planes);
  EXPECT_EQ(back.product, part.product);
  EXPECT_EQ(back.eps, part.eps);
  EXPECT_EQ(back.seed, part.seed);
  EXPECT_EQ(back.cube_lo, part.cube_lo);
  EXPECT_EQ(SerializePartition(back), text);
  const json j = json::parse(text);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["degrees"], json(part.schedule.degrees));
  EXPECT_EQ(j["eps"], "1/10");

  json bad = j;
  bad["round_polys"][0] = json::array();
  EXPECT_THROW(ParsePartition(bad.dump()), ValidationError);
  bad = j;
  bad["degrees"] = json::array({9});
  EXPECT_THROW(ParsePartition(bad.dump()), ValidationError);
}

TEST(PointsTest, SortedAndExact) {
  const std::string text = SerializePoints({P(1, 0, 0), P(-1, 2, 0), P(1, 0, 0), P(-1, 1, 5)});
  EXPECT_EQ(text, R"([["-1/1","1/1","5/1"],["-1/1","2/1","0/1"],["1/1","0/1","0/1"]])");
  EXPECT_EQ(SerializePoints({}), "[]");
}

TEST(PointsTest, AlgebraicCoordinates) {
  const std::vector<RealAlgebraic> roots = RealAlgebraic::RealRoots(UniPoly{-2, 0, 1});
  ASSERT_EQ(roots.size(), 2u);
  const AlgebraicPoint3 a{roots[1], Rational(0), Frac(1, 2)};
  const AlgebraicPoint3 b = AlgebraicPoint3::FromPoint3(P(0, 0, 0));
  const json j = json::parse(SerializeAlgebraicPoints({a, b}));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0], json::parse(R"(["0/1","0/1","0/1"])"));  // rational fast path
  const json& x = j[1][0];
  ASSERT_TRUE(x.is_object());
  EXPECT_EQ(x["poly"], json::parse(R"(["-2/1","0/1","1/1"])"));
  const Rational lo = ParseRational(x["lo"].get<std::string>());
  const Rational hi = ParseRational(x["hi"].get<std::string>());
  // The interval isolates +sqrt(2): endpoints straddle it.
  EXPECT_LT(lo * lo, 2);
  EXPECT_GT(hi * hi, 2);
  EXPECT_GT(lo, 0);
  EXPECT_EQ(j[1][1], "0/1");
  EXPECT_EQ(j[1][2], "1/2");
}

TEST(FileTest, Errors) {
  const auto dir = std::filesystem::temp_directory_path() / "multijoint_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  WriteTextFile(path, "abc");
  EXPECT_EQ(ReadTextFile(path), "abc");
  EXPECT_THROW(ReadTextFile((dir / "missing.json").string()), IoError);
  EXPECT_THROW(WriteTextFile((dir / "no" / "such" / "dir.json").string(), "x"), IoError);
  try {
    ReadTextFile("/nonexistent/q.json");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/q.json"), std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace multijoint
