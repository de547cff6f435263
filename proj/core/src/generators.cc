#include "multijoint/generators.h"

#include <set>

#include "multijoint/errors.h"

namespace multijoint {
namespace {

Point3 P(long x, long y, long z) { return {Rational(x), Rational(y), Rational(z)}; }

}  // namespace

LineFamilies GridConfig(int n) {
  if (n < 1) throw ValidationError("grid size must be at least 1");
  std::array<std::vector<Line3>, 3> fam;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      fam[0].push_back(CanonicalizeLine(P(0, a, b), Dir3::FromInts(1, 0, 0)));
      fam[1].push_back(CanonicalizeLine(P(a, 0, b), Dir3::FromInts(0, 1, 0)));
      fam[2].push_back(CanonicalizeLine(P(a, b, 0), Dir3::FromInts(0, 0, 1)));
    }
  }
  return LineFamilies(std::move(fam));
}

BushConfig MakeBushConfig(int n1, int n2, int n3, int m, uint64_t seed) {
  if (m < 1 || n1 < 1 || n2 < 1 || n3 < 1) {
    throw ValidationError("bush sizes and point count must be positive");
  }
  constexpr int kAttempts = 10000;
  constexpr int kRange = 4;
  BushConfig out;
  for (int k = 0; k < m; ++k) out.centers.push_back(P(4 * k, 4 * k * k, 4 * k * k * k));
  const std::array<int, 3> need{n1, n2, n3};
  std::array<std::vector<Line3>, 3> fam;
  for (int k = 0; k < m; ++k) {
    Rng rng = Rng::ForStream(seed, static_cast<uint64_t>(k));
    const Point3& c = out.centers[k];
    std::array<std::vector<Dir3>, 3> dirs;
    for (int round = 0; round < std::max({n1, n2, n3}); ++round) {
      for (int f = 0; f < 3; ++f) {
        if (static_cast<int>(dirs[f].size()) >= need[f]) continue;
        bool placed = false;
        for (int attempt = 0; attempt < kAttempts && !placed; ++attempt) {
          const long dx = rng.UniformRange(-kRange, kRange);
          const long dy = rng.UniformRange(-kRange, kRange);
          const long dz = rng.UniformRange(-kRange, kRange);
          if (dx == 0 && dy == 0 && dz == 0) continue;
          const Dir3 d = Dir3::FromInts(dx, dy, dz);
          bool ok = true;
          // Parallel directions in two families would leave no spanning
          // choice for the third.
          for (const auto& fam_dirs : dirs) {
            for (const auto& e : fam_dirs) ok = ok && e != d;
          }
          const int g = (f + 1) % 3, h = (f + 2) % 3;
          for (const auto& a : dirs[g]) {
            for (const auto& b : dirs[h]) ok = ok && Span3(d, a, b);
          }
          const Line3 l = CanonicalizeLine(c, d);
          for (int j = 0; j < m && ok; ++j) ok = j == k || !PointOnLine(out.centers[j], l);
          if (!ok) continue;
          dirs[f].push_back(d);
          fam[f].push_back(l);
          placed = true;
        }
        if (!placed) {
          throw GenericityFailure("no generic direction found at bush center " +
                                  std::to_string(k));
        }
      }
    }
  }
  out.families = LineFamilies(std::move(fam));
  return out;
}

LineFamilies RandomConfig(int l1, int l2, int l3, uint64_t seed, int range) {
  if (l1 < 1 || l2 < 1 || l3 < 1) throw ValidationError("family sizes must be positive");
  if (range < 1) throw ValidationError("coordinate range must be positive");
  const std::array<int, 3> sizes{l1, l2, l3};
  // The grid holds far more distinct lines than the sizes requested at
  // desk scale; the cap only guards against pathological inputs.
  const int64_t side = 2 * range + 1;
  const int64_t max_lines = side * side * side * (side * side * side - 1) / 2;
  std::array<std::vector<Line3>, 3> fam;
  for (int f = 0; f < 3; ++f) {
    if (sizes[f] > max_lines) throw ValidationError("too many lines for the coordinate range");
    Rng rng = Rng::ForStream(seed, 0, static_cast<uint64_t>(f));
    std::set<Line3> seen;
    while (static_cast<int>(fam[f].size()) < sizes[f]) {
      auto coord = [&] { return static_cast<long>(rng.UniformRange(-range, range)); };
      const Point3 a = P(coord(), coord(), coord());
      const Point3 b = P(coord(), coord(), coord());
      if (a == b) continue;
      const Line3 l = LineThrough(a, b);
      if (seen.insert(l).second) fam[f].push_back(l);
    }
  }
  return LineFamilies(std::move(fam));
}

DegenerateKind ParseDegenerateKind(const std::string& name) {
  if (name == "coplanar") return DegenerateKind::kCoplanar;
  if (name == "concurrent-coplanar") return DegenerateKind::kConcurrentCoplanar;
  if (name == "duplicated") return DegenerateKind::kDuplicated;
  throw ValidationError("unknown degenerate kind '" + name + "'");
}

std::string ToString(DegenerateKind kind) {
  switch (kind) {
    case DegenerateKind::kCoplanar: return "coplanar";
    case DegenerateKind::kConcurrentCoplanar: return "concurrent-coplanar";
    case DegenerateKind::kDuplicated: return "duplicated";
  }
  return "";
}

LineFamilies DegenerateConfig(DegenerateKind kind) {
  std::array<std::vector<Line3>, 3> fam;
  switch (kind) {
    case DegenerateKind::kCoplanar:
      for (int k = 0; k < 3; ++k) {
        fam[0].push_back(CanonicalizeLine(P(0, k, 0), Dir3::FromInts(1, 0, 0)));
        fam[1].push_back(CanonicalizeLine(P(k, 0, 0), Dir3::FromInts(0, 1, 0)));
        fam[2].push_back(CanonicalizeLine(P(k, 0, 0), Dir3::FromInts(1, -1, 0)));
      }
      break;
    case DegenerateKind::kConcurrentCoplanar:
      for (int k = 0; k < 3; ++k) {
        fam[0].push_back(CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(1, k, 0)));
        fam[1].push_back(CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(k - 4, 1, 0)));
        fam[2].push_back(CanonicalizeLine(P(0, 0, 0), Dir3::FromInts(2, 2 * k + 5, 0)));
      }
      break;
    case DegenerateKind::kDuplicated: {
      const LineFamilies grid = GridConfig(2);
      for (int f = 0; f < 3; ++f) {
        for (const auto& l : grid[f]) {
          fam[f].push_back(l);
          fam[f].push_back(l);
        }
      }
      break;
    }
  }
  return LineFamilies(std::move(fam));
}

ParamCurve RandomCurve(Rng& rng, int degree_bound, int coeff_range) {
  if (degree_bound < 1) throw ValidationError("curve degree bound must be positive");
  std::array<UniPoly, 3> c;
  for (auto& comp : c) {
    const int deg = static_cast<int>(rng.UniformInt(static_cast<uint64_t>(degree_bound) + 1));
    std::vector<Rational> co(deg + 1);
    for (auto& x : co) x = Rational(static_cast<long>(rng.UniformRange(-coeff_range, coeff_range)));
    comp = UniPoly(std::move(co));
  }
  const int top = static_cast<int>(rng.UniformInt(3));
  if (c[top].degree() < degree_bound) {
    std::vector<Rational> co = c[top].coeffs();
    co.resize(degree_bound + 1);
    co[degree_bound] = rng.UniformInt(2) ? 1 : -1;
    c[top] = UniPoly(std::move(co));
  }
  return ParamCurve(c[0], c[1], c[2], degree_bound);
}

}  // namespace multijoint
