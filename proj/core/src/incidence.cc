#include "multijoint/incidence.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include <spdlog/spdlog.h>

#include "multijoint/errors.h"
#include "multijoint/rng.h"

namespace multijoint {

LineFamilies::LineFamilies(std::array<std::vector<Line3>, 3> families, bool allow_empty) {
  for (int i = 0; i < 3; ++i) {
    std::set<Line3> seen;
    for (auto& l : families[i]) {
      if (seen.insert(l).second) {
        fam_[i].push_back(std::move(l));
      } else {
        ++dropped_[i];
      }
    }
    if (dropped_[i] > 0) {
      spdlog::warn("family {}: dropped {} duplicate line(s), {} remain", i + 1, dropped_[i],
                   fam_[i].size());
    }
    if (fam_[i].empty() && !allow_empty) {
      throw ValidationError("family " + std::to_string(i + 1) + " is empty");
    }
  }
}

IncidenceStructure BuildIncidences(const LineFamilies& f) {
  std::map<Point3, std::array<std::set<int>, 3>> found;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int i = 0; i < f.size(a); ++i) {
        for (int j = 0; j < f.size(b); ++j) {
          const LineIntersection x = LineIntersect(f[a][i], f[b][j]);
          if (x.kind != LineIntersection::Kind::kPoint) continue;
          auto& rec = found[x.point];
          rec[a].insert(i);
          rec[b].insert(j);
        }
      }
    }
  }
  // A line through a candidate meets one of the two lines that produced it
  // there, unless it coincides with one of them as a point set. Copies of a
  // line in other families are added here to close that gap.
  std::map<Line3, std::vector<std::pair<int, int>>> copies;
  for (int a = 0; a < 3; ++a) {
    for (int i = 0; i < f.size(a); ++i) copies[f[a][i]].emplace_back(a, i);
  }
  IncidenceStructure inc;
  inc.points.reserve(found.size());
  inc.through.reserve(found.size());
  for (auto& [point, rec] : found) {
    std::array<std::set<int>, 3> closed = rec;
    for (int a = 0; a < 3; ++a) {
      for (int i : rec[a]) {
        const auto& same = copies[f[a][i]];
        if (same.size() < 2) continue;
        for (const auto& [b, j] : same) closed[b].insert(j);
      }
    }
    inc.points.push_back(point);
    std::array<std::vector<int>, 3> lists;
    for (int a = 0; a < 3; ++a) lists[a].assign(closed[a].begin(), closed[a].end());
    inc.through.push_back(std::move(lists));
  }
  return inc;
}

int64_t Multiplicity(int point, const IncidenceStructure& inc, const LineFamilies& f) {
  const auto& t = inc.through.at(point);
  int64_t n = 0;
  for (int i : t[0]) {
    for (int j : t[1]) {
      for (int k : t[2]) n += Span3(f[0][i].dir(), f[1][j].dir(), f[2][k].dir()) ? 1 : 0;
    }
  }
  return n;
}

bool IsMultijoint(int point, const IncidenceStructure& inc, const LineFamilies& f) {
  const auto& t = inc.through.at(point);
  for (int i : t[0]) {
    for (int j : t[1]) {
      for (int k : t[2]) {
        if (Span3(f[0][i].dir(), f[1][j].dir(), f[2][k].dir())) return true;
      }
    }
  }
  return false;
}

std::vector<Point3> Multijoints(const LineFamilies& f) {
  const IncidenceStructure inc = BuildIncidences(f);
  std::vector<Point3> out;
  for (int p = 0; p < static_cast<int>(inc.points.size()); ++p) {
    if (IsMultijoint(p, inc, f)) out.push_back(inc.points[p]);
  }
  return out;
}

bool IsTransversal(const std::vector<Line3>& a, const std::vector<Line3>& b,
                   const std::vector<Line3>& c) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      for (const auto& z : c) {
        if (!Span3(x.dir(), y.dir(), z.dir())) return false;
      }
    }
  }
  return true;
}

ThresholdQuery::ThresholdQuery(int64_t a, int64_t b, int64_t c) : n1(a), n2(b), n3(c) {
  if (a < 1 || b < 1 || c < 1) {
    throw ValidationError("thresholds must be positive integers, got (" + std::to_string(a) +
                          ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
  }
}

ThresholdQuery ThresholdQuery::FromReal(const Rational& a, const Rational& b, const Rational& c) {
  auto ceil = [](const Rational& r) {
    if (Sign(r) <= 0) throw ValidationError("thresholds must be positive, got " + ToString(r));
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    if (!q.fits_slong_p()) throw ValidationError("threshold too large: " + ToString(r));
    return static_cast<int64_t>(q.get_si());
  };
  return ThresholdQuery(ceil(a), ceil(b), ceil(c));
}

bool HasTransversalSubcollections(int point, const IncidenceStructure& inc,
                                  const LineFamilies& f, const ThresholdQuery& q,
                                  const SearchOptions& options) {
  const auto& t = inc.through.at(point);
  std::array<int, 3> counts, need;
  for (int a = 0; a < 3; ++a) {
    counts[a] = static_cast<int>(t[a].size());
    if (q[a] > counts[a]) return false;
    need[a] = static_cast<int>(q[a]);
  }
  auto spans = [&](int i, int j, int k) {
    return Span3(f[0][t[0][i]].dir(), f[1][t[1][j]].dir(), f[2][t[2][k]].dir());
  };
  return FindTransversal(counts, need, spans, options).found;
}

std::vector<Point3> JThreshold(const LineFamilies& f, const ThresholdQuery& q,
                               const SearchOptions& options) {
  const IncidenceStructure inc = BuildIncidences(f);
  std::vector<Point3> out;
  for (int p = 0; p < static_cast<int>(inc.points.size()); ++p) {
    if (HasTransversalSubcollections(p, inc, f, q, options)) out.push_back(inc.points[p]);
  }
  return out;
}

SamplingReport SubsampleReduction(const LineFamilies& f, const ThresholdQuery& q, int trials,
                                  uint64_t seed, const SearchOptions& options) {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  const IncidenceStructure inc = BuildIncidences(f);
  std::vector<int> targets;
  for (int p = 0; p < static_cast<int>(inc.points.size()); ++p) {
    if (HasTransversalSubcollections(p, inc, f, q, options)) targets.push_back(p);
  }
  if (targets.empty()) throw EmptyThresholdSet("no point meets the thresholds");

  SamplingReport report;
  report.trials = trials;
  report.seed = seed;
  report.j_count = static_cast<int64_t>(targets.size());
  report.sampled_sizes.reserve(trials);
  std::array<std::vector<char>, 3> keep;
  for (int trial = 0; trial < trials; ++trial) {
    std::array<int, 3> sizes{0, 0, 0};
    for (int a = 0; a < 3; ++a) {
      Rng rng = Rng::ForStream(seed, static_cast<uint64_t>(trial), static_cast<uint64_t>(a));
      keep[a].assign(f.size(a), 0);
      for (int i = 0; i < f.size(a); ++i) {
        keep[a][i] = rng.Bernoulli(1, static_cast<uint64_t>(q[a]));
        sizes[a] += keep[a][i];
      }
    }
    report.sampled_sizes.push_back(sizes);
    // A point is a multijoint of the kept lines iff a kept triple through it
    // spans; lines through it are already listed.
    for (int p : targets) {
      const auto& t = inc.through[p];
      bool alive = false;
      for (int i : t[0]) {
        if (!keep[0][i]) continue;
        for (int j : t[1]) {
          if (!keep[1][j]) continue;
          for (int k : t[2]) {
            if (keep[2][k] && Span3(f[0][i].dir(), f[1][j].dir(), f[2][k].dir())) {
              alive = true;
              break;
            }
          }
          if (alive) break;
        }
        if (alive) break;
      }
      report.survivors += alive ? 1 : 0;
    }
  }
  report.survival_fraction =
      Frac(Integer(static_cast<long>(report.survivors)),
           Integer(static_cast<long>(report.j_count)) * trials);
  return report;
}

}  // namespace multijoint
