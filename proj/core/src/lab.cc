#include "multijoint/lab.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <set>
#include <sstream>

#include "json_codec.h"
#include "multijoint/errors.h"
#include "multijoint/io.h"
#include "multijoint/polyalg.h"
#include "multijoint/sturm.h"

namespace multijoint {

using internal::Json;

namespace {

constexpr std::pair<ConfigKind, const char*> kKindNames[] = {
    {ConfigKind::kGrid, "grid"},
    {ConfigKind::kBush, "bush"},
    {ConfigKind::kRandom, "random"},
    {ConfigKind::kDegenerate, "degenerate"},
    {ConfigKind::kFromFile, "from-file"},
    {ConfigKind::kCurvesFromFile, "curves-from-file"},
};

void Require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError("config: " + what);
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

// Advisory doubles go through the same fixed formatting in JSON and CSV.
Json ApproxJson(double v) { return Json::parse(FormatDouble(v)); }

double Runtime(double ms, const RenderOptions& o) { return o.timing ? ms : 0.0; }

std::string Bool01(bool b) { return b ? "1" : "0"; }

// Lines joined by commas; trailing newline.
std::string CsvRow(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += cells[i];
  }
  return out + "\n";
}

std::string Num(const Rational& r) { return r.get_num().get_str(); }
std::string Den(const Rational& r) { return r.get_den().get_str(); }

Json Triple(const std::array<int64_t, 3>& v) { return Json::array({v[0], v[1], v[2]}); }
Json Triple(const ThresholdQuery& q) { return Json::array({q.n1, q.n2, q.n3}); }

Rational RatioSq(int64_t count, const ThresholdQuery& q, const std::array<int64_t, 3>& sizes) {
  Integer num = Integer(std::to_string(count));
  num *= num;
  for (int i = 0; i < 3; ++i) num *= Integer(std::to_string(q[i]));
  Integer den = 1;
  for (int i = 0; i < 3; ++i) den *= Integer(std::to_string(sizes[i]));
  return Frac(num, den);
}

std::string LabelString(const CellLabel& label) {
  std::string s;
  for (int8_t v : label) s += v > 0 ? '+' : '-';
  return s;
}

}  // namespace

ConfigKind ParseConfigKind(const std::string& name) {
  for (const auto& [kind, n] : kKindNames) {
    if (name == n) return kind;
  }
  throw ValidationError("unknown config kind '" + name + "'");
}

std::string ToString(ConfigKind kind) {
  for (const auto& [k, n] : kKindNames) {
    if (k == kind) return n;
  }
  return "?";
}

ReportFormat ParseReportFormat(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ValidationError("unknown report format '" + name + "' (want csv or json)");
}

void ExperimentConfig::Validate() const {
  switch (kind) {
    case ConfigKind::kGrid:
      Require(n >= 1 && n <= 64, "n must lie in [1, 64]");
      break;
    case ConfigKind::kBush:
      for (int s : bush_sizes) Require(s >= 1 && s <= 64, "N entries must lie in [1, 64]");
      Require(bush_centers >= 1 && bush_centers <= 64, "m must lie in [1, 64]");
      Require(seed.has_value(), "kind 'bush' needs a seed");
      break;
    case ConfigKind::kRandom:
      for (int s : random_sizes) Require(s >= 1 && s <= 100000, "L entries must lie in [1, 100000]");
      Require(random_range >= 1 && random_range <= 1000, "range must lie in [1, 1000]");
      Require(seed.has_value(), "kind 'random' needs a seed");
      break;
    case ConfigKind::kDegenerate:
      break;
    case ConfigKind::kFromFile:
    case ConfigKind::kCurvesFromFile:
      Require(!path.empty(), "kind '" + ToString(kind) + "' needs a path");
      break;
  }
  Require(degree_bound == -1 || (degree_bound >= 1 && degree_bound <= 64),
          "b must lie in [1, 64]");
  if (thresholds) {
    for (const auto& t : *thresholds) Require(t >= 1, "thresholds must be at least 1");
  }
  Require(partition.rounds >= 1 && partition.rounds <= DegreeSchedule::kMaxRounds,
          "partition.rounds must lie in [1, " + std::to_string(DegreeSchedule::kMaxRounds) + "]");
  Require(Sign(partition.eps) >= 0 && partition.eps < Frac(1, 2),
          "partition.eps must lie in [0, 1/2)");
  Require(partition.restarts >= 1 && partition.restarts <= 100000,
          "partition.restarts must lie in [1, 100000]");
  Require(trials >= 1 && trials <= 10000000, "trials must lie in [1, 10000000]");
  Require(exact_search_limit >= 0 && exact_search_limit <= 64,
          "exact_search_limit must lie in [0, 64]");
}

ThresholdQuery ExperimentConfig::threshold_query() const {
  if (!thresholds) return ThresholdQuery();
  const auto& t = *thresholds;
  return ThresholdQuery::FromReal(t[0], t[1], t[2]);
}

SearchOptions ExperimentConfig::search_options() const {
  SearchOptions o;
  o.exact_limit = exact_search_limit;
  return o;
}

ExperimentConfig ParseConfig(std::string_view json_text, const std::string& base_dir) {
  using internal::IntFromJson;
  using internal::RationalFromJson;
  const Json j = internal::ParseJson(json_text, "config");
  internal::CheckSchema(j, "config");
  internal::CheckKeys(j, "config",
                      {"schema", "kind", "n", "N", "m", "L", "range", "degenerate", "path", "b",
                       "seed", "thresholds", "partition", "trials", "exact_search_limit",
                       "output"});
  ExperimentConfig cfg;
  const auto str = [&](const Json& v, const std::string& what) {
    if (!v.is_string()) throw ValidationError("config." + what + ": expected a string");
    return v.get<std::string>();
  };
  const auto triple = [&](const char* key, int64_t lo, int64_t hi) {
    const Json& v = j[key];
    const std::string what = std::string("config.") + key;
    if (!v.is_array() || v.size() != 3) throw ValidationError(what + ": expected 3 entries");
    std::array<int, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = static_cast<int>(IntFromJson(v[i], what, lo, hi));
    return out;
  };
  if (!j.contains("kind")) throw ValidationError("config: missing field 'kind'");
  cfg.kind = ParseConfigKind(str(j["kind"], "kind"));
  if (j.contains("n")) cfg.n = static_cast<int>(IntFromJson(j["n"], "config.n", 1, 64));
  if (j.contains("N")) cfg.bush_sizes = triple("N", 1, 64);
  if (j.contains("m")) cfg.bush_centers = static_cast<int>(IntFromJson(j["m"], "config.m", 1, 64));
  if (j.contains("L")) cfg.random_sizes = triple("L", 1, 100000);
  if (j.contains("range")) {
    cfg.random_range = static_cast<int>(IntFromJson(j["range"], "config.range", 1, 1000));
  }
  if (j.contains("degenerate")) cfg.degenerate = ParseDegenerateKind(str(j["degenerate"], "degenerate"));
  const auto resolve = [&](const std::string& p) {
    if (p.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(base_dir) / p).lexically_normal().string();
  };
  if (j.contains("path")) cfg.path = resolve(str(j["path"], "path"));
  if (j.contains("b")) cfg.degree_bound = static_cast<int>(IntFromJson(j["b"], "config.b", 1, 64));
  if (j.contains("seed")) cfg.seed = internal::SeedFromJson(j["seed"], "config.seed");
  if (j.contains("thresholds")) {
    const Json& t = j["thresholds"];
    if (!t.is_array() || t.size() != 3) {
      throw ValidationError("config.thresholds: expected 3 entries");
    }
    cfg.thresholds = std::array<Rational, 3>{RationalFromJson(t[0], "config.thresholds[0]"),
                                             RationalFromJson(t[1], "config.thresholds[1]"),
                                             RationalFromJson(t[2], "config.thresholds[2]")};
  }
  if (j.contains("partition")) {
    const Json& p = j["partition"];
    internal::CheckKeys(p, "config.partition", {"rounds", "eps", "restarts", "cube"});
    if (p.contains("rounds")) {
      cfg.partition.rounds = static_cast<int>(
          IntFromJson(p["rounds"], "config.partition.rounds", 1, DegreeSchedule::kMaxRounds));
    }
    if (p.contains("eps")) cfg.partition.eps = RationalFromJson(p["eps"], "config.partition.eps");
    if (p.contains("restarts")) {
      cfg.partition.restarts =
          static_cast<int>(IntFromJson(p["restarts"], "config.partition.restarts", 1, 100000));
    }
    if (p.contains("cube")) {
      if (!p["cube"].is_boolean()) throw ValidationError("config.partition.cube: expected a boolean");
      cfg.partition.cube = p["cube"].get<bool>();
    }
  }
  if (j.contains("trials")) {
    cfg.trials = static_cast<int>(IntFromJson(j["trials"], "config.trials", 1, 10000000));
  }
  if (j.contains("exact_search_limit")) {
    cfg.exact_search_limit =
        static_cast<int>(IntFromJson(j["exact_search_limit"], "config.exact_search_limit", 0, 64));
  }
  if (j.contains("output")) {
    const Json& o = j["output"];
    internal::CheckKeys(o, "config.output", {"report", "format", "families"});
    if (o.contains("report")) cfg.report_path = resolve(str(o["report"], "output.report"));
    if (o.contains("format")) cfg.report_format = ParseReportFormat(str(o["format"], "output.format"));
    if (o.contains("families")) cfg.families_path = resolve(str(o["families"], "output.families"));
  }
  cfg.Validate();
  return cfg;
}

ExperimentConfig LoadConfig(const std::string& path) {
  const std::string text = ReadTextFile(path);
  const auto dir = std::filesystem::path(path).parent_path();
  return ParseConfig(text, dir.empty() ? "." : dir.string());
}

std::array<int64_t, 3> LabInput::sizes() const {
  std::array<int64_t, 3> s;
  for (int i = 0; i < 3; ++i) s[i] = is_curves ? curves.size(i) : lines.size(i);
  return s;
}

std::array<int, 3> LabInput::duplicates_removed() const {
  std::array<int, 3> d;
  for (int i = 0; i < 3; ++i) {
    d[i] = is_curves ? curves.duplicates_removed(i) : lines.duplicates_removed(i);
  }
  return d;
}

CurveFamilies LabInput::AsCurves() const { return is_curves ? curves : LinesAsCurves(lines); }

LabInput BuildInput(const ExperimentConfig& cfg) {
  cfg.Validate();
  LabInput in;
  switch (cfg.kind) {
    case ConfigKind::kGrid:
      in.lines = GridConfig(cfg.n);
      break;
    case ConfigKind::kBush:
      in.lines = MakeBushConfig(cfg.bush_sizes[0], cfg.bush_sizes[1], cfg.bush_sizes[2],
                                cfg.bush_centers, *cfg.seed)
                     .families;
      break;
    case ConfigKind::kRandom:
      in.lines = RandomConfig(cfg.random_sizes[0], cfg.random_sizes[1], cfg.random_sizes[2],
                              *cfg.seed, cfg.random_range);
      break;
    case ConfigKind::kDegenerate:
      in.lines = DegenerateConfig(cfg.degenerate);
      break;
    case ConfigKind::kFromFile:
      in.lines = ParseLineFamilies(ReadTextFile(cfg.path));
      break;
    case ConfigKind::kCurvesFromFile:
      in.is_curves = true;
      in.curves = ParseCurveFamilies(ReadTextFile(cfg.path), cfg.degree_bound);
      if (cfg.degree_bound > 0 && in.curves.degree_bound() > cfg.degree_bound) {
        throw ValidationError("a curve exceeds the configured degree bound b = " +
                              std::to_string(cfg.degree_bound));
      }
      break;
  }
  return in;
}

std::string SerializeInput(const LabInput& input) {
  return input.is_curves ? SerializeCurveFamilies(input.curves)
                         : SerializeLineFamilies(input.lines);
}

BoundReport RunBoundExperiment(const ExperimentConfig& cfg) {
  return RunBoundExperiment(cfg, BuildInput(cfg));
}

BoundReport RunBoundExperiment(const ExperimentConfig& cfg, const LabInput& input) {
  cfg.Validate();
  const Stopwatch clock;
  BoundReport r;
  r.kind = cfg.kind;
  r.sizes = input.sizes();
  r.duplicates_removed = input.duplicates_removed();
  r.thresholded = cfg.thresholds.has_value();
  r.thresholds = cfg.threshold_query();
  const SearchOptions options = cfg.search_options();
  if (input.is_curves) {
    const auto joints = CurveMultijoints(input.curves);
    r.multijoint_count = static_cast<int64_t>(joints.size());
    r.algebraic_points =
        r.thresholded ? CurveJThreshold(input.curves, r.thresholds, options) : joints;
    r.j_count = static_cast<int64_t>(r.algebraic_points.size());
  } else {
    const LineFamilies& f = input.lines;
    const IncidenceStructure inc = BuildIncidences(f);
    std::vector<int> joint_index;
    for (int p = 0; p < static_cast<int>(inc.points.size()); ++p) {
      if (IsMultijoint(p, inc, f)) joint_index.push_back(p);
    }
    r.multijoint_count = static_cast<int64_t>(joint_index.size());
    std::vector<int> counted;
    if (r.thresholded) {
      for (int p : joint_index) {
        if (HasTransversalSubcollections(p, inc, f, r.thresholds, options)) counted.push_back(p);
      }
    } else {
      counted = joint_index;
    }
    for (int p : counted) {
      r.points.push_back(inc.points[p]);
      r.multiplicities.push_back(Multiplicity(p, inc, f));
    }
    r.j_count = static_cast<int64_t>(counted.size());
  }
  r.ratio_sq = RatioSq(r.j_count, r.thresholds, r.sizes);
  const bool unit_thresholds = r.thresholds.n1 == 1 && r.thresholds.n2 == 1 && r.thresholds.n3 == 1;
  if (cfg.kind == ConfigKind::kGrid && unit_thresholds && r.ratio_sq != 1) {
    throw InvariantViolation("grid n = " + std::to_string(cfg.n) + " gave squared ratio " +
                             ToString(r.ratio_sq) + ", expected 1");
  }
  r.runtime_ms = clock.ms();
  return r;
}

PartitionReport RunPartitionExperiment(const ExperimentConfig& cfg) {
  return RunPartitionExperiment(cfg, BuildInput(cfg));
}

PartitionReport RunPartitionExperiment(const ExperimentConfig& cfg, const LabInput& input) {
  cfg.Validate();
  if (!cfg.seed) throw ValidationError("config: the partition experiment needs a seed");
  const Stopwatch clock;
  PartitionReport r;
  std::vector<Point3> points;
  if (input.is_curves) {
    for (const auto& p : CurveMultijoints(input.curves)) {
      if (p.is_rational()) {
        points.push_back(p.ToPoint3());
      } else {
        ++r.irrational_skipped;
      }
    }
  } else {
    points = Multijoints(input.lines);
  }
  r.point_count = static_cast<int64_t>(points.size());

  BisectOptions bisect;
  bisect.restarts = cfg.partition.restarts;
  Partition part = GkPartition(points, cfg.partition.rounds, cfg.partition.eps, *cfg.seed, bisect);
  std::vector<Line3> lines;
  std::vector<ParamCurve> curves;
  for (int i = 0; i < 3; ++i) {
    if (input.is_curves) {
      curves.insert(curves.end(), input.curves[i].begin(), input.curves[i].end());
    } else {
      lines.insert(lines.end(), input.lines[i].begin(), input.lines[i].end());
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::sort(curves.begin(), curves.end());
  curves.erase(std::unique(curves.begin(), curves.end()), curves.end());
  if (cfg.partition.cube) {
    part = AugmentWithCube(part, points, lines, curves);
    r.cube = true;
  }

  r.rounds = part.schedule.rounds;
  r.eps = part.eps;
  r.seed = part.seed;
  r.degrees = part.schedule.degrees;
  r.total_degree = part.schedule.total_degree;
  r.product_degree = part.product.degree();
  r.c0_approx = part.schedule.c0();
  r.degree_within_bound = part.schedule.WithinCubeRootBound();

  const CellHistogram hist = MakeCellHistogram(part, points);
  r.histogram.assign(hist.counts.begin(), hist.counts.end());
  r.class_count = static_cast<int64_t>(hist.counts.size());
  r.max_class = hist.max_count();
  r.on_z = hist.on_z;
  Rational bound = Rational(Integer(std::to_string(r.point_count)));
  for (int j = 0; j < r.rounds; ++j) bound *= Frac(1, 2) + r.eps;
  r.occupancy_bound = bound;
  // Singleton classes cannot be split further and always pass.
  r.occupancy_within_bound =
      r.max_class <= 1 || WithinOccupancyBound(r.max_class, r.point_count, r.eps, r.rounds);

  // Restriction is a ring map, so the product restricts factor by factor;
  // this avoids expanding the full product on each line.
  std::vector<TriPoly> factors = part.round_polys;
  factors.insert(factors.end(), part.cube_planes.begin(), part.cube_planes.end());
  for (const auto& l : lines) {
    ++r.lines_checked;
    UniPoly prod = UniPoly::Constant(1);
    TriPoly containing = TriPoly::Constant(1);
    bool contained = false;
    for (const auto& f : factors) {
      const UniPoly u = RestrictToLine(f, l);
      if (u.IsZero()) {
        contained = true;
        containing *= f;
      } else {
        prod *= u;
      }
    }
    if (contained) {
      ++r.lines_in_z;
      // Whether a line of Z is critical depends only on the irreducible
      // factors vanishing on it, all of which divide `containing`.
      if (!CriticalLineCensus(containing, {l}).empty()) r.critical_lines.push_back(l);
      continue;
    }
    const int64_t count = SturmDistinctRealRoots(prod);
    r.max_line_incidences = std::max(r.max_line_incidences, count);
    if (count > r.product_degree) r.line_incidences_within_bound = false;
  }
  for (const auto& c : curves) {
    ++r.lines_checked;
    UniPoly prod = UniPoly::Constant(1);
    bool contained = false;
    for (const auto& f : factors) {
      const UniPoly u = RestrictToCurve(f, c);
      if (u.IsZero()) {
        contained = true;
        break;
      }
      prod *= u;
    }
    if (contained) {
      ++r.lines_in_z;
      continue;
    }
    const int64_t count = SturmDistinctRealRoots(prod);
    r.max_line_incidences = std::max(r.max_line_incidences, count);
    if (count > static_cast<int64_t>(c.degree()) * r.product_degree) {
      r.line_incidences_within_bound = false;
    }
  }
  r.critical_within_bound = static_cast<int64_t>(r.critical_lines.size()) <=
                            static_cast<int64_t>(r.product_degree) * r.product_degree;
  r.partition_json = SerializePartition(part);
  r.runtime_ms = clock.ms();
  return r;
}

SamplingExperimentReport RunSamplingExperiment(const ExperimentConfig& cfg) {
  return RunSamplingExperiment(cfg, BuildInput(cfg));
}

SamplingExperimentReport RunSamplingExperiment(const ExperimentConfig& cfg,
                                               const LabInput& input) {
  cfg.Validate();
  if (input.is_curves) throw ValidationError("config: the sampling experiment needs line families");
  if (!cfg.thresholds) throw ValidationError("config: the sampling experiment needs thresholds");
  if (!cfg.seed) throw ValidationError("config: the sampling experiment needs a seed");
  const Stopwatch clock;
  SamplingExperimentReport r;
  r.sizes = input.sizes();
  r.thresholds = cfg.threshold_query();
  r.sampling = SubsampleReduction(input.lines, r.thresholds, cfg.trials, *cfg.seed,
                                  cfg.search_options());
  for (int i = 0; i < 3; ++i) {
    int64_t total = 0;
    for (const auto& s : r.sampling.sampled_sizes) total += s[i];
    r.mean_sizes[i] = Frac(Integer(std::to_string(total)), cfg.trials);
    r.expected_sizes[i] = Frac(Integer(std::to_string(r.sizes[i])),
                               Integer(std::to_string(r.thresholds[i])));
  }
  r.runtime_ms = clock.ms();
  return r;
}

CurvesReport RunCurvesExperiment(const ExperimentConfig& cfg) {
  return RunCurvesExperiment(cfg, BuildInput(cfg));
}

CurvesReport RunCurvesExperiment(const ExperimentConfig& cfg, const LabInput& input) {
  cfg.Validate();
  const Stopwatch clock;
  const CurveFamilies f = input.AsCurves();
  CurvesReport r;
  r.sizes = input.sizes();
  r.degree_bound = f.degree_bound();
  std::set<ParamCurve> doubled;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (const auto& ca : f[a]) {
        for (const auto& cb : f[b]) {
          ++r.pairs;
          const CurveIntersection ix = CurveCurveIntersections(ca, cb);
          if (ix.kind == CurveIntersection::Kind::kIdentical) {
            ++r.identical_pairs;
            doubled.insert(ca);
            continue;
          }
          const auto n = static_cast<int64_t>(ix.points.size());
          r.intersection_points += n;
          r.max_pair_points = std::max(r.max_pair_points, n);
          if (n > static_cast<int64_t>(ca.degree()) * cb.degree()) r.bezout_within_bound = false;
        }
      }
    }
  }
  for (const auto& c : doubled) r.self_crossings += static_cast<int64_t>(SelfCrossings(c).size());
  const auto joints = CurveMultijoints(f);
  r.multijoint_count = static_cast<int64_t>(joints.size());
  r.thresholded = cfg.thresholds.has_value();
  r.thresholds = cfg.threshold_query();
  r.points = r.thresholded ? CurveJThreshold(f, r.thresholds, cfg.search_options()) : joints;
  r.j_count = static_cast<int64_t>(r.points.size());
  r.ratio_sq = RatioSq(r.j_count, r.thresholds, r.sizes);
  r.runtime_ms = clock.ms();
  return r;
}

std::string RenderReport(const BoundReport& r, ReportFormat format, const RenderOptions& o) {
  const double ms = Runtime(r.runtime_ms, o);
  if (format == ReportFormat::kCsv) {
    return "L1,L2,L3,N1,N2,N3,J_count,ratio_sq_num,ratio_sq_den,runtime_ms_approx\n" +
           CsvRow({std::to_string(r.sizes[0]), std::to_string(r.sizes[1]),
                   std::to_string(r.sizes[2]), std::to_string(r.thresholds.n1),
                   std::to_string(r.thresholds.n2), std::to_string(r.thresholds.n3),
                   std::to_string(r.j_count), Num(r.ratio_sq), Den(r.ratio_sq),
                   FormatDouble(ms)});
  }
  Json points = Json::array();
  if (r.algebraic_points.empty()) {
    for (const auto& p : r.points) points.push_back(internal::PointToJson(p));
  } else {
    for (const auto& p : r.algebraic_points) points.push_back(internal::AlgebraicPointToJson(p));
  }
  Json j{{"kind", ToString(r.kind)},
         {"L", Triple(r.sizes)},
         {"N", Triple(r.thresholds)},
         {"thresholded", r.thresholded},
         {"duplicates_removed", r.duplicates_removed},
         {"multijoint_count", r.multijoint_count},
         {"J_count", r.j_count},
         {"ratio_sq", internal::RationalToJson(r.ratio_sq)},
         {"points", std::move(points)},
         {"multiplicities", r.multiplicities},
         {"runtime_ms_approx", ApproxJson(ms)}};
  return j.dump(2) + "\n";
}

std::string RenderReport(const PartitionReport& r, ReportFormat format, const RenderOptions& o) {
  const double ms = Runtime(r.runtime_ms, o);
  if (format == ReportFormat::kCsv) {
    return "points,rounds,eps_num,eps_den,seed,total_degree,product_degree,degree_within_bound,"
           "class_count,max_class,on_z,occupancy_bound_num,occupancy_bound_den,"
           "occupancy_within_bound,lines_checked,lines_in_z,max_line_incidences,"
           "line_incidences_within_bound,critical_lines,c0_approx,runtime_ms_approx\n" +
           CsvRow({std::to_string(r.point_count), std::to_string(r.rounds), Num(r.eps),
                   Den(r.eps), std::to_string(r.seed), std::to_string(r.total_degree),
                   std::to_string(r.product_degree), Bool01(r.degree_within_bound),
                   std::to_string(r.class_count), std::to_string(r.max_class),
                   std::to_string(r.on_z), Num(r.occupancy_bound), Den(r.occupancy_bound),
                   Bool01(r.occupancy_within_bound), std::to_string(r.lines_checked),
                   std::to_string(r.lines_in_z), std::to_string(r.max_line_incidences),
                   Bool01(r.line_incidences_within_bound),
                   std::to_string(r.critical_lines.size()), FormatDouble(r.c0_approx),
                   FormatDouble(ms)});
  }
  Json hist = Json::array();
  for (const auto& [label, count] : r.histogram) {
    hist.push_back(Json{{"label", LabelString(label)}, {"count", count}});
  }
  Json critical = Json::array();
  for (const auto& l : r.critical_lines) critical.push_back(internal::LineToJson(l));
  Json j{{"points", r.point_count},
         {"irrational_skipped", r.irrational_skipped},
         {"rounds", r.rounds},
         {"eps", internal::RationalToJson(r.eps)},
         {"seed", r.seed},
         {"degrees", r.degrees},
         {"total_degree", r.total_degree},
         {"product_degree", r.product_degree},
         {"degree_within_bound", r.degree_within_bound},
         {"c0_approx", ApproxJson(r.c0_approx)},
         {"class_count", r.class_count},
         {"max_class", r.max_class},
         {"on_z", r.on_z},
         {"occupancy_bound", internal::RationalToJson(r.occupancy_bound)},
         {"occupancy_within_bound", r.occupancy_within_bound},
         {"histogram", std::move(hist)},
         {"cube", r.cube},
         {"lines_checked", r.lines_checked},
         {"lines_in_z", r.lines_in_z},
         {"max_line_incidences", r.max_line_incidences},
         {"line_incidences_within_bound", r.line_incidences_within_bound},
         {"critical_lines", std::move(critical)},
         {"critical_within_bound", r.critical_within_bound},
         {"partition", internal::ParseJson(r.partition_json, "partition")},
         {"runtime_ms_approx", ApproxJson(ms)}};
  return j.dump(2) + "\n";
}

std::string RenderReport(const SamplingExperimentReport& r, ReportFormat format,
                         const RenderOptions& o) {
  const double ms = Runtime(r.runtime_ms, o);
  const SamplingReport& s = r.sampling;
  const double survival = s.survival_fraction.get_d();
  if (format == ReportFormat::kCsv) {
    return "trials,seed,N1,N2,N3,L1,L2,L3,J_count,survivors,survival_num,survival_den,"
           "mean_L1_num,mean_L1_den,mean_L2_num,mean_L2_den,mean_L3_num,mean_L3_den,"
           "survival_approx,runtime_ms_approx\n" +
           CsvRow({std::to_string(s.trials), std::to_string(s.seed),
                   std::to_string(r.thresholds.n1), std::to_string(r.thresholds.n2),
                   std::to_string(r.thresholds.n3), std::to_string(r.sizes[0]),
                   std::to_string(r.sizes[1]), std::to_string(r.sizes[2]),
                   std::to_string(s.j_count), std::to_string(s.survivors),
                   Num(s.survival_fraction), Den(s.survival_fraction), Num(r.mean_sizes[0]),
                   Den(r.mean_sizes[0]), Num(r.mean_sizes[1]), Den(r.mean_sizes[1]),
                   Num(r.mean_sizes[2]), Den(r.mean_sizes[2]), FormatDouble(survival),
                   FormatDouble(ms)});
  }
  Json means = Json::array(), expected = Json::array();
  for (int i = 0; i < 3; ++i) {
    means.push_back(internal::RationalToJson(r.mean_sizes[i]));
    expected.push_back(internal::RationalToJson(r.expected_sizes[i]));
  }
  Json j{{"trials", s.trials},
         {"seed", s.seed},
         {"N", Triple(r.thresholds)},
         {"L", Triple(r.sizes)},
         {"J_count", s.j_count},
         {"survivors", s.survivors},
         {"survival_fraction", internal::RationalToJson(s.survival_fraction)},
         {"survival_approx", ApproxJson(survival)},
         {"mean_sizes", std::move(means)},
         {"expected_sizes", std::move(expected)},
         {"sampled_sizes", s.sampled_sizes},
         {"runtime_ms_approx", ApproxJson(ms)}};
  return j.dump(2) + "\n";
}

std::string RenderReport(const CurvesReport& r, ReportFormat format, const RenderOptions& o) {
  const double ms = Runtime(r.runtime_ms, o);
  if (format == ReportFormat::kCsv) {
    return "L1,L2,L3,degree_bound,pairs,identical_pairs,intersection_points,max_pair_points,"
           "bezout_within_bound,self_crossings,multijoint_count,N1,N2,N3,J_count,ratio_sq_num,"
           "ratio_sq_den,runtime_ms_approx\n" +
           CsvRow({std::to_string(r.sizes[0]), std::to_string(r.sizes[1]),
                   std::to_string(r.sizes[2]), std::to_string(r.degree_bound),
                   std::to_string(r.pairs), std::to_string(r.identical_pairs),
                   std::to_string(r.intersection_points), std::to_string(r.max_pair_points),
                   Bool01(r.bezout_within_bound), std::to_string(r.self_crossings),
                   std::to_string(r.multijoint_count), std::to_string(r.thresholds.n1),
                   std::to_string(r.thresholds.n2), std::to_string(r.thresholds.n3),
                   std::to_string(r.j_count), Num(r.ratio_sq), Den(r.ratio_sq),
                   FormatDouble(ms)});
  }
  Json points = Json::array();
  for (const auto& p : r.points) points.push_back(internal::AlgebraicPointToJson(p));
  Json j{{"L", Triple(r.sizes)},
         {"degree_bound", r.degree_bound},
         {"pairs", r.pairs},
         {"identical_pairs", r.identical_pairs},
         {"intersection_points", r.intersection_points},
         {"max_pair_points", r.max_pair_points},
         {"bezout_within_bound", r.bezout_within_bound},
         {"self_crossings", r.self_crossings},
         {"multijoint_count", r.multijoint_count},
         {"N", Triple(r.thresholds)},
         {"thresholded", r.thresholded},
         {"J_count", r.j_count},
         {"ratio_sq", internal::RationalToJson(r.ratio_sq)},
         {"points", std::move(points)},
         {"runtime_ms_approx", ApproxJson(ms)}};
  return j.dump(2) + "\n";
}

template <typename Report>
void EmitReport(const Report& r, ReportFormat format, const std::string& path,
                const RenderOptions& o) {
  WriteTextFile(path, RenderReport(r, format, o));
}

template void EmitReport(const BoundReport&, ReportFormat, const std::string&,
                         const RenderOptions&);
template void EmitReport(const PartitionReport&, ReportFormat, const std::string&,
                         const RenderOptions&);
template void EmitReport(const SamplingExperimentReport&, ReportFormat, const std::string&,
                         const RenderOptions&);
template void EmitReport(const CurvesReport&, ReportFormat, const std::string&,
                         const RenderOptions&);

}  // namespace multijoint
