#ifndef MULTIJOINT_LAB_H_
#define MULTIJOINT_LAB_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multijoint/curvegeom.h"
#include "multijoint/generators.h"
#include "multijoint/geometry.h"
#include "multijoint/incidence.h"
#include "multijoint/partition.h"
#include "multijoint/rational.h"

namespace multijoint {

enum class ConfigKind { kGrid, kBush, kRandom, kDegenerate, kFromFile, kCurvesFromFile };

// "grid", "bush", "random", "degenerate", "from-file", "curves-from-file".
ConfigKind ParseConfigKind(const std::string& name);
std::string ToString(ConfigKind kind);

enum class ReportFormat { kCsv, kJson };
ReportFormat ParseReportFormat(const std::string& name);

struct PartitionSettings {
  int rounds = 4;
  Rational eps = Frac(1, 10);
  int restarts = 64;
  // Multiply in the six faces of a bounding cube.
  bool cube = false;
};

// Config file (JSON, "schema": 1):
//   kind          one of the ConfigKind names
//   n             grid size                              (grid)
//   N, m          lines per family at each of m centers  (bush)
//   L, range      family sizes, coordinate range         (random)
//   degenerate    coplanar | concurrent-coplanar | duplicated
//   path          families file, relative to the config  (from-file kinds)
//   b             default degree bound for curves without one
//   seed          required by bush, random, and the partition and sampling
//                 experiments
//   thresholds    [N1, N2, N3], rationals >= 1
//   partition     {rounds, eps, restarts, cube}
//   trials        sampling trials
//   exact_search_limit
//   output        {report, format, families}
struct ExperimentConfig {
  ConfigKind kind = ConfigKind::kGrid;
  int n = 2;
  std::array<int, 3> bush_sizes{1, 1, 1};
  int bush_centers = 1;
  std::array<int, 3> random_sizes{1, 1, 1};
  int random_range = 2;
  DegenerateKind degenerate = DegenerateKind::kCoplanar;
  std::string path;
  int degree_bound = -1;
  std::optional<uint64_t> seed;
  std::optional<std::array<Rational, 3>> thresholds;
  PartitionSettings partition;
  int trials = 2000;
  int exact_search_limit = 12;
  std::string report_path;
  ReportFormat report_format = ReportFormat::kCsv;
  std::string families_path;

  // Range checks and required fields; throws ValidationError.
  void Validate() const;
  ThresholdQuery threshold_query() const;
  SearchOptions search_options() const;
};

// Relative paths resolve against base_dir. Unknown keys are rejected.
ExperimentConfig ParseConfig(std::string_view json_text, const std::string& base_dir = ".");
ExperimentConfig LoadConfig(const std::string& path);

// Families described by a config: lines, or curves for curves-from-file.
struct LabInput {
  bool is_curves = false;
  LineFamilies lines;
  CurveFamilies curves;

  std::array<int64_t, 3> sizes() const;
  std::array<int, 3> duplicates_removed() const;
  // Lines as degree-1 curves when !is_curves.
  CurveFamilies AsCurves() const;
};

LabInput BuildInput(const ExperimentConfig& cfg);

// JSON of the families, in the from-file or curves-from-file format.
std::string SerializeInput(const LabInput& input);

struct BoundReport {
  ConfigKind kind = ConfigKind::kGrid;
  std::array<int64_t, 3> sizes{0, 0, 0};
  std::array<int, 3> duplicates_removed{0, 0, 0};
  // (1, 1, 1) unless thresholds were given.
  ThresholdQuery thresholds;
  bool thresholded = false;
  int64_t multijoint_count = 0;
  // |J_N| when thresholded, else |J|.
  int64_t j_count = 0;
  // j_count^2 N1 N2 N3 / (L1 L2 L3).
  Rational ratio_sq;
  // The counted set, ascending. For lines `multiplicities` runs parallel to
  // `points`; curve inputs fill `algebraic_points` instead.
  std::vector<Point3> points;
  std::vector<int64_t> multiplicities;
  std::vector<AlgebraicPoint3> algebraic_points;
  double runtime_ms = 0;
};

// Counts J (and J_N when thresholds are set) via incidence, or via
// curvegeom for curve inputs. Grid configs must give ratio_sq = 1 when
// unthresholded; otherwise InvariantViolation.
BoundReport RunBoundExperiment(const ExperimentConfig& cfg);
BoundReport RunBoundExperiment(const ExperimentConfig& cfg, const LabInput& input);

struct PartitionReport {
  int64_t point_count = 0;
  // Curve multijoints with irrational coordinates are left out.
  int64_t irrational_skipped = 0;
  int rounds = 0;
  Rational eps;
  uint64_t seed = 0;
  std::vector<int> degrees;
  int total_degree = 0;
  int product_degree = 0;
  double c0_approx = 0;
  bool degree_within_bound = false;
  // point_count (1/2 + eps)^rounds
  Rational occupancy_bound;
  int64_t max_class = 0;
  int64_t class_count = 0;
  int64_t on_z = 0;
  bool occupancy_within_bound = false;
  std::vector<std::pair<CellLabel, int64_t>> histogram;
  bool cube = false;
  // Config lines (or curves) against Z(product): those not contained have at
  // most product_degree incidences (curve degree times that for curves).
  int64_t lines_checked = 0;
  int64_t lines_in_z = 0;
  int64_t max_line_incidences = 0;
  bool line_incidences_within_bound = true;
  // Contained lines that are critical for the square-free product.
  std::vector<Line3> critical_lines;
  bool critical_within_bound = true;
  std::string partition_json;
  double runtime_ms = 0;
};

// Partitions the multijoint set of the config. Requires a seed.
PartitionReport RunPartitionExperiment(const ExperimentConfig& cfg);
PartitionReport RunPartitionExperiment(const ExperimentConfig& cfg, const LabInput& input);

struct SamplingExperimentReport {
  std::array<int64_t, 3> sizes{0, 0, 0};
  ThresholdQuery thresholds;
  SamplingReport sampling;
  // Mean sampled family sizes and their expectations L_i / N_i.
  std::array<Rational, 3> mean_sizes;
  std::array<Rational, 3> expected_sizes;
  double runtime_ms = 0;
};

// Requires line input, thresholds and a seed.
SamplingExperimentReport RunSamplingExperiment(const ExperimentConfig& cfg);
SamplingExperimentReport RunSamplingExperiment(const ExperimentConfig& cfg,
                                               const LabInput& input);

struct CurvesReport {
  std::array<int64_t, 3> sizes{0, 0, 0};
  int degree_bound = 0;
  // Cross-family curve pairs and how their intersections came out.
  int64_t pairs = 0;
  int64_t identical_pairs = 0;
  int64_t intersection_points = 0;
  int64_t max_pair_points = 0;
  bool bezout_within_bound = true;
  int64_t self_crossings = 0;
  int64_t multijoint_count = 0;
  ThresholdQuery thresholds;
  bool thresholded = false;
  int64_t j_count = 0;
  Rational ratio_sq;
  std::vector<AlgebraicPoint3> points;
  double runtime_ms = 0;
};

// Line inputs are treated as degree-1 curves.
CurvesReport RunCurvesExperiment(const ExperimentConfig& cfg);
CurvesReport RunCurvesExperiment(const ExperimentConfig& cfg, const LabInput& input);

// Columns in a fixed order; exact values as "num/den" or integer pairs and
// floating point only in *_approx columns. JSON has sorted keys. With
// `timing` false the runtime is written as 0 so reports are byte-stable.
struct RenderOptions {
  bool timing = true;
};

std::string RenderReport(const BoundReport& r, ReportFormat format, const RenderOptions& o = {});
std::string RenderReport(const PartitionReport& r, ReportFormat format,
                         const RenderOptions& o = {});
std::string RenderReport(const SamplingExperimentReport& r, ReportFormat format,
                         const RenderOptions& o = {});
std::string RenderReport(const CurvesReport& r, ReportFormat format, const RenderOptions& o = {});

// RenderReport written to `path`; IoError names the path.
template <typename Report>
void EmitReport(const Report& r, ReportFormat format, const std::string& path,
                const RenderOptions& o = {});

}  // namespace multijoint

#endif  // MULTIJOINT_LAB_H_
