// mjlab: command line front end for the experiment drivers.
//
//   mjlab [--seed S] [--out PATH] [--format csv|json] [--exact-search-limit K]
//         <gen|count|threshold|partition|sample|curves> [--config FILE] [overrides]
//
// Exit codes: 0 success, 2 validation or I/O failure, 3 computation failure.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <array>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "multijoint/errors.h"
#include "multijoint/generators.h"
#include "multijoint/io.h"
#include "multijoint/lab.h"

namespace {

using multijoint::ExperimentConfig;

constexpr int kExitValidation = 2;
constexpr int kExitComputation = 3;

struct Options {
  std::optional<uint64_t> seed;
  std::string out;
  std::string format;
  std::optional<int> exact_search_limit;
  bool no_timing = false;
  std::string log_level = "warn";

  std::string config;
  std::string kind;
  std::optional<int> n;
  std::vector<int> bush_sizes;
  std::optional<int> centers;
  std::vector<int> random_sizes;
  std::optional<int> range;
  std::string degenerate;
  std::string path;
  std::optional<int> degree_bound;
  std::vector<std::string> thresholds;
  std::optional<int> rounds;
  std::string eps;
  std::optional<int> restarts;
  bool cube = false;
  std::optional<int> trials;
  std::string partition_out;
};

std::array<int, 3> Triple(const std::vector<int>& v) { return {v[0], v[1], v[2]}; }

ExperimentConfig BuildConfig(const Options& o) {
  ExperimentConfig cfg;
  if (!o.config.empty()) {
    cfg = multijoint::LoadConfig(o.config);
  } else if (o.kind.empty()) {
    throw multijoint::ValidationError("give --config or --kind");
  }
  if (!o.kind.empty()) cfg.kind = multijoint::ParseConfigKind(o.kind);
  if (o.n) cfg.n = *o.n;
  if (!o.bush_sizes.empty()) cfg.bush_sizes = Triple(o.bush_sizes);
  if (o.centers) cfg.bush_centers = *o.centers;
  if (!o.random_sizes.empty()) cfg.random_sizes = Triple(o.random_sizes);
  if (o.range) cfg.random_range = *o.range;
  if (!o.degenerate.empty()) cfg.degenerate = multijoint::ParseDegenerateKind(o.degenerate);
  if (!o.path.empty()) cfg.path = o.path;
  if (o.degree_bound) cfg.degree_bound = *o.degree_bound;
  if (o.seed) cfg.seed = *o.seed;
  if (!o.thresholds.empty()) {
    std::array<multijoint::Rational, 3> t;
    for (int i = 0; i < 3; ++i) t[i] = multijoint::ParseRational(o.thresholds[i]);
    cfg.thresholds = t;
  }
  if (o.rounds) cfg.partition.rounds = *o.rounds;
  if (!o.eps.empty()) cfg.partition.eps = multijoint::ParseRational(o.eps);
  if (o.restarts) cfg.partition.restarts = *o.restarts;
  if (o.cube) cfg.partition.cube = true;
  if (o.trials) cfg.trials = *o.trials;
  if (o.exact_search_limit) cfg.exact_search_limit = *o.exact_search_limit;
  if (!o.format.empty()) cfg.report_format = multijoint::ParseReportFormat(o.format);
  cfg.Validate();
  return cfg;
}

// Writes to `path`, or stdout when it is empty.
void Output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    multijoint::WriteTextFile(path, text);
  }
}

template <typename Report>
void Emit(const Report& r, const ExperimentConfig& cfg, const Options& o) {
  multijoint::RenderOptions render;
  render.timing = !o.no_timing;
  const std::string path = o.out.empty() ? cfg.report_path : o.out;
  if (path.empty()) {
    Output("", multijoint::RenderReport(r, cfg.report_format, render));
  } else {
    multijoint::EmitReport(r, cfg.report_format, path, render);
  }
}

int Run(const std::string& command, const Options& o) {
  ExperimentConfig cfg = BuildConfig(o);
  if (command == "gen") {
    const std::string text = multijoint::SerializeInput(multijoint::BuildInput(cfg)) + "\n";
    Output(o.out.empty() ? cfg.families_path : o.out, text);
  } else if (command == "count") {
    cfg.thresholds.reset();
    Emit(multijoint::RunBoundExperiment(cfg), cfg, o);
  } else if (command == "threshold") {
    if (!cfg.thresholds) throw multijoint::ValidationError("threshold needs --thresholds");
    Emit(multijoint::RunBoundExperiment(cfg), cfg, o);
  } else if (command == "partition") {
    const multijoint::PartitionReport r = multijoint::RunPartitionExperiment(cfg);
    if (!o.partition_out.empty()) multijoint::WriteTextFile(o.partition_out, r.partition_json + "\n");
    Emit(r, cfg, o);
  } else if (command == "sample") {
    Emit(multijoint::RunSamplingExperiment(cfg), cfg, o);
  } else if (command == "curves") {
    Emit(multijoint::RunCurvesExperiment(cfg), cfg, o);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact multijoint experiments on line and curve configurations"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--seed", o.seed, "Seed for randomized generators and experiments");
  app.add_option("--out", o.out, "Output file (default: config output path or stdout)");
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--exact-search-limit", o.exact_search_limit,
                 "Largest per-family candidate count searched exhaustively");
  app.add_flag("--no-timing", o.no_timing, "Write runtime columns as 0 for byte-stable output");
  app.add_option("--log-level", o.log_level, "spdlog level for diagnostics on stderr")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "Write the configured families as a JSON families file"},
      {"count", "Count multijoints and the squared sharpness ratio"},
      {"threshold", "Count the thresholded set J_N"},
      {"partition", "Iterated polynomial partition of the multijoint set"},
      {"sample", "Random subsampling of the families with probability 1/N_i"},
      {"curves", "Curve intersections and multijoints (lines as degree-1 curves)"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    sub->add_option("--config", o.config, "Experiment config (JSON, schema 1)");
    sub->add_option("--kind", o.kind, "grid | bush | random | degenerate | from-file | curves-from-file");
    sub->add_option("--n", o.n, "Grid size");
    sub->add_option("--N", o.bush_sizes, "Bush lines per family at each center")->expected(3);
    sub->add_option("--m", o.centers, "Bush centers");
    sub->add_option("--L", o.random_sizes, "Random family sizes")->expected(3);
    sub->add_option("--range", o.range, "Random coordinate range");
    sub->add_option("--degenerate", o.degenerate, "coplanar | concurrent-coplanar | duplicated");
    sub->add_option("--path", o.path, "Families file for the from-file kinds");
    sub->add_option("--b", o.degree_bound, "Default curve degree bound");
    sub->add_option("--thresholds", o.thresholds, "N1 N2 N3 as integers or num/den")->expected(3);
    sub->add_option("--rounds", o.rounds, "Partition rounds J");
    sub->add_option("--eps", o.eps, "Partition slack eps in [0, 1/2)");
    sub->add_option("--restarts", o.restarts, "Bisection restarts per round");
    sub->add_flag("--cube", o.cube, "Add the six bounding cube faces to the partition");
    sub->add_option("--trials", o.trials, "Sampling trials");
    if (name == "partition") {
      sub->add_option("--partition-out", o.partition_out, "Also write the partition JSON here");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  auto logger = spdlog::stderr_color_mt("mjlab");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::from_str(o.log_level));

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return Run(command, o);
  } catch (const multijoint::Error& e) {
    std::cerr << "mjlab " << command << ": " << e.what() << "\n";
    return e.category() == multijoint::Error::Category::kComputation ? kExitComputation
                                                                      : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "mjlab " << command << ": internal error: " << e.what() << "\n";
    return kExitComputation;
  }
}
