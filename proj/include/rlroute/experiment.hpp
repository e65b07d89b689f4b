#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rlroute/simulation.hpp"

namespace rlroute {

// One compared configuration: a weight strategy paired with an update policy.
struct Method {
  std::string name;
  WeightStrategy strategy = WeightStrategy::HopCount;
  UpdatePolicy update_policy = UpdatePolicy::None;

  bool operator==(const Method&) const = default;
};

// Repeat r runs every method with seed + r for the topology, traffic and
// update streams, so methods are compared on identical graphs and packets.
struct ExperimentSpec {
  std::string name;
  SimConfig sim;
  int repeats = 1;
  std::uint64_t seed = 1;
  std::vector<Method> methods;

  void validate() const;  // throws ValidationError
  SimConfig run_config(const Method& method, std::uint64_t run_seed) const;

  // Ignores the per-run seeds inside `sim`, which run_config derives.
  bool operator==(const ExperimentSpec& other) const;
};

inline constexpr int kSpecSchemaVersion = 1;

// JSON with "schema_version": 1. Unknown keys are rejected; omitted keys take
// the defaults of the C++ structs. Throws ParseError (with line) on malformed
// JSON and ValidationError (with a dotted field path) on bad values.
ExperimentSpec parse_spec(std::string_view text);
ExperimentSpec load_spec(const std::filesystem::path& path);
nlohmann::ordered_json spec_to_json(const ExperimentSpec& spec);
std::string write_spec(const ExperimentSpec& spec);

// The six Table-style scenarios: BA-256, ER-64 and WS-64 under Bernoulli
// traffic, BA-64, ER-64 and WS-64 under Poisson traffic, each comparing the
// Echague baseline with the proposed weighting with and without learning.
std::vector<ExperimentSpec> builtin_presets();
std::optional<ExperimentSpec> find_preset(std::string_view name);

// Stretches the schedule until rho reaches rho_max (99,000 steps for the
// default 0.001-per-100-steps ramp to 0.99).
ExperimentSpec with_full_sweep(ExperimentSpec spec);

inline constexpr const char* kMetricNames[] = {"avg_path_length", "max_betweenness",
                                               "throughput_pct", "max_node_congestion"};
double metric_value(const MetricsSample& s, std::string_view metric);

struct RunRecord {
  std::string method;
  std::uint64_t seed = 0;
  std::vector<MetricsSample> samples;
  Totals totals;
};

struct MetricSeries {
  std::vector<std::int64_t> windows;
  std::vector<double> median;
  std::vector<double> iqr;
};

struct ComparisonReport {
  std::string spec_name;
  std::vector<std::string> methods;
  // method -> metric -> per-window median/IQR over repeats
  std::map<std::string, std::map<std::string, MetricSeries>> per_method;
  // "a/b" -> metric -> ratio of final-window medians (nonzero denominators only)
  std::map<std::string, std::map<std::string, double>> ratios;

  nlohmann::ordered_json to_json(const ExperimentSpec& spec) const;
  std::string to_table() const;
};

ComparisonReport build_report(const ExperimentSpec& spec, std::span<const RunRecord> runs);

struct SuiteOptions {
  std::optional<std::filesystem::path> outdir;  // nothing is written when empty
  unsigned jobs = 1;
  bool dump_graphs = false;
  bool dump_qtables = false;
};

struct SuiteResult {
  std::vector<RunRecord> runs;  // method-major, then seed
  ComparisonReport report;
};

// Executes repeats x methods runs, up to `jobs` at a time. With an outdir,
// writes <outdir>/<spec>/<method>/<seed>.csv and <outdir>/<spec>/report.json
// (plus report.txt). A failing run aborts the suite with SuiteFailure.
SuiteResult run_suite(const ExperimentSpec& spec, const SuiteOptions& options = {});

class SuiteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rlroute
