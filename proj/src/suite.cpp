#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "rlroute/edge_list.hpp"
#include "rlroute/experiment.hpp"
#include "rlroute/stats.hpp"

namespace rlroute {

double metric_value(const MetricsSample& s, std::string_view metric) {
  if (metric == "avg_path_length") return s.avg_path_length;
  if (metric == "max_betweenness") return s.max_betweenness;
  if (metric == "throughput_pct") return s.throughput_pct;
  if (metric == "max_node_congestion") return s.max_node_congestion;
  throw std::invalid_argument("unknown metric " + std::string(metric));
}

ComparisonReport build_report(const ExperimentSpec& spec, std::span<const RunRecord> runs) {
  ComparisonReport report;
  report.spec_name = spec.name;
  for (const auto& m : spec.methods) report.methods.push_back(m.name);

  for (const auto& method : report.methods) {
    std::vector<const RunRecord*> mine;
    for (const auto& r : runs) {
      if (r.method == method) mine.push_back(&r);
    }
    if (mine.empty()) continue;
    std::size_t windows = mine.front()->samples.size();
    for (const auto* r : mine) windows = std::min(windows, r->samples.size());

    for (const char* metric : kMetricNames) {
      MetricSeries series;
      std::vector<double> values(mine.size());
      for (std::size_t w = 0; w < windows; ++w) {
        for (std::size_t i = 0; i < mine.size(); ++i) values[i] = metric_value(mine[i]->samples[w], metric);
        series.windows.push_back(mine.front()->samples[w].window_start);
        series.median.push_back(median(values));
        series.iqr.push_back(iqr(values));
      }
      report.per_method[method][metric] = std::move(series);
    }
  }

  for (const auto& a : report.methods) {
    for (const auto& b : report.methods) {
      if (a == b || !report.per_method.contains(a) || !report.per_method.contains(b)) continue;
      for (const char* metric : kMetricNames) {
        const auto& num = report.per_method[a][metric].median;
        const auto& den = report.per_method[b][metric].median;
        if (num.empty() || den.empty() || den.back() == 0.0) continue;
        report.ratios[a + "/" + b][metric] = num.back() / den.back();
      }
    }
  }
  return report;
}

nlohmann::ordered_json ComparisonReport::to_json(const ExperimentSpec& spec) const {
  nlohmann::ordered_json out;
  out["spec"] = spec_to_json(spec);
  nlohmann::ordered_json methods_json = nlohmann::ordered_json::object();
  for (const auto& method : methods) {
    auto it = per_method.find(method);
    if (it == per_method.end()) continue;
    nlohmann::ordered_json metrics = nlohmann::ordered_json::object();
    for (const char* metric : kMetricNames) {
      const auto& s = it->second.at(metric);
      metrics[metric] = {{"windows", s.windows}, {"median", s.median}, {"iqr", s.iqr}};
    }
    methods_json[method] = std::move(metrics);
  }
  out["per_method"] = std::move(methods_json);
  nlohmann::ordered_json ratios_json = nlohmann::ordered_json::object();
  for (const auto& [pair, metrics] : ratios) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (const char* metric : kMetricNames) {
      if (auto it = metrics.find(metric); it != metrics.end()) row[metric] = it->second;
    }
    ratios_json[pair] = std::move(row);
  }
  out["ratios"] = std::move(ratios_json);
  return out;
}

std::string ComparisonReport::to_table() const {
  std::ostringstream out;
  out << spec_name << ": final-window medians (IQR)\n";
  out << std::left << std::setw(16) << "method";
  for (const char* metric : kMetricNames) out << std::setw(28) << metric;
  out << '\n' << std::fixed << std::setprecision(6);
  for (const auto& method : methods) {
    auto it = per_method.find(method);
    if (it == per_method.end()) continue;
    out << std::setw(16) << method;
    for (const char* metric : kMetricNames) {
      const auto& s = it->second.at(metric);
      std::ostringstream cell;
      cell << std::fixed << std::setprecision(6);
      if (!s.median.empty()) cell << s.median.back() << " (" << s.iqr.back() << ")";
      out << std::setw(28) << cell.str();
    }
    out << '\n';
  }
  return out.str();
}

SuiteResult run_suite(const ExperimentSpec& spec, const SuiteOptions& options) {
  spec.validate();
  struct Job {
    const Method* method;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (const auto& m : spec.methods) {
    for (int r = 0; r < spec.repeats; ++r) jobs.push_back({&m, spec.seed + static_cast<std::uint64_t>(r)});
  }

  std::filesystem::path root;
  if (options.outdir) {
    root = *options.outdir / spec.name;
    for (const auto& m : spec.methods) std::filesystem::create_directories(root / m.name);
    if (options.dump_graphs) std::filesystem::create_directories(root / "graphs");
  }

  std::vector<RunRecord> records(jobs.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::string failure;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      {
        std::lock_guard lock(failure_mutex);
        if (!failure.empty()) return;
      }
      const Job& job = jobs[i];
      try {
        const SimConfig config = spec.run_config(*job.method, job.seed);
        RunResult result = run_simulation(config);
        if (options.outdir) {
          const auto stem = std::to_string(job.seed);
          std::ofstream csv(root / job.method->name / (stem + ".csv"));
          write_metrics_csv(csv, result.samples);
          if (!csv) throw std::runtime_error("cannot write metrics CSV");
          if (options.dump_graphs) {
            write_edge_list_file(root / "graphs" / (stem + ".edges"), result.graph);
          }
          if (options.dump_qtables && job.method->update_policy == UpdatePolicy::RLOnePerNode) {
            std::ofstream q(root / job.method->name / (stem + ".qtable.csv"));
            write_qtable_csv(q, result.q_table);
          }
        }
        records[i] = {job.method->name, job.seed, std::move(result.samples), result.totals};
      } catch (const std::exception& e) {
        std::lock_guard lock(failure_mutex);
        if (failure.empty()) {
          failure = "run failed (method " + job.method->name + ", seed " +
                    std::to_string(job.seed) + "): " + e.what();
        }
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.jobs, jobs.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (!failure.empty()) throw SuiteFailure(failure);

  SuiteResult result{std::move(records), {}};
  result.report = build_report(spec, result.runs);
  if (options.outdir) {
    std::ofstream json_out(root / "report.json");
    json_out << result.report.to_json(spec).dump(2) << '\n';
    std::ofstream table_out(root / "report.txt");
    table_out << result.report.to_table();
  }
  return result;
}

}  // namespace rlroute
