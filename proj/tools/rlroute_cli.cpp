#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rlroute/edge_list.hpp"
#include "rlroute/error.hpp"
#include "rlroute/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitRuntime = 2;

struct RunFlags {
  std::string outdir = "results";
  std::optional<int> repeats;
  std::optional<std::uint64_t> seed;
  unsigned jobs = 1;
  std::string load_graph;
  bool dump_graph = false;
  bool dump_qtable = false;
  std::vector<double> gammas;
};

void add_run_flags(CLI::App& cmd, RunFlags& flags) {
  cmd.add_option("--outdir", flags.outdir, "Directory for per-run CSVs and the report")
      ->capture_default_str();
  cmd.add_option("--repeats", flags.repeats, "Override the number of seeds per method")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--seed", flags.seed, "Override the first seed");
  cmd.add_option("--jobs", flags.jobs, "Concurrent runs")->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--load-graph", flags.load_graph,
                 "Use this edge list as the topology of every run");
  cmd.add_flag("--dump-graph", flags.dump_graph, "Write each run's topology as an edge list");
  cmd.add_flag("--dump-qtable", flags.dump_qtable, "Write each learning run's final Q-table");
  cmd.add_option("--gamma", flags.gammas,
                 "Congestion weight exponent; several values run one suite each")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
}

std::string gamma_suffix(double gamma) {
  std::ostringstream s;
  s << gamma;
  std::string out = s.str();
  std::replace(out.begin(), out.end(), '.', 'p');
  return "_gamma" + out;
}

int execute_one(rlroute::ExperimentSpec spec, const RunFlags& flags) {
  if (flags.repeats) spec.repeats = *flags.repeats;
  if (flags.seed) spec.seed = *flags.seed;
  if (!flags.load_graph.empty()) {
    spec.sim.topology.model = rlroute::TopologyModel::EdgeList;
    spec.sim.topology.edge_list_path = flags.load_graph;
  }
  spec.validate();

  rlroute::SuiteOptions options;
  options.outdir = flags.outdir;
  options.jobs = flags.jobs;
  options.dump_graphs = flags.dump_graph;
  options.dump_qtables = flags.dump_qtable;
  const auto result = rlroute::run_suite(spec, options);
  std::cout << result.report.to_table();
  std::cout << "wrote " << (std::filesystem::path(flags.outdir) / spec.name).string() << '\n';
  return kExitOk;
}

int execute(const rlroute::ExperimentSpec& spec, const RunFlags& flags) {
  if (flags.gammas.empty()) return execute_one(spec, flags);
  for (double gamma : flags.gammas) {
    auto variant = spec;
    variant.sim.weights.gamma_exponent = gamma;
    if (flags.gammas.size() > 1) variant.name += gamma_suffix(gamma);
    execute_one(std::move(variant), flags);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congestion-aware routing simulator"};
  app.require_subcommand(1);

  RunFlags run_flags;
  std::string spec_path;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment spec file");
  run_cmd->add_option("spec", spec_path, "Spec JSON file")->required();
  add_run_flags(*run_cmd, run_flags);

  auto* preset_cmd = app.add_subcommand("preset", "Built-in scenarios");
  preset_cmd->require_subcommand(1);
  preset_cmd->add_subcommand("list", "List preset names");

  std::string show_name;
  auto* show_cmd = preset_cmd->add_subcommand("show", "Print a preset as spec JSON");
  show_cmd->add_option("name", show_name)->required();

  RunFlags preset_flags;
  std::string preset_name;
  bool full_sweep = false;
  auto* preset_run = preset_cmd->add_subcommand("run", "Run a preset");
  preset_run->add_option("name", preset_name)->required();
  preset_run->add_flag("--full-sweep", full_sweep, "Extend the schedule until rho reaches rho_max");
  add_run_flags(*preset_run, preset_flags);

  std::string graph_spec_path;
  std::string graph_out;
  std::uint64_t graph_seed = 1;
  auto* dump_cmd = app.add_subcommand("dump-graph", "Generate a spec's topology as an edge list");
  dump_cmd->add_option("spec", graph_spec_path, "Spec JSON file or preset name")->required();
  dump_cmd->add_option("--seed", graph_seed, "Topology seed")->capture_default_str();
  dump_cmd->add_option("-o,--output", graph_out, "Output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  auto spec_from = [](const std::string& name_or_path) {
    if (auto preset = rlroute::find_preset(name_or_path)) return *preset;
    return rlroute::load_spec(name_or_path);
  };

  try {
    if (*run_cmd) return execute(rlroute::load_spec(spec_path), run_flags);
    if (*preset_cmd) {
      if (preset_cmd->got_subcommand("list")) {
        for (const auto& p : rlroute::builtin_presets()) std::cout << p.name << '\n';
        return kExitOk;
      }
      if (*show_cmd) {
        auto preset = rlroute::find_preset(show_name);
        if (!preset) {
          std::cerr << "unknown preset: " << show_name << '\n';
          return kExitInvalid;
        }
        std::cout << rlroute::write_spec(*preset) << '\n';
        return kExitOk;
      }
      auto preset = rlroute::find_preset(preset_name);
      if (!preset) {
        std::cerr << "unknown preset: " << preset_name << '\n';
        return kExitInvalid;
      }
      if (full_sweep) *preset = rlroute::with_full_sweep(std::move(*preset));
      return execute(*preset, preset_flags);
    }
    if (*dump_cmd) {
      const auto spec = spec_from(graph_spec_path);
      const auto graph = rlroute::build_topology(spec.sim.topology, graph_seed);
      if (graph_out.empty()) {
        rlroute::write_edge_list(std::cout, graph);
      } else {
        rlroute::write_edge_list_file(graph_out, graph);
      }
      return kExitOk;
    }
  } catch (const rlroute::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rlroute::ValidationError& e) {
    std::cerr << "invalid spec: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const rlroute::InvalidParameter& e) {
    std::cerr << "invalid parameter: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitOk;
}
