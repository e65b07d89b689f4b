#include <cmath>

#include "rlroute/experiment.hpp"

namespace rlroute {

namespace {

constexpr double kPresetGammaExponent = 1.0;

std::vector<Method> comparison_methods() {
  return {
      {"echague", WeightStrategy::EchagueCongestion, UpdatePolicy::RandomOnePerNode},
      {"proposed", WeightStrategy::ProposedCongestion, UpdatePolicy::RandomOnePerNode},
      {"proposed_rl", WeightStrategy::ProposedCongestion, UpdatePolicy::RLOnePerNode},
  };
}

ExperimentSpec make_preset(std::string name, TopologySpec topology, TrafficPattern pattern) {
  ExperimentSpec spec;
  spec.name = std::move(name);
  spec.repeats = 10;
  spec.seed = 1;
  spec.methods = comparison_methods();

  SimConfig& sim = spec.sim;
  sim.topology = std::move(topology);
  sim.weights.gamma_exponent = kPresetGammaExponent;
  sim.rl.learning_rate = 0.5;
  sim.rl.discount = 0.8;
  sim.rl.epsilon = 0.1;
  // Zero start, +0.001 every 100 steps, 10,000 steps: rho ends at 0.099.
  sim.traffic.pattern = pattern;
  sim.traffic.rho_initial = 0.0;
  sim.traffic.rho_increment = 0.001;
  sim.traffic.increment_period = 100;
  sim.traffic.rho_max = 0.99;
  sim.total_steps = 10000;
  sim.metric_window = 100;
  sim.topology_seed = sim.traffic.seed = sim.rl.seed = spec.seed;
  return spec;
}

TopologySpec ba(std::size_t n) {
  TopologySpec t;
  t.model = TopologyModel::BarabasiAlbert;
  t.n = n;
  t.m = 3;
  return t;
}

TopologySpec er64() {
  TopologySpec t;
  t.model = TopologyModel::ErdosRenyi;
  t.n = 64;
  t.p = 0.5;
  return t;
}

TopologySpec ws64() {
  TopologySpec t;
  t.model = TopologyModel::WattsStrogatz;
  t.n = 64;
  t.k = 6;
  t.p_rewire = 0.5;
  return t;
}

}  // namespace

std::vector<ExperimentSpec> builtin_presets() {
  return {
      make_preset("scenario1_ba256", ba(256), TrafficPattern::BernoulliRandom),
      make_preset("scenario2_er64", er64(), TrafficPattern::BernoulliRandom),
      make_preset("scenario2_ws64", ws64(), TrafficPattern::BernoulliRandom),
      make_preset("scenario3_ba64_poisson", ba(64), TrafficPattern::Poisson),
      make_preset("scenario3_er64_poisson", er64(), TrafficPattern::Poisson),
      make_preset("scenario3_ws64_poisson", ws64(), TrafficPattern::Poisson),
  };
}

std::optional<ExperimentSpec> find_preset(std::string_view name) {
  for (auto& p : builtin_presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

ExperimentSpec with_full_sweep(ExperimentSpec spec) {
  const auto& tr = spec.sim.traffic;
  if (tr.rho_increment > 0.0) {
    const auto periods =
        static_cast<std::int64_t>(std::ceil((tr.rho_max - tr.rho_initial) / tr.rho_increment - 1e-9));
    std::int64_t steps = periods * tr.increment_period;
    const std::int64_t window = spec.sim.metric_window;
    steps = (steps + window - 1) / window * window;
    spec.sim.total_steps = steps;
  }
  spec.name += "_full_sweep";
  return spec;
}

}  // namespace rlroute
