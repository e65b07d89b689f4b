#include "rlroute/simulation.hpp"

#include <algorithm>
#include <cassert>
#include <iomanip>
#include <ostream>
#include <string>

#include "rlroute/error.hpp"

namespace rlroute {

std::string_view to_string(UpdatePolicy p) {
  switch (p) {
    case UpdatePolicy::None: return "none";
    case UpdatePolicy::FullRebuild: return "full_rebuild";
    case UpdatePolicy::RandomOnePerNode: return "random_one_per_node";
    case UpdatePolicy::RLOnePerNode: return "rl_one_per_node";
  }
  return "unknown";
}

std::optional<UpdatePolicy> parse_update_policy(std::string_view name) {
  for (UpdatePolicy p : {UpdatePolicy::None, UpdatePolicy::FullRebuild,
                         UpdatePolicy::RandomOnePerNode, UpdatePolicy::RLOnePerNode}) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

void SimConfig::validate() const {
  if (total_steps < 1) throw ValidationError("total_steps", "must be >= 1");
  if (metric_window < 1) throw ValidationError("metric_window", "must be >= 1");
  if (total_steps % metric_window != 0) {
    throw ValidationError("metric_window", "must divide total_steps");
  }
  if (ttl < 0) throw ValidationError("ttl", "must be >= 0 (0 selects 4n)");
  if (buffer_capacity < 0) throw ValidationError("buffer_capacity", "must be >= 0");
  if (drain_steps < 0) throw ValidationError("drain_steps", "must be >= 0");
  if (weights.gamma_exponent < 0.0) throw ValidationError("weights.gamma_exponent", "must be >= 0");
  try {
    rl.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("rl." + e.field(), e.message());
  }
  try {
    traffic.validate();
  } catch (const ValidationError& e) {
    throw ValidationError("traffic." + e.field(), e.message());
  }
}

std::int64_t SimConfig::effective_ttl(std::size_t node_count) const {
  const auto n = static_cast<std::int64_t>(node_count);
  if (ttl == 0) return 4 * n;
  if (ttl < n) throw ValidationError("ttl", "must be >= the node count");
  return ttl;
}

Simulation::Simulation(Graph graph, SimConfig config)
    : graph_(std::move(graph)),
      config_(std::move(config)),
      ttl_(0),
      traffic_rng_(config_.traffic.seed, Stream::Traffic),
      update_rng_(config_.rl.seed, Stream::Updates) {
  config_.validate();
  const std::size_t n = graph_.node_count();
  if (n < 2) throw InvalidParameter("simulation needs at least two nodes");
  if (!is_connected(graph_)) throw InvalidParameter("simulation requires a connected graph");
  ttl_ = config_.effective_ttl(n);

  WeightParams initial = config_.weights;
  initial.rho = 0.0;
  table_ = full_table_rebuild(graph_, LinkWeights(graph_, config_.strategy, initial,
                                                  NodeStats::zeros(n)));
  q_ = QTable(n);
  queues_.resize(n);
  traversal_.assign(n, 0);
  const auto windows = static_cast<std::size_t>(config_.total_steps / config_.metric_window);
  cohort_generated_.assign(windows, 0);
  cohort_delivered_.assign(windows, 0);
  samples_.reserve(windows);
}

double Simulation::effective_betweenness(NodeId node) const {
  return static_cast<double>(traversal_[node]) /
         static_cast<double>(std::max<std::int64_t>(1, window_forwards_));
}

std::vector<double> Simulation::effective_betweenness() const {
  std::vector<double> out(graph_.node_count());
  for (NodeId v = 0; static_cast<std::size_t>(v) < out.size(); ++v) out[v] = effective_betweenness(v);
  return out;
}

std::size_t Simulation::cohort_of(std::int64_t created_at) const {
  return static_cast<std::size_t>(created_at / config_.metric_window);
}

void Simulation::enqueue(Packet packet) {
  const std::size_t cohort = cohort_of(packet.created_at);
  if (cohort >= cohort_generated_.size()) {
    cohort_generated_.resize(cohort + 1, 0);
    cohort_delivered_.resize(cohort + 1, 0);
  }
  ++cohort_generated_[cohort];
  ++window_generated_;
  ++totals_.generated;
  ++last_.generated;

  auto& queue = queues_[packet.source];
  if (config_.buffer_capacity > 0 &&
      static_cast<std::int64_t>(queue.size()) >= config_.buffer_capacity) {
    ++totals_.dropped_overflow;
    return;
  }
  std::int32_t slot;
  if (free_slots_.empty()) {
    slot = static_cast<std::int32_t>(packets_.size());
    packets_.push_back(packet);
  } else {
    slot = free_slots_.back();
    free_slots_.pop_back();
    packets_[slot] = packet;
  }
  queue.push_back(slot);
  ++totals_.in_flight;
}

void Simulation::inject(NodeId source, NodeId destination) {
  if (!graph_.contains(source) || !graph_.contains(destination) || source == destination) {
    throw InvalidParameter("invalid packet endpoints");
  }
  enqueue({next_packet_id_++, source, destination, now_, 0, source});
}

void Simulation::release(std::int32_t slot) {
  free_slots_.push_back(slot);
  --totals_.in_flight;
}

void Simulation::deliver(std::int32_t slot) {
  const Packet& p = packets_[slot];
  ++window_delivered_;
  window_hop_sum_ += p.hops_taken;
  ++cohort_delivered_[cohort_of(p.created_at)];
  ++totals_.delivered;
  ++last_.delivered;
  if (on_delivery_) on_delivery_(p, now_ + 1);
  release(slot);
}

void Simulation::step() { advance(true); }

void Simulation::drain(std::int64_t max_steps) {
  for (std::int64_t i = 0; i < max_steps && totals_.in_flight > 0; ++i) advance(false);
}

void Simulation::advance(bool inject_traffic) {
  const std::int64_t t = now_;
  const std::size_t n = graph_.node_count();
  const double rho = rho_at(config_.traffic, std::min(t, config_.total_steps - 1));
  last_ = StepReport{};

  // 1-2. Snapshot and route updates.
  if (config_.update_policy != UpdatePolicy::None) {
    WeightParams params = config_.weights;
    params.rho = rho;
    const NodeStats stats{effective_betweenness()};
    const LinkWeights weights(graph_, config_.strategy, params, stats);
    switch (config_.update_policy) {
      case UpdatePolicy::None:
        break;
      case UpdatePolicy::FullRebuild:
        table_ = full_table_rebuild(graph_, weights);
        last_.routes_recomputed = static_cast<std::int64_t>(n * (n - 1));
        break;
      case UpdatePolicy::RandomOnePerNode: {
        requests_.resize(n);
        for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
          auto d = static_cast<NodeId>(update_rng_.below(n - 1));
          if (d >= s) ++d;
          requests_[s] = {s, d};
        }
        update_routes(table_, graph_, weights, requests_);
        last_.routes_recomputed = static_cast<std::int64_t>(n);
        break;
      }
      case UpdatePolicy::RLOnePerNode:
        rl_step(q_, table_, graph_, weights, config_.rl, config_.rl.epsilon_at(t), update_rng_);
        last_.routes_recomputed = static_cast<std::int64_t>(n);
        break;
    }
    totals_.routes_recomputed += last_.routes_recomputed;
  }

  // 3. Injection.
  if (inject_traffic) {
    for (Packet& p :
         generate_packets(graph_, rho, config_.traffic.pattern, t, traffic_rng_, next_packet_id_)) {
      enqueue(p);
    }
  }

  // 4-6. Forwarding, traversal counting, hop budget.
  moves_.clear();
  for (NodeId v = 0; static_cast<std::size_t>(v) < n; ++v) {
    auto& queue = queues_[v];
    if (queue.empty()) continue;
    const std::int32_t slot = queue.front();
    queue.pop_front();
    last_.max_backlog = std::max(last_.max_backlog, queue.size());
    last_.max_node_forwards = 1;

    Packet& p = packets_[slot];
    const NodeId next = table_.next_hop(v, p.destination);
    assert(graph_.has_edge(v, next));
    ++p.hops_taken;
    ++traversal_[v];
    ++window_forwards_;
    ++last_.forwards;

    if (next == p.destination) {
      p.current_node = next;
      deliver(slot);
    } else if (p.hops_taken >= ttl_) {
      ++totals_.dropped_ttl;
      release(slot);
    } else {
      moves_.emplace_back(slot, next);
    }
  }
  for (const auto& [slot, next] : moves_) {
    auto& queue = queues_[next];
    if (config_.buffer_capacity > 0 &&
        static_cast<std::int64_t>(queue.size()) >= config_.buffer_capacity) {
      ++totals_.dropped_overflow;
      release(slot);
      continue;
    }
    packets_[slot].current_node = next;
    queue.push_back(slot);
  }

  ++now_;
  // 7. Metrics.
  if (inject_traffic && now_ % config_.metric_window == 0 && now_ <= config_.total_steps) {
    close_window();
  }
}

void Simulation::close_window() {
  const std::size_t n = graph_.node_count();
  MetricsSample s;
  s.window_start = now_ - config_.metric_window;
  s.rho = rho_at(config_.traffic, s.window_start);
  s.avg_path_length = window_delivered_ > 0 ? static_cast<double>(window_hop_sum_) /
                                                  static_cast<double>(window_delivered_)
                                            : 0.0;
  for (NodeId v = 0; static_cast<std::size_t>(v) < n; ++v) {
    const double b = effective_betweenness(v);
    s.max_betweenness = std::max(s.max_betweenness, b);
    s.max_node_congestion =
        std::max(s.max_node_congestion, node_congestion_proposed(s.rho, graph_.degree(v), b, n));
  }
  s.in_flight = totals_.in_flight;
  s.dropped_ttl = totals_.dropped_ttl;
  s.dropped_overflow = totals_.dropped_overflow;
  s.generated_in_window = window_generated_;
  s.delivered_in_window = window_delivered_;
  s.generated_total = totals_.generated;
  s.delivered_total = totals_.delivered;
  samples_.push_back(s);

  std::fill(traversal_.begin(), traversal_.end(), 0);
  window_forwards_ = 0;
  window_generated_ = 0;
  window_delivered_ = 0;
  window_hop_sum_ = 0;
}

std::vector<MetricsSample> Simulation::samples() const {
  std::vector<MetricsSample> out = samples_;
  for (std::size_t w = 0; w < out.size(); ++w) {
    const std::int64_t generated = cohort_generated_[w];
    out[w].cohort_delivered = cohort_delivered_[w];
    out[w].throughput_pct =
        generated == 0 ? 100.0
                       : 100.0 * static_cast<double>(cohort_delivered_[w]) /
                             static_cast<double>(generated);
  }
  return out;
}

RunResult run_simulation(const SimConfig& config, Graph graph) {
  Simulation sim(std::move(graph), config);
  for (std::int64_t t = 0; t < config.total_steps; ++t) sim.step();
  sim.drain(config.drain_steps);
  return {sim.graph(), sim.samples(), sim.q_table(), sim.totals()};
}

RunResult run_simulation(const SimConfig& config) {
  config.validate();
  return run_simulation(config, build_topology(config.topology, config.topology_seed));
}

std::vector<MetricsSample> run(const SimConfig& config) { return run_simulation(config).samples; }

void write_metrics_csv(std::ostream& out, std::span<const MetricsSample> samples) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << kMetricsCsvHeader << '\n' << std::fixed << std::setprecision(6);
  for (const auto& s : samples) {
    out << s.window_start << ',' << s.rho << ',' << s.avg_path_length << ',' << s.max_betweenness
        << ',' << s.throughput_pct << ',' << s.max_node_congestion << ',' << s.in_flight << ','
        << s.dropped_ttl << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace rlroute
