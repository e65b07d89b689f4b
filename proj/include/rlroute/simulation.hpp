#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rlroute/generators.hpp"
#include "rlroute/graph.hpp"
#include "rlroute/random.hpp"
#include "rlroute/rl.hpp"
#include "rlroute/routing.hpp"
#include "rlroute/traffic.hpp"

namespace rlroute {

enum class UpdatePolicy { None, FullRebuild, RandomOnePerNode, RLOnePerNode };

std::string_view to_string(UpdatePolicy p);
std::optional<UpdatePolicy> parse_update_policy(std::string_view name);

struct SimConfig {
  TopologySpec topology;
  std::uint64_t topology_seed = 1;
  WeightStrategy strategy = WeightStrategy::HopCount;
  WeightParams weights;  // rho is taken from the traffic schedule each step
  UpdatePolicy update_policy = UpdatePolicy::None;
  RLParams rl;  // rl.seed drives the route-update stream for both random policies
  TrafficConfig traffic;
  std::int64_t total_steps = 10000;
  std::int64_t metric_window = 100;
  std::int64_t ttl = 0;              // 0 selects 4n
  std::int64_t buffer_capacity = 0;  // 0 is unbounded; otherwise arrivals to a full queue drop
  std::int64_t drain_steps = 0;      // forwarding-only steps after total_steps

  // Graph-independent checks; throws ValidationError naming the field.
  void validate() const;
  // Resolved hop budget; throws ValidationError when ttl < n.
  std::int64_t effective_ttl(std::size_t node_count) const;

  bool operator==(const SimConfig&) const = default;
};

struct MetricsSample {
  std::int64_t window_start = 0;
  double rho = 0.0;                 // rate in effect at window_start
  double avg_path_length = 0.0;     // hops of packets delivered during the window
  double max_betweenness = 0.0;     // max effective betweenness over the window
  double throughput_pct = 100.0;    // window cohort: delivered / generated
  double max_node_congestion = 0.0; // max over nodes of rho k B / (n-1)
  std::int64_t in_flight = 0;       // at window end
  std::int64_t dropped_ttl = 0;     // cumulative
  std::int64_t dropped_overflow = 0;  // cumulative
  std::int64_t generated_in_window = 0;
  std::int64_t delivered_in_window = 0;  // deliveries that happened in the window
  std::int64_t cohort_delivered = 0;     // of this window's packets, delivered so far
  std::int64_t generated_total = 0;
  std::int64_t delivered_total = 0;

  bool operator==(const MetricsSample&) const = default;
};

struct StepReport {
  std::int64_t routes_recomputed = 0;
  std::int64_t forwards = 0;
  std::int64_t generated = 0;
  std::int64_t delivered = 0;
  std::size_t max_backlog = 0;  // packets left waiting behind a dequeued one
  std::size_t max_node_forwards = 0;
};

struct Totals {
  std::int64_t generated = 0;
  std::int64_t delivered = 0;
  std::int64_t in_flight = 0;
  std::int64_t dropped_ttl = 0;
  std::int64_t dropped_overflow = 0;
  std::int64_t routes_recomputed = 0;
};

// One discrete-time simulation instance. Each step:
//   1. freeze effective betweenness and the scheduled rho into link weights
//   2. run the route update policy against that snapshot
//   3. inject new packets at the tail of their source queues
//   4. every node forwards at most its head packet along the routing table;
//      arrivals join the receiving queue after all nodes have sent
//   5. count a traversal for every forwarding node
//   6. drop undelivered packets that used up the hop budget
//   7. close the metric window when it ends
class Simulation {
 public:
  Simulation(Graph graph, SimConfig config);

  void step();

  // Queues a packet at `source` now, outside the traffic schedule.
  void inject(NodeId source, NodeId destination);

  // Forwarding-only steps (no injection, no new windows) until nothing is in
  // flight or max_steps elapse.
  void drain(std::int64_t max_steps);

  std::int64_t now() const noexcept { return now_; }
  const Graph& graph() const noexcept { return graph_; }
  const SimConfig& config() const noexcept { return config_; }
  const RoutingTable& routing_table() const noexcept { return table_; }
  const QTable& q_table() const noexcept { return q_; }
  const StepReport& last_step() const noexcept { return last_; }
  const Totals& totals() const noexcept { return totals_; }

  // Share of this window's forwarding events made by `node`.
  double effective_betweenness(NodeId node) const;
  std::vector<double> effective_betweenness() const;
  std::size_t queue_length(NodeId node) const { return queues_[node].size(); }

  // Closed windows; throughput reflects deliveries known so far.
  std::vector<MetricsSample> samples() const;

  void set_delivery_observer(std::function<void(const Packet&, std::int64_t)> observer) {
    on_delivery_ = std::move(observer);
  }

 private:
  void enqueue(Packet packet);
  void deliver(std::int32_t slot);
  void release(std::int32_t slot);
  void close_window();
  void advance(bool inject_traffic);
  std::size_t cohort_of(std::int64_t created_at) const;

  Graph graph_;
  SimConfig config_;
  std::int64_t ttl_;
  RoutingTable table_;
  QTable q_;
  Rng traffic_rng_;
  Rng update_rng_;

  std::vector<Packet> packets_;
  std::vector<std::int32_t> free_slots_;
  std::vector<std::deque<std::int32_t>> queues_;
  std::vector<std::int64_t> traversal_;
  std::int64_t window_forwards_ = 0;

  std::int64_t now_ = 0;
  std::int64_t next_packet_id_ = 0;
  std::int64_t window_generated_ = 0;
  std::int64_t window_delivered_ = 0;
  std::int64_t window_hop_sum_ = 0;
  std::vector<std::int64_t> cohort_generated_;
  std::vector<std::int64_t> cohort_delivered_;

  Totals totals_;
  StepReport last_;
  std::vector<MetricsSample> samples_;
  std::function<void(const Packet&, std::int64_t)> on_delivery_;

  std::vector<RouteRequest> requests_;
  std::vector<std::pair<std::int32_t, NodeId>> moves_;
};

struct RunResult {
  Graph graph;
  std::vector<MetricsSample> samples;
  QTable q_table;
  Totals totals;
};

// Builds the topology, iterates total_steps steps, drains, and returns one
// sample per metric window.
RunResult run_simulation(const SimConfig& config);
// Same, on a caller-supplied topology.
RunResult run_simulation(const SimConfig& config, Graph graph);
std::vector<MetricsSample> run(const SimConfig& config);

inline constexpr std::string_view kMetricsCsvHeader =
    "window_start,rho,avg_path_length,max_betweenness,throughput_pct,max_node_congestion,"
    "in_flight,dropped_ttl";

// Header above, one row per window, reals with six decimals.
void write_metrics_csv(std::ostream& out, std::span<const MetricsSample> samples);

}  // namespace rlroute
