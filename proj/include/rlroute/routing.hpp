#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rlroute/graph.hpp"

namespace rlroute {

enum class WeightStrategy {
  HopCount,
  EfficientPath,
  BetweennessEdge,
  DegreeBetweennessEdge,
  EchagueCongestion,
  ProposedCongestion,
};

inline constexpr WeightStrategy kAllWeightStrategies[] = {
    WeightStrategy::HopCount,          WeightStrategy::EfficientPath,
    WeightStrategy::BetweennessEdge,   WeightStrategy::DegreeBetweennessEdge,
    WeightStrategy::EchagueCongestion, WeightStrategy::ProposedCongestion,
};

std::string_view to_string(WeightStrategy s);
std::optional<WeightStrategy> parse_weight_strategy(std::string_view name);

struct WeightParams {
  double gamma_exponent = 1.0;  // exponent of the congestion node weight
  double beta = 1.0;            // degree exponent of the efficient-path cost
  double alpha_exponent = 1.0;  // exponent of the betweenness edge weights
  double rho = 0.0;             // generation rate currently in effect

  bool operator==(const WeightParams&) const = default;
};

// Per-node dynamic state that link weights read. Degrees come from the graph.
struct NodeStats {
  std::vector<double> effective_betweenness;

  static NodeStats zeros(std::size_t n) { return {std::vector<double>(n, 0.0)}; }
};

// rho * k * B / (n - 1). Requires n >= 2.
double node_congestion_proposed(double rho, std::size_t degree, double effective_betweenness,
                                std::size_t n);
// rho * B / (n - 1): the degree-free form used by the Echague baseline.
double node_congestion_echague(double rho, double effective_betweenness, std::size_t n);
// (1 + C)^gamma.
double node_weight(double congestion, double gamma_exponent);

// Link weights for one stats snapshot, precomputed per arc. Each strategy is
// a per-node term combined over the two endpoints:
//   HopCount               1
//   EfficientPath          (k_i^beta + k_j^beta) / 2
//   BetweennessEdge        (1+B_i)^alpha + (1+B_j)^alpha
//   DegreeBetweennessEdge  ((1+B_i) k_i)^alpha + ((1+B_j) k_j)^alpha
//   EchagueCongestion      max(W_i, W_j), C = rho B / (n-1)
//   ProposedCongestion     max(W_i, W_j), C = rho k B / (n-1)
class LinkWeights {
 public:
  LinkWeights(const Graph& g, WeightStrategy strategy, const WeightParams& params,
              const NodeStats& stats);

  // Arbitrary symmetric weights: weight(u, v) is evaluated once per edge with
  // u < v and must be positive. `g` must outlive the result.
  static LinkWeights custom(const Graph& g, const std::function<double(NodeId, NodeId)>& weight);

  // Weight of the link i-j; the caller guarantees adjacency.
  double operator()(NodeId i, NodeId j) const {
    return graph_ ? lookup(i, j) : combine(node_terms_[i], node_terms_[j]);
  }
  double arc(std::size_t arc_index) const { return arcs_[arc_index]; }
  double node_term(NodeId v) const { return node_terms_[v]; }
  WeightStrategy strategy() const noexcept { return strategy_; }

 private:
  LinkWeights() = default;
  double combine(double a, double b) const;
  double lookup(NodeId i, NodeId j) const;

  WeightStrategy strategy_ = WeightStrategy::HopCount;
  const Graph* graph_ = nullptr;  // set only for custom weights
  std::vector<double> node_terms_;
  std::vector<double> arcs_;
};

// Checked single-link evaluation; throws NonAdjacentNodes.
double link_weight(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                   const NodeStats& stats, NodeId i, NodeId j);

struct Route {
  std::vector<NodeId> nodes;  // source first, destination last
  double cost = 0.0;
};

// Least-weight simple path from src to dst via binary-heap Dijkstra grown
// from dst. Among equal-cost alternatives every node takes the lowest-id next
// hop. Throws UnreachableDestination, InvalidParameter when src == dst.
Route least_weight_path(const Graph& g, const LinkWeights& weights, NodeId src, NodeId dst);
Route least_weight_path(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                        const NodeStats& stats, NodeId src, NodeId dst);

// Dense next-hop and path-cost table over ordered (source, destination)
// pairs. Diagonal entries are unused (next hop -1, cost 0).
class RoutingTable {
 public:
  RoutingTable() = default;
  explicit RoutingTable(std::size_t node_count);

  std::size_t node_count() const noexcept { return n_; }
  NodeId next_hop(NodeId source, NodeId destination) const { return next_hop_[index(source, destination)]; }
  double path_cost(NodeId source, NodeId destination) const { return path_cost_[index(source, destination)]; }
  void set(NodeId source, NodeId destination, NodeId next_hop, double cost);

  // Follows next hops from source; nullopt on a loop or a missing entry.
  std::optional<std::vector<NodeId>> walk(NodeId source, NodeId destination) const;

  bool operator==(const RoutingTable&) const = default;

 private:
  std::size_t index(NodeId s, NodeId d) const { return static_cast<std::size_t>(s) * n_ + d; }

  std::size_t n_ = 0;
  std::vector<NodeId> next_hop_;
  std::vector<double> path_cost_;
};

// All n(n-1) routes, one shortest-path tree per destination.
RoutingTable full_table_rebuild(const Graph& g, const LinkWeights& weights);
RoutingTable full_table_rebuild(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                                const NodeStats& stats);

struct RouteRequest {
  NodeId source;
  NodeId destination;
};

// Recomputes the route for (source, destination) and overwrites the entries
// of every node on the new path toward destination. Nothing else changes.
Route update_single_route(RoutingTable& table, const Graph& g, const LinkWeights& weights,
                          NodeId source, NodeId destination);
Route update_single_route(RoutingTable& table, const Graph& g, WeightStrategy strategy,
                          const WeightParams& params, const NodeStats& stats, NodeId source,
                          NodeId destination);

// Batch form of update_single_route against one snapshot. Requests that
// share a destination share one search; results are identical to applying
// the requests one by one. Returned routes follow request order.
std::vector<Route> update_routes(RoutingTable& table, const Graph& g, const LinkWeights& weights,
                                 std::span<const RouteRequest> requests);

}  // namespace rlroute
