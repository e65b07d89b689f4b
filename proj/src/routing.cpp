#include "rlroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "rlroute/error.hpp"

namespace rlroute {

std::string_view to_string(WeightStrategy s) {
  switch (s) {
    case WeightStrategy::HopCount: return "hop_count";
    case WeightStrategy::EfficientPath: return "efficient_path";
    case WeightStrategy::BetweennessEdge: return "betweenness_edge";
    case WeightStrategy::DegreeBetweennessEdge: return "degree_betweenness_edge";
    case WeightStrategy::EchagueCongestion: return "echague_congestion";
    case WeightStrategy::ProposedCongestion: return "proposed_congestion";
  }
  return "unknown";
}

std::optional<WeightStrategy> parse_weight_strategy(std::string_view name) {
  for (WeightStrategy s : kAllWeightStrategies) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

double node_congestion_proposed(double rho, std::size_t degree, double effective_betweenness,
                                std::size_t n) {
  if (n < 2) throw InvalidParameter("node congestion requires n >= 2");
  return rho * static_cast<double>(degree) * effective_betweenness / static_cast<double>(n - 1);
}

double node_congestion_echague(double rho, double effective_betweenness, std::size_t n) {
  if (n < 2) throw InvalidParameter("node congestion requires n >= 2");
  return rho * effective_betweenness / static_cast<double>(n - 1);
}

double node_weight(double congestion, double gamma_exponent) {
  return std::pow(1.0 + congestion, gamma_exponent);
}

LinkWeights::LinkWeights(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                         const NodeStats& stats)
    : strategy_(strategy) {
  const std::size_t n = g.node_count();
  const bool needs_stats = strategy != WeightStrategy::HopCount &&
                           strategy != WeightStrategy::EfficientPath;
  if (needs_stats && stats.effective_betweenness.size() != n) {
    throw InvalidParameter("stats size does not match the graph");
  }
  if (params.gamma_exponent < 0.0) throw InvalidParameter("gamma_exponent must be >= 0");

  node_terms_.assign(n, 1.0);
  for (NodeId v = 0; static_cast<std::size_t>(v) < n; ++v) {
    const double k = static_cast<double>(g.degree(v));
    double& term = node_terms_[v];
    switch (strategy) {
      case WeightStrategy::HopCount:
        break;
      case WeightStrategy::EfficientPath:
        term = std::pow(k, params.beta);
        break;
      case WeightStrategy::BetweennessEdge:
        term = std::pow(1.0 + stats.effective_betweenness[v], params.alpha_exponent);
        break;
      case WeightStrategy::DegreeBetweennessEdge:
        term = std::pow((1.0 + stats.effective_betweenness[v]) * k, params.alpha_exponent);
        break;
      case WeightStrategy::EchagueCongestion:
        term = node_weight(node_congestion_echague(params.rho, stats.effective_betweenness[v], n),
                           params.gamma_exponent);
        break;
      case WeightStrategy::ProposedCongestion:
        term = node_weight(node_congestion_proposed(params.rho, g.degree(v),
                                                    stats.effective_betweenness[v], n),
                           params.gamma_exponent);
        break;
    }
  }

  arcs_.resize(g.arc_count());
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    std::size_t a = g.arc_begin(u);
    for (NodeId v : g.neighbors(u)) arcs_[a++] = (*this)(u, v);
  }
}

double LinkWeights::combine(double a, double b) const {
  switch (strategy_) {
    case WeightStrategy::HopCount: return 1.0;
    case WeightStrategy::EfficientPath: return 0.5 * (a + b);
    case WeightStrategy::BetweennessEdge:
    case WeightStrategy::DegreeBetweennessEdge: return a + b;
    case WeightStrategy::EchagueCongestion:
    case WeightStrategy::ProposedCongestion: return std::max(a, b);
  }
  return 1.0;
}

LinkWeights LinkWeights::custom(const Graph& g,
                                const std::function<double(NodeId, NodeId)>& weight) {
  LinkWeights w;
  w.graph_ = &g;
  w.arcs_.resize(g.arc_count());
  for (const auto& [u, v] : g.edges()) {
    const double x = weight(u, v);
    if (!(x > 0.0)) throw InvalidParameter("link weights must be positive");
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    w.arcs_[g.arc_begin(u) + (std::lower_bound(nu.begin(), nu.end(), v) - nu.begin())] = x;
    w.arcs_[g.arc_begin(v) + (std::lower_bound(nv.begin(), nv.end(), u) - nv.begin())] = x;
  }
  return w;
}

double LinkWeights::lookup(NodeId i, NodeId j) const {
  const auto nb = graph_->neighbors(i);
  return arcs_[graph_->arc_begin(i) + (std::lower_bound(nb.begin(), nb.end(), j) - nb.begin())];
}

double link_weight(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                   const NodeStats& stats, NodeId i, NodeId j) {
  if (!g.has_edge(i, j)) {
    throw NonAdjacentNodes("nodes " + std::to_string(i) + " and " + std::to_string(j) +
                           " are not adjacent");
  }
  return LinkWeights(g, strategy, params, stats)(i, j);
}

namespace {

// Shortest-path tree grown from a root (the destination). toward(v) is the
// neighbor of v one step closer to the root; ties go to the lowest id.
class TowardSearch {
 public:
  explicit TowardSearch(std::size_t n)
      : dist_(n), toward_(n), settled_(n), is_target_(n, 0) {}

  // Stops once every node in `targets` is settled; an empty span grows the
  // whole tree. Throws UnreachableDestination if a target is never reached.
  void run(const Graph& g, const LinkWeights& w, NodeId root, std::span<const NodeId> targets) {
    std::fill(dist_.begin(), dist_.end(), std::numeric_limits<double>::infinity());
    std::fill(toward_.begin(), toward_.end(), NodeId{-1});
    std::fill(settled_.begin(), settled_.end(), 0);

    std::size_t remaining = 0;
    for (NodeId t : targets) {
      if (!is_target_[t]) {
        is_target_[t] = 1;
        ++remaining;
      }
    }
    const bool stop_early = !targets.empty();

    using Entry = std::pair<double, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    dist_[root] = 0.0;
    heap.emplace(0.0, root);
    while (!heap.empty()) {
      const auto [d, u] = heap.top();
      heap.pop();
      if (settled_[u]) continue;
      settled_[u] = 1;
      if (is_target_[u] && --remaining == 0 && stop_early) break;

      std::size_t arc = g.arc_begin(u);
      for (NodeId v : g.neighbors(u)) {
        const double nd = d + w.arc(arc++);
        if (settled_[v]) continue;
        if (nd < dist_[v]) {
          dist_[v] = nd;
          toward_[v] = u;
          heap.emplace(nd, v);
        } else if (nd == dist_[v] && u < toward_[v]) {
          toward_[v] = u;
        }
      }
    }

    bool missing = false;
    for (NodeId t : targets) {
      missing = missing || !settled_[t];
      is_target_[t] = 0;
    }
    if (missing) {
      throw UnreachableDestination("destination " + std::to_string(root) +
                                   " is unreachable from a requested source");
    }
  }

  double dist(NodeId v) const { return dist_[v]; }
  NodeId toward(NodeId v) const { return toward_[v]; }
  bool settled(NodeId v) const { return settled_[v] != 0; }

  Route route_from(NodeId source) const {
    Route r;
    r.cost = dist_[source];
    for (NodeId v = source; v != -1; v = toward_[v]) r.nodes.push_back(v);
    return r;
  }

 private:
  std::vector<double> dist_;
  std::vector<NodeId> toward_;
  std::vector<char> settled_;
  std::vector<char> is_target_;
};

void check_pair(const Graph& g, NodeId source, NodeId destination) {
  if (!g.contains(source) || !g.contains(destination)) {
    throw InvalidParameter("route endpoint outside the graph");
  }
  if (source == destination) throw InvalidParameter("route source equals destination");
}

}  // namespace

Route least_weight_path(const Graph& g, const LinkWeights& weights, NodeId src, NodeId dst) {
  check_pair(g, src, dst);
  TowardSearch search(g.node_count());
  const NodeId target[] = {src};
  search.run(g, weights, dst, target);
  return search.route_from(src);
}

Route least_weight_path(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                        const NodeStats& stats, NodeId src, NodeId dst) {
  return least_weight_path(g, LinkWeights(g, strategy, params, stats), src, dst);
}

RoutingTable::RoutingTable(std::size_t node_count)
    : n_(node_count), next_hop_(node_count * node_count, -1), path_cost_(node_count * node_count, 0.0) {}

void RoutingTable::set(NodeId source, NodeId destination, NodeId next_hop, double cost) {
  next_hop_[index(source, destination)] = next_hop;
  path_cost_[index(source, destination)] = cost;
}

std::optional<std::vector<NodeId>> RoutingTable::walk(NodeId source, NodeId destination) const {
  std::vector<NodeId> path{source};
  NodeId at = source;
  while (at != destination) {
    if (path.size() > n_) return std::nullopt;
    at = next_hop(at, destination);
    if (at < 0) return std::nullopt;
    path.push_back(at);
  }
  return path;
}

RoutingTable full_table_rebuild(const Graph& g, const LinkWeights& weights) {
  const std::size_t n = g.node_count();
  RoutingTable table(n);
  TowardSearch search(n);
  for (NodeId d = 0; static_cast<std::size_t>(d) < n; ++d) {
    search.run(g, weights, d, {});
    for (NodeId v = 0; static_cast<std::size_t>(v) < n; ++v) {
      if (v == d) continue;
      if (!search.settled(v)) {
        throw UnreachableDestination("node " + std::to_string(d) + " is unreachable from " +
                                     std::to_string(v));
      }
      table.set(v, d, search.toward(v), search.dist(v));
    }
  }
  return table;
}

RoutingTable full_table_rebuild(const Graph& g, WeightStrategy strategy, const WeightParams& params,
                                const NodeStats& stats) {
  return full_table_rebuild(g, LinkWeights(g, strategy, params, stats));
}

std::vector<Route> update_routes(RoutingTable& table, const Graph& g, const LinkWeights& weights,
                                 std::span<const RouteRequest> requests) {
  for (const auto& r : requests) check_pair(g, r.source, r.destination);

  std::vector<std::size_t> order(requests.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return requests[a].destination < requests[b].destination;
  });

  std::vector<Route> routes(requests.size());
  TowardSearch search(g.node_count());
  std::vector<NodeId> sources;
  for (std::size_t i = 0; i < order.size();) {
    const NodeId d = requests[order[i]].destination;
    std::size_t j = i;
    sources.clear();
    while (j < order.size() && requests[order[j]].destination == d) {
      sources.push_back(requests[order[j]].source);
      ++j;
    }
    search.run(g, weights, d, sources);
    for (std::size_t k = i; k < j; ++k) {
      Route route = search.route_from(requests[order[k]].source);
      for (std::size_t h = 0; h + 1 < route.nodes.size(); ++h) {
        const NodeId v = route.nodes[h];
        table.set(v, d, route.nodes[h + 1], search.dist(v));
      }
      routes[order[k]] = std::move(route);
    }
    i = j;
  }
  return routes;
}

Route update_single_route(RoutingTable& table, const Graph& g, const LinkWeights& weights,
                          NodeId source, NodeId destination) {
  const RouteRequest request[] = {{source, destination}};
  return std::move(update_routes(table, g, weights, request).front());
}

Route update_single_route(RoutingTable& table, const Graph& g, WeightStrategy strategy,
                          const WeightParams& params, const NodeStats& stats, NodeId source,
                          NodeId destination) {
  return update_single_route(table, g, LinkWeights(g, strategy, params, stats), source,
                             destination);
}

}  // namespace rlroute
