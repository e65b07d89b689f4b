#pragma once

// Brute-force references for the graph and routing code. Everything here is
// exponential or cubic and meant for graphs with at most ten nodes.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "rlroute/graph.hpp"
#include "rlroute/random.hpp"

namespace rlroute::oracle {

// Random connected simple graph: a random spanning tree plus extra edges
// with probability `extra`.
inline Graph random_connected_graph(std::size_t n, double extra, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  auto add = [&](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    if (a == b || used[a][b]) return;
    used[a][b] = true;
    edges.emplace_back(a, b);
  };
  for (std::size_t v = 1; v < n; ++v) add(static_cast<NodeId>(rng.below(v)), static_cast<NodeId>(v));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (rng.bernoulli(extra)) add(static_cast<NodeId>(a), static_cast<NodeId>(b));
    }
  }
  return Graph::from_edges(n, edges);
}

// Betweenness from explicit enumeration of every shortest path between every
// unordered pair, normalized by (n-1)(n-2)/2.
inline std::vector<double> betweenness(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  if (n < 3) return out;
  for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
    const auto dist = hop_distances(g, s);
    for (NodeId t = s + 1; static_cast<std::size_t>(t) < n; ++t) {
      if (dist[t] < 0) continue;
      std::vector<std::vector<NodeId>> paths;
      std::vector<NodeId> current{s};
      std::function<void(NodeId)> extend = [&](NodeId v) {
        if (v == t) {
          paths.push_back(current);
          return;
        }
        for (NodeId w : g.neighbors(v)) {
          if (dist[w] == dist[v] + 1) {
            current.push_back(w);
            extend(w);
            current.pop_back();
          }
        }
      };
      extend(s);
      std::vector<double> through(n, 0.0);
      for (const auto& p : paths) {
        for (std::size_t i = 1; i + 1 < p.size(); ++i) through[p[i]] += 1.0;
      }
      for (std::size_t v = 0; v < n; ++v) out[v] += through[v] / static_cast<double>(paths.size());
    }
  }
  const double pairs = static_cast<double>((n - 1) * (n - 2)) / 2.0;
  for (auto& v : out) v /= pairs;
  return out;
}

// Minimum total weight over every simple path from src to dst.
inline double min_path_cost(const Graph& g, const std::function<double(NodeId, NodeId)>& w,
                            NodeId src, NodeId dst) {
  double best = std::numeric_limits<double>::infinity();
  std::vector<bool> seen(g.node_count(), false);
  std::function<void(NodeId, double)> dfs = [&](NodeId v, double cost) {
    if (v == dst) {
      best = std::min(best, cost);
      return;
    }
    seen[v] = true;
    for (NodeId u : g.neighbors(v)) {
      if (!seen[u]) dfs(u, cost + w(v, u));
    }
    seen[v] = false;
  };
  dfs(src, 0.0);
  return best;
}

}  // namespace rlroute::oracle
