#include "rlroute/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rlroute/error.hpp"

namespace rlroute {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  if (node_count == 0) throw InvalidParameter("graph must have at least one node");
  const auto n = static_cast<NodeId>(node_count);

  std::vector<std::vector<NodeId>> adjacency(node_count);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidParameter("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") references a node outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw InvalidParameter("self-loop on node " + std::to_string(u));
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }

  Graph g;
  g.offsets_.reserve(node_count + 1);
  g.offsets_.push_back(0);
  g.targets_.reserve(2 * edges.size());
  for (std::size_t v = 0; v < node_count; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidParameter("duplicate edge at node " + std::to_string(v));
    }
    g.targets_.insert(g.targets_.end(), list.begin(), list.end());
    g.offsets_.push_back(g.targets_.size());
  }
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto list = neighbors(u);
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; static_cast<std::size_t>(u) < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<int> hop_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId u = frontier.front();
    frontier.pop();
    for (NodeId v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  const auto dist = hop_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

}  // namespace rlroute
