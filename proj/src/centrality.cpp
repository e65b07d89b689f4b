#include "rlroute/centrality.hpp"

#include <cstdint>

namespace rlroute {

CentralityVector betweenness_centrality(const Graph& g) {
  const std::size_t n = g.node_count();
  CentralityVector centrality(n, 0.0);
  if (n < 3) return centrality;

  std::vector<NodeId> order;
  std::vector<NodeId> frontier;
  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  order.reserve(n);

  for (NodeId s = 0; static_cast<std::size_t>(s) < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const NodeId u = order[head];
      for (NodeId v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          order.push_back(v);
        }
        if (dist[v] == dist[u] + 1) sigma[v] += sigma[u];
      }
    }

    // Dependencies in reverse BFS order; predecessors are the neighbors one
    // hop closer to s.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) centrality[w] += delta[w];
    }
  }

  // Every unordered pair was counted from both ends.
  const double scale = 1.0 / (static_cast<double>(n - 1) * static_cast<double>(n - 2));
  for (double& c : centrality) c *= scale;
  return centrality;
}

}  // namespace rlroute
