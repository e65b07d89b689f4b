#include "rlroute/generators.hpp"

#include <set>
#include <vector>

#include "rlroute/edge_list.hpp"
#include "rlroute/error.hpp"
#include "rlroute/random.hpp"

namespace rlroute {

Graph generate_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || n <= m) {
    throw InvalidParameter("barabasi_albert requires n > m >= 1 (got n=" + std::to_string(n) +
                           ", m=" + std::to_string(m) + ")");
  }
  Rng rng(seed, Stream::Topology);
  std::vector<Edge> edges;
  edges.reserve(m * (n - m));

  // Each node appears once per incident edge end, so a uniform pick from this
  // list is a degree-proportional pick.
  std::vector<NodeId> ends;
  ends.reserve(2 * m * (n - m));
  for (std::size_t t = 1; t <= m; ++t) {
    edges.emplace_back(0, static_cast<NodeId>(t));
    ends.push_back(static_cast<NodeId>(t));
    ends.push_back(0);
  }

  std::vector<NodeId> targets;
  for (std::size_t source = m + 1; source < n; ++source) {
    targets.clear();
    while (targets.size() < m) {
      const NodeId pick = ends[rng.below(ends.size())];
      bool seen = false;
      for (NodeId t : targets) seen = seen || t == pick;
      if (!seen) targets.push_back(pick);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, static_cast<NodeId>(source));
      ends.push_back(t);
      ends.push_back(static_cast<NodeId>(source));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed) {
  if (k < 2 || k % 2 != 0 || k >= n) {
    throw InvalidParameter("watts_strogatz requires an even ring degree k with 2 <= k < n (got n=" +
                           std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (!(p_rewire >= 0.0 && p_rewire <= 1.0)) {
    throw InvalidParameter("watts_strogatz p_rewire must lie in [0, 1]");
  }
  Rng rng(seed, Stream::Topology);
  std::vector<std::set<NodeId>> adj(n);
  auto link = [&](std::size_t u, std::size_t v) {
    adj[u].insert(static_cast<NodeId>(v));
    adj[v].insert(static_cast<NodeId>(u));
  };
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) link(u, (u + j) % n);
  }

  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      if (!rng.bernoulli(p_rewire)) continue;
      if (adj[u].size() >= n - 1) continue;
      const auto v = static_cast<NodeId>((u + j) % n);
      // The edge may already have been rewired away from this end.
      if (!adj[u].contains(v)) continue;
      NodeId w;
      do {
        w = static_cast<NodeId>(rng.below(n));
      } while (static_cast<std::size_t>(w) == u || adj[u].contains(w));
      adj[u].erase(v);
      adj[v].erase(static_cast<NodeId>(u));
      link(u, static_cast<std::size_t>(w));
    }
  }

  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (static_cast<NodeId>(u) < v) edges.emplace_back(static_cast<NodeId>(u), v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (n < 2) throw InvalidParameter("erdos_renyi requires n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidParameter("erdos_renyi p must lie in [0, 1]");
  Rng rng(seed, Stream::Topology);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng.bernoulli(p)) edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
  }
  return Graph::from_edges(n, edges);
}

Graph build_topology(const TopologySpec& spec, std::uint64_t seed) {
  if (spec.model == TopologyModel::EdgeList) {
    Graph g = read_edge_list_file(spec.edge_list_path);
    if (!is_connected(g)) {
      throw GenerationFailure("edge list " + spec.edge_list_path + " is not connected");
    }
    return g;
  }
  if (spec.model == TopologyModel::BarabasiAlbert) {
    return generate_barabasi_albert(spec.n, spec.m, seed);
  }
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    Graph g = spec.model == TopologyModel::WattsStrogatz
                  ? generate_watts_strogatz(spec.n, spec.k, spec.p_rewire, s)
                  : generate_erdos_renyi(spec.n, spec.p, s);
    if (is_connected(g)) return g;
  }
  throw GenerationFailure("no connected topology after " + std::to_string(kMaxGenerationAttempts) +
                          " attempts starting at seed " + std::to_string(seed));
}

}  // namespace rlroute
