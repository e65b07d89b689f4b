#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "rlroute/graph.hpp"

namespace rlroute {

// Preferential attachment. The core is m isolated nodes 1..m; node 0 arrives
// first and links to all of them, then nodes m+1..n-1 each draw m distinct
// targets with probability proportional to degree (duplicates are redrawn).
// Always connected; edge_count = m * (n - m). Requires n > m >= 1.
Graph generate_barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);

// Ring lattice with k/2 neighbors per side, then each lattice edge (u, u+j)
// is rewired with probability p_rewire to a uniform target that is neither u
// nor already adjacent to u. Requires n > k >= 2, k even, p_rewire in [0, 1].
Graph generate_watts_strogatz(std::size_t n, std::size_t k, double p_rewire, std::uint64_t seed);

// G(n, p): every unordered pair independently with probability p.
Graph generate_erdos_renyi(std::size_t n, double p, std::uint64_t seed);

enum class TopologyModel { BarabasiAlbert, WattsStrogatz, ErdosRenyi, EdgeList };

struct TopologySpec {
  TopologyModel model = TopologyModel::BarabasiAlbert;
  std::size_t n = 64;
  std::size_t m = 3;         // Barabasi-Albert attachment edges
  std::size_t k = 6;         // Watts-Strogatz ring degree
  double p_rewire = 0.5;     // Watts-Strogatz
  double p = 0.5;            // Erdos-Renyi
  std::string edge_list_path;  // EdgeList

  bool operator==(const TopologySpec&) const = default;
};

// Builds a connected topology. Random models that come out disconnected are
// regenerated with seed+1, seed+2, ... for at most 100 attempts before
// GenerationFailure. EdgeList topologies must already be connected.
Graph build_topology(const TopologySpec& spec, std::uint64_t seed);

inline constexpr int kMaxGenerationAttempts = 100;

}  // namespace rlroute
