#pragma once

#include <vector>

#include "rlroute/graph.hpp"

namespace rlroute {

// One value per node in [0, 1].
using CentralityVector = std::vector<double>;

// Static shortest-path betweenness by hop count (Brandes accumulation),
// normalized by the number of unordered pairs excluding the node,
// (n-1)(n-2)/2. Disconnected pairs contribute nothing; graphs with fewer than
// three nodes are all zero.
CentralityVector betweenness_centrality(const Graph& g);

}  // namespace rlroute
