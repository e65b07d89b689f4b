#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rlroute {

using NodeId = std::int32_t;
using Edge = std::pair<NodeId, NodeId>;

// Immutable undirected simple graph in compressed adjacency form. Node ids are
// 0..node_count()-1 and every neighbor list is sorted ascending. Arc indices
// (one per direction of each edge) address per-direction arrays such as the
// link weights computed by the routing layer.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidParameter on node_count == 0, out-of-range ids, self-loops
  // or duplicate edges (in either orientation).
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::size_t arc_count() const noexcept { return targets_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t arc_begin(NodeId v) const { return offsets_[v]; }

  bool has_edge(NodeId u, NodeId v) const;
  bool contains(NodeId v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < node_count();
  }

  // Each edge once as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

// True iff a traversal from node 0 reaches every node.
bool is_connected(const Graph& g);

// Breadth-first hop distances from `source`; -1 marks unreachable nodes.
std::vector<int> hop_distances(const Graph& g, NodeId source);

}  // namespace rlroute
