#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "oracles.hpp"
#include "rlroute/centrality.hpp"
#include "rlroute/edge_list.hpp"
#include "rlroute/error.hpp"
#include "rlroute/generators.hpp"

using namespace rlroute;

namespace {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; static_cast<std::size_t>(i) + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; static_cast<std::size_t>(i) < n; ++i) {
    e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  }
  return Graph::from_edges(n, e);
}

void expect_valid(const Graph& g) {
  std::size_t degree_sum = 0;
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
    EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    for (NodeId u : nb) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(g.has_edge(u, v));
    }
    degree_sum += g.degree(v);
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

}  // namespace

TEST(Graph, RejectsSelfLoopsDuplicatesAndBadIds) {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> range{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, loop), InvalidParameter);
  EXPECT_THROW(Graph::from_edges(3, dup), InvalidParameter);
  EXPECT_THROW(Graph::from_edges(3, range), InvalidParameter);
  EXPECT_THROW(Graph::from_edges(0, {}), InvalidParameter);
}

TEST(Graph, EdgesRoundTrip) {
  const std::vector<Edge> e{{2, 0}, {1, 2}, {0, 3}};
  auto g = Graph::from_edges(4, e);
  expect_valid(g);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}}));
  EXPECT_EQ(g.edge_count(), 3u);
}

TEST(BarabasiAlbert, EdgeCountsMatchTableRealizations) {
  EXPECT_EQ(generate_barabasi_albert(256, 3, 1).edge_count(), 759u);
  EXPECT_EQ(generate_barabasi_albert(64, 3, 1).edge_count(), 183u);
}

TEST(BarabasiAlbert, FourNodesAttachToWholeCore) {
  auto g = generate_barabasi_albert(4, 3, 7);
  EXPECT_EQ(g.node_count(), 4u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.degree(0), 3u);
  EXPECT_TRUE(is_connected(g));
}

TEST(BarabasiAlbert, DeterministicAndValid) {
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto a = generate_barabasi_albert(64, 3, seed);
    auto b = generate_barabasi_albert(64, 3, seed);
    EXPECT_EQ(a, b);
    expect_valid(a);
    EXPECT_TRUE(is_connected(a));
    for (NodeId v = 0; v < 64; ++v) EXPECT_GE(a.degree(v), v > 3 ? 3u : 1u);
  }
  EXPECT_NE(generate_barabasi_albert(64, 3, 1), generate_barabasi_albert(64, 3, 2));
}

TEST(BarabasiAlbert, RejectsBadParameters) {
  EXPECT_THROW(generate_barabasi_albert(3, 3, 1), InvalidParameter);
  EXPECT_THROW(generate_barabasi_albert(10, 0, 1), InvalidParameter);
}

TEST(WattsStrogatz, ZeroRewiringKeepsTheRing) {
  auto cycle = generate_watts_strogatz(64, 2, 0.0, 5);
  EXPECT_EQ(cycle.edge_count(), 64u);
  EXPECT_EQ(cycle, cycle_graph(64));

  auto lattice = generate_watts_strogatz(6, 4, 0.0, 5);
  EXPECT_EQ(lattice.edge_count(), 12u);
  for (NodeId v = 0; v < 6; ++v) EXPECT_EQ(lattice.degree(v), 4u);
}

TEST(WattsStrogatz, RewiringPreservesEdgeCount) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate_watts_strogatz(64, 6, 0.5, seed);
    EXPECT_EQ(g.edge_count(), 192u);
    expect_valid(g);
  }
  EXPECT_EQ(generate_watts_strogatz(64, 6, 0.5, 3), generate_watts_strogatz(64, 6, 0.5, 3));
}

TEST(WattsStrogatz, RejectsBadParameters) {
  EXPECT_THROW(generate_watts_strogatz(10, 3, 0.1, 1), InvalidParameter);
  EXPECT_THROW(generate_watts_strogatz(6, 6, 0.1, 1), InvalidParameter);
  EXPECT_THROW(generate_watts_strogatz(10, 4, 1.5, 1), InvalidParameter);
}

TEST(ErdosRenyi, ExtremeProbabilities) {
  EXPECT_EQ(generate_erdos_renyi(5, 1.0, 1).edge_count(), 10u);
  EXPECT_EQ(generate_erdos_renyi(5, 0.0, 1).edge_count(), 0u);
  EXPECT_THROW(generate_erdos_renyi(5, -0.1, 1), InvalidParameter);
  EXPECT_THROW(generate_erdos_renyi(5, 1.1, 1), InvalidParameter);
  EXPECT_THROW(generate_erdos_renyi(1, 0.5, 1), InvalidParameter);
}

TEST(ErdosRenyi, EdgeCountNearBinomialMean) {
  // 2016 pairs at p = 0.5: mean 1008, sigma about 22.4.
  double sum = 0.0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = generate_erdos_renyi(64, 0.5, seed);
    EXPECT_NEAR(static_cast<double>(g.edge_count()), 1008.0, 5 * 22.45);
    sum += static_cast<double>(g.edge_count());
  }
  EXPECT_NEAR(sum / 20.0, 1008.0, 4 * 22.45 / std::sqrt(20.0));
}

TEST(BuildTopology, RetriesUntilConnected) {
  TopologySpec spec;
  spec.model = TopologyModel::ErdosRenyi;
  spec.n = 30;
  spec.p = 0.12;  // disconnected for many seeds
  for (std::uint64_t seed = 1; seed <= 10; ++seed) EXPECT_TRUE(is_connected(build_topology(spec, seed)));

  spec.p = 0.0;
  EXPECT_THROW(build_topology(spec, 1), GenerationFailure);
}

TEST(Connectivity, Cases) {
  EXPECT_TRUE(is_connected(cycle_graph(5)));
  EXPECT_FALSE(is_connected(Graph::from_edges(2, {})));
  const std::vector<Edge> triangles{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  auto two = Graph::from_edges(6, triangles);
  EXPECT_FALSE(is_connected(two));
  auto d = hop_distances(two, 0);
  EXPECT_EQ(std::count_if(d.begin(), d.end(), [](int x) { return x >= 0; }), 3);
}

TEST(Betweenness, HandExamples) {
  auto path = betweenness_centrality(path_graph(3));
  EXPECT_DOUBLE_EQ(path[0], 0.0);
  EXPECT_DOUBLE_EQ(path[1], 1.0);
  EXPECT_DOUBLE_EQ(path[2], 0.0);

  const std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  auto s = betweenness_centrality(Graph::from_edges(5, star));
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  for (int leaf = 1; leaf < 5; ++leaf) EXPECT_DOUBLE_EQ(s[leaf], 0.0);

  auto k4 = betweenness_centrality(generate_erdos_renyi(4, 1.0, 1));
  for (double v : k4) EXPECT_DOUBLE_EQ(v, 0.0);
}

TEST(Betweenness, MatchesEnumerationOnSmallGraphs) {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(8);
    auto g = oracle::random_connected_graph(n, rng.uniform01() * 0.6, rng);
    auto fast = betweenness_centrality(g);
    auto slow = oracle::betweenness(g);
    ASSERT_EQ(fast.size(), n);
    for (std::size_t v = 0; v < n; ++v) {
      EXPECT_NEAR(fast[v], slow[v], 1e-9);
      EXPECT_GE(fast[v], 0.0);
      EXPECT_LE(fast[v], 1.0 + 1e-12);
      if (g.degree(static_cast<NodeId>(v)) == 1) EXPECT_EQ(fast[v], 0.0);
    }
  }
}

TEST(Betweenness, DisconnectedPairsContributeNothing) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}};
  auto b = betweenness_centrality(Graph::from_edges(5, e));
  // Only pair (0, 2) passes through 1; 4*3/2 = 6 pairs normalize.
  EXPECT_NEAR(b[1], 1.0 / 6.0, 1e-12);
  EXPECT_EQ(b[3], 0.0);
}

TEST(EdgeList, RoundTrip) {
  auto g = generate_barabasi_albert(40, 2, 3);
  std::stringstream buf;
  write_edge_list(buf, g);
  EXPECT_EQ(read_edge_list(buf), g);
}

TEST(EdgeList, ReportsOffendingLine) {
  std::stringstream bad("3 2\n0 1\n1 x\n");
  try {
    read_edge_list(bad);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::stringstream order("3 1\n2 1\n");
  EXPECT_THROW(read_edge_list(order), ParseError);
  std::stringstream count("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(count), ParseError);
  std::stringstream empty("");
  EXPECT_THROW(read_edge_list(empty), ParseError);
}
