#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "matchspec/graph.hpp"
#include "matchspec/graph6.hpp"
#include "matchspec/isomorphism.hpp"
#include "oracles.hpp"

namespace ms = matchspec;

namespace {

ms::Graph empty_graph(int n) { return ms::Graph(n); }

ms::Graph relabel(const ms::Graph& g, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> e;
  for (const auto& edge : g.edges()) e.emplace_back(perm[edge.u], perm[edge.v]);
  return ms::from_edge_list(g.order(), e);
}

ms::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return ms::from_edge_list(n, e);
}

ms::Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return ms::from_edge_list(10, e);
}

}  // namespace

TEST(EdgeList, BuildsCycle) {
  const auto g = ms::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(ms::are_isomorphic(g, ms::cycle_graph(4)));
}

TEST(EdgeList, TrivialGraph) {
  const auto g = ms::from_edge_list(1, {});
  EXPECT_EQ(g.order(), 1);
  EXPECT_EQ(g.size(), 0);
  EXPECT_TRUE(ms::is_connected(g));
}

TEST(EdgeList, DuplicatesCollapse) {
  const auto g = ms::from_edge_list(3, {{0, 1}, {0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1);
}

TEST(EdgeList, RejectsLoopsAndOutOfRange) {
  EXPECT_THROW(ms::from_edge_list(3, {{1, 1}}), ms::RangeError);
  EXPECT_THROW(ms::from_edge_list(3, {{0, 3}}), ms::RangeError);
  EXPECT_THROW(ms::from_edge_list(-1, {}), ms::RangeError);
  EXPECT_THROW(ms::from_edge_list(65, {}), ms::RangeError);
}

TEST(EdgeList, TextRoundTrip) {
  const auto g = petersen();
  EXPECT_EQ(ms::parse_edge_list(ms::to_edge_list(g)), g);
  EXPECT_THROW(ms::parse_edge_list("4\n0 1\n2"), ms::ParseError);
  EXPECT_THROW(ms::parse_edge_list(""), ms::ParseError);
  EXPECT_THROW(ms::parse_edge_list("3\n0 x"), ms::ParseError);
}

TEST(Graph6, DecodesKnownStrings) {
  const auto k4 = ms::parse_graph6("C~");
  EXPECT_EQ(k4, ms::complete_graph(4));
  const auto two = ms::parse_graph6("A_");
  EXPECT_EQ(two.order(), 2);
  EXPECT_EQ(two.size(), 1);
  const auto a_q = ms::parse_graph6("A?");
  EXPECT_EQ(a_q.order(), 2);
  EXPECT_EQ(a_q.size(), 0);
}

TEST(Graph6, EncodesKnownGraphs) {
  EXPECT_EQ(ms::to_graph6(ms::complete_graph(4)), "C~");
  EXPECT_EQ(ms::to_graph6(empty_graph(5)), "D??");
  EXPECT_EQ(ms::to_graph6(empty_graph(0)), "?");
  EXPECT_EQ(ms::to_graph6(empty_graph(1)), "@");
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(ms::parse_graph6("B"), ms::ParseError);
  EXPECT_THROW(ms::parse_graph6(""), ms::ParseError);
  EXPECT_THROW(ms::parse_graph6("C~~"), ms::ParseError);
  EXPECT_THROW(ms::parse_graph6("C\x20"), ms::ParseError);
  EXPECT_THROW(ms::parse_graph6("A`"), ms::ParseError);  // padding bit set
  EXPECT_THROW(ms::parse_graph6("~?@?"), ms::ParseError);
}

TEST(Graph6, MatchesBitOracleOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const auto g = random_graph(rng, n, 0.4);
    const auto text = ms::to_graph6(g);
    EXPECT_EQ(text, oracle::graph6(g));
    EXPECT_EQ(ms::parse_graph6(text), g);
  }
}

TEST(Graph6, AcceptsHeaderAndTrailingNewline) {
  EXPECT_EQ(ms::parse_graph6(">>graph6<<C~\n"), ms::complete_graph(4));
}

TEST(Operations, DisjointUnion) {
  const auto g = ms::disjoint_union(ms::complete_graph(3), ms::complete_graph(1));
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  const auto three = ms::disjoint_union(ms::disjoint_union(empty_graph(1), empty_graph(1)), empty_graph(1));
  EXPECT_EQ(three.order(), 3);
  EXPECT_EQ(three.size(), 0);
  const auto two_k2 = ms::disjoint_union(ms::complete_graph(2), ms::complete_graph(2));
  EXPECT_EQ(two_k2.size(), 2);
  EXPECT_EQ(ms::components(two_k2).size(), 2U);
}

TEST(Operations, JoinMakesStarAndCountsEdges) {
  for (int n = 2; n <= 9; ++n) {
    const auto star = ms::join(ms::complete_graph(1), empty_graph(n - 1));
    EXPECT_EQ(star.size(), n - 1);
    EXPECT_EQ(star.degree(0), n - 1);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
    const auto b = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
    const auto j = ms::join(a, b);
    EXPECT_EQ(j.size(), a.size() + b.size() + a.order() * b.order());
  }
}

TEST(Operations, JoinAtMaximumOrder) {
  const auto g = ms::join(ms::complete_graph(32), empty_graph(32));
  EXPECT_EQ(g.order(), 64);
  EXPECT_EQ(g.degree(63), 32);
  EXPECT_THROW(ms::join(ms::complete_graph(33), empty_graph(32)), ms::RangeError);
}

TEST(Operations, DeleteVertices) {
  EXPECT_EQ(ms::delete_vertices(ms::complete_graph(4), ms::VertexSet{0}).graph, ms::complete_graph(3));
  const auto c6 = ms::cycle_graph(6);
  const auto split = ms::delete_vertices(c6, ms::VertexSet{0, 3});
  EXPECT_EQ(split.graph.order(), 4);
  EXPECT_EQ(split.graph.size(), 2);
  EXPECT_EQ(ms::components(split.graph).size(), 2U);
  EXPECT_EQ(split.original, (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(ms::delete_vertices(c6, {}).graph, c6);
  EXPECT_THROW(ms::delete_vertices(c6, ms::VertexSet{7}), ms::RangeError);
}

TEST(Structure, ConnectivityAndDegrees) {
  const auto c6 = ms::cycle_graph(6);
  EXPECT_TRUE(ms::is_connected(c6));
  EXPECT_EQ(ms::min_degree(c6), 2);
  EXPECT_EQ(ms::components(c6).size(), 1U);

  const auto k3k1 = ms::disjoint_union(ms::complete_graph(3), ms::complete_graph(1));
  EXPECT_FALSE(ms::is_connected(k3k1));
  EXPECT_EQ(ms::components(k3k1).size(), 2U);

  // K5 with a pendant vertex.
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  e.emplace_back(4, 5);
  const auto pendant = ms::from_edge_list(6, e);
  EXPECT_TRUE(ms::is_connected(pendant));
  EXPECT_EQ(ms::min_degree(pendant), 1);

  EXPECT_THROW(ms::is_connected(empty_graph(0)), ms::RangeError);
}

TEST(Structure, OddComponents) {
  const auto hub = ms::join(ms::complete_graph(1),
                            ms::disjoint_union(ms::complete_graph(5), empty_graph(2)));
  EXPECT_EQ(ms::odd_components(hub, ms::VertexSet{0}), 3);
  EXPECT_EQ(ms::odd_components(ms::cycle_graph(6), {}), 0);
  const auto k3_3k1 = ms::join(ms::complete_graph(3), empty_graph(3));
  EXPECT_EQ(ms::odd_components(k3_3k1, ms::VertexSet{0, 1, 2}), 3);
}

TEST(Structure, OddComponentsMatchOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const auto g = random_graph(rng, n, 0.25);
    const std::uint64_t s = rng() & ms::VertexSet::first(n).bits();
    EXPECT_EQ(ms::odd_components(g, ms::VertexSet(s)), oracle::odd_components(oracle::adjacency(g), s));
  }
}

TEST(Isomorphism, KnownPairs) {
  EXPECT_FALSE(ms::are_isomorphic(ms::cycle_graph(6),
                                  ms::disjoint_union(ms::complete_graph(3), ms::complete_graph(3))));
  const auto exc = ms::join(ms::complete_graph(2), ms::disjoint_union(ms::complete_graph(3), empty_graph(1)));
  EXPECT_TRUE(ms::are_isomorphic(exc, relabel(exc, {5, 3, 0, 4, 1, 2})));

  const auto a = ms::join(ms::complete_graph(4),
                          ms::disjoint_union(ms::complete_graph(2), empty_graph(4)));
  const auto b = ms::join(ms::complete_graph(1),
                          ms::disjoint_union(ms::complete_graph(2), ms::complete_graph(7)));
  EXPECT_EQ(a.order(), 10);
  EXPECT_EQ(b.order(), 10);
  EXPECT_EQ(a.size(), 31);
  EXPECT_EQ(b.size(), 31);
  EXPECT_FALSE(ms::are_isomorphic(a, b));
}

TEST(Isomorphism, RegularGraphsNeedSearch) {
  // Both 3-regular on six vertices.
  const auto prism = ms::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  const auto k33 = ms::from_edge_list(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_FALSE(ms::are_isomorphic(prism, k33));
  EXPECT_TRUE(ms::are_isomorphic(petersen(), relabel(petersen(), {9, 8, 7, 6, 5, 4, 3, 2, 1, 0})));
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto a = random_graph(rng, n, 0.5);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto b = trial % 2 ? relabel(a, perm) : random_graph(rng, n, 0.5);
    EXPECT_EQ(ms::are_isomorphic(a, b), oracle::isomorphic(a, b));
    if (n <= 8) {
      EXPECT_EQ(ms::canonical_code(a) == ms::canonical_code(b), oracle::isomorphic(a, b));
    }
  }
}
