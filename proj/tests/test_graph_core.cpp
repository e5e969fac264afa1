#include <gtest/gtest.h>

#include <sstream>

#include "atomwidth/graph.hpp"
#include "atomwidth/io.hpp"

namespace atomwidth::core {
namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(std::min(i, (i + 1) % n),
                                         std::max(i, (i + 1) % n));
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

TEST(Graph, BasicAccessors) {
  Graph g(4, {{0, 1}, {1, 2}});
  EXPECT_EQ(g.n(), 4);
  EXPECT_EQ(g.m(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.neighbors(1), (std::vector<int>{0, 2}));
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 4), std::out_of_range);
  EXPECT_THROW(g.adjacent(-1, 0), std::out_of_range);
}

TEST(Graph, AddEdgeIdempotent) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.m(), 1);
}

TEST(Graph, ValueEqualityIgnoresName) {
  Graph a(3, {{0, 1}});
  a.set_name("a");
  Graph b(3, {{0, 1}});
  b.set_name("b");
  Graph c(3, {{0, 2}});
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(VertexSets, Validation) {
  Graph g(5);
  EXPECT_NO_THROW(validate_vertex_set(g, {0, 2, 4}));
  EXPECT_NO_THROW(validate_vertex_set(g, {}));
  EXPECT_THROW(validate_vertex_set(g, {2, 1}), std::invalid_argument);
  EXPECT_THROW(validate_vertex_set(g, {1, 1}), std::invalid_argument);
  EXPECT_THROW(validate_vertex_set(g, {0, 5}), std::out_of_range);
  EXPECT_EQ(make_vertex_set({3, 1, 2}), (VertexSet{1, 2, 3}));
  EXPECT_THROW(make_vertex_set({1, 1}), std::invalid_argument);
  EXPECT_EQ(complement_set(g, {1, 3}), (VertexSet{0, 2, 4}));
}

TEST(GraphOps, InducedSubgraphOfCycleIsPath) {
  // dropping one vertex of C5 leaves P4
  Graph c5 = cycle(5);
  Graph sub = induced_subgraph(c5, {0, 1, 2, 3});
  EXPECT_EQ(sub, path(4));
}

TEST(GraphOps, InducedSubgraphReindexesBySortedPosition) {
  Graph p4 = path(4);
  Graph sub = induced_subgraph(p4, {1, 3});
  EXPECT_EQ(sub.n(), 2);
  EXPECT_EQ(sub.m(), 0);
  sub = induced_subgraph(p4, {2, 3});
  EXPECT_TRUE(sub.adjacent(0, 1));
}

TEST(GraphOps, ComplementIsInvolution) {
  Graph g(5, {{0, 1}, {0, 4}, {2, 3}});
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(g).m(), 10 - 3);
}

TEST(GraphOps, DisjointUnionOffsetsSecondGraph) {
  Graph a(2, {{0, 1}});
  Graph b(3, {{0, 2}});
  Graph u = disjoint_union(a, b);
  EXPECT_EQ(u.n(), 5);
  EXPECT_EQ(u.edges(), (std::vector<std::pair<int, int>>{{0, 1}, {2, 4}}));
}

TEST(GraphOps, ConnectedComponentsSortedByMinMember) {
  Graph g(6, {{4, 5}, {0, 3}});
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0], (VertexSet{0, 3}));
  EXPECT_EQ(comps[1], (VertexSet{1}));
  EXPECT_EQ(comps[2], (VertexSet{2}));
  EXPECT_EQ(comps[3], (VertexSet{4, 5}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle(4)));
  EXPECT_FALSE(is_connected(Graph(0)));
}

TEST(GraphOps, FalseTwinsInCycleFour) {
  // C4's diagonals are the two false-twin pairs
  auto twins = false_twin_pairs(cycle(4));
  EXPECT_EQ(twins, (std::vector<std::pair<int, int>>{{0, 2}, {1, 3}}));
}

TEST(GraphOps, FalseTwinsInStar) {
  // the three leaves of K_{1,3} are pairwise false twins
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto twins = false_twin_pairs(star);
  EXPECT_EQ(twins,
            (std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(GraphOps, CliqueAndIndependent) {
  Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_TRUE(is_clique(g, {0, 1, 2}));
  EXPECT_FALSE(is_clique(g, {0, 1, 3}));
  EXPECT_TRUE(is_clique(g, {}));
  EXPECT_TRUE(is_clique(g, {3}));
  EXPECT_TRUE(is_independent(g, {3}));
  EXPECT_FALSE(is_independent(g, {0, 1}));
}

TEST(GraphOps, CompleteAndAnticompleteBetweenSets) {
  Graph g(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_TRUE(is_complete_to(g, {0, 1}, {2, 3}));
  EXPECT_FALSE(is_complete_to(g, {0, 1}, {2, 4}));
  EXPECT_TRUE(is_anticomplete_to(g, {0, 1}, {4}));
  EXPECT_THROW(is_complete_to(g, {0, 1}, {1, 2}), std::invalid_argument);
}

TEST(GraphOps, MatchingBetweenSets) {
  // 2P2 drawn across the cut {0,1} vs {2,3}
  Graph g(4, {{0, 2}, {1, 3}});
  EXPECT_TRUE(is_matching_between(g, {0, 1}, {2, 3}));
  g.add_edge(0, 3);
  EXPECT_FALSE(is_matching_between(g, {0, 1}, {2, 3}));
  EXPECT_TRUE(is_matching_between(g, {}, {2, 3}));
}

TEST(EdgeListIo, RoundTrip) {
  Graph g(5, {{0, 1}, {0, 4}, {2, 3}});
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), "5 3\n0 1\n0 4\n2 3\n");
  std::istringstream in(out.str());
  EXPECT_EQ(read_edge_list(in), g);
}

TEST(EdgeListIo, CommentsAndBlanksIgnored) {
  std::istringstream in("# a triangle\n\n3 3\n0 1\n  # mid comment\n0 2 # x\n\n1 2\n");
  Graph g = read_edge_list(in);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.m(), 3);
}

TEST(EdgeListIo, RejectsMalformedInput) {
  auto bad = [](const char* text) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in), std::invalid_argument) << text;
  };
  bad("");
  bad("3\n");
  bad("3 1\n");
  bad("3 1\n1 0\n");        // u >= v
  bad("3 1\n0 0\n");        // loop
  bad("3 1\n0 3\n");        // out of range
  bad("3 2\n0 1\n0 1\n");   // duplicate
  bad("3 1\n0 1\n1 2\n");   // extra edge
  bad("3 1 9\n0 1\n");      // trailing header token
  bad("3 1\n0 1 2\n");      // trailing edge token
}

TEST(Graph6, KnownEncodings) {
  Graph k2(2, {{0, 1}});
  EXPECT_EQ(encode_graph6(k2), "A_");
  Graph p3(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(encode_graph6(p3), "Bg");
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(encode_graph6(Graph(5)), "D??");
  EXPECT_EQ(decode_graph6("A_"), k2);
  EXPECT_EQ(decode_graph6("Bg"), p3);
}

TEST(Graph6, RoundTripVariousSizes) {
  for (int n : {0, 1, 2, 6, 7, 62, 63, 100}) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if ((u * 7 + v * 13 + u * v) % 3 == 0) g.add_edge(u, v);
    EXPECT_EQ(decode_graph6(encode_graph6(g)), g) << "n=" << n;
  }
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(decode_graph6(""), std::invalid_argument);
  EXPECT_THROW(decode_graph6("B"), std::invalid_argument);    // truncated
  EXPECT_THROW(decode_graph6("Bgg"), std::invalid_argument);  // too long
  EXPECT_THROW(decode_graph6("B\x01"), std::invalid_argument);
  EXPECT_THROW(decode_graph6("A`"), std::invalid_argument);  // padding bit set
  EXPECT_THROW(decode_graph6("~??@"), std::invalid_argument);  // non-minimal
}

}  // namespace
}  // namespace atomwidth::core
