#include <gtest/gtest.h>

#include <random>

#include "ilhv/graph.hpp"
#include "support.hpp"

using namespace ilhv;

TEST(VertexOrder, NaturalNumericRuns) {
  EXPECT_TRUE(vertex_less("2", "10"));
  EXPECT_FALSE(vertex_less("10", "2"));
  EXPECT_TRUE(vertex_less("1", "1@(1,2)"));
  EXPECT_TRUE(vertex_less("1@(1,2)", "2"));
  EXPECT_TRUE(vertex_less("1@(1,2)", "2@(1,2)"));
  EXPECT_TRUE(vertex_less("a", "b"));
}

TEST(Graph, FromEdgesSortsAndDeduplicatesVertices) {
  const Graph g = build_graph({{"3", "1"}, {"1", "2"}});
  EXPECT_EQ(g.vertices(), (std::vector<Vertex>{"1", "2", "3"}));
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(0, 2));
  EXPECT_FALSE(g.adjacent(1, 2));
  EXPECT_EQ(g.degree(0), 2u);
}

TEST(Graph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(build_graph({{"1", "1"}}), InputError);
  EXPECT_THROW(build_graph({{"1", "2"}, {"2", "1"}}), InputError);
  EXPECT_THROW(build_graph({{"1", "2"}}).index_of("7"), InputError);
}

TEST(Graph, IsolatedVerticesAndComponents) {
  const Graph g = Graph::from_edges({"4", "5"}, {{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(g.size(), 5u);
  EXPECT_FALSE(g.connected());
  EXPECT_EQ(g.largest_component(), 3u);
  EXPECT_EQ(distance(g, "1", "5"), kUnreachable);
}

TEST(Graph, DistancesAndBalls) {
  const Graph cycle = ilhv::testing::graph_file("cycle5");
  EXPECT_EQ(distance(cycle, "1", "3"), 2u);
  EXPECT_EQ(distance(cycle, "1", "5"), 1u);
  EXPECT_EQ(ball(cycle, "1", 1), (std::vector<Vertex>{"1", "2", "5"}));
  EXPECT_EQ(ball(cycle, "1", 0), (std::vector<Vertex>{"1"}));
  EXPECT_EQ(ball(cycle, "1", 2).size(), 5u);
}

TEST(Inflate, TriangleBecomesNineCycle) {
  const InflatedGraph ig = inflate(ilhv::testing::graph_file("triangle"), 1);
  const Graph& g = ig.graph();
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(g.edge_count(), 9u);
  EXPECT_TRUE(g.connected());
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g.degree(i), 2u);
  EXPECT_EQ(distance(g, "1", "2"), 3u);
  EXPECT_TRUE(g.contains("1@(1,3)"));
  EXPECT_TRUE(g.contains("2@(1,3)"));
  EXPECT_EQ(distance(g, "1@(1,3)", "1"), 1u);
}

TEST(Inflate, PathBecomesSevenChain) {
  const InflatedGraph ig = inflate(ilhv::testing::graph_file("path3"), 1);
  const Graph& g = ig.graph();
  EXPECT_EQ(g.size(), 7u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(distance(g, "1", "3"), 6u);
  std::size_t leaves = 0;
  for (std::size_t i = 0; i < g.size(); ++i) leaves += g.degree(i) == 1;
  EXPECT_EQ(leaves, 2u);
}

TEST(Inflate, FiveVertexGraphAtDistanceTwo) {
  const Graph base = ilhv::testing::graph_file("graph5");
  const InflatedGraph ig = inflate(base, 2);
  EXPECT_EQ(ig.graph().size(), 25u);
  EXPECT_EQ(ig.graph().edge_count(), 25u);
  for (std::size_t b = 0; b < base.size(); ++b) {
    const std::size_t p = ig.power_vertex(b);
    EXPECT_TRUE(ig.is_power(p));
    EXPECT_EQ(ig.base_vertex(p), b);
    EXPECT_EQ(ig.graph().degree(p), base.degree(b));
  }
}

TEST(Inflate, ChainBookkeeping) {
  const Graph base = ilhv::testing::graph_file("triangle");
  const InflatedGraph ig = inflate(base, 2);
  const std::size_t one = base.index_of("1");
  const std::size_t three = base.index_of("3");
  const std::size_t c = ig.chain_vertex_from(three, one, 1);
  EXPECT_EQ(ig.graph().label(c), "4@(1,3)");
  EXPECT_EQ(ig.chain_position(c).position, 4u);
  EXPECT_EQ(ig.nearest_power(c), three);
  EXPECT_EQ(ig.even_side(c), one);
  EXPECT_EQ(ig.even_side(ig.chain_vertex_from(one, three, 2)), one);
  EXPECT_THROW(ig.chain_position(ig.power_vertex(one)), InputError);
  EXPECT_THROW(ig.base_vertex(c), InputError);
  EXPECT_THROW(inflate(base, 0), InputError);
}

TEST(Inflate, ChainLabelsCountFromSmallerEndpoint) {
  EXPECT_EQ(chain_label(2, "1", "3"), "2@(1,3)");
  const InflatedGraph ig = inflate(build_graph({{"3", "1"}}), 1);
  EXPECT_EQ(distance(ig.graph(), "1", "1@(1,3)"), 1u);
  EXPECT_EQ(distance(ig.graph(), "3", "2@(1,3)"), 1u);
}

TEST(Dot, ListsEveryEdgeAndMarksPowerVertices) {
  const InflatedGraph ig = inflate(ilhv::testing::graph_file("path3"), 1);
  const std::string dot = to_dot(ig);
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("\"1\" [shape=doublecircle]"), std::string::npos);
  EXPECT_NE(dot.find("\"1@(1,2)\" [shape=circle]"), std::string::npos);
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; ++pos) ++edges;
  EXPECT_EQ(edges, 6u);
}

TEST(RandomGraph, ConnectedAndSeeded) {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 9);
    const Graph g = random_connected_graph(n, 0.3, a);
    EXPECT_EQ(g.size(), n);
    EXPECT_TRUE(g.connected());
    EXPECT_GE(g.edge_count() + 1, n);
    EXPECT_EQ(g, random_connected_graph(n, 0.3, b));
  }
}
