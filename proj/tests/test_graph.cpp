#include <gtest/gtest.h>

#include "xatlas/graph.hpp"

using namespace xatlas;

namespace {

VertexMap product_to_knn(int n) {
  VertexMap m;
  for (int i = 0; i < n; ++i) {
    m[L(0, i)] = A(i);
    m[L(1, i)] = B(i);
  }
  return m;
}

}  // namespace

TEST(Labels, StringForms) {
  EXPECT_EQ(to_string(A(3)), "a3");
  EXPECT_EQ(to_string(L(2, 5)), "2:5");
  EXPECT_EQ(parse_label("a3"), A(3));
  EXPECT_EQ(parse_label("2:5"), L(2, 5));
  EXPECT_EQ(parse_label("v12"), (VertexLabel{Tag::v, 12}));
  EXPECT_THROW(parse_label(""), std::invalid_argument);
  EXPECT_THROW(parse_label("a"), std::invalid_argument);
  EXPECT_THROW(parse_label("7:1"), std::invalid_argument);
  EXPECT_THROW(parse_label("q1"), std::invalid_argument);
  EXPECT_THROW(parse_label("a-1"), std::invalid_argument);
}

TEST(Graph, MultiplicityAccumulates) {
  Graph g;
  g.add_edge(A(0), B(1), 2);
  g.add_edge(B(1), A(0), 3);
  EXPECT_EQ(g.multiplicity(A(0), B(1)), 5);
  EXPECT_EQ(g.edge_count(), 5);
  EXPECT_EQ(g.pair_count(), 1u);
  EXPECT_FALSE(g.is_simple());
  EXPECT_THROW(g.add_edge(A(0), A(0)), std::invalid_argument);
  EXPECT_THROW(g.add_edge(A(0), B(0), 0), std::invalid_argument);
}

TEST(Kronecker, K3TimesP2IsSixCycle) {
  const Graph g = kronecker_product(complete_graph(3), path_graph(2));
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 6);
  EXPECT_EQ(girth(g), 6);
  EXPECT_TRUE(is_connected(g));
}

TEST(Kronecker, K1TimesC4IsFourIsolatedVertices) {
  const Graph g = product_cycle4(1);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 0);
}

TEST(Kronecker, K2TimesC4IsTwoFourCycles) {
  const Graph g = product_cycle4(2);
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 8);
  EXPECT_FALSE(is_connected(g));
  EXPECT_EQ(girth(g), 4);
  for (const auto& v : g.vertices()) EXPECT_EQ(g.degree(v), 2);
}

TEST(Kronecker, RejectsLargeSecondFactor) { EXPECT_THROW(kronecker_product(complete_graph(2), path_graph(5)), std::invalid_argument); }

TEST(KnnMinusMatching, SmallCases) {
  const Graph g2 = knn_minus_matching(2);
  EXPECT_EQ(g2.edge_count(), 2);
  EXPECT_EQ(g2.multiplicity(A(0), B(1)), 1);
  EXPECT_EQ(g2.multiplicity(A(1), B(0)), 1);

  const Graph g5 = knn_minus_matching(5);
  EXPECT_EQ(g5.edge_count(), 20);
  for (const auto& v : g5.vertices()) EXPECT_EQ(g5.degree(v), 4);

  // n = 3 is a 6-cycle a0 b1 a2 b0 a1 b2
  const Graph c6 = cycle_graph(6);
  const VertexMap m = {{{Tag::v, 0}, A(0)}, {{Tag::v, 1}, B(1)}, {{Tag::v, 2}, A(2)},
                       {{Tag::v, 3}, B(0)}, {{Tag::v, 4}, A(1)}, {{Tag::v, 5}, B(2)}};
  EXPECT_TRUE(check_isomorphism_map(c6, knn_minus_matching(3), m));
}

TEST(MultiCompleteBipartite, Examples) {
  const Graph c4 = multi_complete_bipartite(2, 2, 1);
  EXPECT_EQ(girth(c4), 4);
  EXPECT_EQ(c4.edge_count(), 4);
  const Graph g = multi_complete_bipartite(5, 5, 12);
  EXPECT_EQ(g.edge_count(), 300);
  for (const auto& [k, m] : g.edge_map()) EXPECT_EQ(m, 12);
  const Graph one = multi_complete_bipartite(1, 1, 3);
  EXPECT_EQ(one.pair_count(), 1u);
  EXPECT_EQ(one.edge_count(), 3);
  EXPECT_THROW(multi_complete_bipartite(0, 1, 1), std::invalid_argument);
}

TEST(Isomorphism, ExplicitMaps) {
  const Graph p2 = kronecker_product(complete_graph(6), path_graph(2));
  EXPECT_TRUE(check_isomorphism_map(p2, knn_minus_matching(6), product_to_knn(6)));
  VertexMap id;
  for (const auto& v : p2.vertices()) id[v] = v;
  EXPECT_TRUE(check_isomorphism_map(p2, p2, id));

  const Graph k33 = complete_bipartite(3, 3);
  VertexMap toK33;
  for (int i = 0; i < 3; ++i) {
    toK33[L(0, i)] = {Tag::u, i};
    toK33[L(1, i)] = {Tag::v, i};
  }
  EXPECT_FALSE(check_isomorphism_map(kronecker_product(complete_graph(3), path_graph(2)), k33, toK33));

  VertexMap broken = product_to_knn(6);
  broken[L(0, 0)] = A(1);
  EXPECT_FALSE(check_isomorphism_map(p2, knn_minus_matching(6), broken));
}

TEST(Girth, Examples) {
  EXPECT_EQ(girth(knn_minus_matching(5)), 4);
  EXPECT_EQ(girth(cycle_graph(6)), 6);
  EXPECT_EQ(girth(path_graph(3)), std::nullopt);
  EXPECT_EQ(girth(complete_graph(4)), 3);
  EXPECT_EQ(girth(multi_complete_bipartite(1, 1, 2)), 2);
}

TEST(MaxDegree, Examples) {
  EXPECT_EQ(max_degree(knn_minus_matching(7)), 6);
  EXPECT_EQ(max_degree(product_path3(7)), 12);
  EXPECT_EQ(max_degree(complete_graph(1)), 0);
  EXPECT_EQ(max_degree(product_cycle4(5)), 8);
}
