#include <gtest/gtest.h>

#include "jigsaw/reductions.hpp"

using namespace jigsaw;

TEST(Link, Example) {
  const auto h = MultiHypergraph::from_edges(4, 3, {{{1, 2, 3}, {1, 3, 4}}, {{2, 3, 4}}});
  const auto link = link_double_hypergraph(h, 1);
  EXPECT_EQ(link.graph, MultiHypergraph::from_edges(3, 2, {{{1, 2}, {2, 3}}, {}}));
  EXPECT_EQ(link.original, (std::vector<Vertex>{2, 3, 4}));
  const auto at3 = link_double_hypergraph(h, 3);
  EXPECT_EQ(at3.graph, MultiHypergraph::from_edges(3, 2, {{{1, 2}, {1, 3}}, {{2, 3}}}));
  EXPECT_EQ(at3.original, (std::vector<Vertex>{1, 2, 4}));
}

TEST(Link, CompleteAndIsolated) {
  EXPECT_EQ(link_double_hypergraph(MultiHypergraph::complete(6, 4, 2), 2).graph, MultiHypergraph::complete(5, 3, 2));
  const auto h = MultiHypergraph::from_edges(5, 3, {{{1, 2, 3}}, {{2, 3, 4}}});
  EXPECT_EQ(link_double_hypergraph(h, 5).graph.edge_count(), 0u);
  EXPECT_THROW(link_double_hypergraph(MultiHypergraph(4, 2, 2), 1), std::invalid_argument);
  EXPECT_THROW(link_double_hypergraph(h, 6), std::invalid_argument);
}

TEST(GoodVertices, Examples) {
  for (Vertex n = 4; n <= 6; ++n) {
    const auto cls = classify_good_vertices(MultiHypergraph::complete(n, 3, 2), 2);
    EXPECT_EQ(cls.good.size(), n);
    EXPECT_TRUE(cls.exceptional.empty());
  }
  // vertex 5 is in no red edge (which also isolates it in every other red link)
  auto all = MultiHypergraph::complete(5, 3, 2);
  std::vector<Rank> red;
  for (Rank e : all.edges(1))
    if (!all.edge(e).contains(Vertex{5})) red.push_back(e);
  const auto h = MultiHypergraph::from_ranks(5, 3, {red, all.edges(2)});
  const auto cls = classify_good_vertices(h, 2);
  EXPECT_TRUE(std::binary_search(cls.exceptional.begin(), cls.exceptional.end(), Vertex{5}));
  EXPECT_EQ(cls.good.size() + cls.exceptional.size(), 5u);
  EXPECT_THROW(classify_good_vertices(h, 1), std::invalid_argument);
}

TEST(Projection, Examples) {
  const auto h = MultiHypergraph::from_edges(4, 3, {{{1, 2, 3}}, {}});
  const auto q12 = bipartition_projection(h, {2, 1});
  EXPECT_EQ(q12.graph, MultiHypergraph::from_edges(2, 2, {{{1, 2}}, {}}));
  EXPECT_EQ(q12.original, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(bipartition_projection(h, {1, 2, 3}).graph.edge_count(), 0u);
  for (Vertex n = 4; n <= 8; ++n) {
    std::vector<Vertex> q;
    for (Vertex v = 1; v <= n / 2; ++v) q.push_back(v);
    EXPECT_EQ(bipartition_projection(MultiHypergraph::complete(n, 3, 2), q).graph,
              MultiHypergraph::complete(n / 2, 2, 2));
  }
  EXPECT_THROW(bipartition_projection(h, {1}), std::invalid_argument);
  EXPECT_THROW(bipartition_projection(h, {1, 9}), std::invalid_argument);
}
