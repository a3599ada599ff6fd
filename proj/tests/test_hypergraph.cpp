#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jigsaw/hypergraph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace jigsaw;

namespace {

std::size_t oracle_count(int n, int j, const oracle::Family& edges) {
  return oracle::component_count(oracle::j_components(n, j, edges));
}

// Same-class relation of the library partition equals the oracle's.
void expect_same_partition(const JPartition& p, const std::vector<int>& comp) {
  ASSERT_EQ(p.family().size(), comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a)
    for (std::size_t b = a + 1; b < comp.size(); ++b)
      ASSERT_EQ(p.labels()[a] == p.labels()[b], comp[a] == comp[b]);
}

}  // namespace

TEST(MultiHypergraph, ConstructionAndValidation) {
  auto h = MultiHypergraph::from_edges(4, 2, {{{1, 2}, {3, 4}}, {}});
  EXPECT_EQ(h.edge_count(), 2u);
  EXPECT_TRUE(h.has_edge(1, rank_jset({3, 4}, 4)));
  EXPECT_FALSE(h.has_edge(2, rank_jset({3, 4}, 4)));
  EXPECT_EQ(h.edge(rank_jset({3, 4}, 4)), JSet({3, 4}));
  EXPECT_THROW(MultiHypergraph(2, 3, 1), std::invalid_argument);
  EXPECT_THROW(MultiHypergraph(4, 2, 0), std::invalid_argument);
  EXPECT_THROW(MultiHypergraph::from_edges(4, 2, {{{1, 2}, {1, 2}}}), std::invalid_argument);
  EXPECT_THROW(MultiHypergraph::from_edges(4, 2, {{{1, 2, 3}}}), std::invalid_argument);
  EXPECT_THROW(MultiHypergraph::from_ranks(4, 2, {{6}}), std::invalid_argument);
  EXPECT_THROW(h.edges(3), std::invalid_argument);
  EXPECT_EQ(MultiHypergraph::complete(5, 3, 2).edge_count(), 20u);
}

TEST(JPartition, CanonicalLabels) {
  const JPartition p({1, 3, 5, 8}, {7, 2, 7, 2});
  EXPECT_EQ(p.labels(), (std::vector<std::uint32_t>{0, 1, 0, 1}));
  EXPECT_EQ(p.class_count(), 2u);
  EXPECT_EQ(p.class_of(8), 1u);
  EXPECT_THROW(p.class_of(2), std::out_of_range);
  EXPECT_EQ(p, JPartition::from_classes({{3, 8}, {5, 1}}));
  EXPECT_THROW(JPartition::from_classes({{1, 2}, {2}}), std::invalid_argument);
  EXPECT_EQ(JPartition::all_singletons(4, 2).class_count(), 6u);
}

TEST(JComponents, Examples) {
  const auto h = MultiHypergraph::from_edges(4, 3, {{{1, 2, 3}, {2, 3, 4}}});
  const auto p = j_components(h, 1, 2);
  EXPECT_EQ(p.class_count(), 2u);
  const auto lone = p.class_of(rank_jset({1, 4}, 4));
  for (const auto& s : all_jsets(4, 2))
    EXPECT_EQ(p.class_of(rank_jset(s, 4)) == lone, s == JSet({1, 4}));
  EXPECT_FALSE(is_j_connected(h, 1, 2));

  EXPECT_EQ(j_components(MultiHypergraph(3, 2, 1), 1, 1).class_count(), 3u);
  EXPECT_EQ(j_components(MultiHypergraph::complete(4, 3, 1), 1, 2).class_count(), 1u);
  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t j = 1; j < k; ++j) {
      EXPECT_TRUE(is_j_connected(MultiHypergraph::complete(static_cast<Vertex>(k), k, 1), 1, j));
      EXPECT_TRUE(is_j_connected(MultiHypergraph::complete(static_cast<Vertex>(k + 2), k, 1), 1, j));
    }
  EXPECT_FALSE(is_j_connected(MultiHypergraph(5, 3, 1), 1, 2));
}

// Every graph on n <= 6 vertices against plain connected components.
TEST(JComponents, MatchesGraphOracleExhaustively) {
  for (int n = 2; n <= 6; ++n) {
    const auto pairs = oracle::subsets(n, 2);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      const auto colours = support::colours_from_mask(pairs, 1, mask);
      const auto h = support::to_graph(n, 2, colours);
      const auto p = j_components(h, 1, 1);
      const auto comp = oracle::j_components(n, 1, colours[0]);
      ASSERT_EQ(p.class_count(), oracle::component_count(comp));
      expect_same_partition(p, comp);
    }
  }
}

TEST(JComponents, MatchesWalkOracleForHigherJ) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + trial % 3;
    for (auto [k, j] : {std::pair{3, 2}, std::pair{3, 1}, std::pair{4, 2}, std::pair{4, 3}}) {
      if (k > n) continue;
      const auto colours = oracle::random_colours(n, k, 1, 0.1 + 0.05 * (trial % 8), gen);
      const auto h = support::to_graph(n, k, colours);
      const auto comp = oracle::j_components(n, j, colours[0]);
      const auto p = j_components(h, 1, static_cast<std::size_t>(j));
      ASSERT_EQ(p.class_count(), oracle_count(n, j, colours[0]));
      expect_same_partition(p, comp);
      // idempotent and independent of insertion order
      auto reversed = colours;
      std::reverse(reversed[0].begin(), reversed[0].end());
      ASSERT_EQ(j_components(support::to_graph(n, k, reversed), 1, static_cast<std::size_t>(j)), p);
    }
  }
}

TEST(ConnectivityThreshold, Values) {
  EXPECT_NEAR(connectivity_threshold(100, 3, 2), 0.092103, 1e-6);
  EXPECT_NEAR(connectivity_threshold(1000, 2, 1), 0.0069078, 1e-7);
  double prev = connectivity_threshold(10, 2, 1);
  for (Vertex n = 11; n <= 1000000; n = n + 1 + n / 10) {
    const double cur = connectivity_threshold(n, 2, 1);
    EXPECT_LT(cur, prev);
    prev = cur;
  }
}
