#include <gtest/gtest.h>

#include <random>

#include "jigsaw/engine.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace jigsaw;

namespace {

MultiHypergraph path_and_star() {  // percolates in two rounds
  return MultiHypergraph::from_edges(3, 2, {{{1, 2}, {2, 3}}, {{1, 2}, {1, 3}}});
}

MultiHypergraph crossed_trees() {  // no k-set in both colours
  return MultiHypergraph::from_edges(4, 2, {{{1, 2}, {2, 3}, {3, 4}}, {{1, 3}, {1, 4}, {2, 4}}});
}

Triple make_triple(Vertex n, std::size_t k, std::size_t j, const std::vector<JSet>& J0,
                   const std::vector<JSet>& E1, const std::vector<JSet>& E2) {
  Triple t{n, k, j, {}, {}, {}};
  for (const auto& s : J0) t.J0.push_back(rank_jset(s, n));
  for (const auto& s : E1) t.E1.push_back(rank_jset(s, n));
  for (const auto& s : E2) t.E2.push_back(rank_jset(s, n));
  t.normalize();
  return t;
}

}  // namespace

TEST(AuxGraph, Examples) {
  const auto p = JPartition::all_singletons(3, 1);
  EXPECT_EQ(build_aux_graph(path_and_star(), p, 1, 2), (std::vector<ClassPair>{{0, 1}}));
  const auto single = MultiHypergraph::from_edges(3, 3, {{{1, 2, 3}}, {{1, 2, 3}}});
  EXPECT_EQ(build_aux_graph(single, p, 1, 2), (std::vector<ClassPair>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(build_aux_graph(MultiHypergraph(5, 3, 2), JPartition::all_singletons(5, 2), 2, 2).empty());
}

TEST(Percolate, Examples) {
  const auto a = percolate(path_and_star(), 1);
  EXPECT_TRUE(a.percolated);
  EXPECT_EQ(a.rounds, 2u);
  EXPECT_EQ(a.trajectory, (std::vector<TrajectoryPoint>{{0, 3, 1}, {1, 2, 2}, {2, 1, 3}}));

  const auto b = percolate(crossed_trees(), 1);
  EXPECT_FALSE(b.percolated);
  EXPECT_EQ(b.final_cluster_count, 4u);
  EXPECT_EQ(b.rounds, 0u);

  for (std::size_t k = 2; k <= 5; ++k)
    for (std::size_t j = 1; j < k; ++j)
      for (Vertex n = static_cast<Vertex>(k); n <= 6; ++n) {
        const auto r = percolate(MultiHypergraph::complete(n, k, 2), j);
        EXPECT_TRUE(r.percolated);
        EXPECT_EQ(r.rounds, 1u) << n << " " << k << " " << j;
      }
}

TEST(Percolate, SingleInitialClusterPercolatesImmediately) {
  const auto r = percolate(MultiHypergraph(3, 2, 2), 1, 2, JPartition::singletons({1}));
  EXPECT_TRUE(r.percolated);
  EXPECT_EQ(r.rounds, 0u);
}

TEST(Percolate, Validation) {
  EXPECT_THROW(percolate(path_and_star(), 2), std::invalid_argument);
  EXPECT_THROW(percolate(path_and_star(), 0), std::invalid_argument);
  EXPECT_THROW(percolate(path_and_star(), 1, 3), std::invalid_argument);
  EXPECT_THROW(percolate(path_and_star(), 1, 0), std::invalid_argument);
}

TEST(Percolate, TrajectoryInvariants) {
  std::mt19937_64 gen(5);
  for (int t = 0; t < 200; ++t) {
    const auto colours = oracle::random_colours(7, 3, 2, 0.25, gen);
    const auto r = percolate(support::to_graph(7, 3, colours), 2);
    ASSERT_EQ(r.rounds + 1, r.trajectory.size());
    ASSERT_EQ(r.percolated, r.final_cluster_count == 1);
    ASSERT_EQ(r.final_partition.class_count(), r.final_cluster_count);
    for (std::size_t i = 1; i < r.trajectory.size(); ++i) {
      ASSERT_LT(r.trajectory[i].clusters, r.trajectory[i - 1].clusters);
      ASSERT_GE(r.trajectory[i].max_cluster, r.trajectory[i - 1].max_cluster);
    }
  }
}

TEST(Percolate, RThresholdOneIsUnionConnectivity) {
  const auto pairs = oracle::subsets(4, 2);
  for (std::uint64_t mask = 0; mask < 4096; ++mask) {
    const auto colours = support::colours_from_mask(pairs, 2, mask);
    oracle::Family merged = colours[0];
    merged.insert(merged.end(), colours[1].begin(), colours[1].end());
    const bool connected = oracle::component_count(oracle::j_components(4, 1, merged)) == 1;
    ASSERT_EQ(percolate(support::to_graph(4, 2, colours), 1, 1).percolated, connected);
  }
}

TEST(InternallySpanned, Examples) {
  EXPECT_TRUE(internally_spanned(make_triple(3, 2, 1, {{1}, {2}, {3}}, {{1, 2}, {2, 3}}, {{1, 2}, {1, 3}})));
  EXPECT_FALSE(internally_spanned(
      make_triple(4, 2, 1, {{1}, {2}, {3}, {4}}, {{1, 2}, {2, 3}, {3, 4}}, {{1, 3}, {1, 4}, {2, 4}})));
  EXPECT_TRUE(internally_spanned(make_triple(4, 3, 2, {{2, 4}}, {}, {})));
}

TEST(BottleneckWitness, Examples) {
  EXPECT_FALSE(bottleneck_witness(MultiHypergraph(4, 2, 2), 1, 2, 2).has_value());
  const auto one = bottleneck_witness(crossed_trees(), 1, 2, 1);
  ASSERT_TRUE(one.has_value());
  EXPECT_EQ(one->size(), 1u);
  const auto w = bottleneck_witness(path_and_star(), 1, 2, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (std::vector<Rank>{0, 1}));
  EXPECT_THROW(bottleneck_witness(path_and_star(), 1, 2, 0), std::invalid_argument);
  EXPECT_THROW(bottleneck_witness(path_and_star(), 1, 2, 4), std::invalid_argument);
}

// Witness size lies in [N, 2N) and the witness is internally spanned by H.
TEST(BottleneckWitness, SizeAndSpanning) {
  std::mt19937_64 gen(9);
  std::size_t found = 0;
  for (int t = 0; t < 150; ++t) {
    const int n = 6 + t % 3;
    const auto colours = oracle::random_colours(n, 3, 2, 0.45, gen);
    const auto h = support::to_graph(n, 3, colours);
    const Rank total = binomial(static_cast<Vertex>(n), 2);
    for (Rank N = 1; N <= total; N += 3) {
      const auto w = bottleneck_witness(h, 2, 2, N);
      if (!w) continue;
      ++found;
      ASSERT_GE(w->size(), N);
      ASSERT_LT(w->size(), 2 * N);
      Triple tri{static_cast<Vertex>(n), 3, 2, *w, h.edges(1), h.edges(2)};
      ASSERT_TRUE(internally_spanned(tri));
    }
  }
  EXPECT_GT(found, 100u);
}

TEST(Triple, ValidateAndSwap) {
  auto t = make_triple(3, 2, 1, {{1}, {2}}, {{1, 2}}, {{2, 3}});
  EXPECT_NO_THROW(t.validate());
  EXPECT_EQ(t.swapped().E1, t.E2);
  t.J0 = {1, 0};
  EXPECT_THROW(t.validate(), std::invalid_argument);
  t.J0 = {5};
  EXPECT_THROW(t.validate(), std::invalid_argument);
}
