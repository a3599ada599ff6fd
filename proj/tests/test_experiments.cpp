#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jigsaw/experiments.hpp"

using namespace jigsaw;

namespace {

SweepConfig small_config() {
  SweepConfig cfg;
  cfg.n = 60;
  cfg.k = 2;
  cfg.j = 1;
  cfg.c_grid = {0.5, 2, 8};
  cfg.trials = 20;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST(Probabilities, Examples) {
  SweepConfig cfg;
  cfg.n = 1000;
  auto p = probabilities_for_c(cfg, 1.0);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p[0], std::sqrt(1.0 / (1000 * std::log(1000.0))), 1e-15);
  EXPECT_NEAR(p[0], 0.01203, 5e-6);
  EXPECT_DOUBLE_EQ(p[0], p[1]);

  cfg.n = 100;
  cfg.k = 3;
  cfg.j = 2;
  p = probabilities_for_c(cfg, 1.0);
  EXPECT_NEAR(p[0] * p[1], 1.0 / (100 * std::log(100.0)), 1e-12);

  cfg.s = 3;
  cfg.k = 2;
  cfg.j = 1;
  cfg.n = 3000;
  p = probabilities_for_c(cfg, 2.0);
  const double ln = std::log(3000.0);
  EXPECT_NEAR(p[0] * p[1] * p[2], 2.0 / (3000 * ln * ln), 1e-15);

  cfg.s = 2;
  cfg.ratios = {1, 4};
  p = probabilities_for_c(cfg, 1.0);
  EXPECT_NEAR(p[1] / p[0], 4.0, 1e-12);

  SweepConfig line;
  line.model = Model::line_double_graph;
  line.n = 40;
  p = probabilities_for_c(line, 3.0);
  EXPECT_NEAR(p[0] * p[1], 3.0 / (40 * std::log(40.0)), 1e-12);

  cfg.ratios.clear();
  cfg.n = 10;
  EXPECT_THROW(probabilities_for_c(cfg, 1e6), std::invalid_argument);
  EXPECT_THROW(probabilities_for_c(cfg, 0.0), std::invalid_argument);
}

TEST(Config, Validation) {
  auto cfg = small_config();
  EXPECT_NO_THROW(cfg.validate());
  cfg.trials = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.c_grid = {2, 1};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.model = Model::line_double_graph;
  cfg.k = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.r_threshold = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Wilson, Interval) {
  const auto ci = wilson_interval(50, 100);
  EXPECT_NEAR(ci.low, 0.4038, 1e-4);
  EXPECT_NEAR(ci.high, 0.5962, 1e-4);
  EXPECT_EQ(wilson_interval(0, 10).low, 0.0);
  EXPECT_EQ(wilson_interval(10, 10).high, 1.0);
  for (std::size_t s = 0; s <= 30; ++s) EXPECT_TRUE(wilson_interval(s, 30).contains(s / 30.0));
  EXPECT_THROW(wilson_interval(0, 0), std::invalid_argument);
}

TEST(Sweep, RowsAndDeterminism) {
  auto cfg = small_config();
  const auto rows = run_sweep(cfg);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].c, cfg.c_grid[i]);
    EXPECT_LE(rows[i].percolated, rows[i].trials);
    EXPECT_TRUE(rows[i].ci.contains(rows[i].prob));
  }
  cfg.threads = 4;
  const auto parallel = run_sweep(cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(parallel[i].percolated, rows[i].percolated);
    EXPECT_EQ(parallel[i].mean_rounds, rows[i].mean_rounds);
    EXPECT_EQ(parallel[i].mean_max_cluster_frac, rows[i].mean_max_cluster_frac);
  }
}

TEST(Sweep, MonotonicityViolations) {
  std::vector<SweepRow> rows(3);
  rows[0].ci = {0.0, 0.2};
  rows[1].ci = {0.5, 0.9};
  rows[2].ci = {0.1, 0.4};
  EXPECT_EQ(monotonicity_violations(rows), (std::vector<std::size_t>{1}));
}

TEST(Crossing, StepFunction) {
  const double tol = 0.05;
  const auto res = estimate_crossing(
      [](double c, std::uint64_t) { return Measurement{c, c >= 7 ? 100u : 0u, 100}; }, 0.05, 40, 0.5, tol);
  EXPECT_GE(res.c_star, 7 - tol);
  EXPECT_LE(res.c_star, 7 + tol);
}

TEST(Crossing, LogisticCalibration) {
  const auto res = estimate_crossing(
      [](double c, std::uint64_t index) {
        std::mt19937_64 gen(split_seed(21, index));
        std::binomial_distribution<std::size_t> draw(10000, 1.0 / (1.0 + std::exp(-(c - 3.0))));
        return Measurement{c, draw(gen), 10000};
      },
      0.05, 40, 0.5, 0.01);
  EXPECT_NEAR(res.c_star, 3.0, 0.2);
}

TEST(Crossing, NoStraddle) {
  auto measure = [](double c, std::uint64_t) { return Measurement{c, c >= 2 ? 100u : 0u, 100}; };
  EXPECT_THROW(estimate_crossing(measure, 10, 20, 0.5, 0.05), std::invalid_argument);
}
