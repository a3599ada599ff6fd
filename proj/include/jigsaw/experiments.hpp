#pragma once

// Monte Carlo sweeps over the threshold constant c.
//
// For the s-colour binomial k-graph the product of the edge probabilities is
// set to c / (n^(s(k-j-1)+1) (ln n)^(s-1)); for s = 2 this is
// c / (n^(2k-2j-1) ln n).  For the line model, n is the ground set size and
// p_1 p_2 = c / (n ln n).  Every trial seed is split_seed(master, point, trial),
// so rows do not depend on trial execution order or thread count.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/engine.hpp"
#include "jigsaw/hypergraph.hpp"
#include "jigsaw/random.hpp"

namespace jigsaw {

struct SweepConfig {
  Model model = Model::multi_hypergraph;
  Vertex n = 0;
  std::size_t k = 2;
  std::size_t j = 1;
  std::size_t s = 2;
  std::size_t r_threshold = 2;
  std::vector<double> c_grid;
  std::vector<double> ratios;  // empty: balanced allocation
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  double target = 0.5;       // crossing search only
  double tolerance = 0.05;   // crossing search only

  void validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (s < 1) throw std::invalid_argument("s must be at least 1");
    if (r_threshold < 1 || r_threshold > s) throw std::invalid_argument("r_threshold must be in [1, s]");
    if (model == Model::line_double_graph) {
      if (k != 2 || j != 1) throw std::invalid_argument("line model runs with k = 2, j = 1");
      if (s != 2) throw std::invalid_argument("line model has two colours");
      if (n < 3) throw std::invalid_argument("line model needs n >= 3");
    } else {
      if (j < 1 || j >= k || k > n) throw std::invalid_argument("need 1 <= j < k <= n");
    }
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (c_grid.empty()) throw std::invalid_argument("c_grid must be non-empty");
    for (std::size_t i = 0; i < c_grid.size(); ++i) {
      if (!(c_grid[i] > 0.0)) throw std::invalid_argument("c_grid values must be positive");
      if (i && !(c_grid[i - 1] < c_grid[i]))
        throw std::invalid_argument("c_grid must be strictly increasing");
    }
    if (!ratios.empty()) {
      if (ratios.size() != s) throw std::invalid_argument("ratios must have s entries");
      for (double r : ratios)
        if (!(r > 0.0)) throw std::invalid_argument("ratios must be positive");
    }
    if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  }

  /// Number of j-sets the process runs on.
  double jset_count() const {
    return model == Model::line_double_graph ? static_cast<double>(binomial(n, 2))
                                             : static_cast<double>(binomial(n, j));
  }
};

/// Natural log of the target product of colour probabilities at constant c.
inline double log_product_for_c(const SweepConfig& cfg, double c) {
  const double ln_n = std::log(static_cast<double>(cfg.n));
  const double s = static_cast<double>(cfg.s);
  if (cfg.model == Model::line_double_graph) return std::log(c) - ln_n - std::log(ln_n);
  const double exponent = s * (static_cast<double>(cfg.k) - static_cast<double>(cfg.j) - 1.0) + 1.0;
  return std::log(c) - exponent * ln_n - (s - 1.0) * std::log(ln_n);
}

/// Colour probabilities whose product meets the threshold form at c, split
/// evenly (balanced) or proportionally to cfg.ratios.
inline std::vector<double> probabilities_for_c(const SweepConfig& cfg, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  const double log_prod = log_product_for_c(cfg, c);
  std::vector<double> p(cfg.s);
  double log_ratio_sum = 0.0;
  for (double r : cfg.ratios) log_ratio_sum += std::log(r);
  const double log_base = (log_prod - log_ratio_sum) / static_cast<double>(cfg.s);
  for (std::size_t i = 0; i < cfg.s; ++i) {
    p[i] = std::exp(log_base + (cfg.ratios.empty() ? 0.0 : std::log(cfg.ratios[i])));
    if (p[i] > 1.0)
      throw std::invalid_argument("c = " + std::to_string(c) + " gives p_" + std::to_string(i + 1) +
                                  " = " + std::to_string(p[i]) + " > 1");
  }
  return p;
}

/// Side condition min p_i >= c ln n / n^(k-j) of the supercritical regime.
inline bool min_p_condition(const SweepConfig& cfg, double c, const std::vector<double>& p) {
  const double ln_n = std::log(static_cast<double>(cfg.n));
  const double power = cfg.model == Model::line_double_graph
                           ? static_cast<double>(cfg.n)
                           : std::pow(static_cast<double>(cfg.n), static_cast<double>(cfg.k - cfg.j));
  return *std::min_element(p.begin(), p.end()) >= c * ln_n / power;
}

struct Interval {
  double low = 0.0;
  double high = 1.0;

  bool contains(double x) const noexcept { return low <= x && x <= high; }
};

/// Wilson score interval (95% by default).
inline Interval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054) {
  if (trials == 0) throw std::invalid_argument("wilson interval needs trials >= 1");
  const double nt = static_cast<double>(trials);
  const double ph = static_cast<double>(successes) / nt;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nt;
  const double centre = (ph + z2 / (2.0 * nt)) / denom;
  const double half = z / denom * std::sqrt(ph * (1.0 - ph) / nt + z2 / (4.0 * nt * nt));
  // the endpoints at 0 and 1 are exact; avoid rounding just inside them
  return {successes == 0 ? 0.0 : std::max(0.0, centre - half),
          successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

struct TrialOutcome {
  bool percolated = false;
  std::size_t rounds = 0;
  double max_cluster_fraction = 0.0;
};

struct SweepRow {
  Model model = Model::multi_hypergraph;
  Vertex n = 0;
  std::size_t k = 0, j = 0, s = 0, r_threshold = 0;
  double c = 0.0;
  std::vector<double> p;
  std::size_t trials = 0;
  std::size_t percolated = 0;
  double prob = 0.0;
  Interval ci;
  double mean_rounds = 0.0;
  double mean_max_cluster_frac = 0.0;
  bool min_p_condition_met = false;
  std::uint64_t seed = 0;
};

inline TrialOutcome run_trial(const SweepConfig& cfg, const std::vector<double>& p, std::uint64_t seed) {
  const SampleSpec spec{cfg.model, cfg.n, cfg.k, p, seed};
  const auto h = sample(spec);
  const auto res = percolate(h, cfg.j, cfg.r_threshold);
  return {res.percolated, res.rounds,
          static_cast<double>(res.trajectory.back().max_cluster) / cfg.jset_count()};
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next++) < count;) {
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

/// One aggregated row at constant c; point_index selects the seed stream.
inline SweepRow evaluate_point(const SweepConfig& cfg, double c, std::uint64_t point_index) {
  const auto p = probabilities_for_c(cfg, c);
  std::vector<TrialOutcome> outcomes(cfg.trials);
  parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
    outcomes[t] = run_trial(cfg, p, split_seed(cfg.seed, point_index, t));
  });
  SweepRow row;
  row.model = cfg.model;
  row.n = cfg.n;
  row.k = cfg.k;
  row.j = cfg.j;
  row.s = cfg.s;
  row.r_threshold = cfg.r_threshold;
  row.c = c;
  row.p = p;
  row.trials = cfg.trials;
  double rounds = 0.0, frac = 0.0;
  for (const auto& o : outcomes) {
    row.percolated += o.percolated ? 1 : 0;
    rounds += static_cast<double>(o.rounds);
    frac += o.max_cluster_fraction;
  }
  const double nt = static_cast<double>(cfg.trials);
  row.prob = static_cast<double>(row.percolated) / nt;
  row.ci = wilson_interval(row.percolated, cfg.trials);
  row.mean_rounds = rounds / nt;
  row.mean_max_cluster_frac = frac / nt;
  row.min_p_condition_met = min_p_condition(cfg, c, p);
  row.seed = cfg.seed;
  return row;
}

inline std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  for (double c : cfg.c_grid) probabilities_for_c(cfg, c);  // fail before running anything
  std::vector<SweepRow> rows;
  for (std::size_t i = 0; i < cfg.c_grid.size(); ++i) rows.push_back(evaluate_point(cfg, cfg.c_grid[i], i));
  return rows;
}

/// Index pairs (i, i+1) where the estimate drops with non-overlapping
/// confidence intervals.
inline std::vector<std::size_t> monotonicity_violations(const std::vector<SweepRow>& rows) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    if (rows[i + 1].ci.high < rows[i].ci.low) out.push_back(i);
  return out;
}

struct Measurement {
  double c = 0.0;
  std::size_t successes = 0;
  std::size_t trials = 0;

  double prob() const { return static_cast<double>(successes) / static_cast<double>(trials); }
  Interval ci() const { return wilson_interval(successes, trials); }
};

struct CrossingResult {
  double c_star = 0.0;
  double low = 0.0;   // final bracket
  double high = 0.0;
  std::vector<Measurement> measurements;  // in evaluation order
};

/// Bisection for the c where the success probability crosses target, at the
/// geometric midpoint when the bracket is positive.  measure
/// is called as measure(c, evaluation_index) and must be non-decreasing in c
/// up to noise.  Stops when the Wilson interval at the midpoint contains the
/// target or the bracket is narrower than tolerance.
inline CrossingResult estimate_crossing(const std::function<Measurement(double, std::uint64_t)>& measure,
                                        double low, double high, double target, double tolerance) {
  if (!(low < high)) throw std::invalid_argument("crossing bracket must satisfy low < high");
  if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target must be in (0, 1)");
  CrossingResult res;
  std::uint64_t index = 0;
  const auto m_low = measure(low, index++);
  const auto m_high = measure(high, index++);
  res.measurements = {m_low, m_high};
  if (!(m_low.prob() < target && m_high.prob() > target))
    throw std::invalid_argument("bracket [" + std::to_string(low) + ", " + std::to_string(high) +
                                "] does not straddle target " + std::to_string(target));
  for (int step = 0; step < 200 && high - low >= tolerance; ++step) {
    const double mid = low > 0.0 ? std::sqrt(low * high) : 0.5 * (low + high);
    const auto m = measure(mid, index++);
    res.measurements.push_back(m);
    if (m.ci().contains(target)) {
      res.c_star = mid;
      res.low = low;
      res.high = high;
      return res;
    }
    (m.prob() < target ? low : high) = mid;
  }
  res.c_star = low > 0.0 ? std::sqrt(low * high) : 0.5 * (low + high);
  res.low = low;
  res.high = high;
  return res;
}

/// Crossing of the percolation probability over the bracket
/// [c_grid.front(), c_grid.back()].
inline CrossingResult estimate_crossing(const SweepConfig& cfg) {
  cfg.validate();
  if (cfg.c_grid.size() < 2) throw std::invalid_argument("crossing needs a bracket of two c values");
  return estimate_crossing(
      [&](double c, std::uint64_t index) {
        const auto row = evaluate_point(cfg, c, index);
        return Measurement{c, row.percolated, row.trials};
      },
      cfg.c_grid.front(), cfg.c_grid.back(), cfg.target, cfg.tolerance);
}

}  // namespace jigsaw
