#pragma once

// Seeded samplers for the binomial random models.
//
// Determinism contract: colour c of a sample is a pure function of
// (seed, c, p_c, model size).  Each colour draws from its own mt19937_64
// stream seeded with split_seed(seed, c), and selects edges by geometric
// skipping over the colex-ordered candidate k-sets: the gap to the next
// present edge is floor(ln U / ln(1 - p)) with U uniform on (0, 1].  This is
// equivalent to independent Bernoulli(p) trials per candidate and costs time
// proportional to the number of edges drawn.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/hypergraph.hpp"

namespace jigsaw {

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derived seed for sub-stream (a, b) of a master seed.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept {
  return mix64(mix64(mix64(seed) ^ (a * 0xd1b54a32d192ed03ULL)) ^ (b * 0x8cb92ba72f3d8dd7ULL));
}

enum class Model { multi_hypergraph, line_double_graph };

inline std::string to_string(Model m) {
  return m == Model::multi_hypergraph ? "multi" : "line";
}

inline Model parse_model(const std::string& s) {
  if (s == "multi" || s == "multi_hypergraph") return Model::multi_hypergraph;
  if (s == "line" || s == "line_double_graph") return Model::line_double_graph;
  throw std::invalid_argument("unknown model '" + s + "' (expected multi or line)");
}

struct SampleSpec {
  Model model = Model::multi_hypergraph;
  Vertex n = 0;
  std::size_t k = 2;        // ignored by the line model
  std::vector<double> p;    // one probability per colour; s = p.size()
  std::uint64_t seed = 0;

  std::size_t s() const noexcept { return p.size(); }
};

inline void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
}

namespace detail {

// Uniform on (0, 1] with 53 random bits.
inline double uniform_open_closed(std::mt19937_64& gen) {
  return static_cast<double>((gen() >> 11) + 1) * 0x1.0p-53;
}

// Indices in [0, total) kept independently with probability p, ascending.
template <class Fn>
void bernoulli_indices(std::uint64_t total, double p, std::uint64_t stream_seed, Fn&& keep) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) keep(i);
    return;
  }
  std::mt19937_64 gen(stream_seed);
  const double log_q = std::log1p(-p);
  std::uint64_t next = 0;
  while (true) {
    const double gap = std::floor(std::log(uniform_open_closed(gen)) / log_q);
    if (gap >= static_cast<double>(total - next)) return;
    next += static_cast<std::uint64_t>(gap);
    keep(next);
    if (++next >= total) return;
  }
}

// Intersecting pairs of 2-subsets of [n], as edge ranks of the 2-graph on the
// binom(n, 2) relabelled vertices, ascending.
inline std::vector<Rank> line_graph_candidates(Vertex n) {
  const Rank N = binomial(n, 2);
  std::vector<Rank> out;
  out.reserve(static_cast<std::size_t>(N) * (n - 2));
  // vertex id of {a < b} is its colex rank + 1 = binom(b-1, 2) + (a-1) + 1
  auto id = [](Vertex a, Vertex b) -> Rank {
    return static_cast<Rank>(b - 1) * (b - 2) / 2 + (a - 1) + 1;
  };
  auto edge_rank = [](Rank u, Rank w) -> Rank {  // 1-based u < w
    return w * (w - 1) / 2 - (w - 1) + (u - 1);
  };
  for (Vertex b = 2; b <= n; ++b)
    for (Vertex a = 1; a < b; ++a) {
      const Rank self = id(a, b);
      // neighbours sharing exactly one element
      for (Vertex x = 1; x <= n; ++x) {
        if (x == a || x == b) continue;
        for (const Rank other : {x < a ? id(x, a) : id(a, x), x < b ? id(x, b) : id(b, x)})
          if (other > self) out.push_back(edge_rank(self, other));
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Each k-set of [n] is an edge of colour c independently with probability p_c.
inline MultiHypergraph sample_multi_hypergraph(const SampleSpec& spec) {
  if (spec.p.empty()) throw std::invalid_argument("at least one colour probability required");
  for (double p : spec.p) check_probability(p);
  MultiHypergraph shape(spec.n, spec.k, spec.s());
  std::vector<std::vector<Rank>> colours(spec.s());
  for (std::size_t c = 0; c < spec.s(); ++c)
    detail::bernoulli_indices(shape.edge_space(), spec.p[c], split_seed(spec.seed, c + 1),
                              [&](std::uint64_t r) { colours[c].push_back(r); });
  return MultiHypergraph::from_ranks(spec.n, spec.k, std::move(colours));
}

/// Random line double graph: vertices are the 2-subsets of [n] (vertex id =
/// colex rank + 1), intersecting pairs are edges of colour c with probability
/// p_c, disjoint pairs never are.
inline MultiHypergraph sample_line_graph(Vertex n, const std::vector<double>& p, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("line model needs n >= 3");
  if (p.empty()) throw std::invalid_argument("at least one colour probability required");
  for (double q : p) check_probability(q);
  const auto candidates = detail::line_graph_candidates(n);
  std::vector<std::vector<Rank>> colours(p.size());
  for (std::size_t c = 0; c < p.size(); ++c)
    detail::bernoulli_indices(candidates.size(), p[c], split_seed(seed, c + 1),
                              [&](std::uint64_t i) { colours[c].push_back(candidates[i]); });
  return MultiHypergraph::from_ranks(static_cast<Vertex>(binomial(n, 2)), 2, std::move(colours));
}

inline MultiHypergraph sample_line_double_graph(Vertex n, double p1, double p2, std::uint64_t seed) {
  return sample_line_graph(n, {p1, p2}, seed);
}

inline MultiHypergraph sample(const SampleSpec& spec) {
  return spec.model == Model::multi_hypergraph ? sample_multi_hypergraph(spec)
                                               : sample_line_graph(spec.n, spec.p, spec.seed);
}

/// Per-round probability for two-round exposure: 1 - sqrt(1 - p), so that the
/// union of two independent rounds has edge probability p.
inline double two_round_split(double p) {
  check_probability(p);
  return 1.0 - std::sqrt(1.0 - p);
}

}  // namespace jigsaw
