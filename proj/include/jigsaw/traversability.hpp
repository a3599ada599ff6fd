#pragma once

// Traversable triples and their blueprints.
//
// A family J* is J-traversable in (V, E) when any two of its members are
// joined by an edge walk whose consecutive intersections contain a member of
// J.  Edge-minimal traversable triples are summarised by a blueprint: a pair
// of matrices counting, per BFS step i and duty z, the red (blue) edges that
// coloured (marked) exactly z new j-sets.  Algorithm WR-B rebuilds triples
// from blueprints; its outputs form a superset of the edge-minimal triples.
//
// The enumerations here are exponential and guarded to desk-scale parameters.
// Everything is expressed in colex ranks; sigma is the colex order.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/engine.hpp"
#include "jigsaw/hypergraph.hpp"
#include "jigsaw/union_find.hpp"

namespace jigsaw {

/// Non-negative integer matrix with rows i = 1..a and duty columns
/// z = 0..binom(k, j).  Rows are stored 0-based.
struct BlueprintMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;

  BlueprintMatrix() = default;
  BlueprintMatrix(std::size_t a, std::size_t columns)
      : rows(a), cols(columns), entries(a * columns, 0) {}

  std::uint32_t& at(std::size_t i, std::size_t z) { return entries[i * cols + z]; }
  std::uint32_t at(std::size_t i, std::size_t z) const { return entries[i * cols + z]; }

  friend auto operator<=>(const BlueprintMatrix&, const BlueprintMatrix&) = default;
  friend bool operator==(const BlueprintMatrix&, const BlueprintMatrix&) = default;
};

struct MatrixWeights {
  std::uint64_t f = 0;  // sum of z * m_{i,z}
  std::uint64_t g = 0;  // sum of m_{i,z}

  friend bool operator==(const MatrixWeights&, const MatrixWeights&) = default;
};

inline MatrixWeights matrix_weights(const BlueprintMatrix& m) {
  MatrixWeights w;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t z = 0; z < m.cols; ++z) {
      w.f += z * m.at(i, z);
      w.g += m.at(i, z);
    }
  return w;
}

struct Blueprint {
  BlueprintMatrix R;
  BlueprintMatrix B;
  std::vector<Rank> bfs_order;  // tau: J0 in red-BFS order
};

namespace detail {

inline void check_params(Vertex n, std::size_t k, std::size_t j) {
  if (j < 1 || j >= k || k > n) throw std::invalid_argument("need 1 <= j < k <= n");
  if (k > 63) throw std::invalid_argument("uniformity above 63 is unsupported");
}

// Family indices (into the sorted family) of the j-subsets of each edge, in
// colex order.
inline std::vector<std::vector<std::uint32_t>> edge_members(std::span<const Rank> edges,
                                                            std::span<const Rank> family,
                                                            const BinomialTable& binom,
                                                            std::size_t k, std::size_t j) {
  std::vector<std::vector<std::uint32_t>> out(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e)
    for_each_jsubset_rank(binom, edges[e], k, j, [&](Rank r) {
      auto it = std::lower_bound(family.begin(), family.end(), r);
      if (it != family.end() && *it == r)
        out[e].push_back(static_cast<std::uint32_t>(it - family.begin()));
    });
  return out;
}

inline bool sorted_unique(std::span<const Rank> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

}  // namespace detail

/// Whether jstar is jref-traversable in the k-graph (V, edges).  All arguments
/// are sorted colex ranks.  Members of jstar in no edge make a family of two or
/// more untraversable.
inline bool is_traversable_family(std::span<const Rank> jstar, std::span<const Rank> jref,
                                  std::span<const Rank> edges, Vertex n, std::size_t k,
                                  std::size_t j) {
  detail::check_params(n, k, j);
  if (!detail::sorted_unique(jstar) || !detail::sorted_unique(jref) || !detail::sorted_unique(edges))
    throw std::invalid_argument("traversability arguments must be sorted without duplicates");
  if (!std::includes(jref.begin(), jref.end(), jstar.begin(), jstar.end()))
    throw std::invalid_argument("J* is not a subset of the reference family");
  if (jstar.size() <= 1) return true;

  const BinomialTable binom(n, k);
  const auto members = detail::edge_members(edges, jref, binom, k, j);
  // edges sharing a reference j-set are adjacent
  UnionFind uf(edges.size());
  std::vector<std::int64_t> first_edge(jref.size(), -1);
  for (std::size_t e = 0; e < edges.size(); ++e)
    for (auto m : members[e]) {
      if (first_edge[m] < 0) first_edge[m] = static_cast<std::int64_t>(e);
      else uf.unite(static_cast<std::uint32_t>(first_edge[m]), static_cast<std::uint32_t>(e));
    }
  std::int64_t root = -1;
  for (Rank r : jstar) {
    const auto m = std::lower_bound(jref.begin(), jref.end(), r) - jref.begin();
    if (first_edge[m] < 0) return false;
    const auto here = static_cast<std::int64_t>(uf.find(static_cast<std::uint32_t>(first_edge[m])));
    if (root < 0) root = here;
    else if (root != here) return false;
  }
  return true;
}

/// (J0, E) is traversable: J0 is J0-traversable in (V, E).
inline bool is_traversable_pair(std::span<const Rank> J0, std::span<const Rank> edges, Vertex n,
                                std::size_t k, std::size_t j) {
  return is_traversable_family(J0, J0, edges, n, k, j);
}

inline bool is_traversable_triple(const Triple& t) {
  t.validate();
  return is_traversable_pair(t.J0, t.E1, t.n, t.k, t.j) &&
         is_traversable_pair(t.J0, t.E2, t.n, t.k, t.j);
}

/// Traversable, and removing any single edge breaks traversability.
inline bool is_edge_minimal_pair(std::span<const Rank> J0, std::span<const Rank> edges, Vertex n,
                                 std::size_t k, std::size_t j) {
  if (!is_traversable_pair(J0, edges, n, k, j)) return false;
  std::vector<Rank> rest;
  for (std::size_t drop = 0; drop < edges.size(); ++drop) {
    rest.clear();
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (e != drop) rest.push_back(edges[e]);
    if (is_traversable_pair(J0, rest, n, k, j)) return false;
  }
  return true;
}

/// Edge-minimality is checked per colour.
inline bool is_edge_minimal_triple(const Triple& t) {
  t.validate();
  return is_edge_minimal_pair(t.J0, t.E1, t.n, t.k, t.j) &&
         is_edge_minimal_pair(t.J0, t.E2, t.n, t.k, t.j);
}

struct CensusGuard {
  static constexpr Rank max_jsets = 15;
  static constexpr std::size_t max_size = 6;

  static void check(Vertex n, std::size_t k, std::size_t j, std::size_t ell, std::size_t r,
                    std::size_t b) {
    detail::check_params(n, k, j);
    if (binomial(n, j) > max_jsets)
      throw std::invalid_argument("census guard: binom(n, j) must be at most 15");
    if (ell < 1 || ell > max_size) throw std::invalid_argument("census guard: need 1 <= ell <= 6");
    if (r > ell || b > ell) throw std::invalid_argument("census guard: need r, b <= ell");
  }
};

namespace detail {

// Calls fn(span of chosen values) for each size-m combination of pool.
template <class T, class Fn>
void for_each_combination(const std::vector<T>& pool, std::size_t m, Fn&& fn) {
  if (m > pool.size()) return;
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  std::vector<T> cur(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) cur[i] = pool[idx[i]];
    fn(std::span<const T>(cur));
    std::size_t p = m;
    while (p > 0 && idx[p - 1] == pool.size() - m + p - 1) --p;
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t q = p; q < m; ++q) idx[q] = idx[q - 1] + 1;
  }
}

// Edge sets of size m forming edge-minimal traversable pairs with J0.  For
// |J0| >= 2 every edge of such a pair contains at least two members of J0
// (an edge with at most one member can be dropped from any walk), so only
// those k-sets are candidates.
inline std::vector<std::vector<Rank>> minimal_pairs(std::span<const Rank> J0, std::size_t m,
                                                    Vertex n, std::size_t k, std::size_t j,
                                                    const BinomialTable& binom) {
  std::vector<std::vector<Rank>> out;
  if (J0.size() == 1) {
    if (m == 0) out.emplace_back();
    return out;
  }
  std::vector<Rank> candidates;
  const Rank ks = binomial(n, k);
  for (Rank e = 0; e < ks; ++e) {
    std::size_t hits = 0;
    for_each_jsubset_rank(binom, e, k, j, [&](Rank r) {
      if (std::binary_search(J0.begin(), J0.end(), r)) ++hits;
    });
    if (hits >= 2) candidates.push_back(e);
  }
  for_each_combination(candidates, m, [&](std::span<const Rank> edges) {
    if (is_edge_minimal_pair(J0, edges, n, k, j)) out.emplace_back(edges.begin(), edges.end());
  });
  return out;
}

template <class Fn>
void for_each_census_family(Vertex n, std::size_t j, std::size_t ell, Fn&& fn) {
  std::vector<Rank> all(binomial(n, j));
  for (Rank r = 0; r < all.size(); ++r) all[r] = r;
  for_each_combination(all, ell, std::forward<Fn>(fn));
}

}  // namespace detail

/// All edge-minimal traversable triples with |J0| = ell, |E1| = r, |E2| = b in
/// the complete double k-graph on [n], sorted.
inline std::vector<Triple> census_triples(Vertex n, std::size_t k, std::size_t j, std::size_t ell,
                                          std::size_t r, std::size_t b) {
  CensusGuard::check(n, k, j, ell, r, b);
  const BinomialTable binom(n, k);
  std::vector<Triple> out;
  detail::for_each_census_family(n, j, ell, [&](std::span<const Rank> J0) {
    const auto red = detail::minimal_pairs(J0, r, n, k, j, binom);
    if (red.empty()) return;
    const auto blue = r == b ? red : detail::minimal_pairs(J0, b, n, k, j, binom);
    for (const auto& e1 : red)
      for (const auto& e2 : blue)
        out.push_back(Triple{n, k, j, std::vector<Rank>(J0.begin(), J0.end()), e1, e2});
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// |census_triples(...)| without materialising the triples.
inline std::uint64_t census_count(Vertex n, std::size_t k, std::size_t j, std::size_t ell,
                                  std::size_t r, std::size_t b) {
  CensusGuard::check(n, k, j, ell, r, b);
  const BinomialTable binom(n, k);
  std::uint64_t total = 0;
  detail::for_each_census_family(n, j, ell, [&](std::span<const Rank> J0) {
    const auto red = detail::minimal_pairs(J0, r, n, k, j, binom).size();
    if (red == 0) return;
    const auto blue = r == b ? red : detail::minimal_pairs(J0, b, n, k, j, binom).size();
    total += red * blue;
  });
  return total;
}

/// Blueprint of a triple whose J0 is traversable in the red k-graph.
///
/// Red pass: BFS from the colex-minimal member of J0; the edges of each active
/// j-set not yet considered are taken in colex order and colour their
/// uncoloured J0 members white.  The new whites of a step join the queue
/// grouped by their edge's duty z (ascending), then edge and member colex order.
/// Blue pass: at step i the blue edges containing J_(i) and no later J_(l)
/// are revealed in colex order and mark their unmarked members.
inline Blueprint blueprint(const Triple& t) {
  t.validate();
  if (t.J0.empty()) throw std::invalid_argument("blueprint needs a non-empty J0");
  const std::size_t ell = t.J0.size();
  const std::size_t columns = static_cast<std::size_t>(binomial(t.k, t.j)) + 1;
  const BinomialTable binom(t.n, t.k);
  const auto red = detail::edge_members(t.E1, t.J0, binom, t.k, t.j);
  const auto blue = detail::edge_members(t.E2, t.J0, binom, t.k, t.j);

  Blueprint bp{BlueprintMatrix(ell, columns), BlueprintMatrix(ell, columns), {}};
  std::vector<std::uint32_t> order{0};
  std::vector<bool> white(ell, false), considered(t.E1.size(), false);
  white[0] = true;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto active = order[pos];
    std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> found;  // (z, new whites)
    for (std::size_t e = 0; e < t.E1.size(); ++e) {
      if (considered[e]) continue;
      if (std::find(red[e].begin(), red[e].end(), active) == red[e].end()) continue;
      considered[e] = true;
      std::vector<std::uint32_t> fresh;
      for (auto m : red[e])
        if (!white[m]) {
          white[m] = true;
          fresh.push_back(m);
        }
      ++bp.R.at(pos, fresh.size());
      found.emplace_back(fresh.size(), std::move(fresh));
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& f : found) order.insert(order.end(), f.second.begin(), f.second.end());
  }
  if (order.size() != ell)
    throw std::invalid_argument("triple is not traversable in its red k-graph");

  std::vector<std::size_t> position(ell);
  for (std::size_t i = 0; i < ell; ++i) position[order[i]] = i;
  std::vector<bool> marked(ell, false);
  marked[order[0]] = true;
  for (std::size_t i = 0; i < ell; ++i) {
    for (std::size_t e = 0; e < t.E2.size(); ++e) {
      const auto& mem = blue[e];
      if (mem.empty()) continue;
      std::size_t last = 0;
      for (auto m : mem) last = std::max(last, position[m]);
      if (last != i) continue;
      std::size_t z = 0;
      for (auto m : mem)
        if (!marked[m]) {
          marked[m] = true;
          ++z;
        }
      ++bp.B.at(i, z);
    }
  }
  for (auto m : order) bp.bfs_order.push_back(t.J0[m]);
  return bp;
}

struct MatrixGuard {
  static constexpr std::size_t max_rows = 6;
  static constexpr std::size_t max_edges = 5;
};

/// M_{a,m}: all a x (binom(k,j)+1) non-negative integer matrices with
/// f = a - 1 and g = m, in lexicographic order of their entries.
inline std::vector<BlueprintMatrix> enumerate_blueprint_matrices(std::size_t a, std::size_t m,
                                                                 std::size_t k, std::size_t j) {
  if (j < 1 || j >= k) throw std::invalid_argument("need 1 <= j < k");
  if (a < 1 || a > MatrixGuard::max_rows || m > MatrixGuard::max_edges)
    throw std::invalid_argument("matrix guard: need 1 <= a <= 6 and m <= 5");
  const std::size_t cols = static_cast<std::size_t>(binomial(k, j)) + 1;
  const std::size_t cells = a * cols;
  std::vector<BlueprintMatrix> out;
  BlueprintMatrix cur(a, cols);
  // fill cells in row-major order, tracking remaining count and weight
  auto rec = [&](auto&& self, std::size_t cell, std::size_t count, std::size_t weight) -> void {
    if (cell == cells) {
      if (count == 0 && weight == 0) out.push_back(cur);
      return;
    }
    const std::size_t z = cell % cols;
    for (std::size_t v = 0; v <= count && v * z <= weight; ++v) {
      cur.entries[cell] = static_cast<std::uint32_t>(v);
      self(self, cell + 1, count - v, weight - v * z);
    }
    cur.entries[cell] = 0;
  };
  rec(rec, 0, m, a - 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// Upper bound (9 binom(k,j)^2)^(a-1) on |M_{a,m}|.
inline double matrix_count_bound(std::size_t a, std::size_t k, std::size_t j) {
  const double c = static_cast<double>(binomial(k, j));
  double bound = 1.0;
  for (std::size_t i = 1; i < a; ++i) bound *= 9.0 * c * c;
  return bound;
}

namespace detail {

// Replays a fixed choice sequence.
class SequenceChooser {
 public:
  explicit SequenceChooser(std::span<const std::size_t> choices) : choices_(choices) {}

  std::size_t operator()(std::size_t count) {
    if (pos_ >= choices_.size()) throw std::invalid_argument("choice sequence exhausted");
    const auto c = choices_[pos_++];
    if (c >= count)
      throw std::out_of_range("choice " + std::to_string(c) + " out of range [0, " +
                              std::to_string(count) + ")");
    return c;
  }

  bool finished() const noexcept { return pos_ == choices_.size(); }

 private:
  std::span<const std::size_t> choices_;
  std::size_t pos_ = 0;
};

// Walks every choice sequence of a deterministic process in lexicographic
// order: each run takes 0 for unseen positions, then the last digit below its
// limit is bumped and everything after it dropped.
class OdometerChooser {
 public:
  std::size_t operator()(std::size_t count) {
    if (pos_ < digits_.size()) return digits_[pos_++];
    digits_.push_back(0);
    limits_.push_back(count);
    ++pos_;
    return 0;
  }

  bool advance() {
    digits_.resize(pos_);
    limits_.resize(pos_);
    pos_ = 0;
    while (!digits_.empty()) {
      if (++digits_.back() < limits_.back()) return true;
      digits_.pop_back();
      limits_.pop_back();
    }
    return false;
  }

 private:
  std::vector<std::size_t> digits_, limits_;
  std::size_t pos_ = 0;
};

struct WrbContext {
  Vertex n;
  std::size_t k, j, columns;
  BinomialTable binom;
};

// Output of phase WR: J0 in theta order and the red edges.
struct WhiteRed {
  std::vector<Rank> order;
  std::vector<Rank> red;

  friend auto operator<=>(const WhiteRed&, const WhiteRed&) = default;
};

inline std::vector<Vertex> vertices_of(const WrbContext& ctx, Rank r, std::size_t size) {
  std::vector<Vertex> v(size);
  unrank_into(r, size, ctx.binom, v.begin());
  return v;
}

// k-sets containing the given sorted vertex set, as sorted ranks.
inline std::vector<Rank> supersets(const WrbContext& ctx, const std::vector<Vertex>& base) {
  std::vector<Rank> out;
  if (base.size() > ctx.k) return out;
  std::vector<Vertex> rest;
  for (Vertex v = 1; v <= ctx.n; ++v)
    if (!std::binary_search(base.begin(), base.end(), v)) rest.push_back(v);
  const std::size_t extra = ctx.k - base.size();
  if (extra == 0) {
    out.push_back(rank_sorted(base.begin(), base.end(), ctx.binom));
    return out;
  }
  std::vector<Vertex> edge;
  for_each_subset(rest, extra, [&](const JSet& add) {
    edge.clear();
    std::merge(base.begin(), base.end(), add.begin(), add.end(), std::back_inserter(edge));
    out.push_back(rank_sorted(edge.begin(), edge.end(), ctx.binom));
  });
  std::sort(out.begin(), out.end());
  return out;
}

template <class Chooser>
std::optional<WhiteRed> run_white_red(const WrbContext& ctx, const BlueprintMatrix& R,
                                      Chooser& choose) {
  const std::size_t ell = R.rows;
  WhiteRed wr;
  wr.order.push_back(static_cast<Rank>(choose(static_cast<std::size_t>(binomial(ctx.n, ctx.j)))));
  for (std::size_t i = 0; i < ell; ++i) {
    if (i >= wr.order.size()) return std::nullopt;  // no next active j-set
    const auto active = vertices_of(ctx, wr.order[i], ctx.j);
    const auto edge_candidates = supersets(ctx, active);
    for (std::size_t z = 0; z < ctx.columns; ++z)
      for (std::uint32_t y = 0; y < R.at(i, z); ++y) {
        const Rank e = edge_candidates[choose(edge_candidates.size())];
        if (std::find(wr.red.begin(), wr.red.end(), e) != wr.red.end()) return std::nullopt;
        wr.red.push_back(e);
        if (z == 0) continue;
        std::vector<Rank> inside;
        for_each_jsubset_rank(ctx.binom, e, ctx.k, ctx.j, [&](Rank r) { inside.push_back(r); });
        for (std::size_t x = 0; x < z; ++x) {
          const Rank w = inside[choose(inside.size())];
          if (std::find(wr.order.begin(), wr.order.end(), w) != wr.order.end()) return std::nullopt;
          wr.order.push_back(w);
        }
      }
  }
  return wr;
}

template <class Chooser>
std::optional<std::vector<Rank>> run_blue(const WrbContext& ctx, const WhiteRed& wr,
                                          const BlueprintMatrix& B, Chooser& choose) {
  std::vector<Rank> blue;
  for (std::size_t i = 0; i < B.rows; ++i) {
    std::vector<Rank> candidates;
    bool computed = false;
    for (std::size_t z = 0; z < ctx.columns; ++z)
      for (std::uint32_t y = 0; y < B.at(i, z); ++y) {
        if (!computed) {
          const auto active = vertices_of(ctx, wr.order[i], ctx.j);
          for (std::size_t prev = 0; prev < i; ++prev) {
            const auto other = vertices_of(ctx, wr.order[prev], ctx.j);
            std::vector<Vertex> both;
            std::set_union(active.begin(), active.end(), other.begin(), other.end(),
                           std::back_inserter(both));
            const auto s = supersets(ctx, both);
            candidates.insert(candidates.end(), s.begin(), s.end());
          }
          std::sort(candidates.begin(), candidates.end());
          candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
          computed = true;
        }
        if (candidates.empty()) return std::nullopt;  // no valid choice
        const Rank e = candidates[choose(candidates.size())];
        if (std::find(blue.begin(), blue.end(), e) != blue.end()) return std::nullopt;
        blue.push_back(e);
      }
  }
  return blue;
}

inline WrbContext make_context(const BlueprintMatrix& R, const BlueprintMatrix& B, Vertex n,
                               std::size_t k, std::size_t j) {
  check_params(n, k, j);
  const std::size_t columns = static_cast<std::size_t>(binomial(k, j)) + 1;
  if (R.rows < 1 || R.rows != B.rows || R.cols != columns || B.cols != columns)
    throw std::invalid_argument("blueprint matrices must both be ell x (binom(k,j)+1)");
  const auto wr = matrix_weights(R), wb = matrix_weights(B);
  if (wr.f != R.rows - 1 || wb.f != B.rows - 1)
    throw std::invalid_argument("blueprint matrices must satisfy f = ell - 1");
  return WrbContext{n, k, j, columns, BinomialTable(n, k)};
}

inline Triple assemble(const WrbContext& ctx, const WhiteRed& wr, std::vector<Rank> blue) {
  Triple t{ctx.n, ctx.k, ctx.j, wr.order, wr.red, std::move(blue)};
  t.normalize();
  return t;
}

}  // namespace detail

/// One instance of Algorithm WR-B.  choices holds every selection as an index
/// into a colex-ordered candidate list, consumed in this order: the initial
/// j-set (all of V^(j)); then for each step i, duty z = 0..binom(k,j) and
/// y = 1..r_{i,z} the red edge (k-sets containing J_(i)) followed by its z
/// white j-sets (j-subsets of that edge); then for each i, z, y the blue edge
/// (distinct k-sets containing J_(i) and some earlier J_(i*)).  Returns nothing
/// when the instance is discarded; throws on indices out of range, on a
/// sequence too short, or on leftover choices after a successful run.
inline std::optional<Triple> wrb_generate(const BlueprintMatrix& R, const BlueprintMatrix& B,
                                          Vertex n, std::size_t k, std::size_t j,
                                          std::span<const std::size_t> choices) {
  const auto ctx = detail::make_context(R, B, n, k, j);
  detail::SequenceChooser choose(choices);
  const auto wr = detail::run_white_red(ctx, R, choose);
  if (!wr) return std::nullopt;
  auto blue = detail::run_blue(ctx, *wr, B, choose);
  if (!blue) return std::nullopt;
  if (!choose.finished()) throw std::invalid_argument("choice sequence has unused entries");
  return detail::assemble(ctx, *wr, std::move(*blue));
}

/// Q_{ell,r,b}: every output of a non-discarded WR-B instance over all
/// blueprints in M_{ell,r} x M_{ell,b}, sorted.
inline std::vector<Triple> enumerate_Q(Vertex n, std::size_t k, std::size_t j, std::size_t ell,
                                       std::size_t r, std::size_t b) {
  CensusGuard::check(n, k, j, ell, r, b);
  const auto reds = enumerate_blueprint_matrices(ell, r, k, j);
  const auto blues = enumerate_blueprint_matrices(ell, b, k, j);
  std::set<Triple> out;
  if (reds.empty() || blues.empty()) return {};
  std::set<detail::WhiteRed> white_red;
  for (const auto& R : reds) {
    const auto ctx = detail::make_context(R, blues.front(), n, k, j);
    detail::OdometerChooser odo;
    do {
      if (auto wr = detail::run_white_red(ctx, R, odo)) white_red.insert(std::move(*wr));
    } while (odo.advance());
  }
  const auto ctx = detail::make_context(reds.front(), blues.front(), n, k, j);
  for (const auto& wr : white_red)
    for (const auto& B : blues) {
      detail::OdometerChooser odo;
      do {
        if (auto blue = detail::run_blue(ctx, wr, B, odo)) out.insert(detail::assemble(ctx, wr, std::move(*blue)));
      } while (odo.advance());
    }
  return {out.begin(), out.end()};
}

}  // namespace jigsaw
