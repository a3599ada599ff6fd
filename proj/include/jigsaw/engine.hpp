#pragma once

// j-jigsaw percolation on multi-coloured k-uniform hypergraphs.
//
// Each round builds an auxiliary graph on the current clusters: two clusters
// are adjacent when, in at least r_threshold colours, some edge of that colour
// contains a j-set of each.  Clusters along auxiliary components merge, and the
// process stops when the auxiliary graph is empty or a single cluster remains.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/hypergraph.hpp"
#include "jigsaw/union_find.hpp"

namespace jigsaw {

struct TrajectoryPoint {
  std::size_t round = 0;
  std::size_t clusters = 0;
  std::size_t max_cluster = 0;

  friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct PercolationResult {
  bool percolated = false;
  std::size_t rounds = 0;
  std::size_t final_cluster_count = 0;
  std::vector<TrajectoryPoint> trajectory;  // round 0 is the initial partition
  JPartition final_partition;
};

/// Unordered pair of class ids, stored with first < second.
using ClassPair = std::pair<std::uint32_t, std::uint32_t>;

/// (J0, E1, E2): a j-set family with red and blue edge sets, all as sorted
/// colex ranks over [n].  The size of a triple is |J0|.
struct Triple {
  Vertex n = 0;
  std::size_t k = 0;
  std::size_t j = 0;
  std::vector<Rank> J0;
  std::vector<Rank> E1;
  std::vector<Rank> E2;

  std::size_t size() const noexcept { return J0.size(); }

  void normalize() {
    for (auto* v : {&J0, &E1, &E2}) std::sort(v->begin(), v->end());
  }

  void validate() const {
    if (j < 1 || j >= k || k > n) throw std::invalid_argument("triple needs 1 <= j < k <= n");
    const Rank js = binomial(n, j), ks = binomial(n, k);
    auto check = [](const std::vector<Rank>& v, Rank bound, const char* what) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= bound) throw std::invalid_argument(std::string(what) + " rank out of range");
        if (i && v[i - 1] >= v[i])
          throw std::invalid_argument(std::string(what) + " must be sorted without duplicates");
      }
    };
    check(J0, js, "J0");
    check(E1, ks, "E1");
    check(E2, ks, "E2");
  }

  /// Same triple with the colours exchanged.
  Triple swapped() const {
    Triple t = *this;
    std::swap(t.E1, t.E2);
    return t;
  }

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

namespace detail {

// State of one percolation run.  Edges are reduced to the family indices of
// the j-sets they contain; an edge whose family members all share a cluster
// can never contribute again and is dropped.
// LSD radix sort on 11-bit digits; keys are below bound.
inline void radix_sort(std::vector<std::uint64_t>& keys, std::uint64_t bound) {
  if (keys.size() < 512) {
    std::sort(keys.begin(), keys.end());
    return;
  }
  constexpr unsigned bits = 11;
  constexpr std::size_t buckets = std::size_t{1} << bits;
  std::vector<std::uint64_t> tmp(keys.size());
  for (unsigned shift = 0; shift < 64 && (bound - 1) >> shift; shift += bits) {
    std::vector<std::size_t> count(buckets + 1, 0);
    for (auto k : keys) ++count[((k >> shift) & (buckets - 1)) + 1];
    for (std::size_t i = 0; i < buckets; ++i) count[i + 1] += count[i];
    for (auto k : keys) tmp[count[(k >> shift) & (buckets - 1)]++] = k;
    keys.swap(tmp);
  }
}

class PercolationRun {
 public:
  PercolationRun(const MultiHypergraph& h, std::size_t j, std::size_t r_threshold,
                 const JPartition& initial)
      : r_threshold_(r_threshold), family_(initial.family()), labels_(initial.labels()),
        clusters_(initial.class_count()), colours_(h.s()) {
    h.check_j(j);
    if (r_threshold < 1 || r_threshold > h.s())
      throw std::invalid_argument("r_threshold " + std::to_string(r_threshold) +
                                  " out of range [1, " + std::to_string(h.s()) + "]");
    if (initial.empty()) throw std::invalid_argument("initial family is empty");
    const Rank js = binomial(h.n(), j);
    if (family_.back() >= js) throw std::invalid_argument("initial family rank out of range");

    std::vector<std::uint32_t> members;
    for (std::size_t c = 0; c < h.s(); ++c) {
      auto& col = colours_[c];
      col.offsets.push_back(0);
      for (Rank e : h.edges(c + 1)) {
        members.clear();
        for_each_jsubset_rank(h, e, j, [&](Rank r) {
          const auto i = initial.index_of(r);
          if (i != JPartition::npos) members.push_back(static_cast<std::uint32_t>(i));
        });
        if (members.size() < 2) continue;
        col.members.insert(col.members.end(), members.begin(), members.end());
        col.offsets.push_back(col.members.size());
      }
    }
    sizes_.assign(clusters_, 0);
    for (auto l : labels_) ++sizes_[l];
  }

  std::size_t clusters() const noexcept { return clusters_; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  const std::vector<Rank>& family() const noexcept { return family_; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }

  std::size_t max_cluster() const noexcept {
    return sizes_.empty() ? 0 : static_cast<std::size_t>(*std::max_element(sizes_.begin(), sizes_.end()));
  }

  /// Auxiliary-graph edges for the current partition, sorted.
  std::vector<ClassPair> aux_pairs() {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> counted, next;  // (key, colours)
    std::vector<std::uint64_t> keys;
    std::vector<std::uint32_t> cls;
    const std::uint64_t width = clusters_;
    for (auto& col : colours_) {
      keys.clear();
      std::vector<std::uint32_t> kept_members;
      std::vector<std::size_t> kept_offsets{0};
      kept_members.reserve(col.members.size());
      for (std::size_t e = 0; e + 1 < col.offsets.size(); ++e) {
        cls.clear();
        for (auto i = col.offsets[e]; i < col.offsets[e + 1]; ++i) cls.push_back(labels_[col.members[i]]);
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        if (cls.size() < 2) continue;
        for (std::size_t a = 0; a < cls.size(); ++a)
          for (std::size_t b = a + 1; b < cls.size(); ++b) keys.push_back(cls[a] * width + cls[b]);
        kept_members.insert(kept_members.end(), col.members.begin() + static_cast<std::ptrdiff_t>(col.offsets[e]),
                            col.members.begin() + static_cast<std::ptrdiff_t>(col.offsets[e + 1]));
        kept_offsets.push_back(kept_members.size());
      }
      col.members = std::move(kept_members);
      col.offsets = std::move(kept_offsets);
      radix_sort(keys, width * width);
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      // merge this colour's sorted keys into the running counts
      next.clear();
      next.reserve(counted.size() + keys.size());
      std::size_t a = 0, b = 0;
      while (a < counted.size() || b < keys.size()) {
        if (b == keys.size() || (a < counted.size() && counted[a].first < keys[b])) {
          next.push_back(counted[a++]);
        } else if (a == counted.size() || keys[b] < counted[a].first) {
          next.emplace_back(keys[b++], 1);
        } else {
          next.emplace_back(keys[b++], counted[a++].second + 1);
        }
      }
      counted.swap(next);
    }
    std::vector<ClassPair> out;
    for (const auto& [key, hits] : counted)
      if (hits >= r_threshold_)
        out.emplace_back(static_cast<std::uint32_t>(key / width), static_cast<std::uint32_t>(key % width));
    return out;
  }

  /// Merges clusters along the components of the given auxiliary graph and
  /// relabels canonically.
  void merge(const std::vector<ClassPair>& pairs) {
    UnionFind uf(clusters_);
    for (const auto& [a, b] : pairs) uf.unite(a, b);
    const std::uint32_t unset = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> root_label(clusters_, unset);
    std::uint32_t next = 0;
    for (auto& l : labels_) {
      const auto root = uf.find(l);
      if (root_label[root] == unset) root_label[root] = next++;
      l = root_label[root];
    }
    clusters_ = next;
    sizes_.assign(clusters_, 0);
    for (auto l : labels_) ++sizes_[l];
  }

 private:
  struct Colour {
    std::vector<std::uint32_t> members;  // family indices, grouped per edge
    std::vector<std::size_t> offsets;
  };

  std::size_t r_threshold_;
  std::vector<Rank> family_;
  std::vector<std::uint32_t> labels_;
  std::size_t clusters_;
  std::vector<Colour> colours_;
  std::vector<std::uint64_t> sizes_;
};

}  // namespace detail

/// Auxiliary graph of round t for partition p: class pairs joined in at least
/// r_threshold colours.
inline std::vector<ClassPair> build_aux_graph(const MultiHypergraph& h, const JPartition& p,
                                              std::size_t j, std::size_t r_threshold) {
  detail::PercolationRun run(h, j, r_threshold, p);
  return run.aux_pairs();
}

/// Runs the process to completion.  A single-cluster initial partition
/// percolates with rounds = 0.
inline PercolationResult percolate(const MultiHypergraph& h, std::size_t j, std::size_t r_threshold,
                                   const JPartition& initial) {
  detail::PercolationRun run(h, j, r_threshold, initial);
  PercolationResult res;
  res.trajectory.push_back({0, run.clusters(), run.max_cluster()});
  while (run.clusters() > 1) {
    const auto pairs = run.aux_pairs();
    if (pairs.empty()) break;
    run.merge(pairs);
    ++res.rounds;
    res.trajectory.push_back({res.rounds, run.clusters(), run.max_cluster()});
  }
  res.final_cluster_count = run.clusters();
  res.percolated = run.clusters() == 1;
  res.final_partition = JPartition(run.family(), run.labels());
  return res;
}

inline PercolationResult percolate(const MultiHypergraph& h, std::size_t j,
                                   std::size_t r_threshold = 2) {
  h.check_j(j);
  return percolate(h, j, r_threshold, JPartition::all_singletons(h.n(), j));
}

/// Double k-graph (V, E1, E2) of a triple.
inline MultiHypergraph triple_graph(const Triple& t) {
  return MultiHypergraph::from_ranks(t.n, t.k, {t.E1, t.E2});
}

/// True when J0 percolates on (V, E1, E2) from singletons.
inline bool internally_spanned(const Triple& t) {
  t.validate();
  if (t.J0.empty()) throw std::invalid_argument("internally_spanned needs a non-empty J0");
  return percolate(triple_graph(t), t.j, 2, JPartition::singletons(t.J0)).percolated;
}

/// Replays percolation from singletons of V^(j) with each round's merges
/// serialized into pairwise unions (auxiliary edges in sorted order) and
/// returns the j-sets of the first cluster reaching size >= min_size.  Both
/// parts of that union are below min_size, so the result has fewer than
/// 2 * min_size members.
inline std::optional<std::vector<Rank>> bottleneck_witness(const MultiHypergraph& h, std::size_t j,
                                                           std::size_t r_threshold,
                                                           std::uint64_t min_size) {
  h.check_j(j);
  const Rank total = binomial(h.n(), j);
  if (min_size < 1 || min_size > total)
    throw std::invalid_argument("witness size " + std::to_string(min_size) +
                                " out of range [1, " + std::to_string(total) + "]");
  if (min_size == 1) return std::vector<Rank>{0};

  detail::PercolationRun run(h, j, r_threshold, JPartition::all_singletons(h.n(), j));
  while (run.clusters() > 1) {
    const auto pairs = run.aux_pairs();
    if (pairs.empty()) break;
    UnionFind serial;
    serial.reset_weighted(run.sizes());
    for (const auto& [a, b] : pairs) {
      if (!serial.unite(a, b)) continue;
      if (serial.set_size(a) >= min_size) {
        const auto root = serial.find(a);
        std::vector<Rank> out;
        for (std::size_t i = 0; i < run.family().size(); ++i)
          if (serial.find(run.labels()[i]) == root) out.push_back(run.family()[i]);
        return out;
      }
    }
    run.merge(pairs);
  }
  return std::nullopt;
}

}  // namespace jigsaw
