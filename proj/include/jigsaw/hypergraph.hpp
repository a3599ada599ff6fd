#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/union_find.hpp"

namespace jigsaw {

/// n vertices, uniformity k, s colour classes of k-sets.  Colours are 1-based;
/// for s = 2 colour 1 is red and colour 2 is blue.  Each colour is stored as a
/// sorted list of colex ranks, so two hypergraphs with the same edges compare
/// equal.  The same k-set may carry several colours.
class MultiHypergraph {
 public:
  MultiHypergraph() = default;

  /// Empty hypergraph.
  MultiHypergraph(Vertex n, std::size_t k, std::size_t s)
      : n_(n), k_(k), colours_(s) {
    if (k < 1) throw std::invalid_argument("uniformity k must be at least 1");
    if (k > n) throw std::invalid_argument("uniformity k exceeds vertex count n");
    if (k > 63) throw std::invalid_argument("uniformity above 63 is unsupported");
    if (s < 1) throw std::invalid_argument("colour count s must be at least 1");
    if (n >= (Vertex{1} << 31)) throw std::invalid_argument("vertex count too large");
    edge_space_ = binomial(n, k);  // throws when binom(n, k) overflows
    binom_ = BinomialTable(n, k);
  }

  /// Takes colex ranks per colour; sorts them and rejects duplicates.
  static MultiHypergraph from_ranks(Vertex n, std::size_t k,
                                    std::vector<std::vector<Rank>> colours) {
    MultiHypergraph h(n, k, colours.size());
    for (std::size_t c = 0; c < colours.size(); ++c) {
      auto& edges = colours[c];
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in colour " + std::to_string(c + 1));
      if (!edges.empty() && edges.back() >= h.edge_space_)
        throw std::invalid_argument("edge rank out of range");
      h.colours_[c] = std::move(edges);
    }
    return h;
  }

  static MultiHypergraph from_edges(Vertex n, std::size_t k,
                                    const std::vector<std::vector<JSet>>& colours) {
    std::vector<std::vector<Rank>> ranks(colours.size());
    for (std::size_t c = 0; c < colours.size(); ++c)
      for (const auto& e : colours[c]) {
        if (e.size() != k)
          throw std::invalid_argument("edge " + to_string(e) + " does not have " +
                                      std::to_string(k) + " vertices");
        ranks[c].push_back(rank_jset(e, n));
      }
    return from_ranks(n, k, std::move(ranks));
  }

  /// Every k-set in every colour.
  static MultiHypergraph complete(Vertex n, std::size_t k, std::size_t s) {
    MultiHypergraph h(n, k, s);
    std::vector<Rank> all(h.edge_space_);
    for (Rank r = 0; r < h.edge_space_; ++r) all[r] = r;
    for (auto& c : h.colours_) c = all;
    return h;
  }

  Vertex n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t s() const noexcept { return colours_.size(); }
  Rank edge_space() const noexcept { return edge_space_; }
  const BinomialTable& binomials() const noexcept { return binom_; }

  /// Sorted edge ranks of colour c in [1, s].
  const std::vector<Rank>& edges(std::size_t colour) const {
    check_colour(colour);
    return colours_[colour - 1];
  }

  bool has_edge(std::size_t colour, Rank e) const {
    const auto& v = edges(colour);
    return std::binary_search(v.begin(), v.end(), e);
  }

  JSet edge(Rank e) const {
    std::vector<Vertex> v(k_);
    unrank_into(e, k_, binom_, v.begin());
    return JSet(std::move(v));
  }

  std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (const auto& c : colours_) total += c.size();
    return total;
  }

  void check_colour(std::size_t colour) const {
    if (colour < 1 || colour > colours_.size())
      throw std::invalid_argument("colour " + std::to_string(colour) + " out of range [1, " +
                                  std::to_string(colours_.size()) + "]");
  }

  /// Throws unless 1 <= j < k and binom(n, j) is addressable.
  void check_j(std::size_t j) const {
    if (j < 1 || j >= k_)
      throw std::invalid_argument("j must satisfy 1 <= j < k (j=" + std::to_string(j) +
                                  ", k=" + std::to_string(k_) + ")");
    if (binomial(n_, j) >= (Rank{1} << 32))
      throw std::invalid_argument("binom(n, j) too large for dense indexing");
  }

  friend bool operator==(const MultiHypergraph& a, const MultiHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.colours_ == b.colours_;
  }

 private:
  Vertex n_ = 0;
  std::size_t k_ = 0;
  Rank edge_space_ = 0;
  std::vector<std::vector<Rank>> colours_;
  BinomialTable binom_;
};

/// Partition of a family of j-set ranks.  Class ids are canonical: classes are
/// numbered 0, 1, ... by increasing minimum member rank.
class JPartition {
 public:
  JPartition() = default;

  /// family: strictly increasing ranks; labels: one class id per member.
  JPartition(std::vector<Rank> family, std::vector<std::uint32_t> labels)
      : family_(std::move(family)), labels_(std::move(labels)) {
    if (family_.size() != labels_.size())
      throw std::invalid_argument("partition labels do not match family");
    for (std::size_t i = 1; i < family_.size(); ++i)
      if (family_[i - 1] >= family_[i])
        throw std::invalid_argument("partition family must be strictly increasing");
    canonicalize();
  }

  static JPartition singletons(std::vector<Rank> family) {
    std::sort(family.begin(), family.end());
    if (std::adjacent_find(family.begin(), family.end()) != family.end())
      throw std::invalid_argument("duplicate j-set in family");
    std::vector<std::uint32_t> labels(family.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<std::uint32_t>(i);
    return JPartition(std::move(family), std::move(labels));
  }

  /// Singletons of all binom(n, j) j-sets.
  static JPartition all_singletons(Vertex n, std::size_t j) {
    const Rank total = binomial(n, j);
    std::vector<Rank> family(total);
    for (Rank r = 0; r < total; ++r) family[r] = r;
    return singletons(std::move(family));
  }

  /// Classes given explicitly; they must be disjoint and non-empty.
  static JPartition from_classes(const std::vector<std::vector<Rank>>& classes) {
    std::vector<std::pair<Rank, std::uint32_t>> members;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (classes[c].empty()) throw std::invalid_argument("empty partition class");
      for (Rank r : classes[c]) members.emplace_back(r, static_cast<std::uint32_t>(c));
    }
    std::sort(members.begin(), members.end());
    std::vector<Rank> family;
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (i && members[i].first == members[i - 1].first)
        throw std::invalid_argument("partition classes overlap");
      family.push_back(members[i].first);
      labels.push_back(members[i].second);
    }
    return JPartition(std::move(family), std::move(labels));
  }

  const std::vector<Rank>& family() const noexcept { return family_; }
  const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
  std::size_t class_count() const noexcept { return classes_; }
  bool empty() const noexcept { return family_.empty(); }

  /// Index of rank r in family(), or npos.
  std::size_t index_of(Rank r) const noexcept {
    if (!family_.empty() && family_.back() + 1 == family_.size())
      return r < family_.size() ? static_cast<std::size_t>(r) : npos;
    auto it = std::lower_bound(family_.begin(), family_.end(), r);
    return (it != family_.end() && *it == r) ? static_cast<std::size_t>(it - family_.begin())
                                             : npos;
  }

  bool contains(Rank r) const noexcept { return index_of(r) != npos; }

  std::uint32_t class_of(Rank r) const {
    const auto i = index_of(r);
    if (i == npos) throw std::out_of_range("j-set rank " + std::to_string(r) + " not in family");
    return labels_[i];
  }

  /// Member ranks per class, each ascending, classes in id order.
  std::vector<std::vector<Rank>> classes() const {
    std::vector<std::vector<Rank>> out(classes_);
    for (std::size_t i = 0; i < family_.size(); ++i) out[labels_[i]].push_back(family_[i]);
    return out;
  }

  std::vector<std::size_t> class_sizes() const {
    std::vector<std::size_t> out(classes_, 0);
    for (auto l : labels_) ++out[l];
    return out;
  }

  friend bool operator==(const JPartition&, const JPartition&) = default;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  void canonicalize() {
    std::vector<std::uint32_t> remap;
    std::uint32_t next = 0;
    const std::uint32_t unset = static_cast<std::uint32_t>(-1);
    for (auto& l : labels_) {
      if (l >= remap.size()) remap.resize(static_cast<std::size_t>(l) + 1, unset);
      if (remap[l] == unset) remap[l] = next++;
      l = remap[l];
    }
    classes_ = next;
  }

  std::vector<Rank> family_;
  std::vector<std::uint32_t> labels_;
  std::size_t classes_ = 0;
};

/// Calls fn(rank) for each j-subset of the edge with rank e, in colex order.
/// binom must cover n and sizes up to k.
template <class Fn>
void for_each_jsubset_rank(const BinomialTable& binom, Rank e, std::size_t k, std::size_t j,
                           Fn&& fn) {
  Vertex verts[64];
  unrank_into(e, k, binom, verts);
  std::size_t idx[64];
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  while (true) {
    Rank r = 0;
    for (std::size_t i = 0; i < j; ++i) r += binom(verts[idx[i]] - 1, i + 1);
    fn(r);
    std::size_t p = 0;
    while (p < j && idx[p] + 1 == (p + 1 < j ? idx[p + 1] : k)) ++p;
    if (p == j) return;
    ++idx[p];
    for (std::size_t q = 0; q < p; ++q) idx[q] = q;
  }
}

template <class Fn>
void for_each_jsubset_rank(const MultiHypergraph& h, Rank e, std::size_t j, Fn&& fn) {
  for_each_jsubset_rank(h.binomials(), e, h.k(), j, std::forward<Fn>(fn));
}

/// j-tuple-connected components of one colour over all of V^(j).  A j-set in
/// no edge forms its own class.
inline JPartition j_components(const MultiHypergraph& h, std::size_t colour, std::size_t j) {
  h.check_colour(colour);
  h.check_j(j);
  const Rank total = binomial(h.n(), j);
  UnionFind uf(static_cast<std::size_t>(total));
  for (Rank e : h.edges(colour)) {
    std::uint32_t first = 0;
    bool have = false;
    for_each_jsubset_rank(h, e, j, [&](Rank r) {
      const auto x = static_cast<std::uint32_t>(r);
      if (!have) {
        first = x;
        have = true;
      } else {
        uf.unite(first, x);
      }
    });
  }
  std::vector<Rank> family(total);
  std::vector<std::uint32_t> labels(total);
  for (Rank r = 0; r < total; ++r) {
    family[r] = r;
    labels[r] = uf.find(static_cast<std::uint32_t>(r));
  }
  return JPartition(std::move(family), std::move(labels));
}

inline bool is_j_connected(const MultiHypergraph& h, std::size_t colour, std::size_t j) {
  return j_components(h, colour, j).class_count() == 1;
}

/// Sharp threshold for j-connectedness of the binomial random k-graph:
/// j ln n / binom(n, k - j).
inline double connectivity_threshold(Vertex n, std::size_t k, std::size_t j) {
  if (j < 1 || j >= k || k > n)
    throw std::invalid_argument("connectivity threshold needs 1 <= j < k <= n");
  return static_cast<double>(j) * std::log(static_cast<double>(n)) /
         static_cast<double>(binomial(n, k - j));
}

}  // namespace jigsaw
