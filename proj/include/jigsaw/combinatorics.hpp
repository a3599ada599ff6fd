#pragma once

// Colexicographic ranking of fixed-size subsets of [n] = {1, ..., n}.
//
// A j-set {a_1 < ... < a_j} has rank sum_i binom(a_i - 1, i), which is a
// bijection onto [0, binom(n, j)).  Ranks are the dense indices used by every
// other module, so partitions and edge lists can be plain arrays.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace jigsaw {

using Vertex = std::uint32_t;
using Rank = std::uint64_t;

/// Exact binomial coefficient.  Throws std::overflow_error when the value does
/// not fit in 64 bits.
inline Rank binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > std::numeric_limits<Rank>::max())
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(r) + ") exceeds 64 bits");
  }
  return static_cast<Rank>(acc);
}

/// A strictly increasing sequence of vertices.  Used both for j-sets and for
/// k-sets (edges).
class JSet {
 public:
  JSet() = default;
  explicit JSet(std::vector<Vertex> vertices) : v_(std::move(vertices)) {}
  JSet(std::initializer_list<Vertex> vertices) : v_(vertices) {}

  const std::vector<Vertex>& vertices() const noexcept { return v_; }
  std::size_t size() const noexcept { return v_.size(); }
  Vertex operator[](std::size_t i) const { return v_[i]; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  bool contains(Vertex x) const { return std::binary_search(v_.begin(), v_.end(), x); }
  bool contains(const JSet& other) const {
    return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
  }

  /// Throws std::invalid_argument unless strictly increasing within [1, n].
  void validate(Vertex n) const {
    if (v_.empty()) throw std::invalid_argument("set must be non-empty");
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (v_[i] < 1 || v_[i] > n)
        throw std::invalid_argument("vertex " + std::to_string(v_[i]) +
                                    " out of range [1, " + std::to_string(n) + "]");
      if (i > 0 && v_[i - 1] >= v_[i])
        throw std::invalid_argument("set is not strictly increasing");
    }
  }

  /// Colex comparison: compare from the largest element down.
  friend std::strong_ordering colex_compare(const JSet& a, const JSet& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (std::size_t i = a.size(); i-- > 0;)
      if (auto c = a.v_[i] <=> b.v_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  friend bool operator==(const JSet&, const JSet&) = default;
  friend auto operator<=>(const JSet& a, const JSet& b) { return colex_compare(a, b); }

 private:
  std::vector<Vertex> v_;
};

inline std::string to_string(const JSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

/// Table of binom(a, i) for a <= n, i <= max_size.  Hot paths rank and unrank
/// through this instead of recomputing coefficients.
class BinomialTable {
 public:
  BinomialTable() = default;
  BinomialTable(Vertex n, std::size_t max_size)
      : n_(n), width_(max_size + 1), table_((static_cast<std::size_t>(n) + 1) * width_, 0) {
    for (Vertex a = 0; a <= n; ++a) {
      at(a, 0) = 1;
      for (std::size_t i = 1; i < width_; ++i) {
        if (i > a) break;
        const Rank prev = at(a - 1, i - 1);
        const Rank same = (i <= a - 1) ? at(a - 1, i) : 0;
        if (same > std::numeric_limits<Rank>::max() - prev)
          throw std::overflow_error("binomial table exceeds 64 bits");
        at(a, i) = prev + same;
      }
    }
  }

  Vertex n() const noexcept { return n_; }
  std::size_t max_size() const noexcept { return width_ - 1; }
  Rank operator()(Vertex a, std::size_t i) const { return table_[a * width_ + i]; }

 private:
  Rank& at(Vertex a, std::size_t i) { return table_[a * width_ + i]; }

  Vertex n_ = 0;
  std::size_t width_ = 1;
  std::vector<Rank> table_;
};

/// Rank of a sorted vertex range (no validation).
template <class It>
Rank rank_sorted(It first, It last, const BinomialTable& binom) {
  Rank r = 0;
  std::size_t i = 1;
  for (; first != last; ++first, ++i) r += binom(*first - 1, i);
  return r;
}

/// Writes the j vertices of the set with rank r into out (ascending).
template <class OutIt>
void unrank_into(Rank r, std::size_t j, const BinomialTable& binom, OutIt out) {
  Vertex buf[64];
  Vertex hi = binom.n();
  for (std::size_t i = j; i >= 1; --i) {
    // largest a with binom(a, i) <= r, searched in [i - 1, hi - 1]
    Vertex lo = static_cast<Vertex>(i - 1), top = hi - 1;
    while (lo < top) {
      const Vertex mid = lo + (top - lo + 1) / 2;
      if (binom(mid, i) <= r) lo = mid;
      else top = mid - 1;
    }
    buf[i - 1] = lo + 1;
    r -= binom(lo, i);
    hi = lo;
  }
  for (std::size_t i = 0; i < j; ++i) *out++ = buf[i];
}

inline Rank rank_jset(const JSet& set, Vertex n) {
  set.validate(n);
  Rank r = 0;
  for (std::size_t i = 0; i < set.size(); ++i) r += binomial(set[i] - 1, i + 1);
  return r;
}

inline JSet unrank_jset(Rank r, std::size_t j, Vertex n) {
  if (j == 0 || j > n) throw std::invalid_argument("set size must be in [1, n]");
  if (j > 63) throw std::invalid_argument("set size above 63 is unsupported");
  const Rank total = binomial(n, j);
  if (r >= total)
    throw std::out_of_range("rank " + std::to_string(r) + " out of range [0, " +
                            std::to_string(total) + ")");
  std::vector<Vertex> v(j);
  Vertex hi = n;
  for (std::size_t i = j; i >= 1; --i) {
    Vertex a = static_cast<Vertex>(i - 1);
    while (a + 1 < hi && binomial(a + 1, i) <= r) ++a;
    v[i - 1] = a + 1;
    r -= binomial(a, i);
    hi = a;
  }
  return JSet(std::move(v));
}

/// Calls fn(JSet) for every size-j subset of the given sorted vertex list, in
/// colex order of the resulting tuples.
template <class Fn>
void for_each_subset(const std::vector<Vertex>& base, std::size_t j, Fn&& fn) {
  const std::size_t k = base.size();
  if (j > k) return;
  // colex order over index tuples equals colex order over vertex tuples
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  std::vector<Vertex> cur(j);
  while (true) {
    for (std::size_t i = 0; i < j; ++i) cur[i] = base[idx[i]];
    fn(JSet(cur));
    // colex successor: bump the lowest position that can move
    std::size_t p = 0;
    while (p < j && idx[p] + 1 == (p + 1 < j ? idx[p + 1] : k)) ++p;
    if (p == j) return;
    ++idx[p];
    for (std::size_t q = 0; q < p; ++q) idx[q] = q;
  }
}

inline std::vector<JSet> subsets_of(const JSet& edge, std::size_t j) {
  if (j == 0) throw std::invalid_argument("subset size must be at least 1");
  if (j > edge.size())
    throw std::invalid_argument("subset size " + std::to_string(j) +
                                " exceeds set size " + std::to_string(edge.size()));
  std::vector<JSet> out;
  out.reserve(binomial(edge.size(), j));
  for_each_subset(edge.vertices(), j, [&](JSet s) { out.push_back(std::move(s)); });
  return out;
}

/// All size-j subsets of [n] in colex (= rank) order.
inline std::vector<JSet> all_jsets(Vertex n, std::size_t j) {
  std::vector<Vertex> base(n);
  for (Vertex v = 0; v < n; ++v) base[v] = v + 1;
  std::vector<JSet> out;
  for_each_subset(base, j, [&](JSet s) { out.push_back(std::move(s)); });
  return out;
}

}  // namespace jigsaw
