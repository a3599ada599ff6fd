#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace jigsaw {

// Disjoint sets over [0, size) with union by size and path halving.
class UnionFind {
 public:
  explicit UnionFind(std::size_t size = 0) { reset(size); }

  void reset(std::size_t size) {
    parent_.resize(size);
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    size_.assign(size, 1);
    sets_ = size;
  }

  /// Starts from singletons carrying the given weights; set_size() reports
  /// the summed weight of a set.
  void reset_weighted(std::vector<std::uint64_t> weights) {
    parent_.resize(weights.size());
    std::iota(parent_.begin(), parent_.end(), std::uint32_t{0});
    size_ = std::move(weights);
    sets_ = parent_.size();
  }

  std::uint32_t find(std::uint32_t x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true when a and b were in different sets.
  bool unite(std::uint32_t a, std::uint32_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  std::uint64_t set_size(std::uint32_t x) noexcept { return size_[find(x)]; }
  std::size_t set_count() const noexcept { return sets_; }
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint64_t> size_;
  std::size_t sets_ = 0;
};

}  // namespace jigsaw
