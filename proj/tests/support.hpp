#pragma once

#include <set>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/engine.hpp"
#include "jigsaw/hypergraph.hpp"
#include "oracles.hpp"

namespace support {

inline jigsaw::MultiHypergraph to_graph(int n, int k, const std::vector<oracle::Family>& colours) {
  std::vector<std::vector<jigsaw::JSet>> edges;
  for (const auto& col : colours) {
    edges.emplace_back();
    for (const auto& e : col) edges.back().emplace_back(std::vector<jigsaw::Vertex>(e.begin(), e.end()));
  }
  return jigsaw::MultiHypergraph::from_edges(static_cast<jigsaw::Vertex>(n), static_cast<std::size_t>(k), edges);
}

inline oracle::Set to_set(const jigsaw::JSet& s) { return oracle::Set(s.begin(), s.end()); }

inline std::vector<jigsaw::Rank> ranks(const oracle::Family& f, int n) {
  std::vector<jigsaw::Rank> out;
  for (const auto& s : f)
    out.push_back(jigsaw::rank_jset(jigsaw::JSet(std::vector<jigsaw::Vertex>(s.begin(), s.end())),
                                    static_cast<jigsaw::Vertex>(n)));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<std::set<oracle::Set>> classes_as_sets(const jigsaw::JPartition& p, int n, int j) {
  std::set<std::set<oracle::Set>> out;
  for (const auto& cls : p.classes()) {
    std::set<oracle::Set> c;
    for (auto r : cls)
      c.insert(to_set(jigsaw::unrank_jset(r, static_cast<std::size_t>(j), static_cast<jigsaw::Vertex>(n))));
    out.insert(c);
  }
  return out;
}

// Every assignment of the k-sets of [n] to s colours, as bitmask index.
inline std::vector<oracle::Family> colours_from_mask(const oracle::Family& ks, int s, std::uint64_t mask) {
  std::vector<oracle::Family> out(static_cast<std::size_t>(s));
  for (int c = 0; c < s; ++c)
    for (std::size_t e = 0; e < ks.size(); ++e)
      if (mask >> (static_cast<std::size_t>(c) * ks.size() + e) & 1) out[static_cast<std::size_t>(c)].push_back(ks[e]);
  return out;
}

}  // namespace support
