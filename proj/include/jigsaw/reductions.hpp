#pragma once

// Constructions that reduce percolation questions on k-graphs to smaller
// uniformities: link double (k-1)-graphs, good/exceptional vertices, and the
// projection of a k-graph onto a vertex subset Q as a double graph.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/engine.hpp"
#include "jigsaw/hypergraph.hpp"

namespace jigsaw {

/// A derived hypergraph on relabelled vertices.  original[v - 1] is the label
/// in the source hypergraph of new vertex v; relabelling preserves order.
struct Relabelled {
  MultiHypergraph graph;
  std::vector<Vertex> original;
};

/// Per colour: keep the edges containing v, drop v from them, and relabel
/// [n] \ {v} to [n - 1] in order.
inline Relabelled link_double_hypergraph(const MultiHypergraph& h, Vertex v) {
  if (h.k() < 3) throw std::invalid_argument("link needs k >= 3");
  if (v < 1 || v > h.n())
    throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  const std::size_t k = h.k();
  MultiHypergraph shape(h.n() - 1, k - 1, h.s());
  std::vector<std::vector<Rank>> colours(h.s());
  std::vector<Vertex> verts(k), rest;
  for (std::size_t c = 1; c <= h.s(); ++c)
    for (Rank e : h.edges(c)) {
      unrank_into(e, k, h.binomials(), verts.begin());
      if (!std::binary_search(verts.begin(), verts.end(), v)) continue;
      rest.clear();
      for (Vertex x : verts)
        if (x != v) rest.push_back(x > v ? x - 1 : x);
      colours[c - 1].push_back(rank_sorted(rest.begin(), rest.end(), shape.binomials()));
    }
  Relabelled out{MultiHypergraph::from_ranks(h.n() - 1, k - 1, std::move(colours)), {}};
  for (Vertex x = 1; x <= h.n(); ++x)
    if (x != v) out.original.push_back(x);
  return out;
}

struct VertexClassification {
  std::vector<Vertex> good;
  std::vector<Vertex> exceptional;
};

/// v is good when its link double (k-1)-graph (j-1)-percolates.
inline VertexClassification classify_good_vertices(const MultiHypergraph& h, std::size_t j,
                                                   std::size_t r_threshold = 2) {
  if (j < 2) throw std::invalid_argument("good vertices need j >= 2");
  if (h.k() < 3 || j >= h.k()) throw std::invalid_argument("good vertices need 2 <= j < k, k >= 3");
  VertexClassification out;
  for (Vertex v = 1; v <= h.n(); ++v) {
    const auto link = link_double_hypergraph(h, v);
    if (percolate(link.graph, j - 1, r_threshold).percolated) out.good.push_back(v);
    else out.exceptional.push_back(v);
  }
  return out;
}

/// Double graph on Q: {u, w} in Q is an edge of colour c when some colour-c
/// edge e has e ∩ Q = {u, w}, i.e. its other k - 2 vertices lie outside Q.
/// Q is relabelled to [|Q|] in order.
inline Relabelled bipartition_projection(const MultiHypergraph& h, std::vector<Vertex> q) {
  if (h.k() < 3) throw std::invalid_argument("projection needs k >= 3");
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  if (q.size() < 2) throw std::invalid_argument("projection needs |Q| >= 2");
  if (q.front() < 1 || q.back() > h.n()) throw std::invalid_argument("Q vertex out of range");
  const auto m = static_cast<Vertex>(q.size());
  const MultiHypergraph shape(m, 2, h.s());
  std::vector<std::vector<Rank>> colours(h.s());
  std::vector<Vertex> verts(h.k()), inside;
  for (std::size_t c = 1; c <= h.s(); ++c) {
    for (Rank e : h.edges(c)) {
      unrank_into(e, h.k(), h.binomials(), verts.begin());
      inside.clear();
      for (Vertex x : verts) {
        auto it = std::lower_bound(q.begin(), q.end(), x);
        if (it != q.end() && *it == x) inside.push_back(static_cast<Vertex>(it - q.begin()) + 1);
      }
      if (inside.size() == 2)
        colours[c - 1].push_back(rank_sorted(inside.begin(), inside.end(), shape.binomials()));
    }
    auto& col = colours[c - 1];
    std::sort(col.begin(), col.end());
    col.erase(std::unique(col.begin(), col.end()), col.end());
  }
  return {MultiHypergraph::from_ranks(m, 2, std::move(colours)), std::move(q)};
}

}  // namespace jigsaw
