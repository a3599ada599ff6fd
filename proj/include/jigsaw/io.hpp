#pragma once

// Text formats: the hypergraph document (JSON), sweep configuration (JSON)
// and the sweep CSV.
//
// Hypergraph document, one line of compact JSON:
//   {"n":4,"k":2,"s":2,"colours":[[[1,2],[2,3]],[[1,3]]]}
// Edges are ascending vertex arrays; encode() lists each colour in colex
// order so equal hypergraphs serialize to identical bytes.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "jigsaw/combinatorics.hpp"
#include "jigsaw/experiments.hpp"
#include "jigsaw/hypergraph.hpp"
#include "jigsaw/random.hpp"

namespace jigsaw::io {

using ordered_json = nlohmann::ordered_json;

inline std::string encode_hypergraph(const MultiHypergraph& h) {
  ordered_json doc;
  doc["n"] = h.n();
  doc["k"] = h.k();
  doc["s"] = h.s();
  ordered_json colours = ordered_json::array();
  for (std::size_t c = 1; c <= h.s(); ++c) {
    ordered_json edges = ordered_json::array();
    for (Rank e : h.edges(c)) edges.push_back(h.edge(e).vertices());
    colours.push_back(std::move(edges));
  }
  doc["colours"] = std::move(colours);
  return doc.dump() + "\n";
}

namespace detail {

template <class T>
T required(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(std::string("field '") + key + "' has the wrong type");
  }
}

inline nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace detail

/// Parses a hypergraph document.  Edge lists may come in any order; each edge
/// must be strictly ascending within [1, n] and unique within its colour.
inline MultiHypergraph decode_hypergraph(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw std::invalid_argument("hypergraph document must be a JSON object");
  const auto n = detail::required<std::int64_t>(doc, "n");
  const auto k = detail::required<std::int64_t>(doc, "k");
  const auto s = detail::required<std::int64_t>(doc, "s");
  if (n < 1 || k < 1 || s < 1) throw std::invalid_argument("n, k and s must be positive");
  if (k > n) throw std::invalid_argument("k exceeds n");
  if (!doc.contains("colours") || !doc.at("colours").is_array())
    throw std::invalid_argument("field 'colours' must be an array");
  const auto& colours = doc.at("colours");
  if (static_cast<std::int64_t>(colours.size()) != s)
    throw std::invalid_argument("'colours' must hold s edge lists");
  std::vector<std::vector<JSet>> edges(static_cast<std::size_t>(s));
  for (std::size_t c = 0; c < colours.size(); ++c) {
    if (!colours[c].is_array()) throw std::invalid_argument("each colour must be an array of edges");
    for (const auto& e : colours[c]) {
      if (!e.is_array()) throw std::invalid_argument("each edge must be an array of vertices");
      std::vector<Vertex> v;
      for (const auto& x : e) {
        if (!x.is_number_integer()) throw std::invalid_argument("vertices must be integers");
        const auto val = x.get<std::int64_t>();
        if (val < 1 || val > n)
          throw std::invalid_argument("vertex " + std::to_string(val) + " out of range [1, " +
                                      std::to_string(n) + "]");
        v.push_back(static_cast<Vertex>(val));
      }
      JSet set(std::move(v));
      if (set.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("edge " + to_string(set) + " does not have k vertices");
      set.validate(static_cast<Vertex>(n));
      edges[c].push_back(std::move(set));
    }
  }
  return MultiHypergraph::from_edges(static_cast<Vertex>(n), static_cast<std::size_t>(k), edges);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

/// Sweep/crossing configuration:
///   {"model":"multi","n":1000,"k":2,"j":1,"s":2,"r_threshold":2,
///    "c_grid":[0.05,1,40],"allocation":"balanced","trials":200,"seed":1,
///    "threads":1,"target":0.5,"tolerance":0.05}
/// "allocation" may also be {"ratios":[1,2]}.  r_threshold defaults to s.
inline SweepConfig decode_config(const std::string& text) {
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  SweepConfig cfg;
  cfg.model = parse_model(detail::required<std::string>(doc, "model"));
  const auto n = detail::required<std::int64_t>(doc, "n");
  if (n < 1 || n > (std::int64_t{1} << 30)) throw std::invalid_argument("n out of range");
  cfg.n = static_cast<Vertex>(n);
  auto opt_size = [&](const char* key, std::size_t fallback) -> std::size_t {
    if (!doc.contains(key)) return fallback;
    const auto v = detail::required<std::int64_t>(doc, key);
    if (v < 0) throw std::invalid_argument(std::string("field '") + key + "' must be non-negative");
    return static_cast<std::size_t>(v);
  };
  cfg.k = opt_size("k", 2);
  cfg.j = opt_size("j", 1);
  cfg.s = opt_size("s", 2);
  cfg.r_threshold = opt_size("r_threshold", cfg.s);
  cfg.trials = opt_size("trials", cfg.trials);
  cfg.threads = opt_size("threads", 1);
  cfg.c_grid = detail::required<std::vector<double>>(doc, "c_grid");
  if (doc.contains("seed")) cfg.seed = detail::required<std::uint64_t>(doc, "seed");
  if (doc.contains("target")) cfg.target = detail::required<double>(doc, "target");
  if (doc.contains("tolerance")) cfg.tolerance = detail::required<double>(doc, "tolerance");
  if (doc.contains("allocation")) {
    const auto& alloc = doc.at("allocation");
    if (alloc.is_string()) {
      if (alloc.get<std::string>() != "balanced")
        throw std::invalid_argument("allocation must be \"balanced\" or {\"ratios\": [...]}");
    } else if (alloc.is_object()) {
      cfg.ratios = detail::required<std::vector<double>>(alloc, "ratios");
    } else {
      throw std::invalid_argument("allocation must be \"balanced\" or {\"ratios\": [...]}");
    }
  }
  cfg.validate();
  return cfg;
}

inline constexpr const char* kCsvHeader =
    "model,n,k,j,s,r_threshold,c,p_values,trials,percolated,prob,ci_low,ci_high,mean_rounds,"
    "mean_max_cluster_frac,min_p_condition_met,seed";

inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline std::string csv_row(const SweepRow& row) {
  std::string p;
  for (std::size_t i = 0; i < row.p.size(); ++i) {
    if (i) p += ";";
    p += format_number(row.p[i]);
  }
  std::ostringstream out;
  out << to_string(row.model) << ',' << row.n << ',' << row.k << ',' << row.j << ',' << row.s << ','
      << row.r_threshold << ',' << format_number(row.c) << ',' << p << ',' << row.trials << ','
      << row.percolated << ',' << format_number(row.prob) << ',' << format_number(row.ci.low) << ','
      << format_number(row.ci.high) << ',' << format_number(row.mean_rounds) << ','
      << format_number(row.mean_max_cluster_frac) << ',' << (row.min_p_condition_met ? "true" : "false")
      << ',' << row.seed;
  return out.str();
}

inline std::string encode_csv(const std::vector<SweepRow>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) out += csv_row(r) + "\n";
  return out;
}

}  // namespace jigsaw::io
