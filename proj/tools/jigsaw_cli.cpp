// Command-line front end: sampling, percolation, census counts, reductions
// and Monte Carlo sweeps.
//
// Exit status: 0 success, 1 validation failure, 2 runtime failure.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jigsaw/engine.hpp"
#include "jigsaw/experiments.hpp"
#include "jigsaw/hypergraph.hpp"
#include "jigsaw/io.hpp"
#include "jigsaw/random.hpp"
#include "jigsaw/reductions.hpp"
#include "jigsaw/traversability.hpp"

namespace {

using namespace jigsaw;

// Raised for failures that are not the caller's fault (I/O, monotonicity).
struct RuntimeFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string load(const std::string& path) {
  try {
    return io::read_file(path);
  } catch (const std::runtime_error& e) {
    throw RuntimeFailure(e.what());
  }
}

void store(const std::string& path, const std::string& content) {
  try {
    io::write_file(path, content);
  } catch (const std::runtime_error& e) {
    throw RuntimeFailure(e.what());
  }
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad vertex '" + item + "' in list");
    }
    if (used != item.size() || v < 1) throw std::invalid_argument("bad vertex '" + item + "' in list");
    out.push_back(static_cast<Vertex>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty vertex list");
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) out += (i ? "," : "") + std::to_string(sizes[i]);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"j-jigsaw percolation on multi-coloured k-uniform hypergraphs"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Sample a random multi-coloured hypergraph");
  std::string model_name = "multi", out_path;
  std::uint32_t n = 0;
  std::size_t k = 2, s = 0;
  std::vector<double> probs;
  std::uint64_t seed = 0;
  sample_cmd->add_option("--model", model_name, "multi or line")->default_val("multi");
  sample_cmd->add_option("--n", n, "Number of vertices (ground set size for line)")->required();
  sample_cmd->add_option("--k", k, "Uniformity (multi model)")->default_val(2);
  sample_cmd->add_option("--s", s, "Number of colours (defaults to the length of --p)");
  sample_cmd->add_option("--p", probs, "Comma-separated colour probabilities")->required()->delimiter(',');
  sample_cmd->add_option("--seed", seed, "Master seed")->default_val(0);
  sample_cmd->add_option("--out", out_path, "Output document")->required();

  // percolate
  auto* perc_cmd = app.add_subcommand("percolate", "Run the percolation process");
  std::string in_path;
  std::size_t j = 1, r_threshold = 2;
  bool trajectory = false;
  perc_cmd->add_option("--in", in_path, "Hypergraph document")->required();
  perc_cmd->add_option("--j", j, "Size of the percolating sets")->required();
  perc_cmd->add_option("--r-threshold", r_threshold, "Colours needed per auxiliary edge")->default_val(2);
  perc_cmd->add_flag("--trajectory", trajectory, "Print round,clusters,max_cluster lines");

  // components
  auto* comp_cmd = app.add_subcommand("components", "j-connected components of one colour");
  std::size_t colour = 1;
  comp_cmd->add_option("--in", in_path, "Hypergraph document")->required();
  comp_cmd->add_option("--colour", colour, "Colour index (1-based)")->required();
  comp_cmd->add_option("--j", j, "Size of the connected sets")->required();

  // census
  auto* census_cmd = app.add_subcommand("census", "Count edge-minimal traversable triples");
  std::size_t ell = 1, reds = 0, blues = 0;
  bool use_q = false;
  census_cmd->add_option("--n", n)->required();
  census_cmd->add_option("--k", k)->required();
  census_cmd->add_option("--j", j)->required();
  census_cmd->add_option("--ell", ell)->required();
  census_cmd->add_option("--r", reds)->required();
  census_cmd->add_option("--b", blues)->required();
  census_cmd->add_flag("--q", use_q, "Count WR-B outputs instead");

  // link
  auto* link_cmd = app.add_subcommand("link", "Link double hypergraph of a vertex");
  std::uint32_t vertex = 1;
  link_cmd->add_option("--in", in_path)->required();
  link_cmd->add_option("--vertex", vertex)->required();
  link_cmd->add_option("--out", out_path)->required();

  // project
  auto* proj_cmd = app.add_subcommand("project", "Double graph induced on a vertex subset");
  std::string q_list;
  proj_cmd->add_option("--in", in_path)->required();
  proj_cmd->add_option("--q", q_list, "Comma-separated vertices")->required();
  proj_cmd->add_option("--out", out_path)->required();

  // sweep / crossing
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over c");
  std::string config_path;
  sweep_cmd->add_option("--config", config_path)->required();
  sweep_cmd->add_option("--out", out_path)->required();
  auto* cross_cmd = app.add_subcommand("crossing", "Bisection for the c where the probability crosses the target");
  cross_cmd->add_option("--config", config_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*sample_cmd) {
      if (s != 0 && s != probs.size())
        throw std::invalid_argument("--s " + std::to_string(s) + " does not match " +
                                    std::to_string(probs.size()) + " probabilities");
      const SampleSpec spec{parse_model(model_name), n, k, probs, seed};
      store(out_path, io::encode_hypergraph(sample(spec)));
    } else if (*perc_cmd) {
      const auto h = io::decode_hypergraph(load(in_path));
      const auto res = percolate(h, j, r_threshold);
      std::cout << "percolated=" << (res.percolated ? "true" : "false") << "\n"
                << "rounds=" << res.rounds << "\n"
                << "final_clusters=" << res.final_cluster_count << "\n";
      if (trajectory) {
        std::cout << "round,clusters,max_cluster\n";
        for (const auto& t : res.trajectory)
          std::cout << t.round << ',' << t.clusters << ',' << t.max_cluster << "\n";
      }
    } else if (*comp_cmd) {
      const auto h = io::decode_hypergraph(load(in_path));
      const auto p = j_components(h, colour, j);
      std::cout << "components=" << p.class_count() << "\n"
                << "sizes=" << join_sizes(p.class_sizes()) << "\n";
    } else if (*census_cmd) {
      std::cout << (use_q ? enumerate_Q(n, k, j, ell, reds, blues).size()
                          : census_count(n, k, j, ell, reds, blues))
                << "\n";
    } else if (*link_cmd) {
      const auto h = io::decode_hypergraph(load(in_path));
      store(out_path, io::encode_hypergraph(link_double_hypergraph(h, vertex).graph));
    } else if (*proj_cmd) {
      const auto h = io::decode_hypergraph(load(in_path));
      store(out_path, io::encode_hypergraph(bipartition_projection(h, parse_vertex_list(q_list)).graph));
    } else if (*sweep_cmd) {
      const auto cfg = io::decode_config(load(config_path));
      const auto rows = run_sweep(cfg);
      store(out_path, io::encode_csv(rows));
      const auto bad = monotonicity_violations(rows);
      if (!bad.empty())
        throw RuntimeFailure("probability drops between c = " + io::format_number(rows[bad[0]].c) +
                             " and c = " + io::format_number(rows[bad[0] + 1].c) +
                             " beyond confidence-interval overlap");
    } else if (*cross_cmd) {
      const auto cfg = io::decode_config(load(config_path));
      const auto res = estimate_crossing(cfg);
      std::cout << "c_star=" << io::format_number(res.c_star) << "\n"
                << "bracket=" << io::format_number(res.low) << "," << io::format_number(res.high) << "\n"
                << "c,successes,trials,prob,ci_low,ci_high\n";
      for (const auto& m : res.measurements) {
        const auto ci = m.ci();
        std::cout << io::format_number(m.c) << ',' << m.successes << ',' << m.trials << ','
                  << io::format_number(m.prob()) << ',' << io::format_number(ci.low) << ','
                  << io::format_number(ci.high) << "\n";
      }
    }
  } catch (const RuntimeFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
