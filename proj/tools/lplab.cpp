// lplab: numerical laboratory for isometric actions on finite l_p spaces,
// Schatten-class square-root maps, expander estimates, and the rank
// obstruction pipeline for candidate approximate diagonals.

#include <CLI11.hpp>
#include <iostream>

#include "lplab/report.hpp"

using namespace lplab;

namespace {

double parse_p(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF") return kInf;
  try {
    const double p = std::stod(text);
    if (p < 1.0) throw std::invalid_argument("p < 1");
    return p;
  } catch (const std::exception&) {
    throw CLI::ValidationError("--p", "expected a number >= 1 or 'inf'");
  }
}

void emit(const ExperimentResult& res, const std::string& out, const std::string& format) {
  const std::string& primary = format == "csv" ? res.csv : res.json;
  if (format == "csv" && res.csv.empty()) {
    throw std::invalid_argument("this experiment has no CSV companion");
  }
  if (out.empty()) {
    std::cout << primary;
    return;
  }
  write_file(out, primary);
  // Keep the tabular companion next to a JSON dump when both exist.
  if (format == "json" && !res.csv.empty()) write_file(out + ".csv", res.csv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lplab: finite projective actions, exact l_p norms, square-root maps,\n"
               "expander estimates, and rank bounds for approximate diagonals"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand name

  RunConfig cfg;
  std::string p_text = "2";
  std::string out;
  std::string format = "json";
  app.add_option("--seed", cfg.seed, "random seed embedded in every report");
  app.add_option("--primes", cfg.primes, "primes defining the block structure")
      ->delimiter(',');
  app.add_option("--p", p_text, "norm index: 1, 2, inf, or a real > 1");
  app.add_option("--trials", cfg.trials, "trial count per randomized suite");
  app.add_option("--dim", cfg.dim, "sample dimension for matrix suites");
  app.add_option("--group-cap", cfg.group_cap, "group enumeration ceiling");
  app.add_option("--plane-cap", cfg.plane_cap, "largest admissible prime");
  app.add_option("--out", out, "write the report here instead of stdout");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  std::uint32_t plane_l = 2;
  auto* cmd_plane = app.add_subcommand("plane", "projective plane dump");
  cmd_plane->add_option("l", plane_l, "prime")->required();

  std::uint32_t group_l = 2;
  auto* cmd_group = app.add_subcommand("group", "quotient group enumeration dump");
  cmd_group->add_option("l", group_l, "prime")->required();

  std::uint32_t spectral_l = 2;
  std::string graph_file;
  std::string dump_graph;
  auto* cmd_spectral =
      app.add_subcommand("spectral", "adjacency spectrum and Cheeger data");
  cmd_spectral->add_option("--l", spectral_l, "prime of the quotient Cayley graph");
  cmd_spectral->add_option("--graph", graph_file, "graph file (JSON or edge list)");
  cmd_spectral->add_option("--dump-graph", dump_graph,
                           "write the graph as <path> (JSON) and <path>.txt (edge list)");

  auto* cmd_mazur = app.add_subcommand(
      "mazur", "square-root map identities, estimates, and moduli");

  auto* cmd_lemma21 =
      app.add_subcommand("lemma21", "column-sum norm bounds on random pairs");

  Eigen::Index rows = 8, cols = 8;
  auto* cmd_remark22 =
      app.add_subcommand("remark22", "mixed l_2 column-sum ratio search");
  cmd_remark22->add_option("--rows", rows, "row count");
  cmd_remark22->add_option("--cols", cols, "column count");

  auto* cmd_coarea = app.add_subcommand("coarea", "co-area inequality suite");

  std::string mode = "l1";
  std::string cloud = "auto";
  auto* cmd_concentration =
      app.add_subcommand("concentration", "mean deviation bounds on graph clouds");
  cmd_concentration->add_option("--mode", mode, "l1 | median | banach")
      ->check(CLI::IsMember({"l1", "median", "banach"}));
  cmd_concentration->add_option("--cloud", cloud,
                                "auto | constant | random | orbit | oversized")
      ->check(CLI::IsMember({"auto", "constant", "random", "orbit", "oversized"}));

  std::string rep_kind = "perm";
  auto* cmd_invariant =
      app.add_subcommand("invariant", "orbit means and averaging gaps");
  cmd_invariant->add_option("--rep", rep_kind, "perm | pair")
      ->check(CLI::IsMember({"perm", "pair"}));

  std::string builtin = "exact";
  std::string tensor_file;
  std::string dump_tensor;
  auto* cmd_pipeline =
      app.add_subcommand("pipeline", "rank obstruction run on a candidate diagonal");
  cmd_pipeline->add_option("--builtin", builtin,
                           "exact | rank1 | truncated:<keep> | perturbed:<eta>");
  cmd_pipeline->add_option("--input", tensor_file, "candidate tensor as JSON");
  cmd_pipeline->add_option("--dump-tensor", dump_tensor,
                           "write the candidate actually run to this JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.p = parse_p(p_text);
    ExperimentResult res;
    if (*cmd_plane) {
      res = experiment_plane(plane_l, cfg);
    } else if (*cmd_group) {
      res = experiment_group(group_l, cfg);
    } else if (*cmd_spectral) {
      if (!graph_file.empty()) {
        const Graph g = graph_from_text(read_file(graph_file));
        if (!dump_graph.empty()) {
          write_file(dump_graph, graph_to_json(g));
          write_file(dump_graph + ".txt", graph_to_edge_list(g));
        }
        res = experiment_spectral_graph(g, graph_file, cfg);
      } else {
        if (!dump_graph.empty()) {
          const ClosureResult closure =
              enumerate_quotient(spectral_l, GeneratorSet::elementary_sl3(), cfg.group_cap);
          if (!closure.complete) throw std::invalid_argument("group closure exceeds cap");
          const Graph g = cayley_graph(closure.elements,
                                       GeneratorSet::elementary_sl3().reduce(spectral_l));
          write_file(dump_graph, graph_to_json(g));
          write_file(dump_graph + ".txt", graph_to_edge_list(g));
        }
        res = experiment_spectral(spectral_l, cfg);
      }
    } else if (*cmd_mazur) {
      res = experiment_mazur(cfg);
    } else if (*cmd_lemma21) {
      res = experiment_lemma21(cfg);
    } else if (*cmd_remark22) {
      if (app.count("--p") == 0) cfg.p = kInf;  // the interesting default for the search
      res = experiment_remark22(cfg, rows, cols);
    } else if (*cmd_coarea) {
      res = experiment_coarea(cfg);
    } else if (*cmd_concentration) {
      res = experiment_concentration(cfg, mode, cloud);
    } else if (*cmd_invariant) {
      res = experiment_invariant(cfg, rep_kind);
    } else if (*cmd_pipeline) {
      TensorDecomposition t;
      std::string name;
      if (!tensor_file.empty()) {
        t = tensor_from_json(read_file(tensor_file));
        name = tensor_file;
      } else {
        t = builtin_candidate(builtin, cfg);
        name = builtin;
      }
      if (!dump_tensor.empty()) write_file(dump_tensor, tensor_to_json(t));
      res = experiment_pipeline(t, name, cfg);
    }
    emit(res, out, format);
    return res.ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
