#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lplab/report.hpp"

using namespace lplab;

TEST_CASE("matrix json round trip") {
  Rng rng(139);
  const DenseMatrix m = gaussian_matrix(3, 5, rng);
  const DenseMatrix back = matrix_from_json(matrix_to_json(m));
  CHECK((m - back).norm() == 0.0);
}

TEST_CASE("graph serialization") {
  const Graph pet = petersen_graph();
  const Graph from_json = graph_from_text(graph_to_json(pet));
  CHECK(from_json.edges == pet.edges);
  const Graph from_list = graph_from_text(graph_to_edge_list(pet));
  CHECK(from_list.edges == pet.edges);
  CHECK_THROWS(graph_from_text(""));
}

TEST_CASE("plane and group dumps") {
  RunConfig cfg;
  cfg.seed = 5;
  const ExperimentResult plane = experiment_plane(2, cfg);
  CHECK(plane.ok);
  CHECK(plane.json.find("\"point_count\": 7") != std::string::npos);

  const ExperimentResult group = experiment_group(2, cfg);
  CHECK(group.ok);
  CHECK(group.json.find("\"order\": 168") != std::string::npos);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
  RunConfig cfg;
  cfg.seed = 99;
  cfg.trials = 60;
  cfg.dim = 5;

  SUBCASE("plane") {
    CHECK(experiment_plane(3, cfg).json == experiment_plane(3, cfg).json);
  }
  SUBCASE("mazur") {
    const ExperimentResult a = experiment_mazur(cfg);
    const ExperimentResult b = experiment_mazur(cfg);
    CHECK(a.json == b.json);
    CHECK(a.csv == b.csv);
    CHECK(a.ok);
  }
  SUBCASE("lemma21") {
    CHECK(experiment_lemma21(cfg).json == experiment_lemma21(cfg).json);
  }
  SUBCASE("different seeds differ") {
    RunConfig other = cfg;
    other.seed = 100;
    CHECK(experiment_mazur(cfg).json != experiment_mazur(other).json);
  }
}

TEST_CASE("experiment status flags") {
  RunConfig cfg;
  cfg.seed = 3;
  cfg.trials = 40;
  cfg.dim = 5;

  SUBCASE("lemma21 refuses inexact p") {
    cfg.p = 1.5;
    const ExperimentResult r = experiment_lemma21(cfg);
    CHECK_FALSE(r.ok);
    CHECK(r.json.find("estimate_only") != std::string::npos);
  }

  SUBCASE("remark22 square case asserts the bound") {
    cfg.p = kInf;
    const ExperimentResult r = experiment_remark22(cfg, 6, 6);
    CHECK(r.ok);
  }

  SUBCASE("pipeline builtin candidates parse") {
    cfg.primes = {2};
    CHECK(builtin_candidate("exact", cfg).rank() == 49);
    CHECK(builtin_candidate("rank1", cfg).rank() == 1);
    CHECK(builtin_candidate("truncated:3", cfg).rank() == 21);
    CHECK(builtin_candidate("perturbed:0.01", cfg).rank() == 55);
    CHECK_THROWS_AS(builtin_candidate("nonsense", cfg), std::invalid_argument);
  }
}
