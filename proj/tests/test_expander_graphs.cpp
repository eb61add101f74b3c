#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lplab/concentration.hpp"
#include "lplab/group.hpp"

using namespace lplab;

namespace {

Graph cayley_sl3_2() {
  const ClosureResult closure = enumerate_quotient(2, GeneratorSet::elementary_sl3());
  return cayley_graph(closure.elements, GeneratorSet::elementary_sl3().reduce(2));
}

Eigen::VectorXd half_supported(const Graph& g, Rng& rng) {
  Eigen::VectorXd f = Eigen::VectorXd::Zero(g.n);
  const std::size_t support = 1 + rng.below(g.n / 2);
  std::vector<std::size_t> idx(g.n);
  for (std::size_t i = 0; i < g.n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < support; ++i) {
    const std::size_t j = i + rng.below(g.n - i);
    std::swap(idx[i], idx[j]);
    f(idx[i]) = rng.uniform();
  }
  return f;
}

}  // namespace

TEST_CASE("graph construction and audits") {
  const Graph c6 = cycle_graph(6);
  CHECK(c6.n == 6);
  CHECK(c6.k == 2);
  const Graph k4 = complete_graph(4);
  CHECK(k4.k == 3);
  const Graph pet = petersen_graph();
  CHECK(pet.n == 10);
  CHECK(pet.k == 3);

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}, {0, 2}}),
                  std::invalid_argument);  // duplicate {0,1}
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}}),
                  std::invalid_argument);  // irregular
  CHECK_THROWS_AS(
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}),
      std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(complete_bipartite(2, 3), std::invalid_argument);
}

TEST_CASE("cyclic group with gens {+-1} is the cycle") {
  const std::size_t n = 6;
  const Graph g =
      cayley_graph_generic(n, 2, [n](std::size_t v, std::size_t j) {
        return j == 0 ? (v + 1) % n : (v + n - 1) % n;
      });
  const Graph c6 = cycle_graph(6);
  CHECK(g.edges == c6.edges);
}

TEST_CASE("Cayley graph of the l=2 quotient") {
  const Graph g = cayley_sl3_2();
  CHECK(g.n == 168);
  // The 12 integer generators collapse to 6 distinct involutions mod 2.
  CHECK(g.k == 6);
}

TEST_CASE("Cayley construction rejects bad generator sets") {
  const ClosureResult closure = enumerate_quotient(2, GeneratorSet::elementary_sl3());
  auto gens = GeneratorSet::elementary_sl3().reduce(2);
  SUBCASE("identity generator") {
    gens.push_back(Mat3::identity(2));
    CHECK_THROWS_AS(cayley_graph(closure.elements, gens), std::invalid_argument);
  }
  SUBCASE("non-symmetric set") {
    std::vector<Mat3> bad = {Mat3::elementary(0, 1, 1, 3), Mat3::elementary(1, 0, 1, 3)};
    const ClosureResult c3 = enumerate_quotient(3, GeneratorSet::elementary_sl3());
    CHECK_THROWS_AS(cayley_graph(c3.elements, bad), std::invalid_argument);
  }
}

TEST_CASE("exhaustive Cheeger constants on the small zoo") {
  CHECK(cheeger_exact(complete_graph(4)) == doctest::Approx(2.0));
  CHECK(cheeger_exact(cycle_graph(6)) == doctest::Approx(2.0 / 3.0));
  // Enumeration: the best cut of K_{3,3} is 2+1 against 1+2, ratio 5/3.
  CHECK(cheeger_exact(complete_bipartite(3, 3)) == doctest::Approx(5.0 / 3.0));
  // A pentagon half: boundary 5 over |A| = 5.
  CHECK(cheeger_exact(petersen_graph()) == doctest::Approx(1.0));
  CHECK_THROWS_AS(cheeger_exact(cayley_sl3_2()), std::invalid_argument);
}

TEST_CASE("spectral sandwich and exact eigenvalues") {
  SUBCASE("complete graph") {
    const SpectralReport rep = spectral_report(complete_graph(4));
    CHECK(rep.eigenvalues(0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(rep.lambda2 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(rep.cheeger_lower == doctest::Approx(2.0));
    CHECK(rep.cheeger_upper == doctest::Approx(std::sqrt(24.0)));
    REQUIRE(rep.cheeger_exact.has_value());
    CHECK(*rep.cheeger_exact >= rep.cheeger_lower - 1e-9);
    CHECK(*rep.cheeger_exact <= rep.cheeger_upper + 1e-9);
  }
  SUBCASE("cycle") {
    const SpectralReport rep = spectral_report(cycle_graph(6));
    CHECK(rep.lambda2 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.cheeger_lower == doctest::Approx(0.5));
    CHECK(rep.cheeger_upper == doctest::Approx(2.0));
    CHECK(*rep.cheeger_exact == doctest::Approx(2.0 / 3.0));
  }
  SUBCASE("quotient Cayley graph has a spectral gap") {
    const SpectralReport rep = spectral_report(cayley_sl3_2());
    CHECK(rep.eigenvalues(0) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(rep.gap > 0.1);
  }
}

TEST_CASE("co-area inequality") {
  Rng rng(61);

  SUBCASE("single vertex in the complete graph") {
    Eigen::VectorXd f = Eigen::VectorXd::Zero(4);
    f(2) = 1.0;
    const BoundCheck c = coarea_check(complete_graph(4), f, 2.0);
    CHECK(c.lhs == doctest::Approx(3.0));
    CHECK(c.rhs == doctest::Approx(2.0));
    CHECK(c.holds);
  }

  SUBCASE("zero function") {
    const BoundCheck c = coarea_check(cycle_graph(6), Eigen::VectorXd::Zero(6), 2.0 / 3.0);
    CHECK(c.lhs == 0.0);
    CHECK(c.rhs == 0.0);
    CHECK(c.holds);
  }

  SUBCASE("random functions against the exact constant") {
    for (const auto& [graph, h] :
         {std::pair{complete_graph(4), 2.0}, std::pair{cycle_graph(6), 2.0 / 3.0},
          std::pair{petersen_graph(), 1.0}}) {
      for (int t = 0; t < 200; ++t) {
        CHECK(coarea_check(graph, half_supported(graph, rng), h).holds);
      }
    }
  }

  SUBCASE("random functions on the quotient graph with the spectral lower bound") {
    const Graph g = cayley_sl3_2();
    const double h_lower = cheeger_spectral(g).first;
    for (int t = 0; t < 500; ++t) {
      CHECK(coarea_check(g, half_supported(g, rng), h_lower).holds);
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(coarea_check(cycle_graph(6), Eigen::VectorXd::Ones(6), 1.0),
                    std::invalid_argument);
    Eigen::VectorXd neg = Eigen::VectorXd::Zero(6);
    neg(0) = -1.0;
    CHECK_THROWS_AS(coarea_check(cycle_graph(6), neg, 1.0), std::invalid_argument);
  }
}

TEST_CASE("mean deviation bound in l_1") {
  Rng rng(67);
  const Graph c6 = cycle_graph(6);

  SUBCASE("constant cloud has zero deviation") {
    const BanachPointCloud cloud =
        BanachPointCloud::make(c6, CloudSpace::L1, Eigen::MatrixXd::Ones(3, 6));
    const ConcentrationResult res = concentration_l1(c6, cloud, 2.0 / 3.0, true);
    CHECK(res.mean_dev <= 1e-12);
    CHECK(res.holds);
  }

  SUBCASE("graph distance on the cycle") {
    Eigen::MatrixXd pts(1, 6);
    const auto dist = c6.distances(0);
    for (std::size_t v = 0; v < 6; ++v) pts(0, v) = static_cast<double>(dist[v]);
    const BanachPointCloud cloud = BanachPointCloud::make(c6, CloudSpace::L1, pts);
    CHECK(cloud.lip == doctest::Approx(1.0));
    const ConcentrationResult res = concentration_l1(c6, cloud, 2.0 / 3.0, true);
    CHECK(res.bound == doctest::Approx(6.0));
    CHECK(res.mean_dev == doctest::Approx(5.0 / 6.0));
    CHECK(res.holds);
  }

  SUBCASE("random clouds on the quotient graph") {
    const Graph g = cayley_sl3_2();
    const double h = cheeger_spectral(g).first;
    for (int t = 0; t < 100; ++t) {
      Eigen::MatrixXd pts(4, g.n);
      for (Eigen::Index c = 0; c < pts.cols(); ++c) {
        pts.col(c) = gaussian_real_vector(4, rng);
      }
      const BanachPointCloud cloud = BanachPointCloud::make(g, CloudSpace::L1, pts);
      CHECK(concentration_l1(g, cloud, h, false).holds);
    }
  }

  SUBCASE("space tag is enforced") {
    const BanachPointCloud cloud =
        BanachPointCloud::make(c6, CloudSpace::L2, Eigen::MatrixXd::Zero(2, 6));
    CHECK_THROWS_AS(concentration_l1(c6, cloud, 1.0, true), std::invalid_argument);
  }
}

TEST_CASE("median-anchored mean bound") {
  const Graph c6 = cycle_graph(6);

  SUBCASE("constant function") {
    const Eigen::VectorXd f = Eigen::VectorXd::Constant(6, 2.5);
    const BoundCheck c = concentration_median(c6, f, 2.5, 2.0 / 3.0);
    CHECK(c.holds);
  }

  SUBCASE("distance to the heavy half") {
    Eigen::VectorXd f(6);
    f << 0, 0, 0, 1, 2, 1;  // distance to {0,1,2}
    const BoundCheck c = concentration_median(c6, f, 0.0, 2.0 / 3.0);
    CHECK(c.lhs == doctest::Approx(4.0 / 6.0));
    CHECK(c.rhs == doctest::Approx(0.0 + 2.0 / (2.0 * 2.0 / 3.0)));
    CHECK(c.holds);
  }

  SUBCASE("precondition violated") {
    Eigen::VectorXd f(6);
    f << 5, 5, 5, 5, 0, 0;
    CHECK_THROWS_AS(concentration_median(c6, f, 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("ball cloud concentration through the coordinate embedding") {
  Rng rng(71);
  ModulusConfig mc;
  mc.samples = 4000;
  mc.dim = 6;
  mc.t_max = 4.0;
  const ModulusOfContinuity fwd = estimate_modulus(MapKind::ClassicalTwoOne, mc, rng);
  const ModulusOfContinuity inv = estimate_modulus(MapKind::ClassicalOneTwo, mc, rng);

  const Graph g = cayley_sl3_2();
  const double h = cheeger_spectral(g).first;

  Eigen::MatrixXd pts(6, g.n);
  for (Eigen::Index c = 0; c < pts.cols(); ++c) {
    Eigen::VectorXd v = gaussian_real_vector(6, rng);
    pts.col(c) = v / std::max(1.0, v.norm());
  }
  const BanachPointCloud cloud = BanachPointCloud::make(g, CloudSpace::L2, pts);
  const BanachConcentrationReport rep = concentration_banach(g, cloud, fwd, inv, h);
  if (rep.conclusive) {
    CHECK(rep.r >= 10.0 * static_cast<double>(g.k) / h);
    CHECK(rep.holds);
  }

  SUBCASE("clouds outside the unit ball are rejected") {
    const BanachPointCloud big =
        BanachPointCloud::make(g, CloudSpace::L2, 3.0 * Eigen::MatrixXd::Ones(6, g.n));
    CHECK_THROWS_AS(concentration_banach(g, big, fwd, inv, h), std::invalid_argument);
  }
}
