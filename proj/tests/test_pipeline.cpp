#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lplab/pipeline.hpp"
#include "lplab/report.hpp"

using namespace lplab;

namespace {

RunConfig small_config(std::vector<std::uint32_t> primes = {2}) {
  RunConfig cfg;
  cfg.seed = 424242;
  cfg.primes = std::move(primes);
  cfg.trials = 400;
  return cfg;
}

// Complex Kronecker product, used to test the module commutation relation.
DenseMatrix ckron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Block-diagonal permutation/sign matrix of the full Lambda_P space.
Eigen::MatrixXd full_space_matrix(const TensorDecomposition& t,
                                  const std::function<Eigen::MatrixXd(const ProjectivePlane&)>& per_block) {
  const auto d = static_cast<Eigen::Index>(t.dim());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(d, d);
  Eigen::Index off = 0;
  for (const std::uint32_t l : t.primes) {
    const ProjectivePlane plane = ProjectivePlane::build(l);
    const auto n = static_cast<Eigen::Index>(plane.size());
    out.block(off, off, n, n) = per_block(plane);
    off += n;
  }
  return out;
}

}  // namespace

TEST_CASE("prod defect") {
  CHECK(prod_defect(exact_diagonal(7)) <= 1e-12);
  CHECK(prod_defect(rank_one_identity(7)) == 0.0);
  CHECK(prod_defect(truncated_diagonal(7, 3)) <= 1e-12);

  Rng rng(79);
  TensorDecomposition random;
  random.pairs.emplace_back(gaussian_matrix(5, 5, rng), gaussian_matrix(5, 5, rng));
  CHECK(prod_defect(random) > 1e-3);

  TensorDecomposition mismatched;
  mismatched.pairs.emplace_back(gaussian_matrix(4, 4, rng), gaussian_matrix(5, 5, rng));
  CHECK_THROWS_AS(prod_defect(mismatched), std::invalid_argument);
}

TEST_CASE("exact diagonal structure") {
  const TensorDecomposition t1 = exact_diagonal(1);
  CHECK(t1.rank() == 1);
  CHECK(t1.pairs[0].first(0, 0) == std::complex<double>(1, 0));

  const TensorDecomposition t7 = exact_diagonal(7);
  CHECK(t7.rank() == 49);
  CHECK(prod_defect(t7) <= 1e-12);

  // Module commutation: x . T = T . x as elements of the tensor square,
  // checked through the Kronecker embedding sum_i a_i (x) b_i^T.
  Rng rng(83);
  const Eigen::Index n = 7;
  DenseMatrix k = DenseMatrix::Zero(n * n, n * n);
  for (const auto& [a, b] : t7.pairs) k += ckron(a, b.transpose());
  for (int trial = 0; trial < 5; ++trial) {
    const DenseMatrix x = gaussian_matrix(n, n, rng);
    const DenseMatrix left = ckron(x, DenseMatrix::Identity(n, n)) * k;
    const DenseMatrix right = ckron(DenseMatrix::Identity(n, n), x.transpose()) * k;
    CHECK((left - right).norm() <= 1e-10);
  }
}

TEST_CASE("perturbed diagonal keeps prod exact") {
  Rng rng(89);
  const TensorDecomposition t = perturbed_diagonal(7, 0.05, 5, rng);
  CHECK(prod_defect(t) <= 1e-12);
  CHECK(t.rank() == 49 + 5 + 1);
}

TEST_CASE("slices") {
  TensorDecomposition t = exact_diagonal(7);
  t.primes = {2};

  SUBCASE("exact diagonal slices are the normalized identity") {
    for (std::size_t m = 0; m < 7; ++m) {
      const DenseMatrix sl = slice(t, 2, m);
      CHECK((sl - DenseMatrix::Identity(7, 7) / 7.0).norm() <= 1e-14);
      CHECK(schatten_norm(sl, 1) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(sl.trace().real() - 1.0) <= 1e-12);  // trace pairing
    }
  }

  SUBCASE("rank-one candidate slices to a matrix unit") {
    TensorDecomposition one = rank_one_identity(7);
    one.primes = {2};
    for (std::size_t m = 0; m < 7; ++m) {
      const DenseMatrix sl = slice(one, 2, m);
      DenseMatrix expected = DenseMatrix::Zero(7, 7);
      expected(m, m) = 1.0;
      CHECK((sl - expected).norm() == 0.0);
    }
  }

  SUBCASE("zero pairs give zero slices") {
    TensorDecomposition zero;
    zero.primes = {2};
    zero.pairs.emplace_back(DenseMatrix::Zero(7, 7), DenseMatrix::Zero(7, 7));
    CHECK(slice(zero, 2, 3).norm() == 0.0);
  }

  SUBCASE("out-of-range column") {
    CHECK_THROWS_AS(slice(t, 2, 7), std::out_of_range);
  }
}

TEST_CASE("slice mass") {
  SUBCASE("exact diagonal attains the lower bound with equality") {
    TensorDecomposition t = exact_diagonal(7);
    t.primes = {2};
    const SliceMass mass = slice_mass(t, 2);
    CHECK(mass.total == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(mass.lower_bound_ok);
  }

  SUBCASE("rank-one candidate") {
    TensorDecomposition t = rank_one_identity(7);
    t.primes = {2};
    const SliceMass mass = slice_mass(t, 2);
    CHECK(mass.total == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(mass.lower_bound_ok);
  }

  SUBCASE("multi-prime block structure") {
    TensorDecomposition t = exact_diagonal(20);
    t.primes = {2, 3};
    const SliceMass m2 = slice_mass(t, 2);
    const SliceMass m3 = slice_mass(t, 3);
    CHECK(m2.lower_bound_ok);
    CHECK(m3.lower_bound_ok);
    CHECK(m2.total >= 7.0 * (1 - 1e-9));
    CHECK(m3.total >= 13.0 * (1 - 1e-9));
  }

  SUBCASE("upper consistency via the column-sum bound at p = 2") {
    Rng rng(97);
    TensorDecomposition t = perturbed_diagonal(7, 0.1, 3, rng);
    t.primes = {2};
    const SliceMass mass = slice_mass(t, 2);
    double upper = 0.0;
    for (const auto& [a, b] : t.pairs) {
      upper += opnorm(a, 2.0).value * opnorm(b, 2.0).value;
    }
    CHECK(mass.total <= 7.0 * upper * (1 + 1e-9));
  }
}

TEST_CASE("slice defects") {
  const ProjectivePlane plane = ProjectivePlane::build(2);
  const auto gens = GeneratorSet::elementary_sl3().reduce(2);

  SUBCASE("exact diagonal is exactly invariant") {
    TensorDecomposition t = exact_diagonal(7);
    t.primes = {2};
    for (std::size_t m = 0; m < 7; ++m) {
      const DenseMatrix sl = slice(t, 2, m);
      for (const Mat3& g : gens) {
        CHECK(slice_defect(sl, plane.perm_matrix(g)) == 0.0);
      }
      CHECK(slice_defect(sl, plane.sign_isometry()) == 0.0);
    }
  }

  SUBCASE("rank-one candidate: sign fixes diagonal units, permutations move them") {
    TensorDecomposition t = rank_one_identity(7);
    t.primes = {2};
    for (std::size_t m = 0; m < 7; ++m) {
      const DenseMatrix sl = slice(t, 2, m);
      CHECK(slice_defect(sl, plane.sign_isometry()) <= 1e-12);
      for (const Mat3& g : gens) {
        const double d = slice_defect(sl, plane.perm_matrix(g));
        const bool moved = plane.act_index(g, m) != m;
        CHECK(d == doctest::Approx(moved ? 2.0 : 0.0).epsilon(1e-9));
      }
    }
  }

  SUBCASE("defect scales linearly in the perturbation") {
    Rng rng_small(5), rng_big(5);
    TensorDecomposition small = perturbed_diagonal(7, 0.01, 3, rng_small);
    TensorDecomposition big = perturbed_diagonal(7, 0.10, 3, rng_big);
    small.primes = big.primes = {2};
    const Eigen::MatrixXd q = plane.perm_matrix(gens[0]);
    // Same Gaussian draws, 10x the scale: defects scale inside [5x, 20x].
    double ds = 0, db = 0;
    for (std::size_t m = 0; m < 7; ++m) {
      ds += slice_defect(slice(small, 2, m), q);
      db += slice_defect(slice(big, 2, m), q);
    }
    CHECK(db >= 5.0 * ds);
    CHECK(db <= 20.0 * ds);
  }
}

TEST_CASE("slice covariance under conjugation") {
  // slice(pi T pi^-1, l, m) equals the translate of slice(T, l, m) at the
  // same column: the permutation hits the vectors, not the column index.
  Rng rng(211);
  for (const std::uint32_t l : {2u, 3u}) {
    TensorDecomposition t;
    t.primes = {2, 3};
    t.p = 2.0;
    const auto d = static_cast<Eigen::Index>(t.dim());
    for (int i = 0; i < 6; ++i) {
      t.pairs.emplace_back(gaussian_matrix(d, d, rng), gaussian_matrix(d, d, rng));
    }

    const auto gens = GeneratorSet::elementary_sl3();
    Mat3 g = Mat3::identity(l);
    for (const Mat3& s : gens.reduce(l)) g = g * s;

    const Eigen::MatrixXd full = full_space_matrix(
        t, [&](const ProjectivePlane& pl) { return pl.perm_matrix(g.l == pl.l() ? g : Mat3::identity(pl.l())); });

    TensorDecomposition conj = t;
    const DenseMatrix fc = to_complex(full);
    const DenseMatrix fci = to_complex(Eigen::MatrixXd(full.transpose()));
    for (auto& [a, b] : conj.pairs) {
      a = fc * a;
      b = b * fci;
    }

    const ProjectivePlane plane = ProjectivePlane::build(l);
    const Eigen::MatrixXd q = plane.perm_matrix(g);
    const DenseMatrix qc = to_complex(q);
    for (std::size_t m = 0; m < t.dim(); ++m) {
      const DenseMatrix lhs = slice(conj, l, m);
      const DenseMatrix rhs = qc * slice(t, l, m) * qc.transpose();
      CHECK((lhs - rhs).norm() <= 1e-9);
    }
  }
}

TEST_CASE("slice selection") {
  const ProjectivePlane plane = ProjectivePlane::build(2);
  std::vector<Eigen::MatrixXd> translates;
  for (const Mat3& g : GeneratorSet::elementary_sl3().reduce(2)) {
    translates.push_back(plane.perm_matrix(g));
  }
  translates.push_back(plane.sign_isometry());

  SUBCASE("exact diagonal achieves ratio zero") {
    TensorDecomposition t = exact_diagonal(7);
    t.primes = {2};
    const SliceSelection sel = select_slice(t, 2, translates);
    CHECK(sel.delta_slice == 0.0);
    CHECK(schatten_norm(sel.normalized, 1) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("rank-one candidate reports its best ratio") {
    TensorDecomposition t = rank_one_identity(7);
    t.primes = {2};
    const SliceSelection sel = select_slice(t, 2, translates);
    CHECK(schatten_norm(sel.normalized, 1) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sel.delta_slice == doctest::Approx(2.0).epsilon(1e-9));
  }

  SUBCASE("pure noise pairs with a zero factor do not change the selection") {
    Rng rng(13);
    TensorDecomposition t = perturbed_diagonal(7, 0.02, 2, rng);
    t.primes = {2};
    const SliceSelection before = select_slice(t, 2, translates);
    TensorDecomposition padded = t;
    padded.pairs.emplace_back(gaussian_matrix(7, 7, rng), DenseMatrix::Zero(7, 7));
    const SliceSelection after = select_slice(padded, 2, translates);
    CHECK(before.m == after.m);
    CHECK(before.delta_slice == doctest::Approx(after.delta_slice).epsilon(1e-12));
  }

  SUBCASE("all-zero decompositions are rejected") {
    TensorDecomposition zero;
    zero.primes = {2};
    zero.pairs.emplace_back(DenseMatrix::Zero(7, 7), DenseMatrix::Zero(7, 7));
    CHECK_THROWS_AS(select_slice(zero, 2, translates), std::runtime_error);
  }
}

TEST_CASE("invariant projection onto span{I, E}") {
  const Eigen::Index n = 7;
  const double rn = std::sqrt(static_cast<double>(n));
  const DenseMatrix i_mat = DenseMatrix::Identity(n, n) / rn;
  const DenseMatrix e_mat = DenseMatrix::Ones(n, n) / static_cast<double>(n);

  SUBCASE("basis elements") {
    const InvariantProjection pi = invariant_projection(i_mat);
    CHECK(std::abs(pi.lambda - 1.0) <= 1e-12);
    CHECK(std::abs(pi.mu) <= 1e-12);
    CHECK(pi.residual <= 1e-12);

    const InvariantProjection pe = invariant_projection(e_mat);
    CHECK(std::abs(pe.lambda) <= 1e-12);
    CHECK(std::abs(pe.mu - 1.0) <= 1e-12);
    CHECK(pe.residual <= 1e-12);
  }

  SUBCASE("trace-free mean-free matrices project to zero") {
    DenseMatrix y = DenseMatrix::Zero(n, n);
    y(0, 1) = 1.0;
    y(1, 0) = -1.0;
    const InvariantProjection p = invariant_projection(y);
    CHECK(std::abs(p.lambda) <= 1e-12);
    CHECK(std::abs(p.mu) <= 1e-12);
    CHECK(p.residual == doctest::Approx(y.norm()).epsilon(1e-12));
  }

  SUBCASE("projection is idempotent and orthogonal") {
    Rng rng(313);
    for (int t = 0; t < 25; ++t) {
      const DenseMatrix y = gaussian_matrix(n, n, rng);
      const InvariantProjection p = invariant_projection(y);
      const DenseMatrix fitted = p.lambda * i_mat + p.mu * e_mat;
      // Residual orthogonal to both I and E.
      const DenseMatrix rest = y - fitted;
      CHECK(std::abs((i_mat.adjoint() * rest).trace()) <= 1e-9);
      CHECK(std::abs((e_mat.adjoint() * rest).trace()) <= 1e-9);
      CHECK(std::abs(rest.norm() - p.residual) <= 1e-12);
    }
  }
}

TEST_CASE("mu estimate") {
  const ProjectivePlane plane = ProjectivePlane::build(2);

  SUBCASE("the sign translate of E has the closed-form distance") {
    const MuBoundCheck c = mu_bound_check(0.0, 0.1, 2.0, plane);
    CHECK(c.sign_norm_defect <= 1e-12);
    const double expected = std::sqrt(2.0 - 2.0 / 49.0);
    CHECK(expected == doctest::Approx(1.39969).epsilon(1e-4));
    CHECK(c.holds);  // mu = 0
  }

  SUBCASE("large mu fails the bound") {
    const MuBoundCheck c = mu_bound_check(1.0, 1e-6, 2.0, plane);
    CHECK_FALSE(c.holds);
  }
}

TEST_CASE("rank lower bound") {
  SUBCASE("zero defect certifies the full dimension") {
    const RankBound rb = rank_bound(0.0, 1.0, 7, 49);
    CHECK(rb.bound == 7.0);
    CHECK_FALSE(rb.vacuous);
    CHECK(rb.consistent);
  }

  SUBCASE("hand value at delta1 = 1/3") {
    const RankBound rb = rank_bound(1.0 / 3.0, 1.0, 7, 49);
    CHECK(rb.bound == doctest::Approx(5.25).epsilon(1e-12));
    CHECK(rb.consistent);
  }

  SUBCASE("delta1 >= 1 is vacuous") {
    const RankBound rb = rank_bound(1.5, 0.2, 7, 1);
    CHECK(rb.vacuous);
    CHECK(rb.consistent);
  }

  SUBCASE("monotone: larger defect never certifies more") {
    double prev = 8.0;
    for (double d = 0.0; d < 1.0; d += 0.02) {
      const RankBound rb = rank_bound(d, 1.0, 7, 49);
      CHECK(rb.bound <= prev + 1e-12);
      prev = rb.bound;
    }
  }

  SUBCASE("lambda floor precondition") {
    CHECK_THROWS_AS(rank_bound(0.1, 0.5, 7, 49), std::invalid_argument);
  }
}

TEST_CASE("best rank-r distance to the normalized identity") {
  // || M - lambda n^{-1/2} Id ||_2^2 >= (1 - r/n) |lambda|^2 for rank(M) <= r.
  Rng rng(127);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 5 + static_cast<Eigen::Index>(rng.below(8));
    const Eigen::Index r = 1 + static_cast<Eigen::Index>(rng.below(n));
    DenseMatrix m = DenseMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < r; ++i) {
      m += gaussian_vector(n, rng) * gaussian_vector(n, rng).adjoint();
    }
    const std::complex<double> lambda = rng.complex_gaussian();
    const DenseMatrix diff =
        m - lambda / std::sqrt(static_cast<double>(n)) * DenseMatrix::Identity(n, n);
    const double lhs = std::pow(diff.norm(), 2);
    const double rhs =
        (1.0 - static_cast<double>(r) / static_cast<double>(n)) * std::norm(lambda);
    CHECK(lhs >= rhs * (1.0 - 1e-9) - 1e-12);
  }
}

TEST_CASE("full pipeline runs") {
  SUBCASE("exact diagonal on the 7-point block") {
    const RunConfig cfg = small_config({2});
    const TensorDecomposition t = builtin_candidate("exact", cfg);
    Rng rng(cfg.seed);
    ModulusConfig mc;
    mc.dim = 7;
    mc.samples = 800;
    const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, rng);
    const PipelineReport rep = run_pipeline(t, fwd);
    REQUIRE(rep.per_prime.size() == 1);
    const PrimeRecord& r = rep.per_prime[0];
    REQUIRE(r.error.empty());
    CHECK(r.eps == 0.0);
    CHECK(r.delta0 == 0.0);
    CHECK(r.delta1 == 0.0);
    CHECK(r.rank_lower_bound == 7.0);
    CHECK(r.actual_rank == 49);
    CHECK(r.consistent);
    CHECK(r.mass_lower_bound_ok);
    CHECK(r.pigeonhole_ok);
    CHECK(r.kazhdan_bound_ok);
    CHECK(r.mu_check.holds);
    CHECK(r.invariant_dim == 2);
  }

  SUBCASE("rank-one candidate gives a vacuous but consistent bound") {
    const RunConfig cfg = small_config({2});
    const TensorDecomposition t = builtin_candidate("rank1", cfg);
    Rng rng(cfg.seed);
    ModulusConfig mc;
    mc.dim = 7;
    mc.samples = 800;
    const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, rng);
    const PipelineReport rep = run_pipeline(t, fwd);
    const PrimeRecord& r = rep.per_prime[0];
    REQUIRE(r.error.empty());
    CHECK(r.vacuous);
    CHECK(r.consistent);
    CHECK(r.actual_rank == 1);
  }

  SUBCASE("prod failure is rejected") {
    Rng rng(1);
    TensorDecomposition bad;
    bad.primes = {2};
    bad.pairs.emplace_back(gaussian_matrix(7, 7, rng), gaussian_matrix(7, 7, rng));
    ModulusConfig mc;
    mc.dim = 4;
    mc.samples = 100;
    const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, rng);
    CHECK_THROWS_AS(run_pipeline(bad, fwd), std::invalid_argument);
  }
}

TEST_CASE("tensor serialization round trip") {
  Rng rng(131);
  TensorDecomposition t;
  t.primes = {2};
  t.p = kInf;
  for (int i = 0; i < 3; ++i) {
    t.pairs.emplace_back(gaussian_matrix(7, 7, rng), gaussian_matrix(7, 7, rng));
  }
  const std::string text = tensor_to_json(t);
  const TensorDecomposition back = tensor_from_json(text);
  CHECK(back.p == kInf);
  CHECK(back.primes == t.primes);
  REQUIRE(back.rank() == t.rank());
  for (std::size_t i = 0; i < t.pairs.size(); ++i) {
    CHECK((back.pairs[i].first - t.pairs[i].first).norm() == 0.0);
    CHECK((back.pairs[i].second - t.pairs[i].second).norm() == 0.0);
  }

  // Pair shape 2x2 cannot match the 13-point block of l = 3.
  const std::string bad =
      "{\"p\": 2, \"primes\": [3], \"pairs\": "
      "[{\"a\": {\"rows\": 2, \"cols\": 2, \"data\": [[1,0],[0,0],[0,0],[1,0]]}, "
      "\"b\": {\"rows\": 2, \"cols\": 2, \"data\": [[1,0],[0,0],[0,0],[1,0]]}}]}";
  CHECK_THROWS_AS(tensor_from_json(bad), std::invalid_argument);
}
