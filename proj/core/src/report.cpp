#include "lplab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace lplab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json p_json(double p) {
  if (p == kInf) return "inf";
  return p;
}

ordered_json real_json(double v) {
  if (v == std::numeric_limits<double>::infinity()) return "inf";
  return v;
}

ordered_json vector_json(const Eigen::VectorXd& v) {
  ordered_json a = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

ordered_json envelope(const std::string& tag, const RunConfig& cfg) {
  ordered_json j;
  j["tool"] = "lplab";
  j["version"] = kToolVersion;
  j["experiment"] = tag;
  j["seed"] = cfg.seed;
  ordered_json c;
  c["primes"] = cfg.primes;
  c["p"] = p_json(cfg.p);
  c["trials"] = cfg.trials;
  c["dim"] = cfg.dim;
  c["group_cap"] = cfg.group_cap;
  c["plane_cap"] = cfg.plane_cap;
  j["config"] = std::move(c);
  ordered_json mods;
  mods["finite-structures"] = kToolVersion;
  mods["matrix-core"] = kToolVersion;
  mods["mazur-maps"] = kToolVersion;
  mods["expander-lab"] = kToolVersion;
  mods["obstruction-pipeline"] = kToolVersion;
  mods["cli-harness"] = kToolVersion;
  j["modules"] = std::move(mods);
  return j;
}

ExperimentResult seal(ordered_json env, ordered_json payload, bool ok,
                      std::string csv = {}) {
  env["ok"] = ok;
  env["payload"] = std::move(payload);
  ExperimentResult res;
  res.json = env.dump(2) + "\n";
  res.csv = std::move(csv);
  res.ok = ok;
  return res;
}

std::vector<Eigen::MatrixXd> sigma_plus_translates(const ProjectivePlane& plane,
                                                   const GeneratorSet& gens) {
  std::vector<Eigen::MatrixXd> ts;
  for (const Mat3& g : gens.reduce(plane.l())) ts.push_back(plane.perm_matrix(g));
  ts.push_back(plane.sign_isometry());
  return ts;
}

Mat3 random_group_element(const ProjectivePlane& plane, const GeneratorSet& gens,
                          Rng& rng, int words = 12) {
  const auto reduced = gens.reduce(plane.l());
  Mat3 g = Mat3::identity(plane.l());
  for (int i = 0; i < words; ++i) {
    g = g * reduced[rng.below(reduced.size())];
  }
  return g;
}

}  // namespace

ExperimentResult experiment_plane(std::uint32_t l, const RunConfig& cfg) {
  ordered_json env = envelope("plane", cfg);
  const ProjectivePlane plane = ProjectivePlane::build(l, cfg.plane_cap);
  const std::size_t expected = plane_point_count(l);
  std::size_t sign_count = 0;
  for (const bool b : plane.sign_set()) sign_count += b ? 1 : 0;

  ordered_json payload = ordered_json::parse(plane_to_json(plane));
  payload["expected_point_count"] = expected;
  payload["sign_set_size"] = sign_count;
  const bool ok = plane.size() == expected && sign_count == (expected - 1) / 2;
  return seal(std::move(env), std::move(payload), ok);
}

ExperimentResult experiment_group(std::uint32_t l, const RunConfig& cfg) {
  ordered_json env = envelope("group", cfg);
  const ClosureResult closure =
      enumerate_quotient(l, GeneratorSet::elementary_sl3(), cfg.group_cap);
  ordered_json payload;
  if (closure.complete) {
    payload = ordered_json::parse(group_to_json(l, closure.elements));
  } else {
    payload["l"] = l;
    payload["refused"] = true;
  }
  payload["complete"] = closure.complete;
  payload["partial_count"] = closure.partial_count;
  payload["expected_order"] = sl3_order(l);
  payload["matches_order"] = closure.matches_order;
  return seal(std::move(env), std::move(payload), closure.complete && closure.matches_order);
}

ExperimentResult experiment_spectral_graph(const Graph& g, const std::string& name,
                                           const RunConfig& cfg) {
  ordered_json env = envelope("spectral", cfg);
  const SpectralReport rep = spectral_report(g);
  ordered_json payload;
  payload["graph"] = name;
  payload["n"] = rep.n;
  payload["k"] = rep.k;
  payload["lambda2"] = rep.lambda2;
  payload["gap"] = rep.gap;
  payload["cheeger_lower"] = rep.cheeger_lower;
  payload["cheeger_upper"] = rep.cheeger_upper;
  if (rep.cheeger_exact) payload["cheeger_exact"] = *rep.cheeger_exact;
  payload["eigenvalues"] = vector_json(rep.eigenvalues);

  const double lambda1_defect =
      std::abs(rep.eigenvalues(0) - static_cast<double>(rep.k));
  payload["lambda1_defect"] = lambda1_defect;
  bool ok = lambda1_defect <= 1e-9 && rep.gap > 0.0;
  if (rep.cheeger_exact) {
    ok = ok && *rep.cheeger_exact >= rep.cheeger_lower - 1e-9 &&
         *rep.cheeger_exact <= rep.cheeger_upper + 1e-9;
  }

  std::ostringstream csv;
  csv << "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < rep.eigenvalues.size(); ++i) {
    csv << i << ',' << rep.eigenvalues(i) << '\n';
  }
  return seal(std::move(env), std::move(payload), ok, csv.str());
}

ExperimentResult experiment_spectral(std::uint32_t l, const RunConfig& cfg) {
  const ClosureResult closure =
      enumerate_quotient(l, GeneratorSet::elementary_sl3(), cfg.group_cap);
  if (!closure.complete || closure.elements.size() > 6000) {
    // 6000 is the dense-eigensolver ceiling; l = 3 (5616 vertices) is the
    // largest quotient this path accepts.
    ordered_json env = envelope("spectral", cfg);
    ordered_json payload;
    payload["error"] = closure.complete ? "graph exceeds the eigensolver ceiling"
                                        : "group closure exceeds cap";
    payload["partial_count"] = closure.partial_count;
    return seal(std::move(env), std::move(payload), false);
  }
  const GeneratorSet gens = GeneratorSet::elementary_sl3();
  const Graph g = cayley_graph(closure.elements, gens.reduce(l));
  return experiment_spectral_graph(g, "cayley_sl3_" + std::to_string(l), cfg);
}

ExperimentResult experiment_mazur(const RunConfig& cfg) {
  ordered_json env = envelope("mazur", cfg);
  Rng rng(cfg.seed);
  const std::uint64_t trials = std::max<std::uint64_t>(cfg.trials, 8);

  double max_sphere_defect = 0.0;
  double max_roundtrip = 0.0;
  double max_equivariance = 0.0;
  double max_classical_defect = 0.0;
  double max_trace_identity_defect = 0.0;
  std::uint64_t inequality_failures = 0;

  const ProjectivePlane plane2 = ProjectivePlane::build(2, cfg.plane_cap);
  const GeneratorSet gens = GeneratorSet::elementary_sl3();

  for (std::uint64_t t = 0; t < trials; ++t) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(t % 15);  // dims 2..16

    DenseMatrix s = gaussian_matrix(n, n, rng);
    s /= schatten_norm(s, 1);
    max_sphere_defect = std::max(
        max_sphere_defect, std::abs(std::pow(schatten_norm(nc_mazur(s), 2), 2) - 1.0));
    max_roundtrip =
        std::max(max_roundtrip, schatten_norm(nc_mazur_inverse(nc_mazur(s)) - s, 1));

    // Second sphere point at a random distance scale for the estimate suite.
    DenseMatrix u = s + rng.uniform(1e-4, 1.0) * gaussian_matrix(n, n, rng);
    u /= schatten_norm(u, 1);
    const MazurInequalityRecord rec = mazur_inequality_suite(s, u);
    if (!rec.modulus_bound_holds || !rec.sqrt_bound_holds || !rec.final_bound_holds) {
      ++inequality_failures;
    }
    max_trace_identity_defect =
        std::max(max_trace_identity_defect, rec.trace_identity_defect);

    max_equivariance = std::max(max_equivariance, equivariance_defect(s, haar_unitary(n, rng)));

    DenseVector v = gaussian_vector(n, rng);
    v /= v.norm();
    max_classical_defect = std::max(
        max_classical_defect, std::abs(vec_norm(classical_mazur(v, 2.0, 1.0), 1.0) - 1.0));
  }

  // Equivariance against the structured isometries of the finite actions.
  for (int t = 0; t < 32; ++t) {
    DenseMatrix s = gaussian_matrix(plane2.size(), plane2.size(), rng);
    s /= schatten_norm(s, 1);
    const Mat3 g = random_group_element(plane2, gens, rng);
    max_equivariance = std::max(
        max_equivariance, equivariance_defect(s, to_complex(plane2.perm_matrix(g))));
    max_equivariance = std::max(
        max_equivariance, equivariance_defect(s, to_complex(plane2.sign_isometry())));
  }

  // Diagonal probability vectors reduce to the classical l_1 -> l_2 case.
  for (int t = 0; t < 64; ++t) {
    const Eigen::Index n = 4 + static_cast<Eigen::Index>(t % 8);
    Eigen::VectorXd p1 = Eigen::VectorXd::Zero(n), p2 = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      p1(i) = rng.uniform();
      p2(i) = rng.uniform();
    }
    p1 /= p1.sum();
    p2 /= p2.sum();
    const MazurInequalityRecord rec = mazur_inequality_suite(
        to_complex(p1.asDiagonal()), to_complex(p2.asDiagonal()));
    if (!rec.modulus_bound_holds || !rec.sqrt_bound_holds || !rec.final_bound_holds) {
      ++inequality_failures;
    }
  }

  // Rank-deficient round trips.
  for (int t = 0; t < 32; ++t) {
    DenseMatrix low = gaussian_matrix(8, 3, rng) * gaussian_matrix(3, 8, rng);
    low /= schatten_norm(low, 1);
    max_roundtrip =
        std::max(max_roundtrip, schatten_norm(nc_mazur_inverse(nc_mazur(low)) - low, 1));
  }

  ModulusConfig mc;
  mc.samples = std::max<std::size_t>(cfg.trials, 500) * 2;
  mc.dim = cfg.dim;
  Rng mod_rng(cfg.seed ^ 0x6d617a7572ULL);
  const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, mod_rng);
  const ModulusOfContinuity inv = estimate_modulus(MapKind::NcMazurInverse, mc, mod_rng);

  bool envelope_below_theory = true;
  bool inverse_below_linear = true;
  ordered_json grid = ordered_json::array();
  std::ostringstream csv;
  csv << "t,envelope,theory\n";
  for (std::size_t i = 0; i < fwd.grid.size(); ++i) {
    const double theory = mazur_theory_curve(fwd.grid[i]);
    if (fwd.envelope[i] > theory + 1e-9) envelope_below_theory = false;
    grid.push_back({fwd.grid[i], fwd.envelope[i], theory});
    csv << fwd.grid[i] << ',' << fwd.envelope[i] << ',' << theory << '\n';
  }
  for (std::size_t i = 0; i < inv.grid.size(); ++i) {
    if (inv.envelope[i] > 3.0 * inv.grid[i] + 1e-9) inverse_below_linear = false;
  }

  ordered_json payload;
  payload["trials"] = trials;
  payload["max_sphere_defect"] = max_sphere_defect;
  payload["max_roundtrip_error"] = max_roundtrip;
  payload["max_equivariance_defect"] = max_equivariance;
  payload["max_classical_norm_defect"] = max_classical_defect;
  payload["max_trace_identity_defect"] = max_trace_identity_defect;
  payload["inequality_failures"] = inequality_failures;
  payload["forward_envelope_below_theory"] = envelope_below_theory;
  payload["inverse_envelope_below_3t"] = inverse_below_linear;
  payload["modulus_grid"] = std::move(grid);

  const bool ok = max_sphere_defect <= 1e-9 && max_roundtrip <= 1e-6 &&
                  max_equivariance <= 1e-6 && max_classical_defect <= 1e-10 &&
                  inequality_failures == 0 && envelope_below_theory &&
                  inverse_below_linear;
  return seal(std::move(env), std::move(payload), ok, csv.str());
}

ExperimentResult experiment_lemma21(const RunConfig& cfg) {
  ordered_json env = envelope("lemma21", cfg);
  Rng rng(cfg.seed);

  ordered_json payload;
  bool ok = true;
  if (cfg.p != 1.0 && cfg.p != 2.0 && cfg.p != kInf) {
    payload["estimate_only"] = true;
    payload["note"] = "exact checks need p in {1,2,inf}";
    return seal(std::move(env), std::move(payload), false);
  }

  const Eigen::Index rows = std::max<Eigen::Index>(2, cfg.dim - 2);
  const Eigen::Index cols = cfg.dim + 2;
  std::uint64_t failures = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  InequalityCheck tightest;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    const DenseMatrix x = gaussian_matrix(rows, cols, rng);
    const DenseMatrix y = gaussian_matrix(rows, cols, rng);
    for (const auto variant :
         {ColumnBoundVariant::OperatorNorms, ColumnBoundVariant::RegularNorms,
          ColumnBoundVariant::GeometricMean}) {
      const InequalityCheck c = column_norm_check(x, y, cfg.p, variant);
      if (!c.holds) ++failures;
      if (c.rhs > 0 && c.rhs / std::max(c.lhs, 1e-300) < worst_margin) {
        worst_margin = c.rhs / std::max(c.lhs, 1e-300);
        tightest = c;
      }
    }
  }

  // Duality and interpolation side conditions.
  double max_duality_defect = 0.0;
  std::uint64_t holder_failures = 0;
  for (int t = 0; t < 200; ++t) {
    const DenseMatrix x = gaussian_matrix(rows, cols, rng);
    max_duality_defect =
        std::max(max_duality_defect,
                 std::abs(opnorm(x, 1.0).value - opnorm(x.transpose(), kInf).value));
    if (!holder_midpoint_holds(gaussian_vector(cols, rng), cfg.p)) ++holder_failures;
  }

  payload["p"] = p_json(cfg.p);
  payload["rows"] = rows;
  payload["cols"] = cols;
  payload["trials"] = cfg.trials;
  payload["failures"] = failures;
  payload["worst_rhs_over_lhs"] = real_json(worst_margin);
  ordered_json tj;
  tj["lhs"] = tightest.lhs;
  tj["rhs"] = tightest.rhs;
  tj["holds"] = tightest.holds;
  payload["tightest_instance"] = std::move(tj);
  payload["max_duality_defect"] = max_duality_defect;
  payload["holder_failures"] = holder_failures;
  ok = failures == 0 && max_duality_defect <= 1e-12 && holder_failures == 0;
  return seal(std::move(env), std::move(payload), ok);
}

ExperimentResult experiment_remark22(const RunConfig& cfg, Eigen::Index rows,
                                     Eigen::Index cols) {
  ordered_json env = envelope("remark22", cfg);
  Rng rng(cfg.seed);
  const ColumnSearchReport rep = mixed_l2_column_search(cfg.p, cfg.trials, rows, cols, rng);
  ordered_json payload;
  payload["p"] = p_json(cfg.p);
  payload["rows"] = rows;
  payload["cols"] = cols;
  payload["trials"] = rep.trials;
  payload["square"] = rep.square;
  payload["exact_norms"] = rep.exact_norms;
  payload["max_ratio"] = rep.max_ratio;
  // The bound is a theorem for p in {1,2} and for square shapes with exact
  // norms; elsewhere the search result is recorded without a verdict.
  const bool asserted = rep.exact_norms && (rep.square || cfg.p == 1.0 || cfg.p == 2.0);
  payload["bound_asserted"] = asserted;
  const bool ok = !asserted || rep.max_ratio <= 1.0 + 1e-9;
  return seal(std::move(env), std::move(payload), ok);
}

namespace {

Eigen::VectorXd random_half_supported(const Graph& g, Rng& rng) {
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

ExperimentResult experiment_coarea(const RunConfig& cfg) {
  ordered_json env = envelope("coarea", cfg);
  Rng rng(cfg.seed);
  ordered_json payload = ordered_json::array();
  bool ok = true;

  struct Named {
    std::string name;
    Graph graph;
    bool exact;
  };
  std::vector<Named> graphs;
  graphs.push_back({"complete_4", complete_graph(4), true});
  graphs.push_back({"cycle_6", cycle_graph(6), true});
  graphs.push_back({"bipartite_3_3", complete_bipartite(3, 3), true});
  graphs.push_back({"petersen", petersen_graph(), true});
  const ClosureResult closure =
      enumerate_quotient(2, GeneratorSet::elementary_sl3(), cfg.group_cap);
  graphs.push_back(
      {"cayley_sl3_2", cayley_graph(closure.elements, GeneratorSet::elementary_sl3().reduce(2)),
       false});

  for (const auto& [name, graph, exact] : graphs) {
    const double h = exact ? cheeger_exact(graph) : cheeger_spectral(graph).first;
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < cfg.trials; ++t) {
      if (!coarea_check(graph, random_half_supported(graph, rng), h).holds) ++failures;
    }
    ordered_json rec;
    rec["graph"] = name;
    rec["h"] = h;
    rec["h_exact"] = exact;
    rec["trials"] = cfg.trials;
    rec["failures"] = failures;
    payload.push_back(std::move(rec));
    ok = ok && failures == 0;
  }
  ordered_json root;
  root["graphs"] = std::move(payload);
  return seal(std::move(env), std::move(root), ok);
}

ExperimentResult experiment_concentration(const RunConfig& cfg, const std::string& mode,
                                          const std::string& cloud_spec) {
  ordered_json env = envelope("concentration", cfg);
  Rng rng(cfg.seed);
  const ClosureResult closure =
      enumerate_quotient(2, GeneratorSet::elementary_sl3(), cfg.group_cap);
  const Graph g = cayley_graph(closure.elements, GeneratorSet::elementary_sl3().reduce(2));
  const double h = cheeger_spectral(g).first;  // spectral lower bound (n = 168)
  const ProjectivePlane plane = ProjectivePlane::build(2, cfg.plane_cap);

  ordered_json payload;
  payload["graph"] = "cayley_sl3_2";
  payload["h_spectral_lower"] = h;
  payload["mode"] = mode;
  payload["cloud"] = cloud_spec;
  bool ok = true;

  const bool want_random = cloud_spec == "auto" || cloud_spec == "random" ||
                           cloud_spec == "oversized";
  const bool want_constant = cloud_spec == "auto" || cloud_spec == "constant";
  const bool want_orbit = cloud_spec == "auto" || cloud_spec == "orbit";
  const double scale = cloud_spec == "oversized" ? 3.0 : 1.0;

  // Orbit cloud f(g) = pi(g) xi for a random unit xi; isometries keep it on
  // the sphere, so it works for every mode.
  Eigen::VectorXd xi = gaussian_real_vector(plane.size(), rng);
  xi /= xi.norm();
  Eigen::MatrixXd orbit_pts(plane.size(), g.n);
  for (std::size_t v = 0; v < g.n; ++v) {
    orbit_pts.col(v) = plane.perm_matrix(closure.elements[v]) * xi;
  }

  if (mode == "l1") {
    std::uint64_t failures = 0;
    double worst_ratio = 0.0;
    std::uint64_t ran = 0;
    const std::uint64_t trials = std::max<std::uint64_t>(cfg.trials / 10, 20);
    if (want_random) {
      for (std::uint64_t t = 0; t < trials; ++t, ++ran) {
        Eigen::MatrixXd pts(cfg.dim, g.n);
        for (Eigen::Index c = 0; c < pts.cols(); ++c) {
          pts.col(c) = scale * gaussian_real_vector(cfg.dim, rng);
        }
        BanachPointCloud cloud = BanachPointCloud::make(g, CloudSpace::L1, pts);
        if (cloud.lip > 0 && cloud_spec != "oversized") {
          cloud.points /= cloud.lip;  // rescale to Lipschitz-1
          cloud.lip = 1.0;
        }
        const ConcentrationResult res = concentration_l1(g, cloud, h, false);
        if (!res.holds) ++failures;
        if (res.bound > 0) worst_ratio = std::max(worst_ratio, res.mean_dev / res.bound);
      }
    }
    if (want_orbit) {
      const BanachPointCloud cloud = BanachPointCloud::make(g, CloudSpace::L1, orbit_pts);
      const ConcentrationResult res = concentration_l1(g, cloud, h, false);
      if (!res.holds) ++failures;
      ++ran;
    }
    if (want_constant) {
      const BanachPointCloud constant = BanachPointCloud::make(
          g, CloudSpace::L1, Eigen::MatrixXd::Ones(cfg.dim, g.n));
      const ConcentrationResult zero = concentration_l1(g, constant, h, false);
      payload["constant_cloud_dev"] = zero.mean_dev;
      ok = ok && zero.mean_dev <= 1e-12;
      ++ran;
    }
    payload["trials"] = ran;
    payload["failures"] = failures;
    payload["worst_dev_over_bound"] = worst_ratio;
    ok = ok && failures == 0;
  } else if (mode == "median") {
    std::uint64_t failures = 0;
    const std::uint64_t trials =
        cloud_spec == "constant" ? 0 : std::max<std::uint64_t>(cfg.trials / 10, 20);
    if (cloud_spec == "constant") {
      const Eigen::VectorXd f = Eigen::VectorXd::Constant(g.n, 2.5);
      if (!concentration_median(g, f, 2.5, h).holds) ++failures;
    }
    for (std::uint64_t t = 0; t < trials; ++t) {
      // Distance to a random set: Lipschitz-1, nonnegative, vanishing on it.
      const std::size_t anchor = rng.below(g.n);
      const auto dist = g.distances(anchor);
      Eigen::VectorXd f(g.n);
      for (std::size_t v = 0; v < g.n; ++v) f(v) = static_cast<double>(dist[v]);
      std::vector<double> sorted(f.data(), f.data() + f.size());
      std::nth_element(sorted.begin(), sorted.begin() + g.n / 2, sorted.end());
      const double r0 = sorted[g.n / 2];
      if (!concentration_median(g, f, r0, h).holds) ++failures;
    }
    payload["trials"] = trials;
    payload["failures"] = failures;
    ok = failures == 0;
  } else if (mode == "banach") {
    ModulusConfig mc;
    mc.samples = std::max<std::size_t>(cfg.trials, 500) * 4;
    mc.dim = cfg.dim;
    mc.t_max = 4.0;
    Rng mod_rng(cfg.seed ^ 0x62616e616368ULL);
    const ModulusOfContinuity fwd = estimate_modulus(MapKind::ClassicalTwoOne, mc, mod_rng);
    const ModulusOfContinuity inv = estimate_modulus(MapKind::ClassicalOneTwo, mc, mod_rng);

    Eigen::MatrixXd pts;
    if (cloud_spec == "random" || cloud_spec == "oversized") {
      pts.resize(cfg.dim, g.n);
      for (Eigen::Index c = 0; c < pts.cols(); ++c) {
        Eigen::VectorXd v = gaussian_real_vector(cfg.dim, rng);
        pts.col(c) = scale * v / std::max(1.0, v.norm());
      }
    } else if (cloud_spec == "constant") {
      pts = Eigen::MatrixXd::Zero(cfg.dim, g.n);
    } else {
      pts = orbit_pts;  // auto | orbit
    }
    // An oversized cloud leaves the unit ball here and is rejected.
    const BanachPointCloud cloud = BanachPointCloud::make(g, CloudSpace::L2, pts);
    const BanachConcentrationReport rep = concentration_banach(g, cloud, fwd, inv, h);
    payload["conclusive"] = rep.conclusive;
    payload["r"] = rep.r;
    payload["mean_dev"] = rep.mean_dev;
    payload["lip"] = rep.lip;
    payload["holds"] = rep.holds;
    ok = !rep.conclusive || rep.holds;

    // The proof's own route: push the cloud through the embedding and check
    // the l_1 statement directly.
    Eigen::MatrixXd pushed(pts.rows(), g.n);
    for (std::size_t v = 0; v < g.n; ++v) {
      pushed.col(v) = classical_mazur_real(pts.col(v), 2.0, 1.0);
    }
    const BanachPointCloud l1cloud = BanachPointCloud::make(g, CloudSpace::L1, pushed);
    const ConcentrationResult via_l1 = concentration_l1(g, l1cloud, h, false);
    payload["pushforward_holds"] = via_l1.holds;
    payload["pushforward_dev"] = via_l1.mean_dev;
    payload["pushforward_bound"] = via_l1.bound;
    ok = ok && via_l1.holds;

    if (cloud_spec == "auto") {
      const BanachPointCloud constant = BanachPointCloud::make(
          g, CloudSpace::L2, Eigen::MatrixXd::Zero(plane.size(), g.n));
      const BanachConcentrationReport zero = concentration_banach(g, constant, fwd, inv, h);
      payload["constant_cloud_dev"] = zero.mean_dev;
      ok = ok && (!zero.conclusive || zero.mean_dev <= 1e-12);
    }
  } else {
    payload["error"] = "unknown mode: " + mode;
    ok = false;
  }
  return seal(std::move(env), std::move(payload), ok);
}

ExperimentResult experiment_invariant(const RunConfig& cfg, const std::string& rep_kind) {
  ordered_json env = envelope("invariant", cfg);
  Rng rng(cfg.seed);
  const std::uint32_t l = cfg.primes.empty() ? 2 : cfg.primes.front();
  const ProjectivePlane plane = ProjectivePlane::build(l, cfg.plane_cap);
  const GeneratorSet gens = GeneratorSet::elementary_sl3();

  std::vector<Eigen::MatrixXd> rep_gens;
  if (rep_kind == "pair") {
    rep_gens = pair_rep(plane, gens);
  } else {
    rep_gens = permutation_rep(plane, gens);
  }
  const KazhdanReport kaz = kazhdan_constant(rep_gens);

  // Orbit means need the whole matrix image in memory; above ~256 MB fall
  // back to projecting onto the invariant eigenbasis instead.
  const Eigen::Index dim = rep_gens.front().rows();
  const double image_bytes = static_cast<double>(sl3_order(l)) * dim * dim * 8.0;
  const bool via_orbit = image_bytes <= 256.0 * 1024 * 1024;

  double max_invariance_defect = 0.0;
  double worst_distance_over_bound = 0.0;
  std::uint64_t bound_failures = 0;
  const std::uint64_t trials = std::max<std::uint64_t>(cfg.trials / 10, 20);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const Eigen::VectorXd xi = gaussian_real_vector(dim, rng);
    InvariantVectorResult res;
    if (via_orbit) {
      res = invariant_vector(rep_gens, xi, cfg.group_cap);
    } else {
      res.eta = kaz.invariant_basis * (kaz.invariant_basis.transpose() * xi);
      res.distance = (xi - res.eta).norm();
      for (const auto& g : rep_gens) {
        res.invariance_defect =
            std::max(res.invariance_defect, (g * res.eta - res.eta).norm());
        res.generator_defect = std::max(res.generator_defect, (g * xi - xi).norm());
      }
      res.bound = kaz.r_eff * res.generator_defect;
      res.bound_holds = res.distance <= res.bound * (1.0 + 1e-9) + 1e-12;
    }
    max_invariance_defect = std::max(max_invariance_defect, res.invariance_defect);
    if (!res.bound_holds) ++bound_failures;
    if (res.bound > 0) {
      worst_distance_over_bound =
          std::max(worst_distance_over_bound, res.distance / res.bound);
    }
  }

  ordered_json payload;
  payload["rep"] = rep_kind;
  payload["l"] = l;
  payload["eta_via"] = via_orbit ? "orbit_mean" : "invariant_basis_projection";
  payload["dim"] = kaz.dim;
  payload["kappa"] = kaz.kappa;
  payload["r_eff"] = real_json(kaz.r_eff);
  payload["invariant_dim"] = kaz.invariant_dim;
  payload["trials"] = trials;
  payload["max_invariance_defect"] = max_invariance_defect;
  payload["bound_failures"] = bound_failures;
  payload["worst_distance_over_bound"] = worst_distance_over_bound;

  const Eigen::Index expected_dim = rep_kind == "pair" ? 2 : 1;
  const bool ok = max_invariance_defect <= 1e-9 && bound_failures == 0 &&
                  kaz.invariant_dim == expected_dim && kaz.kappa > 0.0;
  return seal(std::move(env), std::move(payload), ok);
}

TensorDecomposition builtin_candidate(const std::string& name, const RunConfig& cfg) {
  std::size_t d = 0;
  for (const std::uint32_t l : cfg.primes) d += plane_point_count(l);
  TensorDecomposition t;
  if (name == "exact") {
    t = exact_diagonal(d);
  } else if (name == "rank1") {
    t = rank_one_identity(d);
  } else if (name.rfind("truncated:", 0) == 0) {
    t = truncated_diagonal(d, std::stoul(name.substr(10)));
  } else if (name.rfind("perturbed:", 0) == 0) {
    Rng rng(cfg.seed ^ 0x70657274ULL);
    t = perturbed_diagonal(d, std::stod(name.substr(10)), 5, rng);
  } else {
    throw std::invalid_argument("unknown builtin candidate: " + name);
  }
  t.p = cfg.p;
  t.primes = cfg.primes;
  return t;
}

ExperimentResult experiment_pipeline(const TensorDecomposition& t, const std::string& name,
                                     const RunConfig& cfg) {
  ordered_json env = envelope("pipeline", cfg);

  ModulusConfig mc;
  mc.samples = std::max<std::size_t>(cfg.trials, 500) * 2;
  Eigen::Index max_n = 2;
  for (const std::uint32_t l : t.primes) {
    max_n = std::max(max_n, static_cast<Eigen::Index>(plane_point_count(l)));
  }
  mc.dim = max_n;
  Rng mod_rng(cfg.seed ^ 0x6d6f64756c7573ULL);
  const ModulusOfContinuity fwd = estimate_modulus(MapKind::NcMazur, mc, mod_rng);

  PipelineConfig pc;
  pc.plane_cap = cfg.plane_cap;
  const PipelineReport rep = run_pipeline(t, fwd, pc);

  ordered_json payload;
  payload["candidate"] = name;
  payload["p"] = p_json(rep.p);
  payload["rank"] = rep.rank;
  payload["prod_defect"] = rep.prod;
  payload["projective_bound"] = rep.projective_bound;

  std::ostringstream csv;
  csv << "l,r,eps,delta0,delta1,lambda,mu,bound\n";
  bool ok = true;
  ordered_json primes = ordered_json::array();
  for (const PrimeRecord& r : rep.per_prime) {
    ordered_json j;
    j["l"] = r.l;
    if (!r.error.empty()) {
      j["error"] = r.error;
      primes.push_back(std::move(j));
      ok = false;
      continue;
    }
    j["n"] = r.n;
    j["slice_mass_total"] = r.slice_mass_total;
    j["mass_lower_bound_ok"] = r.mass_lower_bound_ok;
    j["eps_per_generator"] = r.eps_per_generator;
    j["eps"] = r.eps;
    j["m_selected"] = r.m_selected;
    j["delta_slice"] = r.delta_slice;
    j["pigeonhole_ok"] = r.pigeonhole_ok;
    j["delta0_envelope"] = r.delta0_envelope;
    j["delta0_direct"] = r.delta0_direct;
    j["delta0_theory"] = r.delta0_theory;
    j["delta0"] = r.delta0;
    j["kappa"] = r.kappa;
    j["r_eff"] = real_json(r.r_eff);
    j["invariant_dim"] = r.invariant_dim;
    j["lambda_abs"] = r.lambda_abs;
    j["mu_abs"] = r.mu_abs;
    j["residual"] = r.residual;
    j["kazhdan_bound_ok"] = r.kazhdan_bound_ok;
    j["mu_lhs"] = r.mu_check.lhs;
    j["mu_rhs"] = r.mu_check.rhs;
    j["mu_holds"] = r.mu_check.holds;
    j["sign_norm_defect"] = r.mu_check.sign_norm_defect;
    j["delta1"] = r.delta1;
    j["eps_threshold"] = r.eps_threshold;
    j["lambda_floor_ok"] = r.lambda_floor_ok;
    j["rank_lower_bound"] = r.rank_lower_bound;
    j["vacuous"] = r.vacuous;
    j["actual_rank"] = r.actual_rank;
    j["consistent"] = r.consistent;
    primes.push_back(std::move(j));

    csv << r.l << ',' << r.actual_rank << ',' << r.eps << ',' << r.delta0 << ','
        << r.delta1 << ',' << r.lambda_abs << ',' << r.mu_abs << ','
        << r.rank_lower_bound << '\n';

    ok = ok && r.mass_lower_bound_ok && r.pigeonhole_ok && r.kazhdan_bound_ok &&
         r.mu_check.holds && r.lambda_floor_ok && r.consistent &&
         r.mu_check.sign_norm_defect <= 1e-9;
  }
  payload["per_prime"] = std::move(primes);
  return seal(std::move(env), std::move(payload), ok, csv.str());
}

}  // namespace lplab
