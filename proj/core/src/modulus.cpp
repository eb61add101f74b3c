#include "lplab/modulus.hpp"

#include <algorithm>
#include <cmath>

namespace lplab {

std::string map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::NcMazur: return "nc_mazur";
    case MapKind::NcMazurInverse: return "nc_mazur_inverse";
    case MapKind::ClassicalTwoOne: return "classical_2_to_1";
    case MapKind::ClassicalOneTwo: return "classical_1_to_2";
  }
  return "unknown";
}

std::optional<double> ModulusOfContinuity::query(double t) const {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] >= t) return envelope[i];
  }
  return std::nullopt;
}

namespace {

struct PairSample {
  double din = 0.0;
  double dout = 0.0;
};

PairSample sample_nc(MapKind kind, Eigen::Index dim, double scale, Rng& rng) {
  const int s1 = kind == MapKind::NcMazur ? 1 : 2;
  const int s2 = kind == MapKind::NcMazur ? 2 : 1;
  DenseMatrix a = gaussian_matrix(dim, dim, rng);
  a /= schatten_norm(a, s1);
  DenseMatrix b = a + scale * gaussian_matrix(dim, dim, rng);
  const double nb = schatten_norm(b, s1);
  if (nb == 0.0) return {0.0, 0.0};
  b /= nb;
  const DenseMatrix fa = kind == MapKind::NcMazur ? nc_mazur(a) : nc_mazur_inverse(a);
  const DenseMatrix fb = kind == MapKind::NcMazur ? nc_mazur(b) : nc_mazur_inverse(b);
  return {schatten_norm(a - b, s1), schatten_norm(fa - fb, s2)};
}

PairSample sample_classical(MapKind kind, Eigen::Index dim, double scale, Rng& rng) {
  const double p = kind == MapKind::ClassicalTwoOne ? 2.0 : 1.0;
  const double q = kind == MapKind::ClassicalTwoOne ? 1.0 : 2.0;
  auto project_ball = [&](Eigen::VectorXd v, double radius) {
    const double n = vec_norm(v.cast<std::complex<double>>(), p);
    return n > 0 ? Eigen::VectorXd(v * (radius / n)) : v;
  };
  // Mix sphere and interior points: the embedding acts on the whole ball.
  const double r = 0.25 + 0.75 * rng.uniform();
  Eigen::VectorXd a = project_ball(gaussian_real_vector(dim, rng), r);
  Eigen::VectorXd b = a + scale * gaussian_real_vector(dim, rng);
  const double nb = vec_norm(b.cast<std::complex<double>>(), p);
  if (nb > 1.0) b /= nb;
  const Eigen::VectorXd fa = classical_mazur_real(a, p, q);
  const Eigen::VectorXd fb = classical_mazur_real(b, p, q);
  auto dist = [](const Eigen::VectorXd& u, double idx) {
    return vec_norm(u.cast<std::complex<double>>(), idx);
  };
  return {dist(a - b, p), dist(fa - fb, q)};
}

}  // namespace

ModulusOfContinuity estimate_modulus(MapKind kind, const ModulusConfig& cfg, Rng& rng) {
  ModulusOfContinuity mod;
  mod.kind = kind;
  mod.grid.resize(cfg.grid_size);
  mod.envelope.assign(cfg.grid_size, 0.0);
  const double lr = std::log(cfg.t_min), ur = std::log(cfg.t_max);
  for (std::size_t i = 0; i < cfg.grid_size; ++i) {
    mod.grid[i] = std::exp(lr + (ur - lr) * static_cast<double>(i) /
                                    static_cast<double>(cfg.grid_size - 1));
  }

  for (std::size_t s = 0; s < cfg.samples; ++s) {
    // Cycle perturbation scales across the grid so every bin gets coverage.
    const double scale = mod.grid[s % cfg.grid_size];
    const PairSample ps =
        (kind == MapKind::NcMazur || kind == MapKind::NcMazurInverse)
            ? sample_nc(kind, cfg.dim, scale, rng)
            : sample_classical(kind, cfg.dim, scale, rng);
    if (ps.din <= 0.0) continue;
    const auto it = std::lower_bound(mod.grid.begin(), mod.grid.end(), ps.din);
    if (it == mod.grid.end()) continue;
    const auto bin = static_cast<std::size_t>(it - mod.grid.begin());
    mod.envelope[bin] = std::max(mod.envelope[bin], ps.dout);
  }
  for (std::size_t i = 1; i < cfg.grid_size; ++i) {
    mod.envelope[i] = std::max(mod.envelope[i], mod.envelope[i - 1]);
  }
  return mod;
}

}  // namespace lplab
