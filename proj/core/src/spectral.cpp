#include "lplab/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <stdexcept>

namespace lplab {

Eigen::MatrixXd adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
  for (const auto& [u, v] : g.edges) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

double cheeger_exact(const Graph& g) {
  if (g.n > 24) {
    throw std::invalid_argument(
        "cheeger_exact: n > 24, use the spectral bounds instead");
  }
  const auto n = static_cast<std::uint32_t>(g.n);
  std::vector<std::uint32_t> edge_masks;
  edge_masks.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) {
    edge_masks.push_back((1u << u) | (1u << v));
  }
  double best = std::numeric_limits<double>::infinity();
  const std::uint32_t full = n == 32 ? 0xFFFFFFFFu : (1u << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const int size = __builtin_popcount(mask);
    if (size == 0 || 2 * size > static_cast<int>(n)) continue;
    int boundary = 0;
    for (const std::uint32_t em : edge_masks) {
      const std::uint32_t hit = em & mask;
      if (hit != 0 && hit != em) ++boundary;
    }
    best = std::min(best, static_cast<double>(boundary) / size);
  }
  return best;
}

std::pair<double, double> cheeger_spectral(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("cheeger_spectral: eigensolver failed");
  }
  const Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  const double k = static_cast<double>(g.k);
  const double lambda2 = ev(g.n - 2);
  const double gap = k - lambda2;
  return {gap / 2.0, std::sqrt(2.0 * k * gap)};
}

SpectralReport spectral_report(const Graph& g, std::size_t exact_limit) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("spectral_report: eigensolver failed");
  }
  SpectralReport rep;
  rep.n = g.n;
  rep.k = g.k;
  rep.eigenvalues = solver.eigenvalues().reverse();  // descending
  rep.lambda2 = rep.eigenvalues(1);
  rep.gap = static_cast<double>(g.k) - rep.lambda2;
  rep.cheeger_lower = rep.gap / 2.0;
  rep.cheeger_upper = std::sqrt(2.0 * static_cast<double>(g.k) * rep.gap);
  if (g.n <= exact_limit) rep.cheeger_exact = cheeger_exact(g);
  return rep;
}

}  // namespace lplab
