#pragma once

#include <Eigen/Core>
#include <optional>

#include "lplab/graph.hpp"

namespace lplab {

struct SpectralReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Eigen::VectorXd eigenvalues;  // adjacency spectrum, descending
  double lambda2 = 0.0;
  double gap = 0.0;             // k - lambda2
  double cheeger_lower = 0.0;   // (k - lambda2) / 2
  double cheeger_upper = 0.0;   // sqrt(2 k (k - lambda2))
  std::optional<double> cheeger_exact;
};

Eigen::MatrixXd adjacency_matrix(const Graph& g);

/// Full adjacency spectrum plus the spectral Cheeger sandwich; the exhaustive
/// constant is filled in when n <= exact_limit.
SpectralReport spectral_report(const Graph& g, std::size_t exact_limit = 24);

/// h(G) = min |boundary(A)| / |A| over nonempty A with |A| <= n/2, by
/// exhaustive subset enumeration. Requires n <= 24.
double cheeger_exact(const Graph& g);

/// Spectral sandwich: ((k-lambda2)/2, sqrt(2k(k-lambda2))).
std::pair<double, double> cheeger_spectral(const Graph& g);

}  // namespace lplab
