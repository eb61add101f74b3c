#pragma once

#include <Eigen/Core>
#include <Eigen/SVD>
#include <complex>

#include "lplab/rng.hpp"

namespace lplab {

using DenseMatrix = Eigen::MatrixXcd;
using DenseVector = Eigen::VectorXcd;

inline bool all_finite(const DenseMatrix& m) {
  return m.allFinite();
}

inline DenseMatrix to_complex(const Eigen::MatrixXd& m) {
  return m.cast<std::complex<double>>();
}

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const DenseMatrix& m);

/// iid standard complex Gaussian entries.
DenseMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);
DenseVector gaussian_vector(Eigen::Index n, Rng& rng);
Eigen::VectorXd gaussian_real_vector(Eigen::Index n, Rng& rng);

/// Haar-distributed unitary: QR of a Gaussian matrix with phase correction.
DenseMatrix haar_unitary(Eigen::Index n, Rng& rng);

}  // namespace lplab
