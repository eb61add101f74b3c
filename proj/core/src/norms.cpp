#include "lplab/norms.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>

namespace lplab {

Eigen::VectorXd singular_values(const DenseMatrix& m) {
  // Jacobi is the accuracy workhorse at small sizes; divide-and-conquer keeps
  // the policy ceiling of dimension 512 tractable.
  if (std::min(m.rows(), m.cols()) <= 32) {
    Eigen::JacobiSVD<DenseMatrix> svd(m);
    return svd.singularValues();
  }
  Eigen::BDCSVD<DenseMatrix> svd(m);
  return svd.singularValues();
}

DenseMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  DenseMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_gaussian();
  }
  return m;
}

DenseVector gaussian_vector(Eigen::Index n, Rng& rng) {
  DenseVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.complex_gaussian();
  return v;
}

Eigen::VectorXd gaussian_real_vector(Eigen::Index n, Rng& rng) {
  Eigen::VectorXd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = rng.gaussian();
  return v;
}

DenseMatrix haar_unitary(Eigen::Index n, Rng& rng) {
  const DenseMatrix g = gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<DenseMatrix> qr(g);
  DenseMatrix q = qr.householderQ();
  const DenseMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar, not QR-convention dependent.
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double a = std::abs(d);
    q.col(j) *= (a > 0) ? d / a : 1.0;
  }
  return q;
}

double vec_norm(const DenseVector& v, double p) {
  if (p < 1.0) throw std::invalid_argument("vec_norm: p < 1");
  if (p == kInf) return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
  if (p == 1.0) return v.cwiseAbs().sum();
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

namespace {

double max_abs_col_sum(const DenseMatrix& x) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < x.cols(); ++j) {
    best = std::max(best, x.col(j).cwiseAbs().sum());
  }
  return best;
}

double largest_singular_value(const DenseMatrix& x) {
  return singular_values(x)(0);
}

// Wirtinger ascent on f(v) = ||Av||_p over the unit l_p sphere. Every iterate
// is feasible, so the best value seen is a certified lower bound.
double ascent_lower_bound(const DenseMatrix& a, double p, Rng& rng) {
  const Eigen::Index m = a.cols();
  double best = 0.0;
  const double q = p / (p - 1.0);
  for (int restart = 0; restart < 8; ++restart) {
    DenseVector v = restart == 0 ? DenseVector::Ones(m) : gaussian_vector(m, rng);
    v /= vec_norm(v, p);
    for (int it = 0; it < 200; ++it) {
      const DenseVector y = a * v;
      const double fy = vec_norm(y, p);
      best = std::max(best, fy);
      if (fy == 0.0) break;
      // grad of ||Av||_p^p: A^H w with w_i = |y_i|^(p-2) y_i
      DenseVector w(y.size());
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        const double ay = std::abs(y(i));
        w(i) = ay > 0 ? std::pow(ay, p - 2.0) * y(i) : 0.0;
      }
      DenseVector g = a.adjoint() * w;
      // dual map back to the l_p sphere
      DenseVector vn(m);
      for (Eigen::Index i = 0; i < m; ++i) {
        const double ag = std::abs(g(i));
        vn(i) = ag > 0 ? std::pow(ag, q - 1.0) * (g(i) / ag) : 0.0;
      }
      const double nn = vec_norm(vn, p);
      if (nn == 0.0) break;
      vn /= nn;
      if ((vn - v).norm() < 1e-12) {
        v = vn;
        best = std::max(best, vec_norm(a * v, p));
        break;
      }
      v = vn;
    }
  }
  return best;
}

double opnorm_value(const DenseMatrix& x, double p) {
  if (x.size() == 0) throw std::invalid_argument("opnorm: empty matrix");
  if (p < 1.0) throw std::invalid_argument("opnorm: p < 1");
  if (p == 1.0) return max_abs_col_sum(x);
  if (p == kInf) return max_abs_col_sum(x.transpose());
  if (p == 2.0) return largest_singular_value(x);
  Rng rng(0x9e3779b97f4a7c15ULL);
  return ascent_lower_bound(x, p, rng);
}

}  // namespace

NormReport opnorm(const DenseMatrix& x, double p) {
  NormReport r;
  r.p = p;
  r.exact = (p == 1.0 || p == 2.0 || p == kInf);
  r.value = opnorm_value(x, p);
  r.regular_value = opnorm_value(x.cwiseAbs().cast<std::complex<double>>(), p);
  return r;
}

double regular_norm(const DenseMatrix& x, double p) {
  return opnorm_value(x.cwiseAbs().cast<std::complex<double>>(), p);
}

double schatten_norm(const DenseMatrix& x, int order) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("schatten_norm: order must be 1 or 2");
  }
  const Eigen::VectorXd sv = singular_values(x);
  return order == 1 ? sv.sum() : sv.norm();
}

}  // namespace lplab
