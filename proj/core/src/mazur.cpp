#include "lplab/mazur.hpp"

#include <stdexcept>

namespace lplab {

namespace {

struct Svd {
  DenseMatrix w;
  Eigen::VectorXd sigma;
  DenseMatrix v;
};

Svd full_svd(const DenseMatrix& t) {
  if (t.rows() != t.cols()) throw std::invalid_argument("mazur: matrix must be square");
  Eigen::JacobiSVD<DenseMatrix> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

PolarDecomposition polar(const DenseMatrix& t) {
  const Svd s = full_svd(t);
  PolarDecomposition p;
  p.u = s.w * s.v.adjoint();
  p.modulus = s.v * s.sigma.asDiagonal() * s.v.adjoint();
  return p;
}

DenseMatrix nc_mazur(const DenseMatrix& t) {
  const Svd s = full_svd(t);
  return s.w * s.sigma.cwiseSqrt().asDiagonal() * s.v.adjoint();
}

DenseMatrix nc_mazur_inverse(const DenseMatrix& s) {
  const Svd d = full_svd(s);
  return d.w * d.sigma.cwiseAbs2().asDiagonal() * d.v.adjoint();
}

double equivariance_defect(const DenseMatrix& t, const DenseMatrix& u) {
  if (u.rows() != u.cols() || u.rows() != t.rows()) {
    throw std::invalid_argument("equivariance_defect: shape mismatch");
  }
  const double unitary_defect =
      (u.adjoint() * u - DenseMatrix::Identity(u.rows(), u.cols())).norm();
  if (unitary_defect > 1e-9) {
    throw std::invalid_argument("equivariance_defect: U is not unitary");
  }
  const DenseMatrix lhs = nc_mazur(u * t * u.adjoint());
  const DenseMatrix rhs = u * nc_mazur(t) * u.adjoint();
  return (lhs - rhs).norm();
}

MazurInequalityRecord mazur_inequality_suite(const DenseMatrix& s,
                                             const DenseMatrix& t,
                                             double sphere_tol) {
  if (std::abs(schatten_norm(s, 1) - 1.0) > sphere_tol ||
      std::abs(schatten_norm(t, 1) - 1.0) > sphere_tol) {
    throw std::invalid_argument("mazur_inequality_suite: inputs must be on the S_1 sphere");
  }
  MazurInequalityRecord rec;
  rec.eps = schatten_norm(s - t, 1);

  const DenseMatrix mod_s = polar(s).modulus;
  const DenseMatrix mod_t = polar(t).modulus;
  rec.modulus_diff_s1 = schatten_norm(mod_s - mod_t, 1);

  const DenseMatrix phi_s = nc_mazur(s);
  const DenseMatrix phi_t = nc_mazur(t);
  // |S|^(1/2) = |phi(S)|, so reuse the polar modulus of the images.
  rec.sqrt_diff_s2 = schatten_norm(polar(phi_s).modulus - polar(phi_t).modulus, 2);
  rec.phi_dist_sq = std::pow((phi_s - phi_t).norm(), 2);
  const double cross = (phi_t.adjoint() * phi_s).trace().real();
  rec.trace_identity_defect = std::abs(rec.phi_dist_sq - (2.0 - 2.0 * cross));

  const double e = rec.eps;
  const double slack = 1e-9;
  rec.modulus_bound_holds = rec.modulus_diff_s1 <= 2.0 * std::sqrt(e) + slack;
  rec.sqrt_bound_holds = rec.sqrt_diff_s2 <= 2.0 * std::pow(e, 0.25) + slack;
  rec.final_bound_holds =
      rec.phi_dist_sq <= 2.0 * e + 4.0 * std::sqrt(e) + 4.0 * std::pow(e, 0.25) + slack;
  return rec;
}

double mazur_theory_curve(double t) {
  return std::sqrt(2.0 * t + 4.0 * std::sqrt(t) + 4.0 * std::pow(t, 0.25));
}

DenseVector classical_mazur(const DenseVector& v, double from_p, double to_q) {
  if (from_p < 1.0 || to_q < 1.0 || from_p == kInf || to_q == kInf) {
    throw std::invalid_argument("classical_mazur: indices must lie in [1,inf)");
  }
  const double expo = from_p / to_q;
  DenseVector out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    out(i) = a > 0 ? (v(i) / a) * std::pow(a, expo) : 0.0;
  }
  return out;
}

Eigen::VectorXd classical_mazur_real(const Eigen::VectorXd& v, double from_p,
                                     double to_q) {
  const double expo = from_p / to_q;
  Eigen::VectorXd out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    out(i) = a > 0 ? (v(i) > 0 ? 1.0 : -1.0) * std::pow(a, expo) : 0.0;
  }
  return out;
}

}  // namespace lplab
