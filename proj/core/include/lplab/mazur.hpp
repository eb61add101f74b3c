#pragma once

#include "lplab/norms.hpp"

namespace lplab {

/// T = u * modulus with modulus = (T^H T)^(1/2) PSD and u isometric on its
/// range (u = W V^H from a full SVD, so u is unitary here).
struct PolarDecomposition {
  DenseMatrix u;
  DenseMatrix modulus;
};

PolarDecomposition polar(const DenseMatrix& t);

/// phi(T) = U |T|^(1/2): the square-root map from trace class to
/// Hilbert-Schmidt. Computed as W S^(1/2) V^H, which is independent of the
/// SVD choice even when singular values repeat.
DenseMatrix nc_mazur(const DenseMatrix& t);

/// Inverse map S = U|S| -> U|S|^2.
DenseMatrix nc_mazur_inverse(const DenseMatrix& s);

/// || phi(U T U^H) - U phi(T) U^H ||_HS. Throws unless U is unitary to 1e-9.
double equivariance_defect(const DenseMatrix& t, const DenseMatrix& u);

/// One sampled instance of the square-root map estimates, for S, T on the
/// unit sphere of the trace class with eps = ||S - T||_1:
///   modulus_diff_s1   = || |S| - |T| ||_1        <= 2 eps^(1/2)
///   sqrt_diff_s2      = || |S|^(1/2) - |T|^(1/2) ||_2  <= 2 eps^(1/4)
///   phi_dist_sq       = || phi(S) - phi(T) ||_2^2 <= 2 eps + 4 eps^(1/2) + 4 eps^(1/4)
/// plus the defect of the identity phi_dist_sq = 2 - 2 Re Tr(phi(T)^H phi(S)).
struct MazurInequalityRecord {
  double eps = 0.0;
  double modulus_diff_s1 = 0.0;
  double sqrt_diff_s2 = 0.0;
  double phi_dist_sq = 0.0;
  double trace_identity_defect = 0.0;
  bool modulus_bound_holds = false;
  bool sqrt_bound_holds = false;
  bool final_bound_holds = false;
};

MazurInequalityRecord mazur_inequality_suite(const DenseMatrix& s,
                                             const DenseMatrix& t,
                                             double sphere_tol = 1e-8);

/// Theoretical dominating curve for the distance bound: (2t+4t^(1/2)+4t^(1/4))^(1/2).
double mazur_theory_curve(double t);

/// Coordinatewise sign(v_i) |v_i|^(from_p/to_q); maps the unit sphere of
/// l_from_p onto the unit sphere of l_to_q.
DenseVector classical_mazur(const DenseVector& v, double from_p, double to_q);
Eigen::VectorXd classical_mazur_real(const Eigen::VectorXd& v, double from_p,
                                     double to_q);

}  // namespace lplab
