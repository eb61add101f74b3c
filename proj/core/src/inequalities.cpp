#include "lplab/inequalities.hpp"

#include <stdexcept>

namespace lplab {

double conjugate_index(double p) {
  if (p < 1.0) throw std::invalid_argument("conjugate_index: p < 1");
  if (p == 1.0) return kInf;
  if (p == kInf) return 1.0;
  return p / (p - 1.0);
}

InequalityCheck column_norm_check(const DenseMatrix& x, const DenseMatrix& y,
                                  double p, ColumnBoundVariant variant,
                                  double rel_tol) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("column_norm_check: shape mismatch");
  }
  if (p != 1.0 && p != 2.0 && p != kInf) {
    throw std::invalid_argument("column_norm_check: exact norms need p in {1,2,inf}");
  }
  const double q = conjugate_index(p);
  const auto n = static_cast<double>(x.rows());

  InequalityCheck out;
  for (Eigen::Index m = 0; m < x.cols(); ++m) {
    switch (variant) {
      case ColumnBoundVariant::OperatorNorms:
        out.lhs += vec_norm(x.col(m), q) * vec_norm(y.col(m), p);
        break;
      case ColumnBoundVariant::RegularNorms:
        out.lhs += vec_norm(x.col(m), p) * vec_norm(y.col(m), q);
        break;
      case ColumnBoundVariant::GeometricMean:
        out.lhs += x.col(m).norm() * y.col(m).norm();
        break;
    }
  }

  const NormReport nx = opnorm(x, p);
  const NormReport ny = opnorm(y, q);
  switch (variant) {
    case ColumnBoundVariant::OperatorNorms:
      out.rhs = n * nx.value * ny.value;
      break;
    case ColumnBoundVariant::RegularNorms:
      out.rhs = n * nx.regular_value * ny.regular_value;
      break;
    case ColumnBoundVariant::GeometricMean:
      out.rhs = n * std::sqrt(nx.value * nx.regular_value * ny.value * ny.regular_value);
      break;
  }
  out.holds = out.lhs <= out.rhs * (1.0 + rel_tol) + 1e-300;
  return out;
}

ColumnSearchReport mixed_l2_column_search(double p, std::uint64_t trials,
                                          Eigen::Index rows, Eigen::Index cols,
                                          Rng& rng) {
  const double q = conjugate_index(p);
  ColumnSearchReport rep;
  rep.p = p;
  rep.rows = rows;
  rep.cols = cols;
  rep.trials = trials;
  rep.square = (rows == cols);
  rep.exact_norms = (p == 1.0 || p == 2.0 || p == kInf);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const DenseMatrix x = gaussian_matrix(rows, cols, rng);
    const DenseMatrix y = gaussian_matrix(rows, cols, rng);
    double lhs = 0.0;
    for (Eigen::Index m = 0; m < cols; ++m) {
      lhs += x.col(m).norm() * y.col(m).norm();
    }
    const double rhs =
        static_cast<double>(rows) * opnorm(x, p).value * opnorm(y, q).value;
    if (rhs > 0) rep.max_ratio = std::max(rep.max_ratio, lhs / rhs);
  }
  return rep;
}

bool holder_midpoint_holds(const DenseVector& v, double p, double rel_tol) {
  const double q = conjugate_index(p);
  const double lhs = v.norm();
  const double rhs = std::sqrt(vec_norm(v, p) * vec_norm(v, q));
  return lhs <= rhs * (1.0 + rel_tol);
}

}  // namespace lplab
