#pragma once

#include "lplab/norms.hpp"

namespace lplab {

/// Conjugate index: 1/p + 1/q = 1.
double conjugate_index(double p);

enum class ColumnBoundVariant {
  OperatorNorms,   // sum_m ||x d_m||_q ||y d*_m||_p <= N ||x|| ||y||
  RegularNorms,    // sum_m ||x d_m||_p ||y d*_m||_q <= N ||x||_reg ||y||_reg
  GeometricMean,   // sum_m ||x d_m||_2 ||y d*_m||_2 <= N (||x|| ||x||_reg ||y|| ||y||_reg)^(1/2)
};

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// x is read as an operator l_p^M -> l_p^N and y as l_q^M -> l_q^N (same
/// shape, q conjugate to p). Exact norms require p in {1,2,inf}.
InequalityCheck column_norm_check(const DenseMatrix& x, const DenseMatrix& y,
                                  double p, ColumnBoundVariant variant,
                                  double rel_tol = 1e-9);

struct ColumnSearchReport {
  double p = kInf;
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  std::uint64_t trials = 0;
  double max_ratio = 0.0;    // sup of lhs / (N ||x|| ||y||) over the samples
  bool square = false;       // square shapes: the bound is a theorem
  bool exact_norms = true;   // false outside p in {1,2,inf}: ascent estimates
};

/// Random search for sum_m ||x d_m||_2 ||y d*_m||_2 vs N ||x|| ||y||.
/// For square shapes the ratio can never exceed 1; for rectangular shapes the
/// outcome is recorded, not asserted. Outside p in {1,2,inf} the operator
/// norms are ascent lower bounds, so the ratios are over-estimates and carry
/// no verdict either.
ColumnSearchReport mixed_l2_column_search(double p, std::uint64_t trials,
                                          Eigen::Index rows, Eigen::Index cols,
                                          Rng& rng);

/// ||v||_2 <= (||v||_p ||v||_q)^(1/2), the interpolation step behind the
/// geometric-mean variant.
bool holder_midpoint_holds(const DenseVector& v, double p, double rel_tol = 1e-9);

}  // namespace lplab
