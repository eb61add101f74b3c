#pragma once

#include "lplab/dense.hpp"

namespace lplab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Entrywise l_p norm of a vector, p in [1,inf]; p = inf is the max modulus.
double vec_norm(const DenseVector& v, double p);

struct NormReport {
  double p = 2.0;
  double value = 0.0;          // operator norm on l_p
  bool exact = true;           // false for p outside {1,2,inf} (ascent bound)
  double regular_value = 0.0;  // operator norm of the entrywise modulus
};

/// Induced operator norm l_p -> l_p. Exact for p in {1,2,inf}; otherwise a
/// lower-bound estimate by gradient ascent on the unit l_p sphere, flagged
/// exact=false.
NormReport opnorm(const DenseMatrix& x, double p);

/// Operator norm of the entrywise modulus matrix.
double regular_norm(const DenseMatrix& x, double p);

/// Schatten norm of order 1 (trace class) or 2 (Hilbert-Schmidt).
double schatten_norm(const DenseMatrix& x, int order);

}  // namespace lplab
