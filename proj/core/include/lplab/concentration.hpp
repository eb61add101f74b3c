#pragma once

#include <optional>

#include "lplab/modulus.hpp"
#include "lplab/spectral.hpp"

namespace lplab {

enum class CloudSpace { L1, L2 };

/// A map f: vertices -> vectors together with its Lipschitz norm in the
/// target metric (max distance across adjacent pairs).
struct BanachPointCloud {
  CloudSpace space = CloudSpace::L2;
  Eigen::MatrixXd points;  // one column per vertex
  double lip = 0.0;

  static BanachPointCloud make(const Graph& g, CloudSpace space,
                               Eigen::MatrixXd points);
};

struct BoundCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Co-area inequality: sum over edges of |g(s)-g(t)| >= h * sum g(s) for a
/// nonnegative g supported on at most half the vertices.
BoundCheck coarea_check(const Graph& g, const Eigen::VectorXd& f, double h);

/// Mean l_1 deviation against 2 (k/h) Lip(f).
struct ConcentrationResult {
  double mean_dev = 0.0;
  double lip = 0.0;
  double bound = 0.0;
  bool holds = false;
  bool exact_h = true;  // false when the spectral lower bound stood in for h
};

ConcentrationResult concentration_l1(const Graph& g, const BanachPointCloud& cloud,
                                     double h, bool exact_h);

/// Mean of a nonnegative scalar function against R0 + (k/2h) Lip(f); at least
/// half the vertices must satisfy f <= R0.
BoundCheck concentration_median(const Graph& g, const Eigen::VectorXd& f, double r0,
                                double h);

/// Concentration for an l_2-ball cloud via the unit-ball embedding into l_1:
/// finds the smallest grid R with R >= 10 k/h and
/// omega_inv(16 (k/h) omega(5/R)) <= 1/9, then checks mean deviation <= R Lip(f).
struct BanachConcentrationReport {
  bool conclusive = false;     // false when the moduli grid cannot certify any R
  double r = 0.0;
  double mean_dev = 0.0;
  double lip = 0.0;
  bool holds = false;
};

BanachConcentrationReport concentration_banach(const Graph& g,
                                               const BanachPointCloud& cloud,
                                               const ModulusOfContinuity& forward,
                                               const ModulusOfContinuity& inverse,
                                               double h);

}  // namespace lplab
