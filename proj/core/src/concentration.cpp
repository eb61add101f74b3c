#include "lplab/concentration.hpp"

#include <stdexcept>

namespace lplab {

namespace {

double point_dist(const Eigen::VectorXd& a, const Eigen::VectorXd& b, CloudSpace s) {
  return s == CloudSpace::L1 ? (a - b).cwiseAbs().sum() : (a - b).norm();
}

}  // namespace

BanachPointCloud BanachPointCloud::make(const Graph& g, CloudSpace space,
                                        Eigen::MatrixXd points) {
  if (static_cast<std::size_t>(points.cols()) != g.n) {
    throw std::invalid_argument("BanachPointCloud: one column per vertex required");
  }
  BanachPointCloud c;
  c.space = space;
  c.points = std::move(points);
  for (const auto& [u, v] : g.edges) {
    c.lip = std::max(c.lip, point_dist(c.points.col(u), c.points.col(v), space));
  }
  return c;
}

BoundCheck coarea_check(const Graph& g, const Eigen::VectorXd& f, double h) {
  if (static_cast<std::size_t>(f.size()) != g.n) {
    throw std::invalid_argument("coarea_check: size mismatch");
  }
  std::size_t support = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (f(i) < 0) throw std::invalid_argument("coarea_check: f must be nonnegative");
    if (f(i) > 0) ++support;
  }
  if (2 * support > g.n) {
    throw std::invalid_argument("coarea_check: support exceeds half the vertices");
  }
  BoundCheck out;
  for (const auto& [u, v] : g.edges) out.lhs += std::abs(f(u) - f(v));
  out.rhs = h * f.sum();
  out.holds = out.lhs >= out.rhs - 1e-9;
  return out;
}

ConcentrationResult concentration_l1(const Graph& g, const BanachPointCloud& cloud,
                                     double h, bool exact_h) {
  if (cloud.space != CloudSpace::L1) {
    throw std::invalid_argument("concentration_l1: cloud must live in l_1");
  }
  if (cloud.points.cols() == 0) throw std::invalid_argument("concentration_l1: empty cloud");
  ConcentrationResult res;
  res.exact_h = exact_h;
  res.lip = cloud.lip;
  const Eigen::VectorXd mean = cloud.points.rowwise().mean();
  for (Eigen::Index c = 0; c < cloud.points.cols(); ++c) {
    res.mean_dev += (cloud.points.col(c) - mean).cwiseAbs().sum();
  }
  res.mean_dev /= static_cast<double>(g.n);
  res.bound = 2.0 * static_cast<double>(g.k) / h * cloud.lip;
  res.holds = res.mean_dev <= res.bound + 1e-9;
  return res;
}

BoundCheck concentration_median(const Graph& g, const Eigen::VectorXd& f, double r0,
                                double h) {
  std::size_t below = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (f(i) < 0) throw std::invalid_argument("concentration_median: f must be nonnegative");
    if (f(i) <= r0) ++below;
  }
  if (2 * below < g.n) {
    throw std::invalid_argument("concentration_median: fewer than half the vertices have f <= R0");
  }
  double lip = 0.0;
  for (const auto& [u, v] : g.edges) lip = std::max(lip, std::abs(f(u) - f(v)));
  BoundCheck out;
  out.lhs = f.mean();
  out.rhs = r0 + static_cast<double>(g.k) / (2.0 * h) * lip;
  out.holds = out.lhs <= out.rhs + 1e-9;
  return out;
}

BanachConcentrationReport concentration_banach(const Graph& g,
                                               const BanachPointCloud& cloud,
                                               const ModulusOfContinuity& forward,
                                               const ModulusOfContinuity& inverse,
                                               double h) {
  if (cloud.space != CloudSpace::L2) {
    throw std::invalid_argument("concentration_banach: cloud must live in l_2");
  }
  for (Eigen::Index c = 0; c < cloud.points.cols(); ++c) {
    if (cloud.points.col(c).norm() > 1.0 + 1e-9) {
      throw std::invalid_argument("concentration_banach: cloud leaves the unit ball");
    }
  }
  BanachConcentrationReport rep;
  rep.lip = cloud.lip;

  const double kh = static_cast<double>(g.k) / h;
  // Grid search for the smallest certified R.
  for (double r = 10.0 * kh; r <= 1e9; r *= 1.1) {
    const auto wf = forward.query(5.0 / r);
    if (!wf) continue;
    const auto wi = inverse.query(16.0 * kh * (*wf));
    if (!wi) continue;
    if (*wi <= 1.0 / 9.0) {
      rep.conclusive = true;
      rep.r = r;
      break;
    }
  }
  if (!rep.conclusive) return rep;

  const Eigen::VectorXd mean = cloud.points.rowwise().mean();
  double dev = 0.0;
  for (Eigen::Index c = 0; c < cloud.points.cols(); ++c) {
    dev += (cloud.points.col(c) - mean).norm();
  }
  rep.mean_dev = dev / static_cast<double>(g.n);
  rep.holds = rep.mean_dev <= rep.r * rep.lip + 1e-9;
  return rep;
}

}  // namespace lplab
