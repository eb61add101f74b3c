#include "lplab/representation.hpp"

#include <Eigen/Eigenvalues>

#include "lplab/norms.hpp"
#include <cmath>
#include <deque>
#include <stdexcept>
#include <unordered_map>

namespace lplab {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<Eigen::MatrixXd> permutation_rep(const ProjectivePlane& plane,
                                             const GeneratorSet& gens) {
  std::vector<Eigen::MatrixXd> out;
  for (const Mat3& g : gens.reduce(plane.l())) out.push_back(plane.perm_matrix(g));
  return out;
}

std::vector<Eigen::MatrixXd> pair_rep(const ProjectivePlane& plane,
                                      const GeneratorSet& gens) {
  std::vector<Eigen::MatrixXd> out;
  for (const Mat3& g : gens.reduce(plane.l())) {
    const Eigen::MatrixXd p = plane.perm_matrix(g);
    out.push_back(kron(p, p));
  }
  return out;
}

KazhdanReport kazhdan_constant(const std::vector<Eigen::MatrixXd>& gens) {
  if (gens.empty()) throw std::invalid_argument("kazhdan_constant: no generators");
  const Eigen::Index n = gens.front().rows();
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(n, n);
  for (const auto& p : gens) {
    if (p.rows() != n || p.cols() != n) {
      throw std::invalid_argument("kazhdan_constant: inconsistent shapes");
    }
    delta += 2.0 * Eigen::MatrixXd::Identity(n, n) - p - p.transpose();
  }
  delta /= static_cast<double>(gens.size());

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(delta);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("kazhdan_constant: eigensolver failed");
  }
  const Eigen::VectorXd ev = solver.eigenvalues();  // ascending, >= 0 up to fp

  KazhdanReport rep;
  rep.dim = n;
  const double tol = 1e-9;
  Eigen::Index inv = 0;
  while (inv < n && ev(inv) < tol) ++inv;
  rep.invariant_dim = inv;
  rep.invariant_basis = solver.eigenvectors().leftCols(inv);
  if (inv == n) {
    rep.trivial = true;
    rep.kappa = 0.0;
    rep.r_eff = std::numeric_limits<double>::infinity();
  } else {
    rep.kappa = std::sqrt(ev(inv));
    rep.r_eff = 1.0 / rep.kappa;
  }
  return rep;
}

namespace {

std::uint64_t matrix_key(const Eigen::MatrixXd& m) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      const auto q = static_cast<std::int64_t>(std::llround(m(i, j) * 1e6));
      auto u = static_cast<std::uint64_t>(q);
      for (int b = 0; b < 8; ++b) {
        h ^= (u >> (8 * b)) & 0xFF;
        h *= 1099511628211ULL;
      }
    }
  }
  return h;
}

}  // namespace

ImageClosure enumerate_image(const std::vector<Eigen::MatrixXd>& gens,
                             std::size_t cap) {
  if (gens.empty()) throw std::invalid_argument("enumerate_image: no generators");
  const Eigen::Index n = gens.front().rows();
  ImageClosure out;
  std::unordered_map<std::uint64_t, std::size_t> seen;

  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  seen[matrix_key(id)] = 0;
  out.elements.push_back(id);
  std::deque<std::size_t> frontier{0};

  while (!frontier.empty()) {
    const Eigen::MatrixXd cur = out.elements[frontier.front()];
    frontier.pop_front();
    for (const auto& g : gens) {
      Eigen::MatrixXd next = cur * g;
      const std::uint64_t key = matrix_key(next);
      const auto it = seen.find(key);
      if (it != seen.end()) {
        if ((out.elements[it->second] - next).cwiseAbs().maxCoeff() > 1e-6) {
          throw std::runtime_error("enumerate_image: key collision between distinct matrices");
        }
        continue;
      }
      if (out.elements.size() >= cap) {
        out.partial_count = out.elements.size();
        return out;
      }
      seen[key] = out.elements.size();
      frontier.push_back(out.elements.size());
      out.elements.push_back(std::move(next));
    }
  }
  out.complete = true;
  out.partial_count = out.elements.size();
  return out;
}

InvariantVectorResult invariant_vector(const std::vector<Eigen::MatrixXd>& gens,
                                       const Eigen::VectorXd& xi, std::size_t cap) {
  const ImageClosure image = enumerate_image(gens, cap);
  if (!image.complete) {
    throw std::runtime_error("invariant_vector: image not closed within cap");
  }
  InvariantVectorResult res;
  res.eta = Eigen::VectorXd::Zero(xi.size());
  for (const auto& p : image.elements) {
    res.eta += p * xi;
    // Operator 2-norms of the image elements enter the Banach-space bound.
    const double n2 = singular_values(p.cast<std::complex<double>>())(0);
    res.max_norm_sq = std::max(res.max_norm_sq, n2 * n2);
  }
  res.eta /= static_cast<double>(image.elements.size());

  for (const auto& p : image.elements) {
    res.invariance_defect = std::max(res.invariance_defect, (p * res.eta - res.eta).norm());
  }
  for (const auto& g : gens) {
    res.generator_defect = std::max(res.generator_defect, (g * xi - xi).norm());
  }
  res.distance = (xi - res.eta).norm();
  const KazhdanReport kaz = kazhdan_constant(gens);
  res.bound = kaz.r_eff * res.max_norm_sq * res.generator_defect;
  res.bound_holds = res.distance <= res.bound * (1.0 + 1e-9) + 1e-12;
  return res;
}

}  // namespace lplab
