#pragma once

#include <Eigen/Core>
#include <vector>

#include "lplab/group.hpp"
#include "lplab/plane.hpp"

namespace lplab {

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Permutation matrices of the reduced generators acting on l_p(Lambda_l).
std::vector<Eigen::MatrixXd> permutation_rep(const ProjectivePlane& plane,
                                             const GeneratorSet& gens);

/// g -> P_g (x) P_g on the pair space, dimension |Lambda_l|^2.
std::vector<Eigen::MatrixXd> pair_rep(const ProjectivePlane& plane,
                                      const GeneratorSet& gens);

struct KazhdanReport {
  double kappa = 0.0;            // sqrt of smallest averaging eigenvalue off invariants
  double r_eff = 0.0;            // 1/kappa; inf when kappa == 0
  Eigen::Index dim = 0;
  Eigen::Index invariant_dim = 0;
  bool trivial = false;          // every vector invariant (kappa flagged 0)
  Eigen::MatrixXd invariant_basis;  // orthonormal columns spanning invariants
};

/// Spectral gap of Delta = (1/|S|) sum_g (2I - pi(g) - pi(g)^T) for orthogonal
/// generator matrices. kappa^2 is the smallest eigenvalue on the complement of
/// the invariant subspace, and R_eff = 1/kappa makes
/// ||xi - P_inv xi|| <= R_eff max_g ||pi(g) xi - xi|| for this representation.
KazhdanReport kazhdan_constant(const std::vector<Eigen::MatrixXd>& gens);

struct ImageClosure {
  std::vector<Eigen::MatrixXd> elements;
  bool complete = false;
  std::size_t partial_count = 0;
};

/// BFS closure of the generator matrices under multiplication; finite images
/// only (entries quantized to 1e-6 for identification).
ImageClosure enumerate_image(const std::vector<Eigen::MatrixXd>& gens,
                             std::size_t cap = 1'000'000);

struct InvariantVectorResult {
  Eigen::VectorXd eta;            // orbit mean = orthogonal projection onto invariants
  double invariance_defect = 0.0; // max_g ||pi(g) eta - eta|| over the whole image
  double distance = 0.0;          // ||xi - eta||
  double generator_defect = 0.0;  // max over generators of ||pi(h) xi - xi||
  double max_norm_sq = 1.0;       // max_g ||pi(g)||^2 over the image
  double bound = 0.0;             // R_eff * max_norm_sq * generator_defect
  bool bound_holds = false;
};

InvariantVectorResult invariant_vector(const std::vector<Eigen::MatrixXd>& gens,
                                       const Eigen::VectorXd& xi,
                                       std::size_t cap = 1'000'000);

}  // namespace lplab
