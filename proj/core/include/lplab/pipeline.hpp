#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lplab/modulus.hpp"
#include "lplab/plane.hpp"
#include "lplab/representation.hpp"

namespace lplab {

/// Candidate approximate diagonal T = sum_i a_i (x) b_i on l_p(Lambda_P),
/// Lambda_P the disjoint union of the planes for the listed primes. All
/// matrices are square of that total dimension; the rank r is the pair count.
struct TensorDecomposition {
  std::vector<std::pair<DenseMatrix, DenseMatrix>> pairs;
  double p = 2.0;
  std::vector<std::uint32_t> primes;

  std::size_t dim() const;
  std::size_t rank() const { return pairs.size(); }
  /// Offset of the block of prime l inside Lambda_P.
  std::size_t block_offset(std::uint32_t l) const;
};

std::size_t plane_point_count(std::uint32_t l);

/// || sum_i a_i b_i - 1 ||_HS; the pipeline requires <= 1e-8.
double prod_defect(const TensorDecomposition& t);

/// The exact diagonal sum_{s,t} (e_st (x) e_ts)/n: prod = 1 and it commutes
/// with every matrix, so every slice defect vanishes.
TensorDecomposition exact_diagonal(std::size_t n);
/// The rank-one candidate 1 (x) 1.
TensorDecomposition rank_one_identity(std::size_t n);
/// Keep only columns t < keep in the second leg, rescaled so prod stays 1.
TensorDecomposition truncated_diagonal(std::size_t n, std::size_t keep);
/// Exact diagonal plus eta-scaled Gaussian noise pairs and a rank-one
/// correction restoring prod = 1 exactly.
TensorDecomposition perturbed_diagonal(std::size_t n, double eta,
                                       std::size_t noise_pairs, Rng& rng);

/// T_l(m): the |Lambda_l| x |Lambda_l| matrix with entry
/// (s,t) = sum_i b_i(m, off+s) a_i(off+t, m); rank <= r.
DenseMatrix slice(const TensorDecomposition& t, std::uint32_t l, std::size_t m);

struct SliceMass {
  double total = 0.0;             // sum over every column m of ||T_l(m)||_S1
  bool lower_bound_ok = false;    // total >= |Lambda_l| (1 - 1e-8)
  std::vector<double> per_column;
};

SliceMass slice_mass(const TensorDecomposition& t, std::uint32_t l);

/// S_1 norm of T_l(m) minus its (pi (x) pi)-translate Q M Q^T.
double slice_defect(const DenseMatrix& slice_matrix, const Eigen::MatrixXd& q);

struct SliceSelection {
  std::size_t m = 0;
  DenseMatrix normalized;   // S_l = T_l(m)/||T_l(m)||_S1
  double delta_slice = 0.0; // max_g defect(m)/||T_l(m)||_S1 at the argmin
};

/// Pick the column minimizing the worst relative translate defect over the
/// extended generator list (group generators plus the sign isometry).
SliceSelection select_slice(const TensorDecomposition& t, std::uint32_t l,
                            const std::vector<Eigen::MatrixXd>& translates);

struct InvariantProjection {
  std::complex<double> lambda;  // coefficient of I = n^(-1/2) sum d_s (x) d_s
  std::complex<double> mu;      // coefficient of E = n^(-1) sum d_s (x) d_t
  double residual = 0.0;        // distance to span{I, E}
};

/// Orthogonal projection of Y onto span{I, E}; the pair is not orthogonal
/// (<I,E> = n^(-1/2)), so the coefficients come from the 2x2 Gram system.
InvariantProjection invariant_projection(const DenseMatrix& y);

struct MuBoundCheck {
  double lhs = 0.0;             // sqrt(2 - 2/n^2) |mu|
  double rhs = 0.0;             // (2R + 1) delta0
  bool holds = false;
  double sign_norm_defect = 0.0;  // | ||E - vEv||_2 - sqrt(2-2/n^2) |
};

MuBoundCheck mu_bound_check(std::complex<double> mu, double delta0, double r_eff,
                            const ProjectivePlane& plane);

struct RankBound {
  double bound = 0.0;    // (1 - delta1^2/(1-delta1)^2) n, clamped at 0
  bool vacuous = false;  // delta1 >= 1 or bound <= 0: no obstruction claimed
  bool consistent = false;  // r_actual >= bound - 1e-6
};

RankBound rank_bound(double delta1, double lambda_abs, std::size_t n,
                     std::size_t r_actual);

struct PrimeRecord {
  std::uint32_t l = 0;
  std::string error;               // nonempty when a stage failed for this prime
  std::size_t n = 0;
  double slice_mass_total = 0.0;
  bool mass_lower_bound_ok = false;
  std::vector<double> eps_per_generator;  // slice-level defect per g in Sigma+
  double eps = 0.0;                       // max over generators
  std::size_t m_selected = 0;
  double delta_slice = 0.0;
  bool pigeonhole_ok = false;      // delta_slice <= eps |Sigma+|
  double delta0_envelope = 0.0;    // measured omega envelope at eps |Sigma+|
  double delta0_direct = 0.0;      // max_g || phi(S) - translate ||_2, computed
  double delta0_theory = 0.0;      // closed-form curve at eps |Sigma+|
  double delta0 = 0.0;             // max(envelope, direct): the value used
  double kappa = 0.0;
  double r_eff = 0.0;
  Eigen::Index invariant_dim = 0;
  double lambda_abs = 0.0;
  double mu_abs = 0.0;
  double residual = 0.0;
  bool kazhdan_bound_ok = false;   // residual <= R_eff * max_{g in Sigma} defect
  MuBoundCheck mu_check;
  double delta1 = 0.0;             // (3 R_eff + 1) delta0
  double eps_threshold = 0.0;      // largest eps with a non-vacuous bound at this l
  bool lambda_floor_ok = false;    // |lambda| >= 1 - delta1
  double rank_lower_bound = 0.0;
  bool vacuous = false;
  std::size_t actual_rank = 0;
  bool consistent = false;
};

struct PipelineReport {
  double p = 2.0;
  std::size_t rank = 0;
  double prod = 0.0;               // prod defect
  double projective_bound = 0.0;   // sum_i ||a_i||_p ||b_i||_p (reported, not enforced)
  std::vector<PrimeRecord> per_prime;
};

struct PipelineConfig {
  double prod_tol = 1e-8;
  std::size_t plane_cap = 13;
};

/// The full chain, executed independently per prime: slice mass, slice
/// selection, square-root map, invariant projection, the mu and lambda
/// estimates, and the rank lower bound r >= (1 - delta1^2/(1-delta1)^2) n.
PipelineReport run_pipeline(const TensorDecomposition& t,
                            const ModulusOfContinuity& forward_modulus,
                            const PipelineConfig& cfg = {});

}  // namespace lplab
