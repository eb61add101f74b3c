#include "lplab/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace lplab {

std::size_t plane_point_count(std::uint32_t l) {
  return static_cast<std::size_t>(l) * l + l + 1;
}

std::size_t TensorDecomposition::dim() const {
  std::size_t d = 0;
  for (const std::uint32_t l : primes) d += plane_point_count(l);
  return d;
}

std::size_t TensorDecomposition::block_offset(std::uint32_t l) const {
  std::size_t off = 0;
  for (const std::uint32_t q : primes) {
    if (q == l) return off;
    off += plane_point_count(q);
  }
  throw std::invalid_argument("TensorDecomposition: prime " + std::to_string(l) +
                              " not in the block structure");
}

double prod_defect(const TensorDecomposition& t) {
  if (t.pairs.empty()) throw std::invalid_argument("prod_defect: empty decomposition");
  const Eigen::Index d = t.pairs.front().first.rows();
  DenseMatrix sum = DenseMatrix::Zero(d, d);
  for (const auto& [a, b] : t.pairs) {
    if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
      throw std::invalid_argument("prod_defect: shape mismatch");
    }
    sum += a * b;
  }
  return (sum - DenseMatrix::Identity(d, d)).norm();
}

TensorDecomposition exact_diagonal(std::size_t n) {
  TensorDecomposition t;
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      DenseMatrix a = DenseMatrix::Zero(n, n);
      DenseMatrix b = DenseMatrix::Zero(n, n);
      a(i, j) = s;
      b(j, i) = s;
      t.pairs.emplace_back(std::move(a), std::move(b));
    }
  }
  return t;
}

TensorDecomposition rank_one_identity(std::size_t n) {
  TensorDecomposition t;
  t.pairs.emplace_back(DenseMatrix::Identity(n, n), DenseMatrix::Identity(n, n));
  return t;
}

TensorDecomposition truncated_diagonal(std::size_t n, std::size_t keep) {
  if (keep == 0 || keep > n) throw std::invalid_argument("truncated_diagonal: bad keep");
  // Keep a cyclic band of `keep` pairs per row. The constant band width keeps
  // prod exactly 1 after rescaling, while the slices degrade from the scaled
  // identity to window projectors that the translates visibly move.
  TensorDecomposition t;
  const double s = 1.0 / std::sqrt(static_cast<double>(keep));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < keep; ++d) {
      const std::size_t j = (i + d) % n;
      DenseMatrix a = DenseMatrix::Zero(n, n);
      DenseMatrix b = DenseMatrix::Zero(n, n);
      a(i, j) = s;
      b(j, i) = s;
      t.pairs.emplace_back(std::move(a), std::move(b));
    }
  }
  return t;
}

TensorDecomposition perturbed_diagonal(std::size_t n, double eta,
                                       std::size_t noise_pairs, Rng& rng) {
  TensorDecomposition t = exact_diagonal(n);
  // eta scales one leg only, so the slice defect scales linearly in eta.
  for (std::size_t j = 0; j < noise_pairs; ++j) {
    t.pairs.emplace_back(eta * gaussian_matrix(n, n, rng),
                         gaussian_matrix(n, n, rng));
  }
  // Rank-one repair so prod comes back to the identity exactly.
  const Eigen::Index d = static_cast<Eigen::Index>(n);
  DenseMatrix sum = DenseMatrix::Zero(d, d);
  for (const auto& [a, b] : t.pairs) sum += a * b;
  t.pairs.emplace_back(DenseMatrix::Identity(d, d) - sum, DenseMatrix::Identity(d, d));
  return t;
}

DenseMatrix slice(const TensorDecomposition& t, std::uint32_t l, std::size_t m) {
  const std::size_t off = t.block_offset(l);
  const auto n = static_cast<Eigen::Index>(plane_point_count(l));
  if (m >= t.dim()) throw std::out_of_range("slice: column index out of range");
  DenseMatrix out = DenseMatrix::Zero(n, n);
  for (const auto& [a, b] : t.pairs) {
    // eta_i(s) = b_i(m, off+s), xi_i(t) = a_i(off+t, m); accumulate eta xi^T.
    const DenseVector eta = b.row(m).segment(off, n).transpose();
    const DenseVector xi = a.col(m).segment(off, n);
    out.noalias() += eta * xi.transpose();
  }
  return out;
}

SliceMass slice_mass(const TensorDecomposition& t, std::uint32_t l) {
  SliceMass out;
  const std::size_t d = t.dim();
  out.per_column.resize(d);
  for (std::size_t m = 0; m < d; ++m) {
    out.per_column[m] = schatten_norm(slice(t, l, m), 1);
    out.total += out.per_column[m];
  }
  const auto n = static_cast<double>(plane_point_count(l));
  out.lower_bound_ok = out.total >= n * (1.0 - 1e-8);
  return out;
}

double slice_defect(const DenseMatrix& slice_matrix, const Eigen::MatrixXd& q) {
  const DenseMatrix qc = to_complex(q);
  return schatten_norm(slice_matrix - qc * slice_matrix * qc.transpose(), 1);
}

SliceSelection select_slice(const TensorDecomposition& t, std::uint32_t l,
                            const std::vector<Eigen::MatrixXd>& translates) {
  const std::size_t d = t.dim();
  SliceSelection best;
  double best_ratio = std::numeric_limits<double>::infinity();
  bool found = false;
  for (std::size_t m = 0; m < d; ++m) {
    const DenseMatrix sl = slice(t, l, m);
    const double norm1 = schatten_norm(sl, 1);
    if (norm1 < 1e-14) continue;
    double worst = 0.0;
    for (const auto& q : translates) {
      worst = std::max(worst, slice_defect(sl, q) / norm1);
    }
    if (worst < best_ratio) {
      best_ratio = worst;
      best.m = m;
      best.normalized = sl / norm1;
      best.delta_slice = worst;
      found = true;
    }
  }
  if (!found) throw std::runtime_error("select_slice: all slices vanish");
  return best;
}

InvariantProjection invariant_projection(const DenseMatrix& y) {
  const Eigen::Index n = y.rows();
  if (n != y.cols() || n < 2) {
    throw std::invalid_argument("invariant_projection: need square Y of size >= 2");
  }
  const double rn = std::sqrt(static_cast<double>(n));
  // <Y, I> = trace(Y)/sqrt(n); <Y, E> = (entry sum)/n; <I, E> = 1/sqrt(n).
  const std::complex<double> c1 = y.trace() / rn;
  const std::complex<double> c2 = y.sum() / static_cast<double>(n);
  const double g = 1.0 / rn;
  const double det = 1.0 - g * g;  // Gram determinant; positive for n >= 2
  InvariantProjection out;
  out.lambda = (c1 - g * c2) / det;
  out.mu = (c2 - g * c1) / det;

  DenseMatrix rest = y;
  rest -= out.lambda / rn * DenseMatrix::Identity(n, n);
  rest -= out.mu / static_cast<double>(n) * DenseMatrix::Ones(n, n);
  out.residual = rest.norm();
  return out;
}

MuBoundCheck mu_bound_check(std::complex<double> mu, double delta0, double r_eff,
                            const ProjectivePlane& plane) {
  const auto n = static_cast<double>(plane.size());
  MuBoundCheck out;
  const double factor = std::sqrt(2.0 - 2.0 / (n * n));
  out.lhs = factor * std::abs(mu);
  out.rhs = (2.0 * r_eff + 1.0) * delta0;
  out.holds = out.lhs <= out.rhs * (1.0 + 1e-9) + 1e-12;

  const Eigen::MatrixXd v = plane.sign_isometry();
  const Eigen::MatrixXd e = Eigen::MatrixXd::Ones(plane.size(), plane.size()) / n;
  out.sign_norm_defect = std::abs((e - v * e * v.transpose()).norm() - factor);
  return out;
}

RankBound rank_bound(double delta1, double lambda_abs, std::size_t n,
                     std::size_t r_actual) {
  RankBound out;
  if (delta1 >= 1.0) {
    out.vacuous = true;  // no obstruction at this defect level
    out.bound = 0.0;
    out.consistent = true;
    return out;
  }
  if (lambda_abs + 1e-9 < 1.0 - delta1) {
    throw std::invalid_argument("rank_bound: |lambda| >= 1 - delta1 violated");
  }
  const double ratio = delta1 / (1.0 - delta1);
  out.bound = (1.0 - ratio * ratio) * static_cast<double>(n);
  if (out.bound <= 0.0) {
    out.bound = 0.0;
    out.vacuous = true;
  }
  out.consistent = static_cast<double>(r_actual) >= out.bound - 1e-6;
  return out;
}

PipelineReport run_pipeline(const TensorDecomposition& t,
                            const ModulusOfContinuity& forward_modulus,
                            const PipelineConfig& cfg) {
  PipelineReport rep;
  rep.p = t.p;
  rep.rank = t.rank();
  rep.prod = prod_defect(t);
  if (rep.prod > cfg.prod_tol) {
    throw std::invalid_argument("run_pipeline: prod(T) != 1 (defect " +
                                std::to_string(rep.prod) + ")");
  }
  for (const auto& [a, b] : t.pairs) {
    rep.projective_bound += opnorm(a, t.p).value * opnorm(b, t.p).value;
  }

  for (const std::uint32_t l : t.primes) {
    PrimeRecord rec;
    rec.l = l;
    try {
      const ProjectivePlane plane = ProjectivePlane::build(l, cfg.plane_cap);
      rec.n = plane.size();
      GeneratorSet gens = GeneratorSet::elementary_sl3();
      gens.with_sign_tag = true;  // run against Sigma+ = Sigma plus the sign tag

      std::vector<Eigen::MatrixXd> group_translates;
      for (const Mat3& g : gens.reduce(l)) group_translates.push_back(plane.perm_matrix(g));
      std::vector<Eigen::MatrixXd> translates = group_translates;
      if (gens.with_sign_tag) translates.push_back(plane.sign_isometry());

      const SliceMass mass = slice_mass(t, l);
      rec.slice_mass_total = mass.total;
      rec.mass_lower_bound_ok = mass.lower_bound_ok;

      // Slice-level commutator defect per generator, normalized by |Lambda_l|.
      const std::size_t d = t.dim();
      rec.eps_per_generator.assign(translates.size(), 0.0);
      for (std::size_t m = 0; m < d; ++m) {
        const DenseMatrix sl = slice(t, l, m);
        for (std::size_t gi = 0; gi < translates.size(); ++gi) {
          rec.eps_per_generator[gi] += slice_defect(sl, translates[gi]);
        }
      }
      for (double& e : rec.eps_per_generator) e /= static_cast<double>(rec.n);
      rec.eps = *std::max_element(rec.eps_per_generator.begin(),
                                  rec.eps_per_generator.end());

      const SliceSelection sel = select_slice(t, l, translates);
      rec.m_selected = sel.m;
      rec.delta_slice = sel.delta_slice;
      const double sigma_plus = static_cast<double>(translates.size());
      rec.pigeonhole_ok = sel.delta_slice <= rec.eps * sigma_plus + 1e-9;

      const DenseMatrix y = nc_mazur(sel.normalized);

      // delta0: measured envelope at eps|Sigma+| (inputs on the sphere are
      // never further than 2 apart), floored by the directly computed defect.
      // omega(0) = 0, so a zero measured defect short-circuits the envelope.
      const double arg = std::min(rec.eps * sigma_plus, 2.0);
      if (arg == 0.0) {
        rec.delta0_envelope = 0.0;
      } else {
        const auto env = forward_modulus.query(arg);
        rec.delta0_envelope = env ? *env : mazur_theory_curve(arg);
      }
      rec.delta0_theory = mazur_theory_curve(arg);
      double direct = 0.0;
      double direct_group = 0.0;
      for (std::size_t gi = 0; gi < translates.size(); ++gi) {
        const DenseMatrix qc = to_complex(translates[gi]);
        const double defect = (y - qc * y * qc.transpose()).norm();
        direct = std::max(direct, defect);
        if (gi < group_translates.size()) direct_group = std::max(direct_group, defect);
      }
      rec.delta0_direct = direct;
      rec.delta0 = std::max(rec.delta0_envelope, rec.delta0_direct);

      const KazhdanReport kaz = kazhdan_constant(pair_rep(plane, gens));
      rec.kappa = kaz.kappa;
      rec.r_eff = kaz.r_eff;
      rec.invariant_dim = kaz.invariant_dim;

      const InvariantProjection proj = invariant_projection(y);
      rec.lambda_abs = std::abs(proj.lambda);
      rec.mu_abs = std::abs(proj.mu);
      rec.residual = proj.residual;
      rec.kazhdan_bound_ok = proj.residual <= rec.r_eff * direct_group * (1.0 + 1e-9) + 1e-12;

      rec.mu_check = mu_bound_check(proj.mu, rec.delta0, rec.r_eff, plane);

      rec.delta1 = (3.0 * rec.r_eff + 1.0) * rec.delta0;
      // Largest measured eps that still gives delta1 < 1 at this prime: the
      // per-l smallness threshold for the commutator defect.
      for (std::size_t i = 0; i < forward_modulus.grid.size(); ++i) {
        if ((3.0 * rec.r_eff + 1.0) * forward_modulus.envelope[i] < 1.0) {
          rec.eps_threshold = forward_modulus.grid[i] / sigma_plus;
        }
      }
      rec.lambda_floor_ok = rec.lambda_abs >= 1.0 - rec.delta1 - 1e-9;
      rec.actual_rank = t.rank();
      const RankBound rb =
          rank_bound(rec.delta1, rec.lambda_abs, rec.n, rec.actual_rank);
      rec.rank_lower_bound = rb.bound;
      rec.vacuous = rb.vacuous;
      rec.consistent = rb.consistent;
    } catch (const std::exception& ex) {
      rec.error = ex.what();  // keep going on the other primes
    }
    rep.per_prime.push_back(std::move(rec));
  }
  return rep;
}

}  // namespace lplab
