#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <vector>

#include "lplab/mat3.hpp"

namespace lplab {

/// Point of the projective plane over F_l: a nonzero vector of F_l^3
/// normalized so that its first nonzero coordinate is 1. Two points are equal
/// iff their lines coincide.
struct ProjPoint {
  std::array<std::uint8_t, 3> rep{};
  std::uint32_t l = 2;

  bool operator==(const ProjPoint& o) const { return l == o.l && rep == o.rep; }
};

ProjPoint normalize_point(const std::array<std::uint8_t, 3>& v, std::uint32_t l);

/// The plane Lambda_l = (F_l^3 - {0}) / F_l^x with l^2+l+1 points listed in
/// lexicographic order of their canonical representatives. The sign set C_l
/// marks the first (l^2+l)/2 points of that list.
class ProjectivePlane {
 public:
  static ProjectivePlane build(std::uint32_t l, std::uint32_t max_l = 13);

  std::uint32_t l() const { return l_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const std::vector<bool>& sign_set() const { return sign_set_; }

  std::size_t index_of(const ProjPoint& p) const;
  bool in_sign_set(std::size_t idx) const { return sign_set_[idx]; }

  /// sigma_l: the projective action of g on a point.
  ProjPoint act(const Mat3& g, const ProjPoint& s) const;
  std::size_t act_index(const Mat3& g, std::size_t idx) const;

  /// Permutation as an index map: out[i] = index of g . point[i].
  std::vector<std::size_t> permutation(const Mat3& g) const;

  /// pi_l: 0/1 permutation matrix of the action, one 1 per row and column.
  Eigen::MatrixXd perm_matrix(const Mat3& g) const;

  /// v_l: diagonal +-1 isometry, +1 on C_l; trace is exactly -1.
  Eigen::MatrixXd sign_isometry() const;

 private:
  std::uint32_t l_ = 2;
  std::vector<ProjPoint> points_;
  std::vector<bool> sign_set_;
  std::vector<std::uint16_t> index_;  // packed representative -> position

  std::uint32_t pack(const std::array<std::uint8_t, 3>& v) const {
    return (static_cast<std::uint32_t>(v[0]) * l_ + v[1]) * l_ + v[2];
  }
};

}  // namespace lplab
