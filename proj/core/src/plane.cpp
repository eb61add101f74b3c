#include "lplab/plane.hpp"

#include <stdexcept>
#include <string>

namespace lplab {

ProjPoint normalize_point(const std::array<std::uint8_t, 3>& v, std::uint32_t l) {
  int first = -1;
  for (int i = 0; i < 3; ++i) {
    if (v[i] % l != 0) {
      first = i;
      break;
    }
  }
  if (first < 0) throw std::invalid_argument("ProjPoint: zero vector");
  const std::uint32_t inv = FieldElement(v[first] % l, l).inverse().value();
  ProjPoint p;
  p.l = l;
  for (int i = 0; i < 3; ++i) {
    p.rep[i] = static_cast<std::uint8_t>((v[i] % l) * inv % l);
  }
  return p;
}

ProjectivePlane ProjectivePlane::build(std::uint32_t l, std::uint32_t max_l) {
  if (!is_prime(l)) {
    throw std::invalid_argument("ProjectivePlane: l = " + std::to_string(l) +
                                " is not prime");
  }
  if (l > max_l) {
    throw std::invalid_argument("ProjectivePlane: l = " + std::to_string(l) +
                                " exceeds cap " + std::to_string(max_l));
  }
  ProjectivePlane pl;
  pl.l_ = l;
  pl.index_.assign(l * l * l, 0xFFFF);
  for (std::uint32_t a = 0; a < l; ++a) {
    for (std::uint32_t b = 0; b < l; ++b) {
      for (std::uint32_t c = 0; c < l; ++c) {
        if (a == 0 && b == 0 && c == 0) continue;
        const std::array<std::uint8_t, 3> v = {static_cast<std::uint8_t>(a),
                                               static_cast<std::uint8_t>(b),
                                               static_cast<std::uint8_t>(c)};
        // Keep canonical representatives only: first nonzero coordinate is 1.
        const std::uint8_t lead = a != 0 ? v[0] : (b != 0 ? v[1] : v[2]);
        if (lead != 1) continue;
        pl.index_[pl.pack(v)] = static_cast<std::uint16_t>(pl.points_.size());
        ProjPoint p;
        p.l = l;
        p.rep = v;
        pl.points_.push_back(p);
      }
    }
  }
  const std::size_t n = pl.points_.size();
  const std::size_t half = (static_cast<std::size_t>(l) * l + l) / 2;
  pl.sign_set_.assign(n, false);
  for (std::size_t i = 0; i < half; ++i) pl.sign_set_[i] = true;
  return pl;
}

std::size_t ProjectivePlane::index_of(const ProjPoint& p) const {
  if (p.l != l_) throw std::invalid_argument("ProjectivePlane: modulus mismatch");
  const std::uint16_t idx = index_[pack(p.rep)];
  if (idx == 0xFFFF) throw std::invalid_argument("ProjectivePlane: point not canonical");
  return idx;
}

ProjPoint ProjectivePlane::act(const Mat3& g, const ProjPoint& s) const {
  if (g.l != l_ || s.l != l_) {
    throw std::invalid_argument("ProjectivePlane: modulus mismatch in action");
  }
  return normalize_point(g.apply(s.rep), l_);
}

std::size_t ProjectivePlane::act_index(const Mat3& g, std::size_t idx) const {
  return index_of(act(g, points_[idx]));
}

std::vector<std::size_t> ProjectivePlane::permutation(const Mat3& g) const {
  std::vector<std::size_t> out(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) out[i] = act_index(g, i);
  return out;
}

Eigen::MatrixXd ProjectivePlane::perm_matrix(const Mat3& g) const {
  const std::size_t n = points_.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  const auto perm = permutation(g);
  for (std::size_t i = 0; i < n; ++i) m(perm[i], i) = 1.0;
  return m;
}

Eigen::MatrixXd ProjectivePlane::sign_isometry() const {
  const std::size_t n = points_.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = sign_set_[i] ? 1.0 : -1.0;
  return m;
}

}  // namespace lplab
