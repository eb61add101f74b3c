#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lplab/field.hpp"

namespace lplab {

/// 3x3 matrix over F_l with unit determinant, stored row-major.
/// Entries are kept reduced to [0,l); l <= 13 keeps the packed key in 64 bits.
struct Mat3 {
  std::array<std::uint8_t, 9> e{};
  std::uint32_t l = 2;

  std::uint8_t& at(int r, int c) { return e[3 * r + c]; }
  std::uint8_t at(int r, int c) const { return e[3 * r + c]; }

  static Mat3 identity(std::uint32_t l);
  /// Elementary transvection: identity plus `amount` at (i,j), i != j.
  static Mat3 elementary(int i, int j, int amount, std::uint32_t l);

  Mat3 operator*(const Mat3& o) const;
  bool operator==(const Mat3& o) const { return l == o.l && e == o.e; }

  std::uint32_t det() const;
  Mat3 inverse() const;  // adjugate / det; throws if det == 0

  /// Apply to a column vector over F_l.
  std::array<std::uint8_t, 3> apply(const std::array<std::uint8_t, 3>& v) const;

  /// Packed base-l key; injective for matrices over the same field.
  std::uint64_t key() const;
};

/// Generating set for SL(3,Z), stored as integer matrices with entries in
/// {-1,0,1} and reducible to any F_l. `with_sign_tag` marks the formal extra
/// generator that the obstruction pipeline resolves to the sign isometry.
struct GeneratorSet {
  std::vector<std::array<int, 9>> elements;
  bool symmetric = true;
  bool with_sign_tag = false;

  /// The 12 elementary matrices e_ij(+-1), i != j: a canonical symmetric set.
  static GeneratorSet elementary_sl3();

  /// Reduce mod l, drop identity, deduplicate (e_ij(+1) == e_ij(-1) mod 2).
  std::vector<Mat3> reduce(std::uint32_t l) const;
};

}  // namespace lplab
