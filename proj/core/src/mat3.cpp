#include "lplab/mat3.hpp"

#include <algorithm>
#include <stdexcept>

namespace lplab {

Mat3 Mat3::identity(std::uint32_t l) {
  Mat3 m;
  m.l = l;
  m.e = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  return m;
}

Mat3 Mat3::elementary(int i, int j, int amount, std::uint32_t l) {
  if (i == j || i < 0 || i > 2 || j < 0 || j > 2) {
    throw std::invalid_argument("Mat3::elementary: need off-diagonal position");
  }
  Mat3 m = identity(l);
  int a = amount % static_cast<int>(l);
  if (a < 0) a += static_cast<int>(l);
  m.at(i, j) = static_cast<std::uint8_t>(a);
  return m;
}

Mat3 Mat3::operator*(const Mat3& o) const {
  if (l != o.l) throw std::invalid_argument("Mat3: modulus mismatch");
  Mat3 r;
  r.l = l;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = static_cast<std::uint8_t>(s % l);
    }
  }
  return r;
}

std::uint32_t Mat3::det() const {
  const auto& m = e;
  // Cofactor expansion; everything stays well inside 64 bits.
  std::int64_t d = static_cast<std::int64_t>(m[0]) * (m[4] * m[8] - m[5] * m[7]) -
                   static_cast<std::int64_t>(m[1]) * (m[3] * m[8] - m[5] * m[6]) +
                   static_cast<std::int64_t>(m[2]) * (m[3] * m[7] - m[4] * m[6]);
  std::int64_t r = d % static_cast<std::int64_t>(l);
  if (r < 0) r += l;
  return static_cast<std::uint32_t>(r);
}

Mat3 Mat3::inverse() const {
  const std::uint32_t d = det();
  if (d == 0) throw std::domain_error("Mat3: singular matrix");
  const std::uint32_t dinv = FieldElement(d, l).inverse().value();
  auto cof = [&](int r0, int c0, int r1, int c1) -> std::int64_t {
    return static_cast<std::int64_t>(at(r0, c0)) * at(r1, c1) -
           static_cast<std::int64_t>(at(r0, c1)) * at(r1, c0);
  };
  Mat3 adj;
  adj.l = l;
  const int rows[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      // adj(j,i) = (-1)^(i+j) * minor(i,j)
      std::int64_t minor = cof(rows[i][0], rows[j][0], rows[i][1], rows[j][1]);
      if ((i + j) % 2 == 1) minor = -minor;
      std::int64_t v = (minor % static_cast<std::int64_t>(l) + l) % l;
      adj.at(j, i) = static_cast<std::uint8_t>(v * dinv % l);
    }
  }
  return adj;
}

std::array<std::uint8_t, 3> Mat3::apply(const std::array<std::uint8_t, 3>& v) const {
  std::array<std::uint8_t, 3> r{};
  for (int i = 0; i < 3; ++i) {
    std::uint32_t s = 0;
    for (int k = 0; k < 3; ++k) s += at(i, k) * v[k];
    r[i] = static_cast<std::uint8_t>(s % l);
  }
  return r;
}

std::uint64_t Mat3::key() const {
  std::uint64_t k = 0;
  for (int i = 8; i >= 0; --i) k = k * l + e[i];
  return k;
}

GeneratorSet GeneratorSet::elementary_sl3() {
  GeneratorSet g;
  g.symmetric = true;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (int s : {1, -1}) {
        std::array<int, 9> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        m[3 * i + j] = s;
        g.elements.push_back(m);
      }
    }
  }
  return g;
}

std::vector<Mat3> GeneratorSet::reduce(std::uint32_t l) const {
  if (!is_prime(l)) throw std::invalid_argument("GeneratorSet: l must be prime");
  std::vector<Mat3> out;
  std::vector<std::uint64_t> seen;
  const std::uint64_t id_key = Mat3::identity(l).key();
  for (const auto& zm : elements) {
    Mat3 m;
    m.l = l;
    for (int k = 0; k < 9; ++k) {
      int v = zm[k] % static_cast<int>(l);
      if (v < 0) v += static_cast<int>(l);
      m.e[k] = static_cast<std::uint8_t>(v);
    }
    const std::uint64_t key = m.key();
    if (key == id_key) continue;
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    out.push_back(m);
  }
  return out;
}

}  // namespace lplab
