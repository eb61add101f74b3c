#pragma once

#include <cstdint>
#include <stdexcept>

namespace lplab {

bool is_prime(std::uint32_t n);

/// Residue in the prime field F_l. The modulus is carried per element and
/// checked on every mixed operation; construction rejects composite moduli.
class FieldElement {
 public:
  FieldElement(std::uint32_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement neg() const;
  FieldElement inverse() const;  // by Fermat; throws on zero

  bool operator==(const FieldElement& o) const {
    return value_ == o.value_ && modulus_ == o.modulus_;
  }

 private:
  void require_same_modulus(const FieldElement& o) const;
  std::uint32_t value_;
  std::uint32_t modulus_;
};

}  // namespace lplab
