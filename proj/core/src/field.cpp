#include "lplab/field.hpp"

namespace lplab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint32_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldElement::FieldElement(std::uint32_t value, std::uint32_t modulus)
    : value_(value % modulus), modulus_(modulus) {
  if (!is_prime(modulus)) {
    throw std::invalid_argument("FieldElement: modulus " + std::to_string(modulus) +
                                " is not prime");
  }
}

void FieldElement::require_same_modulus(const FieldElement& o) const {
  if (modulus_ != o.modulus_) {
    throw std::invalid_argument("FieldElement: modulus mismatch (" +
                                std::to_string(modulus_) + " vs " +
                                std::to_string(o.modulus_) + ")");
  }
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_modulus(o);
  return {(value_ + o.value_) % modulus_, modulus_};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_modulus(o);
  return {(value_ + modulus_ - o.value_) % modulus_, modulus_};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_modulus(o);
  return {(value_ * o.value_) % modulus_, modulus_};
}

FieldElement FieldElement::neg() const {
  return {(modulus_ - value_) % modulus_, modulus_};
}

FieldElement FieldElement::inverse() const {
  if (value_ == 0) throw std::domain_error("FieldElement: inverse of zero");
  // l is prime, so a^(l-2) = a^(-1).
  std::uint64_t base = value_, acc = 1;
  std::uint32_t e = modulus_ - 2;
  while (e > 0) {
    if (e & 1u) acc = acc * base % modulus_;
    base = base * base % modulus_;
    e >>= 1u;
  }
  return {static_cast<std::uint32_t>(acc), modulus_};
}

}  // namespace lplab
