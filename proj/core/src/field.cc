#include "rigidkit/field.h"

#include <ostream>
#include <stdexcept>

namespace rigidkit {

FieldElement FieldElement::Pow(std::uint64_t exponent) const {
  FieldElement result(1);
  FieldElement base = *this;
  while (exponent != 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

FieldElement FieldElement::Inverse() const {
  if (IsZero()) throw std::domain_error("inverse of zero in Z_p");
  // Fermat: a^(p-2) = a^-1.
  return Pow(kPrime - 2);
}

std::int64_t FieldElement::Centered() const {
  if (value_ > kPrime / 2) return -static_cast<std::int64_t>(kPrime - value_);
  return static_cast<std::int64_t>(value_);
}

std::ostream& operator<<(std::ostream& os, FieldElement e) { return os << e.value(); }

}  // namespace rigidkit
