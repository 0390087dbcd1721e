#ifndef RIGIDKIT_FIELD_H_
#define RIGIDKIT_FIELD_H_

#include <compare>
#include <cstdint>
#include <iosfwd>

namespace rigidkit {

// The Mersenne prime 2^61 - 1. Every exact computation in the library runs
// over Z_p for this p.
inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

// An element of Z_p stored in canonical form [0, p).
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint64_t value) : value_(Reduce(value)) {}

  // Maps a signed integer to its residue, so FromInt(-1) == p - 1.
  static constexpr FieldElement FromInt(std::int64_t value) {
    if (value >= 0) return FieldElement(static_cast<std::uint64_t>(value));
    // -(INT64_MIN) overflows, go through unsigned arithmetic.
    const std::uint64_t magnitude = ~static_cast<std::uint64_t>(value) + 1;
    return -FieldElement(magnitude);
  }

  constexpr std::uint64_t value() const { return value_; }
  constexpr bool IsZero() const { return value_ == 0; }

  // Multiplicative inverse; throws std::domain_error on zero.
  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t exponent) const;

  // Representative in (-p/2, p/2], handy for printing small rationals.
  std::int64_t Centered() const;

  constexpr FieldElement operator-() const {
    return FieldElement::Raw(value_ == 0 ? 0 : kPrime - value_);
  }
  constexpr FieldElement& operator+=(FieldElement other) {
    value_ += other.value_;
    if (value_ >= kPrime) value_ -= kPrime;
    return *this;
  }
  constexpr FieldElement& operator-=(FieldElement other) {
    value_ = value_ >= other.value_ ? value_ - other.value_
                                    : value_ + kPrime - other.value_;
    return *this;
  }
  constexpr FieldElement& operator*=(FieldElement other) {
    value_ = MulMod(value_, other.value_);
    return *this;
  }
  FieldElement& operator/=(FieldElement other) { return *this *= other.Inverse(); }

  friend constexpr FieldElement operator+(FieldElement a, FieldElement b) { return a += b; }
  friend constexpr FieldElement operator-(FieldElement a, FieldElement b) { return a -= b; }
  friend constexpr FieldElement operator*(FieldElement a, FieldElement b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, FieldElement b) { return a /= b; }
  friend constexpr bool operator==(FieldElement a, FieldElement b) = default;
  friend constexpr auto operator<=>(FieldElement a, FieldElement b) = default;

 private:
  static constexpr FieldElement Raw(std::uint64_t v) {
    FieldElement e;
    e.value_ = v;
    return e;
  }
  static constexpr std::uint64_t Reduce(std::uint64_t v) {
    v = (v & kPrime) + (v >> 61);
    return v >= kPrime ? v - kPrime : v;
  }
  static constexpr std::uint64_t MulMod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 product = static_cast<unsigned __int128>(a) * b;
    const std::uint64_t lo = static_cast<std::uint64_t>(product) & kPrime;
    const std::uint64_t hi = static_cast<std::uint64_t>(product >> 61);
    const std::uint64_t sum = lo + hi;
    return sum >= kPrime ? sum - kPrime : sum;
  }

  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace rigidkit

#endif  // RIGIDKIT_FIELD_H_
