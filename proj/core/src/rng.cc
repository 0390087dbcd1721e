#include "rigidkit/rng.h"

#include <stdexcept>

namespace rigidkit {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t Mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::NextU64() {
  state_ += kGolden;
  return Mix(state_);
}

std::uint64_t Rng::NextBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("NextBelow: bound must be positive");
  // Lemire-style rejection to avoid modulo bias.
  const std::uint64_t threshold = -bound % bound;
  for (;;) {
    const std::uint64_t x = NextU64();
    const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    if (static_cast<std::uint64_t>(m) >= threshold) {
      return static_cast<std::uint64_t>(m >> 64);
    }
  }
}

double Rng::NextUnit() {
  return static_cast<double>(NextU64() >> 11) * 0x1.0p-53;
}

FieldElement Rng::NextField() {
  for (;;) {
    const std::uint64_t x = NextU64() >> 3;
    if (x < kPrime) return FieldElement(x);
  }
}

FieldElement Rng::NextNonzeroField() {
  for (;;) {
    const FieldElement x = NextField();
    if (!x.IsZero()) return x;
  }
}

std::uint64_t Rng::DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return Mix(seed ^ Mix(index * kGolden + 0x632BE59BD9B4E019ULL));
}

}  // namespace rigidkit
