#ifndef RIGIDKIT_RNG_H_
#define RIGIDKIT_RNG_H_

#include <cstdint>

#include "rigidkit/field.h"

namespace rigidkit {

// Deterministic random source behind every "generic" sample.
//
// The generator is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
// advanced by the golden-ratio increment and passed through a fixed
// avalanche mix. Same seed, same stream, on every platform.
//
// An Rng is a single-owner value. Code that needs an independent stream
// either calls Split() (advances this generator) or builds one from
// Rng::Derive(seed, index) when the stream must not depend on call order,
// e.g. per-graph or per-edge work that may run in parallel.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5EED'2D0C'0FFE'E001ULL;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : seed_(seed), state_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t NextU64();
  // Uniform on [0, bound); bound > 0.
  std::uint64_t NextBelow(std::uint64_t bound);
  // Uniform on [0, 1).
  double NextUnit();
  bool NextBernoulli(double probability) { return NextUnit() < probability; }

  // Uniform on Z_p (rejection sampling on 61-bit words).
  FieldElement NextField();
  // Uniform on Z_p \ {0}.
  FieldElement NextNonzeroField();

  // Fresh generator seeded from this stream.
  Rng Split() { return Rng(NextU64()); }

  // Seed for sub-stream `index` of `seed`; pure function of its inputs.
  static std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);
  static Rng Derive(std::uint64_t seed, std::uint64_t index) {
    return Rng(DeriveSeed(seed, index));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
};

}  // namespace rigidkit

#endif  // RIGIDKIT_RNG_H_
