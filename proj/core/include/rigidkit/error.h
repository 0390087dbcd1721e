#ifndef RIGIDKIT_ERROR_H_
#define RIGIDKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace rigidkit {

// Base class for every error raised by the library. Preconditions that a
// caller can check up front (bad vertex ids, shape mismatches, ...) throw
// std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list text. line() is 1-based; 0 means "whole input".
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// The sampled realization is not generic for the queried graph (a rank came
// out below the value the caller established). Resample and retry.
class NonGenericRealization : public Error {
 public:
  using Error::Error;
};

// subset_rank_reduce: no random combination of the inputs reached the target.
class RankNotAchievable : public Error {
 public:
  using Error::Error;
};

class NotGloballyRigid : public Error {
 public:
  using Error::Error;
};

// A randomized certificate failed in a place where theory says it cannot;
// almost surely an unlucky sample.
class RandomizedFault : public Error {
 public:
  using Error::Error;
};

// The counting hypothesis of the dense-subgraph extractor does not hold.
class HypothesisNotSatisfied : public Error {
 public:
  using Error::Error;
};

}  // namespace rigidkit

#endif  // RIGIDKIT_ERROR_H_
