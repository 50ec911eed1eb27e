#pragma once

#include <stdexcept>
#include <string>

namespace ruin {

// Argument outside the mathematical domain of an operation (negative x,
// MGF argument at or past its pole, unsupported moment order).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Parameters that cannot form a valid distribution or risk model.
class InvalidModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation exists only for some distribution families.
class UnsupportedModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The Lundberg equation has no positive root (net profit condition fails).
class NoPositiveRoot : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root bracketing failed inside the open MGF domain.
class BracketFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A positivity gate of the De Vylder-type surrogate failed.
class ApproximationInapplicable : public std::runtime_error {
 public:
  ApproximationInapplicable(std::string gate, const std::string& what)
      : std::runtime_error(what), gate_(std::move(gate)) {}

  const std::string& gate() const noexcept { return gate_; }

 private:
  std::string gate_;
};

// mu1 == mu2 makes the mean-ratio condition singular.
class DegenerateRatio : public ApproximationInapplicable {
 public:
  using ApproximationInapplicable::ApproximationInapplicable;
};

}  // namespace ruin
