#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ruin/random.hpp"

namespace ruin {

struct Exponential {
  double mean;
  bool operator==(const Exponential&) const = default;
};

// Gamma with integer shape; rate shape/mean.
struct Erlang {
  int shape;
  double mean;
  bool operator==(const Erlang&) const = default;
};

struct HyperComponent {
  double weight;
  double mean;
  bool operator==(const HyperComponent&) const = default;
};

// Finite mixture of exponentials.
struct Hyperexponential {
  std::vector<HyperComponent> components;
  bool operator==(const Hyperexponential&) const = default;
};

struct Degenerate {
  double point;
  bool operator==(const Degenerate&) const = default;
};

using Family = std::variant<Exponential, Erlang, Hyperexponential, Degenerate>;

/// Validated description of a nonnegative light-tailed distribution.
///
/// Construction checks the family parameters and throws InvalidModel on
/// violation; hyperexponential weights must already sum to one (within
/// 1e-12), they are never renormalized. Immutable afterwards.
class DistributionSpec {
 public:
  explicit DistributionSpec(Family family);

  const Family& family() const noexcept { return family_; }
  double mean() const noexcept { return mean_; }

  template <class T>
  bool is() const noexcept {
    return std::holds_alternative<T>(family_);
  }

  bool operator==(const DistributionSpec& other) const {
    return family_ == other.family_;
  }

 private:
  Family family_;
  double mean_;
};

// Short human-readable form, e.g. "Erlang(k=3, mean=2)".
std::string describe(const DistributionSpec& spec);

/// E[Y^order] for order in {1, 2, 3}; DomainError otherwise.
double raw_moment(const DistributionSpec& spec, int order);

/// E[e^{rY}] for 0 <= r < mgf_domain_sup(spec). Exactly 1 at r = 0.
double mgf(const DistributionSpec& spec, double r);

/// Supremum of the open interval on which the MGF is finite.
double mgf_domain_sup(const DistributionSpec& spec);

/// E[e^{-rY}] for r >= 0.
double neg_exp_moment(const DistributionSpec& spec, double r);

/// One draw. Degenerate consumes no randomness.
double sample(const DistributionSpec& spec, RandomStream& stream);

}  // namespace ruin
