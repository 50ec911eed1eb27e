#pragma once

#include "ruin/model.hpp"

namespace ruin {

/// psi(x) = coefficient * exp(rate * x).
///
/// A proper ruin function has rate < 0 and coefficient in (0, 1]. The
/// constant function 1 (certain ruin, net profit condition violated) is
/// represented by coefficient 1 and rate 0; see certain().
struct RuinFunction {
  double coefficient;
  double rate;

  static constexpr RuinFunction certain() noexcept { return {1.0, 0.0}; }
  constexpr bool is_certain() const noexcept { return rate == 0.0 && coefficient == 1.0; }

  bool operator==(const RuinFunction&) const = default;
};

/// Throws DomainError for negative x.
double evaluate(const RuinFunction& rf, double x);

/// Parameters of a model whose claims and funds are both exponential.
/// funds_mean may be zero (classical Cramer-Lundberg model).
struct ExponentialModel {
  double premium_rate;
  double claim_intensity;
  double claims_mean;
  double funds_mean;

  double margin() const noexcept {
    return premium_rate - claim_intensity * (claims_mean - funds_mean);
  }

  bool operator==(const ExponentialModel&) const = default;
};

/// Exact ruin probability of an exponential/exponential model.
///
/// Evaluates phi(x) = 1 + K e^{alpha x} with
///   K = lambda mu1 (1 - alpha mu2) / ((c alpha - lambda)(1 - alpha mu2)(mu1 + mu2) + lambda mu2)
/// and returns psi = -K e^{alpha x}. alpha is taken in the cancellation-free
/// form -2 margin / (B + sqrt(A)) whenever B >= 0, where
/// B = lambda mu1 mu2 + c mu1 - c mu2 and A is the discriminant
/// (B^2 - A = -4 c mu1 mu2 margin). A nonpositive margin gives
/// RuinFunction::certain().
RuinFunction exponential_pair_ruin(const ExponentialModel& params);

/// Same as exponential_pair_ruin, for a RiskModel. Throws UnsupportedModel
/// unless both claims and funds are Exponential.
RuinFunction exact_exponential_ruin(const RiskModel& model);

/// Extracts the exponential parameters; UnsupportedModel otherwise.
ExponentialModel exponential_parameters(const RiskModel& model);

}  // namespace ruin
