#pragma once

#include <string>
#include <vector>

#include "ruin/dist.hpp"

namespace ruin {

/// Surplus process X_t = x + c t - sum_{i <= N_t} (xi_i - eta_i) with
/// Poisson(lambda) claim arrivals, claim sizes xi ~ claims and additional
/// funds eta ~ funds received at each claim epoch.
class RiskModel {
 public:
  RiskModel(double premium_rate, double claim_intensity, DistributionSpec claims,
            DistributionSpec funds);

  double premium_rate() const noexcept { return premium_rate_; }
  double claim_intensity() const noexcept { return claim_intensity_; }
  const DistributionSpec& claims() const noexcept { return claims_; }
  const DistributionSpec& funds() const noexcept { return funds_; }

  bool operator==(const RiskModel&) const = default;

 private:
  double premium_rate_;
  double claim_intensity_;
  DistributionSpec claims_;
  DistributionSpec funds_;
};

// Conditions that hold for the model but that the theory assumes away,
// e.g. xi - eta of constant sign. Empty when nothing is provably wrong.
std::vector<std::string> validation_warnings(const RiskModel& model);

/// c - lambda mu1 + lambda mu2.
double net_profit_margin(const RiskModel& model);

inline bool has_positive_margin(const RiskModel& model) {
  return net_profit_margin(model) > 0.0;
}

struct MixedMoments {
  double m2;  // E[(xi - eta)^2]
  double m3;  // E[(xi - eta)^3]
};

// Binomial expansions of the raw moments; xi and eta independent.
MixedMoments mixed_moments(const RiskModel& model);

}  // namespace ruin
