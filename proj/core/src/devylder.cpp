#include "ruin/devylder.hpp"

#include <cmath>
#include <sstream>

#include "ruin/errors.hpp"

namespace ruin {
namespace {

double relative(double lhs, double rhs) {
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
}

}  // namespace

SurrogateParams devylder_params(const RiskModel& model) {
  const double c = model.premium_rate();
  const double lambda = model.claim_intensity();
  const double mu1 = model.claims().mean();
  const double mu2 = model.funds().mean();

  const double margin = net_profit_margin(model);
  if (!(margin > 0.0)) {
    throw ApproximationInapplicable("margin", "net profit margin <= 0: ruin is certain");
  }
  if (mu1 == mu2) {
    throw DegenerateRatio("ratio", "mean claim equals mean fund: the mean-ratio condition is singular");
  }

  const MixedMoments mm = mixed_moments(model);
  const double a = mu1 * mu1 - mu1 * mu2 + mu2 * mu2;
  const double b = mu1 * mu1 * mu1 - mu1 * mu1 * mu2 + mu1 * mu2 * mu2 - mu2 * mu2 * mu2;
  if (!(b * mm.m3 > 0.0)) {
    std::ostringstream os;
    os << "(mu1^3 - mu1^2 mu2 + mu1 mu2^2 - mu2^3) E[(xi - eta)^3] = " << b * mm.m3
       << " is not positive";
    throw ApproximationInapplicable("mean-positivity", os.str());
  }

  const double premium =
      c - lambda * (mu1 - mu2) * (1.0 - 3.0 * b * mm.m2 * mm.m2 / (2.0 * a * a * mm.m3));
  if (!(premium > 0.0)) {
    std::ostringstream os;
    os << "surrogate premium rate " << premium << " is not positive";
    throw ApproximationInapplicable("premium-positivity", os.str());
  }

  const double scale = a * mm.m3 / (3.0 * b * mm.m2);
  return SurrogateParams{
      .premium_rate = premium,
      .claim_intensity =
          9.0 * lambda * b * b * mm.m2 * mm.m2 * mm.m2 / (2.0 * a * a * a * mm.m3 * mm.m3),
      .claims_mean = mu1 * scale,
      .funds_mean = mu2 * scale,
  };
}

RuinFunction devylder_psi(const RiskModel& model) {
  if (!has_positive_margin(model)) return RuinFunction::certain();
  return exponential_pair_ruin(devylder_params(model));
}

std::array<double, 3> moment_match_residuals(const RiskModel& model,
                                             const SurrogateParams& s) {
  const double lambda = model.claim_intensity();
  const MixedMoments mm = mixed_moments(model);
  const double u = s.claims_mean;
  const double v = s.funds_mean;
  return {
      relative(net_profit_margin(model), s.margin()),
      relative(lambda * mm.m2, 2.0 * s.claim_intensity * (u * u - u * v + v * v)),
      relative(lambda * mm.m3,
               6.0 * s.claim_intensity * (u * u * u - u * u * v + u * v * v - v * v * v)),
  };
}

}  // namespace ruin
