#include "ruin/model.hpp"

#include <cmath>
#include <sstream>

#include "ruin/errors.hpp"

namespace ruin {

RiskModel::RiskModel(double premium_rate, double claim_intensity, DistributionSpec claims,
                     DistributionSpec funds)
    : premium_rate_(premium_rate),
      claim_intensity_(claim_intensity),
      claims_(std::move(claims)),
      funds_(std::move(funds)) {
  if (!(std::isfinite(premium_rate_) && premium_rate_ > 0.0)) {
    throw InvalidModel("premium rate must be positive");
  }
  if (!(std::isfinite(claim_intensity_) && claim_intensity_ > 0.0)) {
    throw InvalidModel("claim intensity must be positive");
  }
  if (!(claims_.mean() > 0.0)) {
    throw InvalidModel("mean claim size must be positive");
  }
}

std::vector<std::string> validation_warnings(const RiskModel& model) {
  std::vector<std::string> warnings;
  const auto* claim_point = std::get_if<Degenerate>(&model.claims().family());
  const auto* fund_point = std::get_if<Degenerate>(&model.funds().family());

  if (fund_point && fund_point->point == 0.0) {
    warnings.emplace_back("funds are identically zero: classical risk model");
  }
  if (claim_point && fund_point) {
    std::ostringstream os;
    if (claim_point->point <= fund_point->point) {
      os << "claims " << claim_point->point << " never exceed funds " << fund_point->point
         << ": P[xi - eta > 0] = 0 and ruin never occurs";
      warnings.push_back(os.str());
    } else if (fund_point->point != 0.0) {
      os << "xi - eta is the constant " << claim_point->point - fund_point->point
         << ": P[xi - eta < 0] = 0";
      warnings.push_back(os.str());
    }
  }
  return warnings;
}

double net_profit_margin(const RiskModel& model) {
  const double lambda = model.claim_intensity();
  return model.premium_rate() - lambda * model.claims().mean() + lambda * model.funds().mean();
}

MixedMoments mixed_moments(const RiskModel& model) {
  const auto& xi = model.claims();
  const auto& eta = model.funds();
  const double x1 = raw_moment(xi, 1), x2 = raw_moment(xi, 2), x3 = raw_moment(xi, 3);
  const double y1 = raw_moment(eta, 1), y2 = raw_moment(eta, 2), y3 = raw_moment(eta, 3);
  return MixedMoments{
      .m2 = x2 - 2.0 * x1 * y1 + y2,
      .m3 = x3 - 3.0 * x2 * y1 + 3.0 * x1 * y2 - y3,
  };
}

}  // namespace ruin
