#include "ruin/closed_form.hpp"

#include <cassert>
#include <cmath>

#include "ruin/errors.hpp"

namespace ruin {

double evaluate(const RuinFunction& rf, double x) {
  if (!(x >= 0.0)) throw DomainError("ruin function evaluated at negative surplus");
  const double value = rf.coefficient * std::exp(rf.rate * x);
  assert(value >= 0.0 && value <= 1.0);
  return value;
}

RuinFunction exponential_pair_ruin(const ExponentialModel& p) {
  const double c = p.premium_rate;
  const double lambda = p.claim_intensity;
  const double mu1 = p.claims_mean;
  const double mu2 = p.funds_mean;
  const double margin = p.margin();
  if (!(margin > 0.0)) return RuinFunction::certain();

  const double b = lambda * mu1 * mu2 + c * mu1 - c * mu2;
  const double disc = c * c * (mu1 * mu1 + mu2 * mu2) + lambda * lambda * mu1 * mu1 * mu2 * mu2 +
                      2.0 * c * mu1 * mu2 * margin;
  const double root = std::sqrt(disc);
  const double alpha = b >= 0.0 ? -2.0 * margin / (b + root) : (b - root) / (2.0 * c * mu1 * mu2);

  const double one_minus = 1.0 - alpha * mu2;
  const double multiplier =
      lambda * mu1 * one_minus / ((c * alpha - lambda) * one_minus * (mu1 + mu2) + lambda * mu2);

  RuinFunction rf{.coefficient = -multiplier, .rate = alpha};
  assert(rf.rate < 0.0);
  assert(rf.coefficient > 0.0 && rf.coefficient <= 1.0);
  return rf;
}

ExponentialModel exponential_parameters(const RiskModel& model) {
  const auto* claims = std::get_if<Exponential>(&model.claims().family());
  const auto* funds = std::get_if<Exponential>(&model.funds().family());
  if (!claims || !funds) {
    throw UnsupportedModel(
        "closed form needs exponential claims and exponential funds, got " +
        describe(model.claims()) + " and " + describe(model.funds()));
  }
  return ExponentialModel{
      .premium_rate = model.premium_rate(),
      .claim_intensity = model.claim_intensity(),
      .claims_mean = claims->mean,
      .funds_mean = funds->mean,
  };
}

RuinFunction exact_exponential_ruin(const RiskModel& model) {
  return exponential_pair_ruin(exponential_parameters(model));
}

}  // namespace ruin
