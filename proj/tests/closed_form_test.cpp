#include "ruin/closed_form.hpp"

#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ruin/errors.hpp"
#include "ruin/lundberg.hpp"

namespace ruin {
namespace {

RiskModel exp_exp(double c, double lambda, double mu1, double mu2) {
  return RiskModel(c, lambda, DistributionSpec(Exponential{mu1}), DistributionSpec(Exponential{mu2}));
}

// Residual of c psi'(x) + lambda (E[psi(x - xi + eta)] - psi(x)) = 0, with
// psi = 1 below zero, evaluated by quadrature over the density of xi - eta.
double generator_residual(const ExponentialModel& p, const RuinFunction& rf, double x) {
  using boost::math::quadrature::gauss_kronrod;
  const double mu1 = p.claims_mean, mu2 = p.funds_mean;
  const double norm = 1.0 / (mu1 + mu2);
  auto psi = [&](double y) { return y < 0 ? 1.0 : rf.coefficient * std::exp(rf.rate * y); };
  auto density = [&](double z) { return norm * (z >= 0 ? std::exp(-z / mu1) : std::exp(z / mu2)); };
  auto integrand = [&](double z) { return psi(x - z) * density(z); };
  double expectation = gauss_kronrod<double, 61>::integrate(
      integrand, -std::numeric_limits<double>::infinity(), 0.0, 15, 1e-14);
  if (x > 0) expectation += gauss_kronrod<double, 61>::integrate(integrand, 0.0, x, 15, 1e-14);
  expectation += mu1 * norm * std::exp(-x / mu1);  // z > x: already ruined
  const double derivative = rf.rate * psi(x);
  return p.premium_rate * derivative + p.claim_intensity * (expectation - psi(x));
}

TEST(Evaluate, ProductForm) {
  EXPECT_NEAR(evaluate({0.612268, -0.332472}, 5.0), 0.116142, 5e-7);
  EXPECT_NEAR(evaluate({0.581428, -0.108865}, 25.0), 0.038239, 5e-7);
  EXPECT_EQ(evaluate(RuinFunction::certain(), 123.0), 1.0);
  EXPECT_THROW(evaluate({0.5, -1.0}, -1e-9), DomainError);
}

TEST(ExponentialPairRuin, ReferenceModel) {
  const auto rf = exact_exponential_ruin(exp_exp(10, 4, 2, 0.5));
  EXPECT_NEAR(rf.coefficient, 0.6174575578973345, 1e-14);
  EXPECT_NEAR(rf.rate, -(std::sqrt(521.0) - 19.0) / 20.0, 1e-15);
}

TEST(ExponentialPairRuin, SolvesTheGeneratorEquation) {
  const ExponentialModel p{10, 4, 2, 0.5};
  const auto rf = exponential_pair_ruin(p);
  for (double x : {0.0, 0.5, 1.0, 5.0, 20.0}) {
    EXPECT_NEAR(generator_residual(p, rf, x), 0.0, 1e-10) << "x=" << x;
  }
}

TEST(ExponentialPairRuin, ClassicalLimit) {
  const ExponentialModel classical{10, 4, 2, 0};
  const auto rf = exponential_pair_ruin(classical);
  EXPECT_NEAR(rf.coefficient, 0.8, 1e-14);
  EXPECT_NEAR(rf.rate, -(0.5 - 0.4), 1e-14);
  const auto near = exponential_pair_ruin({10, 4, 2, 1e-9});
  EXPECT_NEAR(near.coefficient, 0.8, 1e-8);
  EXPECT_NEAR(near.rate, -0.1, 1e-8);
}

TEST(ExponentialPairRuin, CertainRuinWithoutMargin) {
  EXPECT_TRUE(exponential_pair_ruin({6, 4, 2, 0.5}).is_certain());
  EXPECT_TRUE(exponential_pair_ruin({1, 4, 2, 0.5}).is_certain());
}

TEST(ExponentialPairRuin, SmallMarginStaysProper) {
  const auto rf = exponential_pair_ruin({6 + 1e-9, 4, 2, 0.5});
  EXPECT_LT(rf.rate, 0.0);
  EXPECT_GT(rf.rate, -1e-8);
  EXPECT_LE(rf.coefficient, 1.0);
  EXPECT_GT(rf.coefficient, 0.99);
}

TEST(ExponentialPairRuin, RandomModelsMatchRootAndBound) {
  std::mt19937_64 gen(20240501);
  std::uniform_real_distribution<double> unit(0.05, 5.0);
  int checked = 0;
  while (checked < 200) {
    const double mu1 = unit(gen), mu2 = unit(gen), lambda = unit(gen);
    const double c = lambda * (mu1 - mu2) + unit(gen);
    if (!(c > 0)) continue;
    const auto model = exp_exp(c, lambda, mu1, mu2);
    const auto rf = exact_exponential_ruin(model);
    const double r_hat = adjustment_coefficient(model).r_hat;
    ASSERT_NEAR(rf.rate, -r_hat, 1e-10 * std::max(1.0, r_hat));
    ASSERT_GT(rf.coefficient, 0.0);
    ASSERT_LE(rf.coefficient, 1.0);
    for (int x = 0; x <= 20; ++x) {
      ASSERT_LE(evaluate(rf, x), lundberg_bound(r_hat, x) * (1 + 1e-12));
    }
    ++checked;
  }
}

TEST(ExponentialParameters, RejectsOtherFamilies) {
  const RiskModel erlang(10, 4, DistributionSpec(Erlang{3, 2.0}), DistributionSpec(Exponential{0.5}));
  EXPECT_THROW(exponential_parameters(erlang), UnsupportedModel);
  EXPECT_THROW(exact_exponential_ruin(erlang), UnsupportedModel);
  const auto p = exponential_parameters(exp_exp(10, 4, 2, 0.5));
  EXPECT_EQ(p, (ExponentialModel{10, 4, 2, 0.5}));
  EXPECT_DOUBLE_EQ(p.margin(), 4.0);
}

}  // namespace
}  // namespace ruin
