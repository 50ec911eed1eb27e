#include "ruin/dist.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ruin/errors.hpp"

namespace ruin {
namespace {

DistributionSpec hyper_claims() {
  return DistributionSpec(Hyperexponential{{{0.4, 0.5}, {0.3, 2.0}, {0.3, 4.0}}});
}
DistributionSpec hyper_funds() {
  return DistributionSpec(Hyperexponential{{{0.75, 0.4}, {0.25, 0.8}}});
}

std::vector<DistributionSpec> all_families() {
  return {
      DistributionSpec(Exponential{2.0}),  DistributionSpec(Erlang{3, 2.0}),
      DistributionSpec(Erlang{2, 0.5}),    hyper_claims(),
      hyper_funds(),                       DistributionSpec(Degenerate{0.5}),
  };
}

// E[e^{rY}] on both sides of zero.
double two_sided_mgf(const DistributionSpec& spec, double r) {
  return r >= 0 ? mgf(spec, r) : neg_exp_moment(spec, -r);
}

TEST(DistributionSpec, RejectsInvalidParameters) {
  EXPECT_THROW(DistributionSpec(Exponential{0.0}), InvalidModel);
  EXPECT_THROW(DistributionSpec(Erlang{0, 1.0}), InvalidModel);
  EXPECT_THROW(DistributionSpec(Erlang{2, -1.0}), InvalidModel);
  EXPECT_THROW(DistributionSpec(Degenerate{-0.1}), InvalidModel);
  EXPECT_THROW(DistributionSpec(Hyperexponential{}), InvalidModel);
  EXPECT_THROW(DistributionSpec(Hyperexponential{{{0.5, 1.0}, {0.0, 2.0}, {0.5, 1.0}}}),
               InvalidModel);
  // Not renormalized.
  EXPECT_THROW(DistributionSpec(Hyperexponential{{{0.5, 1.0}, {0.49, 2.0}}}), InvalidModel);
  EXPECT_NO_THROW(DistributionSpec(Degenerate{0.0}));
}

TEST(DistributionSpec, MeanOfMixtureIsWeighted) {
  EXPECT_DOUBLE_EQ(hyper_claims().mean(), 0.4 * 0.5 + 0.3 * 2 + 0.3 * 4);
  EXPECT_DOUBLE_EQ(hyper_funds().mean(), 0.5);
}

TEST(RawMoment, ErlangSecondMomentAgainstQuadrature) {
  const DistributionSpec erlang(Erlang{3, 2.0});
  const double quad = oracle::integrate_half_line(
      [](double y) { return y * y * oracle::erlang_density(3, 2.0, y); });
  EXPECT_NEAR(quad, 16.0 / 3.0, 1e-10);
  EXPECT_NEAR(raw_moment(erlang, 2), quad, 1e-10);
}

TEST(RawMoment, ErlangThirdMomentAgainstQuadrature) {
  const DistributionSpec erlang(Erlang{2, 0.5});
  const double quad = oracle::integrate_half_line(
      [](double y) { return y * y * y * oracle::erlang_density(2, 0.5, y); });
  EXPECT_NEAR(raw_moment(erlang, 3), quad, 1e-11);
}

TEST(RawMoment, DegenerateAndMixture) {
  EXPECT_DOUBLE_EQ(raw_moment(DistributionSpec(Degenerate{0.5}), 3), 0.125);
  EXPECT_DOUBLE_EQ(raw_moment(hyper_funds(), 1), 0.5);
  EXPECT_DOUBLE_EQ(raw_moment(DistributionSpec(Exponential{2.0}), 3), 48.0);
}

TEST(RawMoment, RejectsUnsupportedOrder) {
  EXPECT_THROW(raw_moment(DistributionSpec(Exponential{1.0}), 0), DomainError);
  EXPECT_THROW(raw_moment(DistributionSpec(Exponential{1.0}), 4), DomainError);
}

TEST(Mgf, Values) {
  EXPECT_DOUBLE_EQ(mgf(DistributionSpec(Exponential{2.0}), 0.25), 2.0);
  EXPECT_EQ(mgf(DistributionSpec(Erlang{3, 2.0}), 0.0), 1.0);
  EXPECT_NEAR(mgf(hyper_claims(), 0.1), 0.4 / 0.95 + 0.3 / 0.8 + 0.3 / 0.6, 1e-15);
  EXPECT_NEAR(mgf(hyper_claims(), 0.1), 1.296053, 5e-7);
}

TEST(Mgf, HyperexponentialAgainstQuadrature) {
  const auto spec = hyper_claims();
  // Exponents combined so the integrand stays finite at infinity.
  const double quad = oracle::integrate_half_line([](double y) {
    double sum = 0;
    for (auto [w, m] : {std::pair{0.4, 0.5}, {0.3, 2.0}, {0.3, 4.0}}) {
      sum += w / m * std::exp(y * (0.1 - 1 / m));
    }
    return sum;
  });
  EXPECT_NEAR(mgf(spec, 0.1), quad, 1e-10);
}

TEST(Mgf, ExactlyOneAtZero) {
  for (const auto& spec : all_families()) {
    EXPECT_EQ(mgf(spec, 0.0), 1.0) << describe(spec);
    EXPECT_EQ(neg_exp_moment(spec, 0.0), 1.0) << describe(spec);
  }
}

TEST(Mgf, DomainIsOpen) {
  const DistributionSpec erlang(Erlang{3, 2.0});
  EXPECT_DOUBLE_EQ(mgf_domain_sup(erlang), 1.5);
  EXPECT_DOUBLE_EQ(mgf_domain_sup(hyper_claims()), 0.25);
  EXPECT_EQ(mgf_domain_sup(DistributionSpec(Degenerate{0.5})),
            std::numeric_limits<double>::infinity());
  EXPECT_THROW(mgf(erlang, 1.5), DomainError);
  EXPECT_THROW(mgf(erlang, 2.0), DomainError);
  EXPECT_THROW(mgf(erlang, -0.1), DomainError);
  EXPECT_NO_THROW(mgf(erlang, std::nextafter(1.5, 0.0)));
  try {
    mgf(hyper_claims(), 0.25);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("0.25"), std::string::npos) << e.what();
  }
}

TEST(Mgf, IncreasingAndConvexOnDomain) {
  for (const auto& spec : all_families()) {
    const double sup = std::min(mgf_domain_sup(spec), 10.0);
    const int n = 200;
    const double h = 0.999 * sup / n;
    double prev = mgf(spec, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
      const double r = i * h;
      const double here = mgf(spec, r);
      EXPECT_GT(here, prev) << describe(spec) << " r=" << r;
      const double second = mgf(spec, r + h) - 2 * here + mgf(spec, r - h);
      EXPECT_GE(second, -1e-12 * here) << describe(spec) << " r=" << r;
      prev = here;
    }
  }
}

TEST(Mgf, DerivativesAtZeroAreRawMoments) {
  for (const auto& spec : all_families()) {
    double scale = spec.mean();
    if (const auto* h = std::get_if<Hyperexponential>(&spec.family())) {
      for (const auto& c : h->components) scale = std::max(scale, c.mean);
    }
    const double h = 0.01 / scale;
    const auto f = [&](double r) { return two_sided_mgf(spec, r); };
    for (int order = 1; order <= 3; ++order) {
      // Richardson step on the central difference.
      const double coarse = oracle::derivative_at_zero(f, order, h);
      const double fine = oracle::derivative_at_zero(f, order, h / 2);
      const double estimate = (4 * fine - coarse) / 3;
      const double exact = raw_moment(spec, order);
      EXPECT_LT(std::abs(estimate - exact), 1e-5 * exact)
          << describe(spec) << " order " << order << " fd=" << estimate;
    }
  }
}

TEST(NegExpMoment, Values) {
  EXPECT_NEAR(neg_exp_moment(DistributionSpec(Degenerate{0.5}), 2.0), std::exp(-1.0), 1e-16);
  EXPECT_EQ(neg_exp_moment(DistributionSpec(Erlang{2, 0.5}), 0.0), 1.0);
  EXPECT_NEAR(neg_exp_moment(hyper_funds(), 1.0), 0.75 / 1.4 + 0.25 / 1.8, 1e-15);
  EXPECT_NEAR(neg_exp_moment(hyper_funds(), 1.0), 0.674603, 5e-7);
  EXPECT_EQ(neg_exp_moment(DistributionSpec(Degenerate{0.0}), 3.0), 1.0);
  EXPECT_LT(neg_exp_moment(DistributionSpec(Exponential{1e-3}), 1e-3), 1.0);
}

TEST(NegExpMoment, MixtureAgainstQuadrature) {
  const double quad = oracle::integrate_half_line([](double y) {
    return std::exp(-y) * (0.75 * oracle::exponential_density(0.4, y) +
                           0.25 * oracle::exponential_density(0.8, y));
  });
  EXPECT_NEAR(neg_exp_moment(hyper_funds(), 1.0), quad, 1e-12);
}

TEST(Sample, DegenerateIsConstant) {
  RandomStream stream(1);
  const DistributionSpec point(Degenerate{0.5});
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sample(point, stream), 0.5);
}

TEST(Sample, EmpiricalMomentsWithinFiveStandardErrors) {
  constexpr int kDraws = 1'000'000;
  std::uint64_t seed = 11;
  for (const auto& spec : all_families()) {
    RandomStream stream(seed++);
    oracle::Accumulator first, second;
    for (int i = 0; i < kDraws; ++i) {
      const double y = sample(spec, stream);
      ASSERT_GE(y, 0.0);
      first.add(y);
      second.add(y * y);
    }
    if (spec.is<Degenerate>()) {
      EXPECT_EQ(first.mean(), raw_moment(spec, 1));
      continue;
    }
    EXPECT_LT(std::abs(first.mean() - raw_moment(spec, 1)), 5 * first.standard_error())
        << describe(spec);
    EXPECT_LT(std::abs(second.mean() - raw_moment(spec, 2)), 5 * second.standard_error())
        << describe(spec);
  }
}

TEST(Sample, ExponentialMeanAndMixtureSecondMoment) {
  constexpr int kDraws = 1'000'000;
  RandomStream a(101), b(202);
  const DistributionSpec expo(Exponential{2.0});
  const auto funds = hyper_funds();
  double sum = 0, sum_sq = 0;
  for (int i = 0; i < kDraws; ++i) {
    sum += sample(expo, a);
    const double y = sample(funds, b);
    sum_sq += y * y;
  }
  EXPECT_NEAR(sum / kDraws, 2.0, 0.01);
  const double m2 = 2 * (0.75 * 0.16 + 0.25 * 0.64);
  EXPECT_NEAR(sum_sq / kDraws, m2, 0.02 * m2);
}

TEST(RandomStream, StreamsAreAddressable) {
  RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  const auto first = a();
  EXPECT_EQ(first, b());
  EXPECT_NE(first, c());
  EXPECT_NE(first, d());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform_open0();
    EXPECT_GT(u, 0.0);
    EXPECT_LE(u, 1.0);
  }
}

}  // namespace
}  // namespace ruin
