#pragma once

#include <cstdint>

#include "ruin/model.hpp"

namespace ruin {

struct AdjustmentResult {
  double r_hat;
  double bracket_low;
  double bracket_high;
  double residual;  // lundberg_function(model, r_hat)
  int iterations;
};

inline constexpr double kDefaultRootTolerance = 1e-12;

/// g(R) = lambda (E[e^{R xi}] E[e^{-R eta}] - 1) - c R.
///
/// Convex with g(0) = 0 and g'(0) = -margin; returns +inf at or beyond the
/// claims MGF domain and where the MGF overflows.
double lundberg_function(const RiskModel& model, double r);

/// Unique positive root of lundberg_function inside the claims MGF domain.
///
/// The upper end is expanded toward the domain supremum (geometrically,
/// capped at (1 - 1e-9) sup) until g turns positive, then the bracket is
/// bisected until both |g| < tol and the bracket is tol-relative narrow, or
/// the bracket collapses to adjacent doubles.
/// Throws NoPositiveRoot when the margin is not positive and
/// BracketFailure, listing the scanned points, when no sign change is found.
AdjustmentResult adjustment_coefficient(const RiskModel& model,
                                        double tol = kDefaultRootTolerance);

/// Positive root of c mu1 mu2 R^3 + (lambda mu1 mu2 + c mu1 - c mu2) R^2 -
/// margin R = 0 for exponential claims and funds, in closed form.
double exp_exp_adjustment_closed_form(const RiskModel& model);

/// e^{-r_hat x}, the upper bound on psi(x).
double lundberg_bound(double r_hat, double x);

struct MartingaleSample {
  double mean;
  double standard_error;
  std::uint64_t samples;
};

/// exp{t g(r)}: the exact expectation of e^{-r U_t}.
double expected_exponential_process(const RiskModel& model, double r, double t);

/// Monte Carlo mean of e^{-r U_t}, U_t = c t - sum_{i <= N_t} (xi_i - eta_i).
/// Sample i uses RandomStream(seed, i); the result does not depend on the
/// thread count (0 = hardware concurrency).
MartingaleSample martingale_self_test(const RiskModel& model, double r, double t,
                                      std::uint64_t n, std::uint64_t seed,
                                      unsigned threads = 0);

}  // namespace ruin
