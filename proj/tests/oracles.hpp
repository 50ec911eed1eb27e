#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <functional>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include "ruin/random.hpp"

namespace ruin::oracle {

// Integral of f over [0, inf).
inline double integrate_half_line(const std::function<double(double)>& f) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, 0.0, std::numeric_limits<double>::infinity(), 15, 1e-13);
}

inline double erlang_density(int k, double mean, double y) {
  const double rate = k / mean;
  return std::exp(k * std::log(rate) + (k - 1) * std::log(y) - rate * y - std::lgamma(k));
}

inline double exponential_density(double mean, double y) { return std::exp(-y / mean) / mean; }

// Root of f on [lo, hi] by Boost's bisection (sign change required).
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  auto [a, b] = boost::math::tools::bisect(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(50));
  return 0.5 * (a + b);
}

// n-th derivative at 0 by central differences (n = 1, 2, 3).
inline double derivative_at_zero(const std::function<double(double)>& f, int n, double h) {
  switch (n) {
    case 1:
      return (f(h) - f(-h)) / (2 * h);
    case 2:
      return (f(h) - 2 * f(0) + f(-h)) / (h * h);
    default:
      return (f(2 * h) - 2 * f(h) + 2 * f(-h) - f(-2 * h)) / (2 * h * h * h);
  }
}

// Running mean and standard error.
struct Accumulator {
  double n = 0, sum = 0, sum_sq = 0;
  void add(double v) {
    n += 1;
    sum += v;
    sum_sq += v * v;
  }
  double mean() const { return sum / n; }
  double standard_error() const {
    const double m = mean();
    return std::sqrt(std::max(0.0, sum_sq / n - m * m) / n);
  }
};

}  // namespace ruin::oracle
