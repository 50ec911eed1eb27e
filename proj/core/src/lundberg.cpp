#include "ruin/lundberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "ruin/closed_form.hpp"
#include "ruin/errors.hpp"

namespace ruin {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryShrink = 1e-9;
constexpr int kMaxExpansions = 2100;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
};

}  // namespace

double lundberg_function(const RiskModel& model, double r) {
  if (r == 0.0) return 0.0;
  if (!(r < mgf_domain_sup(model.claims()))) return kInf;
  const double h = mgf(model.claims(), r);
  if (!std::isfinite(h)) return kInf;
  const double value =
      model.claim_intensity() * (h * neg_exp_moment(model.funds(), r) - 1.0) -
      model.premium_rate() * r;
  return std::isnan(value) ? kInf : value;
}

AdjustmentResult adjustment_coefficient(const RiskModel& model, double tol) {
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  const double margin = net_profit_margin(model);
  if (!(margin > 0.0)) {
    std::ostringstream os;
    os << "net profit margin " << margin << " <= 0: the Lundberg equation has no positive root";
    throw NoPositiveRoot(os.str());
  }

  const double sup = mgf_domain_sup(model.claims());
  const double cap = std::isfinite(sup) ? (1.0 - kBoundaryShrink) * sup : kInf;

  // Expansion toward the boundary: halve the remaining gap for a finite
  // supremum, double the point for an infinite one.
  std::vector<double> scanned;
  double low = 0.0;
  double high = std::isfinite(sup) ? 0.5 * sup : 1.0;
  for (int i = 0;; ++i) {
    scanned.push_back(high);
    const double g = lundberg_function(model, high);
    if (g > 0.0) break;
    low = high;
    const double next = std::isfinite(sup) ? std::min(cap, high + 0.5 * (sup - high)) : 2.0 * high;
    if (next <= high || i >= kMaxExpansions || !std::isfinite(next)) {
      std::ostringstream os;
      os.precision(12);
      os << "no sign change of the Lundberg function in (0, " << sup << "); scanned:";
      for (double s : scanned) os << ' ' << s;
      throw BracketFailure(os.str());
    }
    high = next;
  }

  AdjustmentResult result{.r_hat = high, .bracket_low = low, .bracket_high = high,
                          .residual = lundberg_function(model, high), .iterations = 0};
  double lo = low;
  double hi = high;
  double best = hi;
  double best_g = result.residual;
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g = lundberg_function(model, mid);
    ++result.iterations;
    if (std::abs(g) < std::abs(best_g)) {
      best = mid;
      best_g = g;
    }
    (g < 0.0 ? lo : hi) = mid;
    // |g| alone is a poor test when the margin, and hence g', is tiny.
    if (std::abs(g) < tol && hi - lo <= tol * hi) break;
  }
  result.r_hat = best;
  result.residual = best_g;
  return result;
}

double exp_exp_adjustment_closed_form(const RiskModel& model) {
  const ExponentialModel p = exponential_parameters(model);
  const double margin = p.margin();
  if (!(margin > 0.0)) {
    throw NoPositiveRoot("net profit margin <= 0: the cubic has no positive root");
  }
  const double c = p.premium_rate;
  const double mu1 = p.claims_mean;
  const double mu2 = p.funds_mean;
  const double b = p.claim_intensity * mu1 * mu2 + c * mu1 - c * mu2;
  const double disc = c * c * (mu1 * mu1 + mu2 * mu2) +
                      p.claim_intensity * p.claim_intensity * mu1 * mu1 * mu2 * mu2 +
                      2.0 * c * mu1 * mu2 * margin;
  const double root = std::sqrt(disc);
  // (sqrt(A) - B) / (2 c mu1 mu2), rationalized when B >= 0.
  return b >= 0.0 ? 2.0 * margin / (b + root) : (root - b) / (2.0 * c * mu1 * mu2);
}

double lundberg_bound(double r_hat, double x) {
  if (!(r_hat >= 0.0)) throw DomainError("adjustment coefficient must be nonnegative");
  if (!(x >= 0.0)) throw DomainError("bound evaluated at negative surplus");
  return std::exp(-r_hat * x);
}

double expected_exponential_process(const RiskModel& model, double r, double t) {
  return std::exp(t * lundberg_function(model, r));
}

MartingaleSample martingale_self_test(const RiskModel& model, double r, double t,
                                      std::uint64_t n, std::uint64_t seed, unsigned threads) {
  if (n == 0) throw DomainError("martingale self-test needs at least one sample");
  if (!(t > 0.0)) throw DomainError("horizon must be positive");
  if (r == 0.0) return {.mean = 1.0, .standard_error = 0.0, .samples = n};

  const double c = model.premium_rate();
  const double lambda = model.claim_intensity();
  auto one = [&](std::uint64_t i) {
    RandomStream stream(seed, i);
    double clock = -std::log(stream.uniform_open0()) / lambda;
    double outflow = 0.0;
    while (clock <= t) {
      outflow += sample(model.claims(), stream);
      outflow -= sample(model.funds(), stream);
      clock += -std::log(stream.uniform_open0()) / lambda;
    }
    return std::exp(-r * (c * t - outflow));
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));
  // Fixed-size blocks reduced in index order keep the floating-point sum
  // independent of the thread count.
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  std::vector<Moments> partial(blocks);
  auto work = [&](unsigned worker) {
    for (std::uint64_t b = worker; b < blocks; b += threads) {
      Moments m;
      const std::uint64_t end = std::min(n, (b + 1) * kBlock);
      for (std::uint64_t i = b * kBlock; i < end; ++i) {
        const double v = one(i);
        m.sum += v;
        m.sum_sq += v * v;
      }
      partial[b] = m;
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
    work(0);
  }
  Moments total;
  for (const auto& m : partial) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double nn = static_cast<double>(n);
  const double mean = total.sum / nn;
  const double var = n > 1 ? std::max(0.0, (total.sum_sq - nn * mean * mean) / (nn - 1.0)) : 0.0;
  return {.mean = mean, .standard_error = std::sqrt(var / nn), .samples = n};
}

}  // namespace ruin
