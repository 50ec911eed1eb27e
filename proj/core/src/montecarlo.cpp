#include "ruin/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "ruin/errors.hpp"
#include "ruin/lundberg.hpp"

namespace ruin {
namespace {

unsigned resolve_threads(unsigned requested, std::uint64_t work) {
  unsigned t = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::clamp<std::uint64_t>(work, 1, t));
}

// Runs fn(worker, begin, end) over fixed blocks of [0, n), round-robin.
template <class Fn>
void parallel_blocks(std::uint64_t n, unsigned threads, Fn&& fn) {
  constexpr std::uint64_t kBlock = 1 << 14;
  const std::uint64_t blocks = (n + kBlock - 1) / kBlock;
  threads = resolve_threads(threads, blocks);
  auto work = [&](unsigned worker) {
    for (std::uint64_t b = worker; b < blocks; b += threads) {
      fn(worker, b * kBlock, std::min(n, (b + 1) * kBlock));
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work, w);
  work(0);
}

double interarrival(double lambda, RandomStream& stream) {
  return -std::log(stream.uniform_open0()) / lambda;
}

SimResult certain_ruin() {
  return SimResult{.ruined = 0, .n_paths = 0, .psi_hat = 1.0, .truncated_paths = 0,
                   .analytic = true};
}

}  // namespace

double SimResult::hoeffding_radius(double delta) const {
  if (!(delta > 0.0)) throw DomainError("confidence parameter delta must be positive");
  if (n_paths == 0) return analytic ? 0.0 : std::numeric_limits<double>::infinity();
  if (delta >= 2.0) return 0.0;
  return std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(n_paths)));
}

std::uint64_t hoeffding_n(double epsilon, double delta) {
  if (!(epsilon > 0.0)) throw DomainError("hoeffding_n: epsilon must be positive");
  if (!(delta > 0.0)) throw DomainError("hoeffding_n: delta must be positive");
  if (delta >= 2.0) return 0;
  const double exact = std::log(2.0 / delta) / (2.0 * epsilon * epsilon);
  auto n = static_cast<std::uint64_t>(std::ceil(exact));
  // Guard the ceiling against rounding in the logarithm.
  auto holds = [&](std::uint64_t k) {
    return 2.0 * std::exp(-2.0 * epsilon * epsilon * static_cast<double>(k)) <= delta;
  };
  while (n > 0 && holds(n - 1)) --n;
  while (!holds(n)) ++n;
  return n;
}

PathOutcome simulate_path(const RiskModel& model, double x, const Truncation& truncation,
                          RandomStream& stream) {
  const double c = model.premium_rate();
  const double lambda = model.claim_intensity();
  const auto* surplus_cap = std::get_if<SurplusCap>(&truncation);
  const auto* claim_cap = std::get_if<ClaimCap>(&truncation);

  // Accumulate U_i separately from x so every x sees the same rounding.
  double gap = 0.0;
  for (std::uint64_t i = 1;; ++i) {
    gap += c * interarrival(lambda, stream);
    gap -= sample(model.claims(), stream);
    gap += sample(model.funds(), stream);
    if (x + gap < 0.0) return Ruined{i};
    if (surplus_cap && x + gap >= surplus_cap->level) {
      return Survived{Survived::Reason::surplus_cap, i};
    }
    if (claim_cap && i >= claim_cap->max_claims) {
      return Survived{Survived::Reason::claim_cap, i};
    }
  }
}

std::optional<double> default_headroom(const RiskModel& model, double bias) {
  if (!(bias > 0.0 && bias < 1.0)) throw DomainError("cap bias must lie in (0, 1)");
  if (!has_positive_margin(model)) return std::nullopt;
  try {
    return std::log(1.0 / bias) / adjustment_coefficient(model).r_hat;
  } catch (const BracketFailure&) {
    return std::nullopt;
  }
}

Truncation default_truncation(const RiskModel& model, double x, double bias) {
  if (auto headroom = default_headroom(model, bias)) return SurplusCap{x + *headroom};
  return ClaimCap{kDefaultMaxClaims};
}

SimResult estimate_ruin(const RiskModel& model, const SimPlan& plan) {
  if (!(plan.x >= 0.0)) throw DomainError("initial surplus must be nonnegative");
  if (plan.n_paths == 0) throw DomainError("simulation needs at least one path");
  if (const auto* cap = std::get_if<SurplusCap>(&plan.truncation); cap && !(cap->level > plan.x)) {
    throw DomainError("surplus cap level must exceed the initial surplus");
  }
  if (const auto* cap = std::get_if<ClaimCap>(&plan.truncation); cap && cap->max_claims == 0) {
    throw DomainError("claim cap must be positive");
  }
  if (!has_positive_margin(model)) return certain_ruin();

  const unsigned threads = resolve_threads(plan.threads, plan.n_paths);
  std::vector<std::uint64_t> ruined(threads, 0);
  parallel_blocks(plan.n_paths, threads, [&](unsigned worker, std::uint64_t begin,
                                             std::uint64_t end) {
    std::uint64_t local = 0;
    for (std::uint64_t j = begin; j < end; ++j) {
      RandomStream stream(plan.seed, j);
      if (std::holds_alternative<Ruined>(simulate_path(model, plan.x, plan.truncation, stream))) {
        ++local;
      }
    }
    ruined[worker] += local;
  });

  SimResult result;
  result.n_paths = plan.n_paths;
  for (auto r : ruined) result.ruined += r;
  result.truncated_paths = result.n_paths - result.ruined;
  result.psi_hat = static_cast<double>(result.ruined) / static_cast<double>(result.n_paths);
  return result;
}

std::vector<SimResult> estimate_ruin_grid(const RiskModel& model, std::span<const double> xs,
                                          const GridPlan& plan) {
  if (xs.empty()) throw DomainError("x grid must be nonempty");
  if (!std::is_sorted(xs.begin(), xs.end())) throw DomainError("x grid must be sorted");
  if (!(xs.front() >= 0.0)) throw DomainError("initial surplus must be nonnegative");
  if (plan.n_paths == 0) throw DomainError("simulation needs at least one path");
  if (plan.headroom && !(*plan.headroom > 0.0)) throw DomainError("headroom must be positive");
  if (!plan.headroom && plan.max_claims == 0) throw DomainError("claim cap must be positive");

  if (!has_positive_margin(model)) return std::vector<SimResult>(xs.size(), certain_ruin());

  const std::size_t k = xs.size();
  const double c = model.premium_rate();
  const double lambda = model.claim_intensity();
  const double headroom = plan.headroom.value_or(0.0);
  const bool surplus_capped = plan.headroom.has_value();

  const unsigned threads = resolve_threads(plan.threads, plan.n_paths);
  // first_alive[w][m]: paths whose ruined set was exactly xs[0..m).
  std::vector<std::vector<std::uint64_t>> first_alive(threads,
                                                      std::vector<std::uint64_t>(k + 1, 0));
  parallel_blocks(plan.n_paths, threads, [&](unsigned worker, std::uint64_t begin,
                                             std::uint64_t end) {
    auto& hist = first_alive[worker];
    for (std::uint64_t j = begin; j < end; ++j) {
      RandomStream stream(plan.seed, j);
      double gap = 0.0;  // U_i
      std::size_t lo = 0;
      for (std::uint64_t i = 1;; ++i) {
        gap += c * interarrival(lambda, stream);
        gap -= sample(model.claims(), stream);
        gap += sample(model.funds(), stream);
        while (lo < k && xs[lo] + gap < 0.0) ++lo;
        if (lo == k) break;
        if (surplus_capped ? gap >= headroom : i >= plan.max_claims) break;
      }
      ++hist[lo];
    }
  });

  std::vector<std::uint64_t> hist(k + 1, 0);
  for (const auto& h : first_alive) {
    for (std::size_t m = 0; m <= k; ++m) hist[m] += h[m];
  }
  std::vector<SimResult> results(k);
  std::uint64_t ruined_beyond = 0;  // paths with lo > m
  for (std::size_t m = k; m-- > 0;) {
    ruined_beyond += hist[m + 1];
    SimResult& r = results[m];
    r.n_paths = plan.n_paths;
    r.ruined = ruined_beyond;
    r.truncated_paths = r.n_paths - r.ruined;
    r.psi_hat = static_cast<double>(r.ruined) / static_cast<double>(r.n_paths);
  }
  return results;
}

}  // namespace ruin
