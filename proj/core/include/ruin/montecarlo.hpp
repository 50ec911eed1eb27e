#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ruin/model.hpp"
#include "ruin/random.hpp"

namespace ruin {

// Stop a path as survived once the surplus reaches `level`.
struct SurplusCap {
  double level;
  bool operator==(const SurplusCap&) const = default;
};

// Stop a path as survived after `max_claims` claims without ruin.
struct ClaimCap {
  std::uint64_t max_claims;
  bool operator==(const ClaimCap&) const = default;
};

using Truncation = std::variant<SurplusCap, ClaimCap>;

inline constexpr double kDefaultCapBias = 1e-6;
inline constexpr std::uint64_t kDefaultMaxClaims = 1'000'000;

struct SimPlan {
  std::uint64_t n_paths;
  std::uint64_t seed;
  Truncation truncation;
  double x;
  unsigned threads = 0;  // 0: hardware concurrency; never changes results
};

struct SimResult {
  std::uint64_t ruined = 0;
  std::uint64_t n_paths = 0;
  double psi_hat = 0.0;
  std::uint64_t truncated_paths = 0;
  // True when psi_hat = 1 was set without simulating (margin <= 0).
  bool analytic = false;

  /// eps with P[|psi - psi_hat| > eps] <= delta: sqrt(ln(2/delta) / (2N)).
  double hoeffding_radius(double delta) const;

  bool operator==(const SimResult&) const = default;
};

/// Smallest N with 2 exp(-2 eps^2 N) <= delta; 0 when delta >= 2.
std::uint64_t hoeffding_n(double epsilon, double delta);

struct Ruined {
  std::uint64_t at_claim;
};
struct Survived {
  enum class Reason { surplus_cap, claim_cap } reason;
  std::uint64_t claims;
};
using PathOutcome = std::variant<Ruined, Survived>;

/// One path of the claim-epoch skeleton S_i = x + c T_i - sum_{j <= i}(xi_j - eta_j).
/// Draw order per claim: inter-arrival time, claim, fund.
PathOutcome simulate_path(const RiskModel& model, double x, const Truncation& truncation,
                          RandomStream& stream);

/// Surplus cap x + ln(1/bias) / r_hat: by the Lundberg bound the ruin
/// probability after reaching it is at most bias * e^{-r_hat x}.
/// Falls back to ClaimCap{kDefaultMaxClaims} when no r_hat exists.
Truncation default_truncation(const RiskModel& model, double x, double bias = kDefaultCapBias);

/// Estimates psi(x) from plan.n_paths paths, path j using RandomStream(seed, j).
/// Nonpositive margin short-circuits to an analytic psi_hat = 1.
SimResult estimate_ruin(const RiskModel& model, const SimPlan& plan);

struct GridPlan {
  std::uint64_t n_paths;
  std::uint64_t seed;
  // Survival once the surplus exceeds x + headroom (SurplusCap relative to
  // each x); empty means only the claim cap applies.
  std::optional<double> headroom;
  std::uint64_t max_claims = kDefaultMaxClaims;
  unsigned threads = 0;
};

/// psi_hat for every x in xs from a single set of paths.
///
/// Each path follows U_i = c T_i - sum (xi - eta) from 0 and decides every
/// x at once: ruined when U drops below -x before U reaches the headroom
/// (or the claim cap when headroom is empty). Path j draws the same
/// variates as in estimate_ruin with the same seed, so xs[k] agrees with
/// estimate_ruin under SurplusCap{xs[k] + headroom} except for a path that
/// lands within rounding of the cap level.
std::vector<SimResult> estimate_ruin_grid(const RiskModel& model, std::span<const double> xs,
                                          const GridPlan& plan);

/// Headroom ln(1/bias) / r_hat used by default_truncation.
std::optional<double> default_headroom(const RiskModel& model, double bias = kDefaultCapBias);

}  // namespace ruin
