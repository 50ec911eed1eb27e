#pragma once

#include <array>

#include "ruin/closed_form.hpp"
#include "ruin/model.hpp"

namespace ruin {

// Exponential/exponential surrogate (c~, lambda~, mu1~, mu2~).
using SurrogateParams = ExponentialModel;

/// Maps a model to the exponential/exponential surrogate that matches the
/// first three moments of U_t and keeps the claim/fund mean ratio.
///
/// With a = mu1^2 - mu1 mu2 + mu2^2, b = mu1^3 - mu1^2 mu2 + mu1 mu2^2 - mu2^3
/// and m2, m3 the mixed moments of xi - eta:
///
///   mu1~     = mu1 a m3 / (3 b m2)
///   mu2~     = mu2 a m3 / (3 b m2)
///   lambda~  = 9 lambda b^2 m2^3 / (2 a^3 m3^2)
///   c~       = c - lambda (mu1 - mu2) (1 - 3 b m2^2 / (2 a^2 m3))
///
/// Gates, checked before any division:
///   net profit margin > 0                    gate "margin"
///   mu1 != mu2                               DegenerateRatio, gate "ratio"
///   b m3 > 0  (positive surrogate means)     gate "mean-positivity"
///   c~ > 0                                   gate "premium-positivity"
///
/// mu2 = 0 is allowed: the formulas reduce to the classical three-moment
/// De Vylder fit and the surrogate has mu2~ = 0.
SurrogateParams devylder_params(const RiskModel& model);

/// psi_DV as the exact ruin function of the surrogate. Nonpositive margin
/// gives RuinFunction::certain().
RuinFunction devylder_psi(const RiskModel& model);

/// Relative residuals of the three moment equations
///   c - lambda (mu1 - mu2)   = c~ - lambda~ (mu1~ - mu2~)
///   lambda m2                = 2 lambda~ (mu1~^2 - mu1~ mu2~ + mu2~^2)
///   lambda m3                = 6 lambda~ (mu1~^3 - mu1~^2 mu2~ + mu1~ mu2~^2 - mu2~^3)
std::array<double, 3> moment_match_residuals(const RiskModel& model,
                                             const SurrogateParams& surrogate);

}  // namespace ruin
