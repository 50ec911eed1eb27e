#include "ruin/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ruin/closed_form.hpp"
#include "ruin/devylder.hpp"
#include "ruin/errors.hpp"
#include "ruin/lundberg.hpp"
#include "ruin/montecarlo.hpp"

namespace ruin {
namespace {

constexpr int kProbabilityDecimals = 6;
constexpr int kPercentDecimals = 2;

std::optional<double> relative_pct(std::optional<double> value, std::optional<double> reference) {
  if (!value || !reference || *reference == 0.0) return std::nullopt;
  return (*value / *reference - 1.0) * 100.0;
}

std::string cell(const std::optional<double>& v, int decimals) {
  return v ? format_fixed(*v, decimals) : "n/a";
}

std::string percent_cell(const std::optional<double>& v) {
  return v ? format_fixed(*v, kPercentDecimals) + "%" : "n/a";
}

}  // namespace

std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::uint64_t planned_paths(const McSettings& mc) {
  return mc.paths ? *mc.paths : hoeffding_n(mc.epsilon, mc.delta);
}

ComparisonTable build_table(const ModelConfig& config, const TableOptions& options) {
  const RiskModel model = config.model();
  const std::vector<double> xs = options.x_grid.value_or(config.x_grid);
  const std::uint64_t seed = options.seed.value_or(config.mc.seed);
  const std::uint64_t paths = options.paths.value_or(planned_paths(config.mc));
  const double margin = net_profit_margin(model);
  const bool certain = !(margin > 0.0);

  ComparisonTable table;
  auto& h = table.header;
  h.emplace_back("model", "c=" + format_fixed(model.premium_rate(), 6) +
                              " lambda=" + format_fixed(model.claim_intensity(), 6) +
                              " claims=" + describe(model.claims()) +
                              " funds=" + describe(model.funds()));
  h.emplace_back("net_profit_margin", format_fixed(margin, 6));
  for (const auto& w : validation_warnings(model)) h.emplace_back("warning", w);

  // Lundberg exponent.
  std::optional<double> r_hat;
  if (certain) {
    h.emplace_back("r_hat", "none (margin <= 0, psi = 1)");
  } else {
    try {
      r_hat = adjustment_coefficient(model).r_hat;
      h.emplace_back("r_hat", format_fixed(*r_hat, 9));
    } catch (const std::exception& e) {
      h.emplace_back("r_hat", std::string("n/a: ") + e.what());
    }
  }

  // De Vylder-type surrogate.
  std::optional<RuinFunction> dv;
  if (certain) {
    dv = RuinFunction::certain();
    h.emplace_back("psi_dv", "1 (margin <= 0)");
  } else {
    try {
      const SurrogateParams s = devylder_params(model);
      dv = exponential_pair_ruin(s);
      h.emplace_back("psi_dv", format_fixed(dv->coefficient, 6) + " * exp(" +
                                   format_fixed(dv->rate, 6) + " x)");
      h.emplace_back("dv_params", "c~=" + format_fixed(s.premium_rate, 9) +
                                      " lambda~=" + format_fixed(s.claim_intensity, 9) +
                                      " mu1~=" + format_fixed(s.claims_mean, 9) +
                                      " mu2~=" + format_fixed(s.funds_mean, 9));
    } catch (const ApproximationInapplicable& e) {
      h.emplace_back("psi_dv", std::string("n/a: ") + e.what());
    }
  }

  // Exact solution, exponential/exponential only.
  std::optional<RuinFunction> exact;
  if (model.claims().is<Exponential>() && model.funds().is<Exponential>()) {
    exact = exact_exponential_ruin(model);
    table.has_exact = true;
  }

  // Monte Carlo.
  std::vector<std::optional<double>> psi_hat(xs.size());
  h.emplace_back("seed", std::to_string(seed));
  h.emplace_back("paths", std::to_string(paths));
  if (certain) {
    h.emplace_back("truncation", "none (psi = 1 analytically)");
    for (auto& p : psi_hat) p = 1.0;
  } else if (paths > 0) {
    GridPlan plan{.n_paths = paths, .seed = seed, .headroom = config.mc.surplus_headroom,
                  .max_claims = config.mc.claim_cap.value_or(kDefaultMaxClaims),
                  .threads = options.threads.value_or(config.mc.threads)};
    if (!plan.headroom && !config.mc.claim_cap) plan.headroom = default_headroom(model, config.mc.cap_bias);
    if (plan.headroom) {
      h.emplace_back("truncation", "surplus cap at x + " + format_fixed(*plan.headroom, 6));
    } else {
      h.emplace_back("truncation", "claim cap " + std::to_string(plan.max_claims));
    }
    const auto results = estimate_ruin_grid(model, xs, plan);
    std::uint64_t truncated = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      psi_hat[i] = results[i].psi_hat;
      truncated = std::max(truncated, results[i].truncated_paths);
    }
    h.emplace_back("hoeffding_radius_delta_" + format_fixed(config.mc.delta, 6),
                   format_fixed(results.front().hoeffding_radius(config.mc.delta), 6));
    if (!plan.headroom) h.emplace_back("truncated_paths", std::to_string(truncated));
  }

  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    ComparisonRow row;
    row.x = x;
    row.psi_hat = psi_hat[i];
    if (dv) row.psi_dv = evaluate(*dv, x);
    if (certain) {
      row.lundberg = 1.0;
    } else if (r_hat) {
      row.lundberg = lundberg_bound(*r_hat, x);
    }
    if (exact) row.exact = evaluate(*exact, x);
    row.dv_rel_pct = relative_pct(row.psi_dv, row.psi_hat);
    row.bound_rel_pct = relative_pct(row.lundberg, row.psi_hat);
    table.rows.push_back(row);
  }
  return table;
}

std::string render_csv(const ComparisonTable& table) {
  std::ostringstream os;
  for (const auto& [key, value] : table.header) os << "# " << key << ": " << value << '\n';
  os << "x,psi_hat,psi_dv,dv_rel_pct,lundberg,bound_rel_pct";
  if (table.has_exact) os << ",exact";
  os << '\n';
  for (const auto& r : table.rows) {
    os << format_fixed(r.x, kProbabilityDecimals) << ',' << cell(r.psi_hat, kProbabilityDecimals)
       << ',' << cell(r.psi_dv, kProbabilityDecimals) << ',' << cell(r.dv_rel_pct, kPercentDecimals)
       << ',' << cell(r.lundberg, kProbabilityDecimals) << ','
       << cell(r.bound_rel_pct, kPercentDecimals);
    if (table.has_exact) os << ',' << cell(r.exact, kProbabilityDecimals);
    os << '\n';
  }
  return os.str();
}

std::string render_markdown(const ComparisonTable& table) {
  std::ostringstream os;
  for (const auto& [key, value] : table.header) os << "- **" << key << "**: " << value << '\n';
  os << '\n'
     << "| x | psi_hat(x) | psi_DV(x) | (psi_DV/psi_hat - 1)*100% | exp(-R_hat x) | "
        "(exp(-R_hat x)/psi_hat - 1)*100% |";
  if (table.has_exact) os << " exact psi(x) |";
  os << "\n|---:|---:|---:|---:|---:|---:|";
  if (table.has_exact) os << "---:|";
  os << '\n';
  for (const auto& r : table.rows) {
    os << "| " << format_fixed(r.x, 0 + (std::floor(r.x) != r.x ? kProbabilityDecimals : 0))
       << " | " << cell(r.psi_hat, kProbabilityDecimals) << " | "
       << cell(r.psi_dv, kProbabilityDecimals) << " | " << percent_cell(r.dv_rel_pct) << " | "
       << cell(r.lundberg, kProbabilityDecimals) << " | " << percent_cell(r.bound_rel_pct) << " |";
    if (table.has_exact) os << ' ' << cell(r.exact, kProbabilityDecimals) << " |";
    os << '\n';
  }
  return os.str();
}

}  // namespace ruin
