// ruinprob: ruin probabilities for the compound Poisson risk model with
// additional funds at claim epochs.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ruin/closed_form.hpp"
#include "ruin/config.hpp"
#include "ruin/devylder.hpp"
#include "ruin/errors.hpp"
#include "ruin/lundberg.hpp"
#include "ruin/montecarlo.hpp"
#include "ruin/report.hpp"

namespace {

using nlohmann::json;
using ruin::format_fixed;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kConfig = 2,
  kInapplicable = 3,
  kNumerical = 4,
};

struct Options {
  std::string config_path;
  std::string output = "csv";
  bool as_json = false;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> paths;
  std::vector<double> xs;
  std::optional<unsigned> threads;
  double epsilon = 0.001;
  double delta = 0.001;
};

std::vector<double> grid(const Options& opt, const ruin::ModelConfig& cfg) {
  return opt.xs.empty() ? cfg.x_grid : opt.xs;
}

json ruin_function_json(const ruin::RuinFunction& rf) {
  return {{"coefficient", rf.coefficient}, {"rate", rf.rate}, {"certain", rf.is_certain()}};
}

std::string ruin_function_text(const ruin::RuinFunction& rf, const char* name) {
  if (rf.is_certain()) return std::string(name) + " = 1 for all x (net profit margin <= 0)";
  return std::string(name) + " = " + format_fixed(rf.coefficient, 6) + " * exp(" +
         format_fixed(rf.rate, 6) + " x)";
}

int cmd_plan(const Options& opt) {
  const std::uint64_t n = ruin::hoeffding_n(opt.epsilon, opt.delta);
  if (opt.as_json) {
    std::cout << json{{"epsilon", opt.epsilon}, {"delta", opt.delta}, {"n", n}}.dump(2) << '\n';
  } else {
    std::cout << "N = " << n << '\n';
  }
  return kOk;
}

int cmd_bound(const Options& opt, const ruin::ModelConfig& cfg) {
  const auto model = cfg.model();
  const auto xs = grid(opt, cfg);
  try {
    const auto res = ruin::adjustment_coefficient(model);
    if (opt.as_json) {
      json values = json::array();
      for (double x : xs) values.push_back({{"x", x}, {"bound", ruin::lundberg_bound(res.r_hat, x)}});
      std::cout << json{{"r_hat", res.r_hat},
                        {"bracket", {res.bracket_low, res.bracket_high}},
                        {"residual", res.residual},
                        {"iterations", res.iterations},
                        {"bound", values}}
                       .dump(2)
                << '\n';
    } else {
      std::cout << "R_hat = " << format_fixed(res.r_hat, 6) << '\n'
                << "bracket = [" << format_fixed(res.bracket_low, 12) << ", "
                << format_fixed(res.bracket_high, 12) << "], residual = " << res.residual
                << ", iterations = " << res.iterations << '\n';
      for (double x : xs) {
        std::cout << "x = " << format_fixed(x, 6)
                  << "  exp(-R_hat x) = " << format_fixed(ruin::lundberg_bound(res.r_hat, x), 6)
                  << '\n';
      }
    }
    return kOk;
  } catch (const ruin::NoPositiveRoot& e) {
    if (opt.as_json) {
      std::cout << json{{"error", "no_positive_root"}, {"message", e.what()}, {"psi", 1.0}}.dump(2)
                << '\n';
    } else {
      std::cerr << "no positive root: " << e.what() << '\n';
      std::cout << "psi(x) = 1 for all x (net profit margin <= 0)\n";
    }
    return kInapplicable;
  } catch (const ruin::BracketFailure& e) {
    std::cerr << "bracketing failed: " << e.what() << '\n';
    return kNumerical;
  }
}

int cmd_devylder(const Options& opt, const ruin::ModelConfig& cfg) {
  const auto model = cfg.model();
  const auto xs = grid(opt, cfg);
  try {
    const auto rf = ruin::devylder_psi(model);
    json out = {{"psi_dv", ruin_function_json(rf)}};
    if (!rf.is_certain()) {
      const auto s = ruin::devylder_params(model);
      const auto res = ruin::moment_match_residuals(model, s);
      out["surrogate"] = {{"premium_rate", s.premium_rate},
                          {"claim_intensity", s.claim_intensity},
                          {"claims_mean", s.claims_mean},
                          {"funds_mean", s.funds_mean}};
      out["moment_residuals"] = res;
      if (!opt.as_json) {
        std::cout << ruin_function_text(rf, "psi_DV(x)") << '\n'
                  << "surrogate: c~ = " << format_fixed(s.premium_rate, 9)
                  << ", lambda~ = " << format_fixed(s.claim_intensity, 9)
                  << ", mu1~ = " << format_fixed(s.claims_mean, 9)
                  << ", mu2~ = " << format_fixed(s.funds_mean, 9) << '\n';
      }
    } else if (!opt.as_json) {
      std::cout << ruin_function_text(rf, "psi_DV(x)") << '\n';
    }
    json values = json::array();
    for (double x : xs) {
      const double v = ruin::evaluate(rf, x);
      values.push_back({{"x", x}, {"psi_dv", v}});
      if (!opt.as_json) std::cout << "x = " << format_fixed(x, 6) << "  psi_DV = " << format_fixed(v, 6) << '\n';
    }
    out["values"] = values;
    if (opt.as_json) std::cout << out.dump(2) << '\n';
    return kOk;
  } catch (const ruin::ApproximationInapplicable& e) {
    if (opt.as_json) {
      std::cout << json{{"error", "inapplicable"}, {"gate", e.gate()}, {"message", e.what()}}.dump(2)
                << '\n';
    } else {
      std::cerr << "De Vylder approximation inapplicable (" << e.gate() << "): " << e.what() << '\n';
    }
    return kInapplicable;
  }
}

int cmd_exact(const Options& opt, const ruin::ModelConfig& cfg) {
  const auto model = cfg.model();
  const auto xs = grid(opt, cfg);
  try {
    const auto rf = ruin::exact_exponential_ruin(model);
    json values = json::array();
    if (!opt.as_json) std::cout << ruin_function_text(rf, "psi(x)") << '\n';
    for (double x : xs) {
      const double v = ruin::evaluate(rf, x);
      values.push_back({{"x", x}, {"psi", v}});
      if (!opt.as_json) std::cout << "x = " << format_fixed(x, 6) << "  psi = " << format_fixed(v, 6) << '\n';
    }
    if (opt.as_json) {
      std::cout << json{{"psi", ruin_function_json(rf)}, {"values", values}}.dump(2) << '\n';
    }
    return kOk;
  } catch (const ruin::UnsupportedModel& e) {
    if (opt.as_json) {
      std::cout << json{{"error", "unsupported_model"}, {"message", e.what()}}.dump(2) << '\n';
    } else {
      std::cerr << "exact solution inapplicable: " << e.what() << '\n';
    }
    return kInapplicable;
  }
}

int cmd_simulate(const Options& opt, const ruin::ModelConfig& cfg) {
  const auto model = cfg.model();
  const auto xs = grid(opt, cfg);
  const std::uint64_t paths = opt.paths.value_or(ruin::planned_paths(cfg.mc));
  const std::uint64_t seed = opt.seed.value_or(cfg.mc.seed);
  if (paths == 0) {
    std::cerr << "simulation needs at least one path\n";
    return kUsage;
  }
  ruin::GridPlan plan{.n_paths = paths, .seed = seed, .headroom = cfg.mc.surplus_headroom,
                      .max_claims = cfg.mc.claim_cap.value_or(ruin::kDefaultMaxClaims),
                      .threads = opt.threads.value_or(cfg.mc.threads)};
  if (!plan.headroom && !cfg.mc.claim_cap) plan.headroom = ruin::default_headroom(model, cfg.mc.cap_bias);
  const auto results = ruin::estimate_ruin_grid(model, xs, plan);

  if (opt.as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto& r = results[i];
      rows.push_back({{"x", xs[i]},
                      {"psi_hat", r.psi_hat},
                      {"ruined", r.ruined},
                      {"n_paths", r.n_paths},
                      {"hoeffding_radius", r.hoeffding_radius(cfg.mc.delta)},
                      {"truncated_paths", r.truncated_paths},
                      {"analytic", r.analytic}});
    }
    json out = {{"seed", seed}, {"paths", paths}, {"delta", cfg.mc.delta}, {"results", rows}};
    if (plan.headroom) out["surplus_headroom"] = *plan.headroom;
    else out["claim_cap"] = plan.max_claims;
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "# seed: " << seed << "\n# paths: " << paths << '\n';
  if (plan.headroom) {
    std::cout << "# truncation: surplus cap at x + " << format_fixed(*plan.headroom, 6) << '\n';
  } else {
    std::cout << "# truncation: claim cap " << plan.max_claims << '\n';
  }
  std::cout << "x,psi_hat,ruined,n_paths,hoeffding_radius,truncated_paths\n";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& r = results[i];
    std::cout << format_fixed(xs[i], 6) << ',' << format_fixed(r.psi_hat, 6) << ',' << r.ruined
              << ',' << r.n_paths << ',' << format_fixed(r.hoeffding_radius(cfg.mc.delta), 6) << ','
              << r.truncated_paths << '\n';
  }
  return kOk;
}

int cmd_table(const Options& opt, const ruin::ModelConfig& cfg) {
  ruin::TableOptions t{.paths = opt.paths, .seed = opt.seed, .x_grid = std::nullopt,
                       .threads = opt.threads};
  if (!opt.xs.empty()) t.x_grid = opt.xs;
  const auto table = ruin::build_table(cfg, t);
  std::cout << (opt.output == "markdown" ? ruin::render_markdown(table) : ruin::render_csv(table));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ruin probabilities for a compound Poisson risk model with additional funds"};
  app.require_subcommand(1);
  Options opt;

  auto add_model_flags = [&](CLI::App* sub) {
    sub->add_option("--config", opt.config_path, "Model config (JSON)")->required();
    sub->add_flag("--json", opt.as_json, "Emit a machine-readable record");
    sub->add_option("--x", opt.xs, "Initial surplus (repeatable)")->check(CLI::NonNegativeNumber);
  };
  auto add_mc_flags = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--paths", opt.paths, "Number of paths")->check(CLI::PositiveNumber);
    sub->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
  };

  auto* plan = app.add_subcommand("plan", "Hoeffding sample size for accuracy epsilon, confidence delta");
  plan->add_option("--epsilon", opt.epsilon, "Accuracy")->check(CLI::PositiveNumber);
  plan->add_option("--delta", opt.delta, "Failure probability bound")->check(CLI::PositiveNumber);
  plan->add_flag("--json", opt.as_json, "Emit JSON");

  auto* bound = app.add_subcommand("bound", "Adjustment coefficient and exponential bound");
  add_model_flags(bound);
  auto* devylder = app.add_subcommand("devylder", "De Vylder-type approximation");
  add_model_flags(devylder);
  auto* exact = app.add_subcommand("exact", "Exact ruin probability (exponential/exponential)");
  add_model_flags(exact);
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo ruin estimate (CSV)");
  add_model_flags(simulate);
  add_mc_flags(simulate);
  auto* table = app.add_subcommand("table", "Comparison table of every method");
  add_model_flags(table);
  add_mc_flags(table);
  table->add_option("--output", opt.output, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (plan->parsed()) return cmd_plan(opt);

    std::optional<ruin::ModelConfig> loaded;
    try {
      loaded = ruin::load_config(opt.config_path);
    } catch (const ruin::ConfigError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kConfig;
    }
    const ruin::ModelConfig& cfg = *loaded;
    if (bound->parsed()) return cmd_bound(opt, cfg);
    if (devylder->parsed()) return cmd_devylder(opt, cfg);
    if (exact->parsed()) return cmd_exact(opt, cfg);
    if (simulate->parsed()) return cmd_simulate(opt, cfg);
    if (table->parsed()) return cmd_table(opt, cfg);
  } catch (const ruin::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
  return kUsage;
}
