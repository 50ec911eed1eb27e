#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ruin/config.hpp"

namespace ruin {

struct ComparisonRow {
  double x;
  std::optional<double> psi_hat;
  std::optional<double> psi_dv;
  std::optional<double> dv_rel_pct;  // (psi_dv / psi_hat - 1) * 100
  std::optional<double> lundberg;    // e^{-R_hat x}
  std::optional<double> bound_rel_pct;
  std::optional<double> exact;       // exponential/exponential models only
};

struct ComparisonTable {
  // Ordered key/value metadata rendered as the header block.
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<ComparisonRow> rows;
  bool has_exact = false;
};

struct TableOptions {
  std::optional<std::uint64_t> paths;  // overrides config / Hoeffding N
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> x_grid;
  std::optional<unsigned> threads;
};

/// Number of Monte Carlo paths a config asks for.
std::uint64_t planned_paths(const McSettings& mc);

/// Runs every method over the x grid. A method that does not apply leaves
/// its column empty and records the reason in the header; a nonpositive
/// margin sets every probability column to 1.
ComparisonTable build_table(const ModelConfig& config, const TableOptions& options = {});

/// Header as '#'-prefixed lines, then
/// x,psi_hat,psi_dv,dv_rel_pct,lundberg,bound_rel_pct[,exact].
std::string render_csv(const ComparisonTable& table);

/// Pipe table in the column order of the CSV.
std::string render_markdown(const ComparisonTable& table);

// Fixed-point formatting used by every renderer ("-0.000000" prints as
// "0.000000").
std::string format_fixed(double value, int decimals);

}  // namespace ruin
