#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruin/dist.hpp"
#include "ruin/model.hpp"

namespace ruin {

// Malformed or unreadable configuration document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct McSettings {
  double epsilon = 0.001;
  double delta = 0.001;
  std::uint64_t seed = 20150202;
  std::optional<std::uint64_t> paths;      // overrides the Hoeffding N
  std::optional<double> surplus_headroom;  // cap level = x + headroom
  std::optional<std::uint64_t> claim_cap;  // used when no headroom applies
  double cap_bias = 1e-6;                  // default headroom ln(1/bias)/R_hat
  unsigned threads = 0;

  bool operator==(const McSettings&) const = default;
};

struct ModelConfig {
  double premium_rate;
  double claim_intensity;
  DistributionSpec claims;
  DistributionSpec funds;
  std::vector<double> x_grid;
  McSettings mc;

  RiskModel model() const;
  bool operator==(const ModelConfig&) const = default;
};

/// Parses the JSON config schema (see README). Throws ConfigError for
/// malformed documents; invalid parameters surface as ConfigError too.
ModelConfig parse_config(const std::string& json_text);
ModelConfig load_config(const std::filesystem::path& path);

/// Canonical JSON form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ModelConfig& config);

}  // namespace ruin
