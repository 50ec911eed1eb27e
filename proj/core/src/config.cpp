#include "ruin/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ruin/errors.hpp"

namespace ruin {
namespace {

using nlohmann::json;

template <class T>
T field(const json& j, const char* key, const char* where) {
  if (!j.contains(key)) {
    throw ConfigError(std::string(where) + ": missing field \"" + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(where) + "." + key + ": " + e.what());
  }
}

DistributionSpec parse_distribution(const json& j, const char* where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  const auto family = field<std::string>(j, "family", where);
  if (family == "exponential") {
    return DistributionSpec(Exponential{field<double>(j, "mean", where)});
  }
  if (family == "erlang") {
    return DistributionSpec(Erlang{field<int>(j, "shape", where), field<double>(j, "mean", where)});
  }
  if (family == "hyperexponential") {
    const auto& comps = j.at("components");
    if (!comps.is_array()) throw ConfigError(std::string(where) + ".components: expected array");
    Hyperexponential h;
    for (const auto& c : comps) {
      h.components.push_back({field<double>(c, "weight", where), field<double>(c, "mean", where)});
    }
    return DistributionSpec(std::move(h));
  }
  if (family == "degenerate") {
    return DistributionSpec(Degenerate{field<double>(j, "point", where)});
  }
  throw ConfigError(std::string(where) + ": unknown family \"" + family + "\"");
}

json distribution_json(const DistributionSpec& spec) {
  const auto& f = spec.family();
  if (const auto* e = std::get_if<Exponential>(&f)) {
    return {{"family", "exponential"}, {"mean", e->mean}};
  }
  if (const auto* e = std::get_if<Erlang>(&f)) {
    return {{"family", "erlang"}, {"shape", e->shape}, {"mean", e->mean}};
  }
  if (const auto* h = std::get_if<Hyperexponential>(&f)) {
    json comps = json::array();
    for (const auto& c : h->components) comps.push_back({{"weight", c.weight}, {"mean", c.mean}});
    return {{"family", "hyperexponential"}, {"components", comps}};
  }
  return {{"family", "degenerate"}, {"point", std::get<Degenerate>(f).point}};
}

}  // namespace

RiskModel ModelConfig::model() const {
  return RiskModel(premium_rate, claim_intensity, claims, funds);
}

ModelConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");

  try {
    ModelConfig cfg{
        .premium_rate = field<double>(doc, "premium_rate", "config"),
        .claim_intensity = field<double>(doc, "claim_intensity", "config"),
        .claims = parse_distribution(doc.value("claims", json{}), "claims"),
        .funds = parse_distribution(doc.value("funds", json{}), "funds"),
        .x_grid = field<std::vector<double>>(doc, "x_grid", "config"),
        .mc = {},
    };
    if (cfg.x_grid.empty()) throw ConfigError("config.x_grid must be nonempty");
    if (!std::is_sorted(cfg.x_grid.begin(), cfg.x_grid.end())) {
      throw ConfigError("config.x_grid must be sorted ascending");
    }
    if (cfg.x_grid.front() < 0.0) throw ConfigError("config.x_grid must be nonnegative");

    if (doc.contains("mc")) {
      const json& mc = doc.at("mc");
      McSettings& s = cfg.mc;
      s.epsilon = mc.value("epsilon", s.epsilon);
      s.delta = mc.value("delta", s.delta);
      s.seed = mc.value("seed", s.seed);
      s.cap_bias = mc.value("cap_bias", s.cap_bias);
      s.threads = mc.value("threads", s.threads);
      if (mc.contains("paths")) s.paths = mc.at("paths").get<std::uint64_t>();
      if (mc.contains("surplus_headroom")) {
        s.surplus_headroom = mc.at("surplus_headroom").get<double>();
      }
      if (mc.contains("claim_cap")) s.claim_cap = mc.at("claim_cap").get<std::uint64_t>();
    }
    cfg.model();  // validates the model-level invariants
    return cfg;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const InvalidModel& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

ModelConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string serialize_config(const ModelConfig& config) {
  json mc = {
      {"epsilon", config.mc.epsilon}, {"delta", config.mc.delta},
      {"seed", config.mc.seed},       {"cap_bias", config.mc.cap_bias},
      {"threads", config.mc.threads},
  };
  if (config.mc.paths) mc["paths"] = *config.mc.paths;
  if (config.mc.surplus_headroom) mc["surplus_headroom"] = *config.mc.surplus_headroom;
  if (config.mc.claim_cap) mc["claim_cap"] = *config.mc.claim_cap;

  json doc = {
      {"premium_rate", config.premium_rate},
      {"claim_intensity", config.claim_intensity},
      {"claims", distribution_json(config.claims)},
      {"funds", distribution_json(config.funds)},
      {"x_grid", config.x_grid},
      {"mc", mc},
  };
  return doc.dump(2) + "\n";
}

}  // namespace ruin
