#include "bcnoma/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bcnoma {

double dbm_to_watts(double dbm) { return std::pow(10.0, dbm / 10.0) / 1000.0; }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts * 1000.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid config: " + what);
}

}  // namespace

void SystemConfig::validate() const {
  require(std::isfinite(inner_radius_m) && inner_radius_m > 0.0, "inner_radius_m must be > 0");
  require(std::isfinite(outer_radius_m) && outer_radius_m > inner_radius_m,
          "outer_radius_m must exceed inner_radius_m");
  require(node_count >= 1, "node_count must be >= 1");
  require(subregion_count >= 1, "subregion_count must be >= 1");
  require(std::isfinite(path_loss_exponent) && path_loss_exponent > 1.0,
          "path_loss_exponent must be > 1");
  require(std::isfinite(reader_power_dbm), "reader_power_dbm must be finite");
  require(std::isfinite(noise_power_dbm), "noise_power_dbm must be finite");
  require(std::isfinite(slot_bits) && slot_bits > 0.0, "slot_bits must be > 0");
  require(std::isfinite(sinr_threshold_db), "sinr_threshold_db must be finite");
  require(reader_power_w() > 0.0 && noise_power_w() > 0.0, "powers underflow to zero");
  if (const auto* n = std::get_if<Nakagami>(&fading))
    require(std::isfinite(n->shape) && n->shape >= 0.5, "nakagami_m must be >= 0.5");
}

double SystemConfig::nakagami_m() const {
  if (const auto* n = std::get_if<Nakagami>(&fading)) return n->shape;
  throw std::invalid_argument("operation requires Nakagami fading");
}

SystemConfig default_config() { return SystemConfig{}; }

SystemConfig config_from_json(std::string_view text, bool allow_unknown) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");

  static const std::set<std::string> known = {
      "inner_radius_m", "outer_radius_m",  "node_count",        "subregion_count",
      "path_loss_exponent", "reader_power_dbm", "noise_power_dbm", "slot_bits",
      "sinr_threshold_db", "fading", "nakagami_m"};

  SystemConfig cfg;
  auto num = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw std::invalid_argument(std::string("config key '") + key + "' must be a number");
    out = j[key].get<double>();
  };
  auto integer = [&](const char* key, int& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw std::invalid_argument(std::string("config key '") + key + "' must be an integer");
    out = j[key].get<int>();
  };
  for (const auto& [key, _] : j.items())
    if (!allow_unknown && !known.count(key)) throw std::invalid_argument("unknown config key '" + key + "'");

  num("inner_radius_m", cfg.inner_radius_m);
  num("outer_radius_m", cfg.outer_radius_m);
  integer("node_count", cfg.node_count);
  integer("subregion_count", cfg.subregion_count);
  num("path_loss_exponent", cfg.path_loss_exponent);
  num("reader_power_dbm", cfg.reader_power_dbm);
  num("noise_power_dbm", cfg.noise_power_dbm);
  num("slot_bits", cfg.slot_bits);
  num("sinr_threshold_db", cfg.sinr_threshold_db);

  std::string fading = j.value("fading", std::string("free"));
  double m = 1.0;
  num("nakagami_m", m);
  if (fading == "free") {
    if (j.contains("nakagami_m")) throw std::invalid_argument("nakagami_m given with fading 'free'");
    cfg.fading = FadingFree{};
  } else if (fading == "nakagami") {
    if (!j.contains("nakagami_m")) throw std::invalid_argument("fading 'nakagami' needs nakagami_m");
    cfg.fading = Nakagami{m};
  } else if (fading == "rayleigh") {
    cfg.fading = Nakagami{1.0};
  } else {
    throw std::invalid_argument("fading must be one of free, nakagami, rayleigh");
  }
  cfg.validate();
  return cfg;
}

std::string config_to_json(const SystemConfig& cfg) {
  nlohmann::ordered_json j;
  j["inner_radius_m"] = cfg.inner_radius_m;
  j["outer_radius_m"] = cfg.outer_radius_m;
  j["node_count"] = cfg.node_count;
  j["subregion_count"] = cfg.subregion_count;
  j["path_loss_exponent"] = cfg.path_loss_exponent;
  j["reader_power_dbm"] = cfg.reader_power_dbm;
  j["noise_power_dbm"] = cfg.noise_power_dbm;
  j["slot_bits"] = cfg.slot_bits;
  j["sinr_threshold_db"] = cfg.sinr_threshold_db;
  if (cfg.faded()) {
    j["fading"] = "nakagami";
    j["nakagami_m"] = cfg.nakagami_m();
  } else {
    j["fading"] = "free";
  }
  return j.dump(2);
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return config_from_json(buf.str());
}

}  // namespace bcnoma
