#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace bcnoma {

struct FadingFree {
  bool operator==(const FadingFree&) const = default;
};

// Nakagami-m small-scale fading; shape = 1 is Rayleigh.
struct Nakagami {
  double shape = 1.0;
  bool operator==(const Nakagami&) const = default;
};

using Fading = std::variant<FadingFree, Nakagami>;

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);
double db_to_linear(double db);
double linear_to_db(double linear);

// Scenario constants in the units people quote them in (m, dBm, dB).
// Everything downstream asks for the linear values through the accessors.
struct SystemConfig {
  double inner_radius_m = 1.0;
  double outer_radius_m = 65.0;
  int node_count = 60;
  int subregion_count = 2;
  double path_loss_exponent = 2.5;
  double reader_power_dbm = 35.0;
  double noise_power_dbm = -100.0;
  double slot_bits = 60.0;
  double sinr_threshold_db = 5.0;
  Fading fading = FadingFree{};

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  double reader_power_w() const { return dbm_to_watts(reader_power_dbm); }
  double noise_power_w() const { return dbm_to_watts(noise_power_dbm); }
  double threshold() const { return db_to_linear(sinr_threshold_db); }
  bool faded() const { return std::holds_alternative<Nakagami>(fading); }
  // Shape parameter m; throws std::invalid_argument when fading-free.
  double nakagami_m() const;

  bool operator==(const SystemConfig&) const = default;
};

// Simulation-section defaults: R1 = 1 m, R = 65 m, M = 60, N = 2, alpha = 2.5,
// PT = 35 dBm, noise = -100 dBm, slot_bits = 60, fading-free.
SystemConfig default_config();

// Flat JSON object whose keys mirror the SystemConfig field names.
// Fading is "fading": "free" | "nakagami" | "rayleigh" plus "nakagami_m".
// Unknown keys are rejected unless allow_unknown is set.
SystemConfig config_from_json(std::string_view text, bool allow_unknown = false);
std::string config_to_json(const SystemConfig& cfg);
SystemConfig load_config(const std::filesystem::path& path);

}  // namespace bcnoma
