#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcnoma/config.hpp"
#include "bcnoma/simulator.hpp"

namespace bcnoma::experiment {

enum class Engine { Analytic, MonteCarlo };
const char* to_string(Engine e);
Engine engine_from_string(std::string_view s);

enum class Scheme {
  Region,         // two-class region division, full slot
  Power,          // two-class power division, full slot (needs fading)
  Multiplex,      // one node per subregion, N-node SIC group
  Slot,           // full slot with N-class region division (simulation only for N > 2)
  BackcomNoma,
  BackcomTdma,
  ConvNoma,
  ConvTdma,
  NomaTdmaRatio,  // BackCom with NOMA over BackCom without
};
const char* to_string(Scheme s);
Scheme scheme_from_string(std::string_view s);

enum class CoefficientRule {
  Fixed,             // coefficients as given
  NearFromCriterion,  // xi_1 = smallest value meeting the decoding guarantee for xi_2
  FarFromCriterion,   // xi_2 = largest value meeting the guarantee for xi_1
  LadderTail,        // minimal ladder (optionally anchored at the given last entry), xi_1 from coefficients
  Equal,             // every class uses xi_1
};
const char* to_string(CoefficientRule r);
CoefficientRule rule_from_string(std::string_view s);

// Metric names accepted in Series::metrics.
const std::vector<std::string>& known_metrics();

struct Series {
  std::string label;
  Scheme scheme = Scheme::Region;
  SystemConfig config = default_config();
  std::vector<double> coefficients{0.7, 0.5};
  CoefficientRule rule = CoefficientRule::Fixed;
  std::vector<std::string> metrics{"normalized_c_suc"};
  std::optional<double> r2;      // region division boundary override
  std::optional<double> p_near;  // near-class probability (R_2 or beta_tilde)
};

// Swept parameters: gamma_db, xi1, xi2, r2, p_near, reader_power_dbm.
struct Experiment {
  std::string name;
  std::string sweep_param = "gamma_db";
  std::vector<double> grid;
  std::vector<Series> series;
  std::vector<Engine> engines{Engine::Analytic, Engine::MonteCarlo};
  long long trials = 100000;
  std::uint64_t seed = 1;

  void validate() const;
};

struct Row {
  std::string swept_param;
  double value = 0.0;
  std::string metric;  // "<series label>/<metric>"
  std::string engine;
  double mean = 0.0;
  double std_error = 0.0;

  bool operator==(const Row&) const = default;
};

struct SweepResult {
  std::vector<Row> rows;
  bool operator==(const SweepResult&) const = default;
};

// Rows sorted by (value, metric, engine). Engines a series cannot serve are
// skipped for that series. Errors are rethrown naming the series and point.
SweepResult run(const Experiment& exp, const sim::RunOptions& opt = {});

// Concrete setup for one series at one grid point.
struct ResolvedPoint {
  SystemConfig config;
  SubregionPartition partition;
  std::optional<double> beta_tilde;
  std::vector<double> coefficients;
};
ResolvedPoint resolve(const Series& s, const std::string& param, double value);

// Built-in presets: fig4a fig4b fig4c fig5 fig6a fig6b fig7a fig7b fig7c fig8a fig8b.
std::vector<std::string> preset_names();
Experiment preset(const std::string& name);

// Flat JSON experiment: SystemConfig keys next to name, sweep_param,
// sweep_values, scheme, coefficients, rule, metrics, engines, trials, seed,
// label, r2, p_near.
Experiment experiment_from_json(std::string_view text);
Experiment load_experiment(const std::string& path);

}  // namespace bcnoma::experiment
