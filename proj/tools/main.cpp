#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "bcnoma/config.hpp"
#include "bcnoma/design.hpp"
#include "bcnoma/experiment.hpp"
#include "bcnoma/report.hpp"
#include "bcnoma/validation.hpp"

namespace {

using namespace bcnoma;

int fail(const std::string& command, const std::string& message, int code = 1) {
  nlohmann::json j{{"error", message}, {"command", command}};
  std::cerr << j.dump() << '\n';
  return code;
}

std::vector<experiment::Engine> parse_engines(const std::string& list) {
  std::vector<experiment::Engine> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(experiment::engine_from_string(item));
  if (out.empty()) throw std::invalid_argument("--engines is empty");
  return out;
}

struct RunArgs {
  std::string target;
  std::optional<long long> trials;
  std::optional<std::uint64_t> seed;
  std::string out, engines, svg, trace;
  unsigned threads = 0;
};

int do_run(const RunArgs& a) {
  const bool is_file = std::filesystem::is_regular_file(a.target);
  experiment::Experiment e = is_file ? experiment::load_experiment(a.target) : experiment::preset(a.target);
  if (a.trials) e.trials = *a.trials;
  if (a.seed) e.seed = *a.seed;
  if (!a.engines.empty()) e.engines = parse_engines(a.engines);

  sim::RunOptions opt;
  opt.threads = a.threads;
  std::ofstream trace;
  if (!a.trace.empty()) {
    trace.open(a.trace);
    if (!trace) throw std::runtime_error("cannot open " + a.trace + " for writing");
    opt.trace = &trace;
  }
  const auto result = experiment::run(e, opt);
  if (a.out.empty() || a.out == "-")
    std::cout << report::to_csv(result);
  else
    report::emit_csv(result, a.out);
  if (!a.svg.empty()) report::emit_svg(result, a.svg, e.name);
  return 0;
}

struct ValidateArgs {
  long long trials = 1'000'000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  std::vector<int> criteria;
  std::string out;
  bool verbose = false;
};

int do_validate(const ValidateArgs& a) {
  validation::Options opt;
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.threads = a.threads;
  if (a.verbose) opt.log = &std::cerr;
  const auto results = validation::run_all(opt, a.criteria);
  std::ostringstream os;
  std::vector<int> failed;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail << '\n';
    if (!r.passed) failed.push_back(r.id);
  }
  std::cout << os.str();
  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw std::runtime_error("cannot open " + a.out + " for writing");
    f << os.str();
  }
  if (!failed.empty()) {
    nlohmann::json j{{"error", "validation failed"}, {"command", "validate"}, {"failed", failed}};
    std::cerr << j.dump() << '\n';
    return 2;
  }
  return 0;
}

struct DesignArgs {
  std::string config;
  std::optional<double> gamma_db, reader_power_dbm, last;
  std::optional<int> subregions;
  double slack = 1.0;
};

int do_design(const DesignArgs& a) {
  SystemConfig cfg = a.config.empty() ? default_config() : load_config(a.config);
  if (a.gamma_db) cfg.sinr_threshold_db = *a.gamma_db;
  if (a.reader_power_dbm) cfg.reader_power_dbm = *a.reader_power_dbm;
  if (a.subregions) cfg.subregion_count = *a.subregions;
  cfg.validate();
  const auto part = default_partition(cfg);
  const auto ladder = design_ladder(cfg, part, a.slack, a.last);
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::parse(config_to_json(cfg));
  j["radii_m"] = part.radii;
  j["coefficients"] = ladder.coefficients;
  j["binding_constraints"] = ladder.binding_constraints;
  j["feasible"] = ladder.feasible;
  std::cout << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NOMA backscatter evaluation toolkit: analytic engine, Monte Carlo simulator and sweep runner"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a preset (fig4a ... fig8b) or a JSON experiment file; CSV to --out or stdout");
  run_cmd->add_option("target", run.target, "Preset name or experiment JSON path")->required();
  run_cmd->add_option("--trials", run.trials, "Monte Carlo trials per grid point")->check(CLI::PositiveNumber);
  run_cmd->add_option("--seed", run.seed, "Master seed");
  run_cmd->add_option("--out", run.out, "CSV output path ('-' for stdout)");
  run_cmd->add_option("--engines", run.engines, "Comma list of analytic,montecarlo");
  run_cmd->add_option("--svg", run.svg, "Also write an SVG line chart");
  run_cmd->add_option("--threads", run.threads, "Worker threads (0 = all cores)");
  run_cmd->add_option("--trace", run.trace, "Write one JSON line per simulated mini-slot (serial run)");

  ValidateArgs val;
  auto* val_cmd = app.add_subcommand("validate", "Run the acceptance suite; exit code 2 when any criterion fails");
  val_cmd->add_option("--trials", val.trials, "Monte Carlo trials per check")->check(CLI::PositiveNumber);
  val_cmd->add_option("--seed", val.seed, "Master seed");
  val_cmd->add_option("--threads", val.threads, "Worker threads (0 = all cores)");
  val_cmd->add_option("--criteria", val.criteria, "Subset of criterion ids")->delimiter(',')->check(
      CLI::Range(1, validation::kCriterionCount));
  val_cmd->add_option("--out", val.out, "Also write the report here");
  val_cmd->add_flag("--verbose,-v", val.verbose, "Per-check lines on stderr");

  DesignArgs des;
  auto* des_cmd = app.add_subcommand("design", "Print the minimal reflection-coefficient ladder as JSON");
  des_cmd->add_option("--config", des.config, "SystemConfig JSON file");
  des_cmd->add_option("--gamma-db", des.gamma_db, "SINR threshold in dB");
  des_cmd->add_option("--reader-power-dbm", des.reader_power_dbm, "Reader transmit power in dBm");
  des_cmd->add_option("--subregions", des.subregions, "Number of subregions N")->check(CLI::PositiveNumber);
  des_cmd->add_option("--slack", des.slack, "Multiplier >= 1 applied at every step");
  des_cmd->add_option("--last", des.last, "Fix the smallest coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("parse", e.what(), e.get_exit_code() ? e.get_exit_code() : 1);
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (*run_cmd) return do_run(run);
    if (*val_cmd) return do_validate(val);
    return do_design(des);
  } catch (const std::exception& e) {
    return fail(name, e.what());
  }
}
