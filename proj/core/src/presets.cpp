#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "bcnoma/experiment.hpp"

namespace bcnoma::experiment {
namespace {

std::vector<double> linear_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
  return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(std::pow(10.0, std::log10(lo) + (std::log10(hi) - std::log10(lo)) * i / (n - 1)));
  // Exact endpoints: a rounded-up last point would exceed xi1.
  g.front() = lo;
  g.back() = hi;
  return g;
}

SystemConfig nakagami(double m, double alpha) {
  SystemConfig c = default_config();
  c.fading = Nakagami{m};
  c.path_loss_exponent = alpha;
  return c;
}

SystemConfig with_gamma(SystemConfig c, double db) {
  c.sinr_threshold_db = db;
  return c;
}

Series series(std::string label, Scheme scheme, SystemConfig cfg, std::vector<double> xi,
              std::vector<std::string> metrics, CoefficientRule rule = CoefficientRule::Fixed) {
  Series s;
  s.label = std::move(label);
  s.scheme = scheme;
  s.config = cfg;
  s.coefficients = std::move(xi);
  s.metrics = std::move(metrics);
  s.rule = rule;
  return s;
}

const std::vector<double> kLadder5{0.7, 0.5, 0.3, 0.1, 0.05};

Experiment fig4a() {
  Experiment e;
  e.name = "fig4a";
  e.grid = linear_grid(0, 10, 11);
  const std::vector<std::string> m{"normalized_c_suc"};
  e.series = {series("fading_free", Scheme::Region, default_config(), {0.7, 0.5}, m),
              series("m4_region", Scheme::Region, nakagami(4, 2.5), {0.7, 0.5}, m),
              series("m4_power", Scheme::Power, nakagami(4, 2.5), {0.7, 0.5}, m),
              series("rayleigh_region", Scheme::Region, nakagami(1, 4), {0.7, 0.5}, m),
              series("rayleigh_power", Scheme::Power, nakagami(1, 4), {0.7, 0.5}, m)};
  return e;
}

Experiment multiplex_by_n(const std::string& name, Scheme scheme, const std::string& metric) {
  Experiment e;
  e.name = name;
  e.grid = linear_grid(0, 10, 11);
  for (int n = 2; n <= 5; ++n) {
    SystemConfig c = default_config();
    c.subregion_count = n;
    e.series.push_back(series("n" + std::to_string(n), scheme, c,
                              std::vector<double>(kLadder5.begin(), kLadder5.begin() + n), {metric}));
  }
  return e;
}

Experiment fig5() {
  Experiment e;
  e.name = "fig5";
  e.sweep_param = "xi2";
  e.grid = log_grid(1e-4, 0.7, 25);
  const std::vector<std::string> m{"normalized_c_suc"};
  for (double g : {5.0, 10.0}) {
    const std::string tag = "_" + std::to_string(static_cast<int>(g)) + "db";
    e.series.push_back(series("fading_free" + tag, Scheme::Region, with_gamma(default_config(), g), {0.7, 0.5}, m));
    e.series.push_back(series("m4_region" + tag, Scheme::Region, with_gamma(nakagami(4, 2.5), g), {0.7, 0.5}, m));
    e.series.push_back(series("m4_power" + tag, Scheme::Power, with_gamma(nakagami(4, 2.5), g), {0.7, 0.5}, m));
  }
  return e;
}

Experiment fig6a() {
  Experiment e;
  e.name = "fig6a";
  e.sweep_param = "xi1";
  e.grid = linear_grid(0.1, 1.0, 19);
  SystemConfig c = default_config();
  c.subregion_count = 3;
  e.series = {series("criterion", Scheme::Multiplex, c, {0.7, 0.5, 0.007}, {"m_n"}, CoefficientRule::LadderTail),
              series("equal", Scheme::Multiplex, c, {0.7}, {"m_n"}, CoefficientRule::Equal)};
  return e;
}

Experiment fig6b() {
  Experiment e;
  e.name = "fig6b";
  e.sweep_param = "xi1";
  e.grid = linear_grid(0.2, 1.0, 17);
  for (auto [pt, g] : {std::pair{35.0, 8.0}, std::pair{41.5, 10.0}}) {
    SystemConfig c = with_gamma(default_config(), g);
    c.subregion_count = 5;
    c.reader_power_dbm = pt;
    char tag[32];
    std::snprintf(tag, sizeof tag, "_pt%g_%gdb", pt, g);
    e.series.push_back(
        series(std::string("criterion") + tag, Scheme::Multiplex, c, {0.7}, {"m_n"}, CoefficientRule::LadderTail));
    e.series.push_back(series(std::string("equal") + tag, Scheme::Multiplex, c, {0.7}, {"m_n"}, CoefficientRule::Equal));
  }
  return e;
}

Experiment fig7(const std::string& name, SystemConfig c, Scheme scheme) {
  Experiment e;
  e.name = name;
  c.sinr_threshold_db = 5.0;
  if (scheme == Scheme::Power) {
    e.sweep_param = "p_near";
    e.grid = linear_grid(0.05, 0.95, 19);
  } else {
    e.sweep_param = "r2";
    e.grid = linear_grid(2, 64, 32);
  }
  e.series = {series("criterion", scheme, c, {0.7, 0.05}, {"c_suc"}, CoefficientRule::NearFromCriterion),
              series("fixed", scheme, c, {0.7, 0.05}, {"c_suc"})};
  return e;
}

Experiment fig8a() {
  Experiment e;
  e.name = "fig8a";
  e.grid = linear_grid(0, 10, 11);
  const SystemConfig c = nakagami(4, 2.5);
  e.series = {series("backcom_noma", Scheme::BackcomNoma, c, {}, {"c_suc"}),
              series("backcom_tdma", Scheme::BackcomTdma, c, {}, {"c_suc"}),
              series("conv_noma", Scheme::ConvNoma, c, {}, {"c_suc"}),
              series("conv_tdma", Scheme::ConvTdma, c, {}, {"c_suc"})};
  return e;
}

Experiment fig8b() {
  Experiment e;
  e.name = "fig8b";
  e.grid = linear_grid(0, 10, 11);
  e.series = {series("fading_free", Scheme::NomaTdmaRatio, default_config(), {}, {"ratio"}),
              series("m4", Scheme::NomaTdmaRatio, nakagami(4, 2.5), {}, {"ratio"}),
              series("rayleigh", Scheme::NomaTdmaRatio, nakagami(1, 4), {}, {"ratio"})};
  return e;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig4a", "fig4b", "fig4c", "fig5", "fig6a", "fig6b", "fig7a", "fig7b", "fig7c", "fig8a", "fig8b"};
}

Experiment preset(const std::string& name) {
  if (name == "fig4a") return fig4a();
  if (name == "fig4b") return multiplex_by_n("fig4b", Scheme::Multiplex, "m_n");
  if (name == "fig4c") {
    Experiment e = multiplex_by_n("fig4c", Scheme::Slot, "c_suc");
    e.engines = {Engine::MonteCarlo};
    return e;
  }
  if (name == "fig5") return fig5();
  if (name == "fig6a") return fig6a();
  if (name == "fig6b") return fig6b();
  if (name == "fig7a") return fig7("fig7a", default_config(), Scheme::Region);
  if (name == "fig7b") return fig7("fig7b", nakagami(4, 2.5), Scheme::Region);
  if (name == "fig7c") return fig7("fig7c", nakagami(4, 2.5), Scheme::Power);
  if (name == "fig8a") return fig8a();
  if (name == "fig8b") return fig8b();
  throw std::invalid_argument("unknown preset '" + name + "'");
}

}  // namespace bcnoma::experiment
