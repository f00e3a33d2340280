#include "bcnoma/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "bcnoma/analytic_fading.hpp"
#include "bcnoma/analytic_ff.hpp"
#include "bcnoma/analytic_mgf.hpp"

namespace bcnoma::experiment {
namespace {

template <class E, std::size_t K>
E parse_enum(std::string_view s, const std::pair<E, const char*> (&table)[K], const char* what) {
  for (const auto& [e, name] : table)
    if (s == name) return e;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <class E, std::size_t K>
const char* enum_name(E e, const std::pair<E, const char*> (&table)[K]) {
  for (const auto& [v, name] : table)
    if (v == e) return name;
  return "?";
}

const std::pair<Engine, const char*> kEngines[] = {{Engine::Analytic, "analytic"},
                                                   {Engine::MonteCarlo, "montecarlo"}};
const std::pair<Scheme, const char*> kSchemes[] = {
    {Scheme::Region, "region"},           {Scheme::Power, "power"},
    {Scheme::Multiplex, "multiplex"},     {Scheme::Slot, "slot"},
    {Scheme::BackcomNoma, "backcom_noma"}, {Scheme::BackcomTdma, "backcom_tdma"},
    {Scheme::ConvNoma, "conv_noma"},       {Scheme::ConvTdma, "conv_tdma"},
    {Scheme::NomaTdmaRatio, "noma_tdma_ratio"}};
const std::pair<CoefficientRule, const char*> kRules[] = {{CoefficientRule::Fixed, "fixed"},
                                                          {CoefficientRule::NearFromCriterion, "near_from_criterion"},
                                                          {CoefficientRule::FarFromCriterion, "far_from_criterion"},
                                                          {CoefficientRule::LadderTail, "ladder_tail"},
                                                          {CoefficientRule::Equal, "equal"}};

using Values = std::map<std::string, sim::Estimate>;

sim::Estimate exact(double v) { return {v, 0.0, 0}; }

bool two_class(Scheme s) { return s == Scheme::Region || s == Scheme::Power; }

int class_count(const Series& s, const SystemConfig& cfg) {
  if (two_class(s.scheme)) return 2;
  if (s.scheme == Scheme::Multiplex || s.scheme == Scheme::Slot) return cfg.subregion_count;
  return 0;  // benchmarks fix their own coefficients
}

Values analytic_two_class(const Series& s, const ResolvedPoint& p) {
  const auto& cfg = p.config;
  const double x1 = p.coefficients[0], x2 = p.coefficients[1];
  PairDecodeProbs probs;
  double near = 0, far = 0, p_near = 0;
  if (s.scheme == Scheme::Power) {
    const auto pol = fading::power_policy(cfg, *p.beta_tilde);
    probs = fading::pair_probs_power(cfg, x1, x2, pol);
    near = fading::solo_success_power(cfg, fading::Group::Near, x1, pol);
    far = fading::solo_success_power(cfg, fading::Group::Far, x2, pol);
    p_near = pol.p_near;
  } else if (cfg.faded()) {
    probs = fading::pair_probs_region(cfg, x1, x2, p.partition);
    near = fading::solo_success_region(cfg, p.partition, fading::Group::Near, x1);
    far = fading::solo_success_region(cfg, p.partition, fading::Group::Far, x2);
    p_near = p.partition.area_fraction(0);
  } else {
    probs = ff::pair_probs(cfg, x1, x2, p.partition);
    near = ff::solo_success(cfg, x1, p.partition.lower(0), p.partition.upper(0));
    far = ff::solo_success(cfg, x2, p.partition.lower(1), p.partition.upper(1));
    p_near = p.partition.area_fraction(0);
  }
  const auto th = throughput_two_node(cfg, probs, near, far, p_near);
  return {{"normalized_c_suc", exact(th.normalized)},
          {"c_suc", exact(th.c_suc_bits)},
          {"p2", exact(probs.p2)},
          {"p1", exact(probs.p1)},
          {"m2", exact(probs.m2)},
          {"m_n", exact(probs.m2)},
          {"m1_near", exact(near)},
          {"m1_far", exact(far)}};
}

Values from_slot(const sim::SlotMetrics& m) {
  return {{"normalized_c_suc", m.normalized}, {"c_suc", m.c_suc}, {"p2", m.p2},           {"p1", m.p1},
          {"m2", m.m2},                       {"m_n", m.m_n},     {"m1_near", m.m1_near}, {"m1_far", m.m1_far}};
}

// BackCom TDMA closed form: M lone mini-slots over the whole annulus.
double tdma_success(const SystemConfig& cfg, double xi) {
  if (cfg.faded()) {
    const fading::CompositeDist d{cfg.nakagami_m(), cfg.inner_radius_m, cfg.outer_radius_m, cfg.path_loss_exponent};
    return fading::composite_ccdf(d, cfg.noise_power_w() * cfg.threshold() / (cfg.reader_power_w() * xi));
  }
  return ff::solo_success(cfg, xi, cfg.inner_radius_m, cfg.outer_radius_m);
}

Values analytic_backcom(const SystemConfig& base, bool noma) {
  SystemConfig cfg = base;
  cfg.subregion_count = 2;
  if (!noma) {
    const double s = tdma_success(cfg, 0.7);
    return {{"c_suc", exact(s * cfg.slot_bits)}, {"normalized_c_suc", exact(s)}};
  }
  Series s;
  s.scheme = Scheme::Region;
  ResolvedPoint p{cfg, default_partition(cfg), std::nullopt, {0.7, 0.7}};
  return analytic_two_class(s, p);
}

std::optional<Values> evaluate(const Series& s, const ResolvedPoint& p, Engine engine, long long trials,
                               std::uint64_t seed, const sim::RunOptions& opt) {
  const auto& cfg = p.config;
  const bool mc = engine == Engine::MonteCarlo;
  switch (s.scheme) {
    case Scheme::Region:
    case Scheme::Power: {
      if (!mc) return analytic_two_class(s, p);
      const sim::PairingPolicy policy = s.scheme == Scheme::Power
                                            ? sim::PairingPolicy{sim::PowerDivision{*p.beta_tilde}}
                                            : sim::PairingPolicy{sim::RegionDivision{p.partition}};
      return from_slot(sim::estimate_metrics(cfg, policy, make_ladder(p.coefficients), trials, seed, {}, opt));
    }
    case Scheme::Multiplex: {
      const auto ladder = make_ladder(p.coefficients);
      if (mc) return Values{{"m_n", sim::estimate_group(cfg, p.partition, ladder, trials, seed, opt).m_n}};
      if (cfg.faded()) return std::nullopt;
      if (p.partition.count() == 2)
        return Values{{"m_n", exact(ff::pair_probs(cfg, p.coefficients[0], p.coefficients[1], p.partition).m2)}};
      return Values{{"m_n", exact(mgf::multiplex_outcome(cfg, ladder, p.partition).m_n)}};
    }
    case Scheme::Slot: {
      if (!mc) {
        if (p.partition.count() != 2) return std::nullopt;
        Series two = s;
        two.scheme = Scheme::Region;
        return analytic_two_class(two, p);
      }
      return from_slot(sim::estimate_metrics(cfg, sim::RegionDivision{p.partition}, make_ladder(p.coefficients),
                                             trials, seed, {}, opt));
    }
    case Scheme::BackcomNoma:
    case Scheme::BackcomTdma:
    case Scheme::ConvNoma:
    case Scheme::ConvTdma: {
      const bool conv = s.scheme == Scheme::ConvNoma || s.scheme == Scheme::ConvTdma;
      const bool noma = s.scheme == Scheme::BackcomNoma || s.scheme == Scheme::ConvNoma;
      if (!mc) {
        if (conv) return std::nullopt;
        return analytic_backcom(cfg, noma);
      }
      const sim::BenchmarkSystem sys = s.scheme == Scheme::BackcomNoma   ? sim::BenchmarkSystem::BackcomNoma
                                       : s.scheme == Scheme::BackcomTdma ? sim::BenchmarkSystem::BackcomTdma
                                       : s.scheme == Scheme::ConvNoma    ? sim::BenchmarkSystem::ConvNoma
                                                                         : sim::BenchmarkSystem::ConvTdma;
      const auto r = sim::benchmark(cfg, sys, trials, seed, opt);
      return Values{{"c_suc", r.c_suc}, {"normalized_c_suc", r.normalized}};
    }
    case Scheme::NomaTdmaRatio: {
      if (!mc) {
        const double a = analytic_backcom(cfg, true).at("c_suc").mean;
        const double b = analytic_backcom(cfg, false).at("c_suc").mean;
        return Values{{"ratio", exact(a / b)}};
      }
      const auto a = sim::benchmark(cfg, sim::BenchmarkSystem::BackcomNoma, trials, sim::derive_seed(seed, 0), opt);
      const auto b = sim::benchmark(cfg, sim::BenchmarkSystem::BackcomTdma, trials, sim::derive_seed(seed, 1), opt);
      const double r = a.c_suc.mean / b.c_suc.mean;
      const double ra = a.c_suc.std_error / a.c_suc.mean, rb = b.c_suc.std_error / b.c_suc.mean;
      return Values{{"ratio", {r, std::abs(r) * std::sqrt(ra * ra + rb * rb), trials}}};
    }
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(Engine e) { return enum_name(e, kEngines); }
Engine engine_from_string(std::string_view s) { return parse_enum(s, kEngines, "engine"); }
const char* to_string(Scheme s) { return enum_name(s, kSchemes); }
Scheme scheme_from_string(std::string_view s) { return parse_enum(s, kSchemes, "scheme"); }
const char* to_string(CoefficientRule r) { return enum_name(r, kRules); }
CoefficientRule rule_from_string(std::string_view s) { return parse_enum(s, kRules, "coefficient rule"); }

const std::vector<std::string>& known_metrics() {
  static const std::vector<std::string> names{"normalized_c_suc", "c_suc", "p2",     "p1",   "m2",
                                              "m1_near",          "m1_far", "m_n",   "ratio"};
  return names;
}

void Experiment::validate() const {
  static const std::vector<std::string> params{"gamma_db", "xi1", "xi2", "r2", "p_near", "reader_power_dbm"};
  if (std::find(params.begin(), params.end(), sweep_param) == params.end())
    throw std::invalid_argument("unknown sweep parameter '" + sweep_param + "'");
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  if (!std::is_sorted(grid.begin(), grid.end())) throw std::invalid_argument("sweep grid must be sorted");
  if (series.empty()) throw std::invalid_argument("experiment has no series");
  if (engines.empty()) throw std::invalid_argument("no engine selected");
  const bool mc = std::find(engines.begin(), engines.end(), Engine::MonteCarlo) != engines.end();
  if (mc && trials < 1) throw std::invalid_argument("trials must be >= 1 with the montecarlo engine");
  for (const auto& s : series) {
    if (s.label.empty() || s.label.find('/') != std::string::npos)
      throw std::invalid_argument("series labels must be non-empty and free of '/'");
    s.config.validate();
    for (const auto& m : s.metrics)
      if (std::find(known_metrics().begin(), known_metrics().end(), m) == known_metrics().end())
        throw std::invalid_argument("unknown metric '" + m + "'");
  }
}

ResolvedPoint resolve(const Series& s, const std::string& param, double value) {
  ResolvedPoint p;
  p.config = s.config;
  p.coefficients = s.coefficients;
  std::optional<double> r2 = s.r2, p_near = s.p_near;
  auto set_coeff = [&](std::size_t i) {
    if (p.coefficients.size() <= i) p.coefficients.resize(i + 1, value);
    p.coefficients[i] = value;
  };
  if (param == "gamma_db")
    p.config.sinr_threshold_db = value;
  else if (param == "reader_power_dbm")
    p.config.reader_power_dbm = value;
  else if (param == "xi1")
    set_coeff(0);
  else if (param == "xi2")
    set_coeff(1);
  else if (param == "r2")
    r2 = value;
  else if (param == "p_near")
    p_near = value;
  else
    throw std::invalid_argument("unknown sweep parameter '" + param + "'");

  auto& cfg = p.config;
  if (two_class(s.scheme)) cfg.subregion_count = 2;
  cfg.validate();

  if (s.scheme == Scheme::Power) {
    if (!cfg.faded()) throw std::invalid_argument("power division needs a fading model");
    p.beta_tilde = fading::solve_beta_tilde(cfg, p_near.value_or(0.5)).beta_tilde;
    p.partition = default_partition(cfg);
  } else if (r2 && cfg.subregion_count == 2) {
    p.partition = two_region_partition(cfg, *r2);
  } else if (p_near && cfg.subregion_count == 2) {
    p.partition = two_region_partition(cfg, radius_for_near_fraction(cfg, *p_near));
  } else {
    p.partition = default_partition(cfg);
  }

  const int n = class_count(s, cfg);
  if (n == 0) return p;
  if (p.coefficients.empty()) throw std::invalid_argument("series needs at least xi_1");
  switch (s.rule) {
    case CoefficientRule::Fixed:
      break;
    case CoefficientRule::Equal:
      p.coefficients.assign(static_cast<std::size_t>(n), p.coefficients[0]);
      break;
    case CoefficientRule::NearFromCriterion: {
      if (n != 2 || p.coefficients.size() < 2) throw std::invalid_argument("near_from_criterion needs two classes");
      const double x2 = p.coefficients[1];
      const double x1 = s.scheme == Scheme::Power ? design_power_division_floor(cfg, *p.beta_tilde, x2)
                                                  : min_near_coefficient(cfg, p.partition, x2);
      // A reflection coefficient cannot exceed one; saturate there.
      p.coefficients[0] = std::min(x1, 1.0);
      break;
    }
    case CoefficientRule::FarFromCriterion: {
      if (n != 2 || s.scheme == Scheme::Power)
        throw std::invalid_argument("far_from_criterion needs region division with two classes");
      const double x2 = max_far_coefficient(cfg, p.partition, p.coefficients[0]);
      if (!(x2 > 0.0)) throw std::invalid_argument("no xi_2 meets the guarantee for this xi_1");
      p.coefficients.resize(2);
      p.coefficients[1] = x2;
      break;
    }
    case CoefficientRule::LadderTail: {
      std::optional<double> last;
      if (static_cast<int>(p.coefficients.size()) == n) last = p.coefficients.back();
      const double x1 = p.coefficients[0];
      p.coefficients = design_ladder(cfg, p.partition, 1.0, last).coefficients;
      p.coefficients[0] = x1;
      break;
    }
  }
  if (static_cast<int>(p.coefficients.size()) != n)
    throw std::invalid_argument("series needs " + std::to_string(n) + " coefficients, got " +
                                std::to_string(p.coefficients.size()));
  return p;
}

SweepResult run(const Experiment& exp, const sim::RunOptions& opt) {
  exp.validate();
  SweepResult out;
  for (std::size_t i = 0; i < exp.grid.size(); ++i) {
    const double v = exp.grid[i];
    for (std::size_t k = 0; k < exp.series.size(); ++k) {
      const Series& s = exp.series[k];
      const std::uint64_t seed = sim::derive_seed(sim::derive_seed(exp.seed, i), k);
      try {
        const ResolvedPoint p = resolve(s, exp.sweep_param, v);
        for (Engine e : exp.engines) {
          const auto values = evaluate(s, p, e, exp.trials, seed, opt);
          if (!values) continue;
          for (const auto& m : s.metrics) {
            auto it = values->find(m);
            if (it == values->end())
              throw std::invalid_argument("metric '" + m + "' is not produced by scheme " + to_string(s.scheme));
            out.rows.push_back({exp.sweep_param, v, s.label + "/" + m, to_string(e), it->second.mean,
                                it->second.std_error});
          }
        }
      } catch (const std::exception& err) {
        std::ostringstream msg;
        msg << "series '" << s.label << "' at " << exp.sweep_param << "=" << v << ": " << err.what();
        throw std::runtime_error(msg.str());
      }
    }
  }
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.value, a.metric, a.engine) < std::tie(b.value, b.metric, b.engine);
  });
  return out;
}

Experiment experiment_from_json(std::string_view text) {
  using nlohmann::json;
  const json j = json::parse(text.begin(), text.end());
  if (!j.is_object()) throw std::invalid_argument("experiment JSON must be an object");
  static const std::vector<std::string> own{"name",   "sweep_param", "sweep_values", "scheme", "coefficients",
                                            "rule",   "metrics",     "engines",      "trials", "seed",
                                            "label",  "r2",          "p_near"};
  json cfg_part = json::object();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find(own.begin(), own.end(), it.key()) == own.end()) cfg_part[it.key()] = it.value();

  Experiment e;
  Series s;
  s.config = config_from_json(cfg_part.dump());
  e.name = j.value("name", std::string("custom"));
  e.sweep_param = j.value("sweep_param", std::string("gamma_db"));
  if (!j.contains("sweep_values")) throw std::invalid_argument("experiment JSON needs sweep_values");
  e.grid = j.at("sweep_values").get<std::vector<double>>();
  s.label = j.value("label", std::string("series"));
  s.scheme = scheme_from_string(j.value("scheme", std::string("region")));
  if (j.contains("coefficients")) s.coefficients = j.at("coefficients").get<std::vector<double>>();
  s.rule = rule_from_string(j.value("rule", std::string("fixed")));
  if (j.contains("metrics")) s.metrics = j.at("metrics").get<std::vector<std::string>>();
  if (j.contains("r2")) s.r2 = j.at("r2").get<double>();
  if (j.contains("p_near")) s.p_near = j.at("p_near").get<double>();
  if (j.contains("engines")) {
    e.engines.clear();
    for (const auto& name : j.at("engines").get<std::vector<std::string>>()) e.engines.push_back(engine_from_string(name));
  }
  e.trials = j.value("trials", e.trials);
  e.seed = j.value("seed", e.seed);
  e.series.push_back(std::move(s));
  e.validate();
  return e;
}

Experiment load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open experiment file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return experiment_from_json(ss.str());
}

}  // namespace bcnoma::experiment
