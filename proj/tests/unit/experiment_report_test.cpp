#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bcnoma/experiment.hpp"
#include "bcnoma/report.hpp"

using namespace bcnoma;
using experiment::Engine;
using experiment::Experiment;
using experiment::SweepResult;

namespace {

Experiment small_region_sweep() {
  Experiment e;
  e.name = "small";
  e.grid = {0.0, 5.0, 10.0};
  experiment::Series s;
  s.label = "ff";
  s.metrics = {"normalized_c_suc", "p2"};
  e.series.push_back(s);
  e.trials = 2000;
  e.seed = 3;
  return e;
}

}  // namespace

TEST(Csv, HeaderOnlyForEmptyResult) {
  EXPECT_EQ(report::to_csv(SweepResult{}), "swept_param,value,metric,engine,mean,std_error\n");
  EXPECT_TRUE(report::parse_csv(report::to_csv(SweepResult{})).rows.empty());
}

TEST(Csv, RoundTripIsStable) {
  SweepResult r;
  r.rows.push_back({"gamma_db", 5.0, "a,b/\"quoted\"", "analytic", 0.123456789012345, 0.0});
  r.rows.push_back({"xi2", 1e-4, "line\nbreak/p2", "montecarlo", 1.0 / 3.0, 2.5e-7});
  const std::string text = report::to_csv(r);
  const SweepResult back = report::parse_csv(text);
  ASSERT_EQ(back.rows.size(), 2u);
  EXPECT_EQ(back.rows[0].metric, r.rows[0].metric);
  EXPECT_EQ(back.rows[1].metric, r.rows[1].metric);
  EXPECT_NEAR(back.rows[1].mean, 1.0 / 3.0, 1e-12);
  EXPECT_EQ(report::to_csv(back), text);
}

TEST(Csv, RejectsMalformedInput) {
  EXPECT_THROW(report::parse_csv(""), std::invalid_argument);
  EXPECT_THROW(report::parse_csv("a,b,c\n"), std::invalid_argument);
  EXPECT_THROW(report::parse_csv("swept_param,value,metric,engine,mean,std_error\nx,1,m,e,2\n"),
               std::invalid_argument);
  EXPECT_THROW(report::parse_csv("swept_param,value,metric,engine,mean,std_error\nx,one,m,e,2,0\n"),
               std::invalid_argument);
  EXPECT_THROW(report::parse_csv("swept_param,value,metric,engine,mean,std_error\n\"x,1,m,e,2,0\n"),
               std::invalid_argument);
}

TEST(Svg, ProducesPolylinePerSeries) {
  const auto res = experiment::run(small_region_sweep());
  const std::string svg = report::to_svg(res, "small <test>");
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("small &lt;test&gt;"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t at = 0; (at = svg.find("<polyline", at)) != std::string::npos; ++at) ++lines;
  EXPECT_EQ(lines, 4u);  // 2 metrics x 2 engines
}

TEST(Emit, ReportsUnwritablePath) {
  EXPECT_THROW(report::emit_csv(SweepResult{}, "/nonexistent-dir/out.csv"), std::runtime_error);
}

TEST(Run, RowsAreSortedAndBothEnginesAgree) {
  const auto res = experiment::run(small_region_sweep());
  ASSERT_EQ(res.rows.size(), 3u * 2u * 2u);
  for (std::size_t i = 1; i < res.rows.size(); ++i) {
    const auto& a = res.rows[i - 1];
    const auto& b = res.rows[i];
    EXPECT_TRUE(std::tie(a.value, a.metric, a.engine) <= std::tie(b.value, b.metric, b.engine));
  }
  for (std::size_t i = 0; i + 1 < res.rows.size(); i += 2) {
    const auto& an = res.rows[i];
    const auto& mc = res.rows[i + 1];
    ASSERT_EQ(an.engine, "analytic");
    ASSERT_EQ(mc.engine, "montecarlo");
    EXPECT_EQ(an.std_error, 0.0);
    EXPECT_NEAR(an.mean, mc.mean, 5 * mc.std_error + 1e-9) << an.metric << " at " << an.value;
  }
}

TEST(Run, SameSeedGivesIdenticalCsv) {
  auto e = small_region_sweep();
  e.engines = {Engine::MonteCarlo};
  sim::RunOptions one{1, nullptr}, two{2, nullptr};
  EXPECT_EQ(report::to_csv(experiment::run(e, one)), report::to_csv(experiment::run(e, two)));
}

TEST(Run, ErrorsNameSeriesAndPoint) {
  auto e = small_region_sweep();
  e.sweep_param = "xi2";
  e.grid = {0.9};  // above xi1 = 0.7
  try {
    experiment::run(e);
    FAIL() << "expected an error";
  } catch (const std::exception& ex) {
    const std::string msg = ex.what();
    EXPECT_NE(msg.find("'ff'"), std::string::npos) << msg;
    EXPECT_NE(msg.find("xi2=0.9"), std::string::npos) << msg;
  }
}

TEST(ExperimentJson, ParsesFlatObject) {
  const auto e = experiment::experiment_from_json(R"({
    "name": "custom", "sweep_param": "gamma_db", "sweep_values": [0, 5],
    "scheme": "power", "fading": "nakagami", "nakagami_m": 4, "coefficients": [0.7, 0.5],
    "metrics": ["p2", "m2"], "engines": ["analytic"], "trials": 1000, "seed": 9, "p_near": 0.4})");
  EXPECT_EQ(e.grid.size(), 2u);
  ASSERT_EQ(e.series.size(), 1u);
  EXPECT_EQ(e.series[0].scheme, experiment::Scheme::Power);
  EXPECT_EQ(e.series[0].config.nakagami_m(), 4.0);
  EXPECT_EQ(e.engines, std::vector<Engine>{Engine::Analytic});
  EXPECT_EQ(e.trials, 1000);
  EXPECT_EQ(e.seed, 9u);
  EXPECT_EQ(e.series[0].p_near, 0.4);
}

TEST(ExperimentJson, RejectsBadInput) {
  EXPECT_THROW(experiment::experiment_from_json(R"({"sweep_param": "gamma_db"})"), std::invalid_argument);
  EXPECT_THROW(experiment::experiment_from_json(R"({"sweep_values": [1], "sweep_param": "colour"})"),
               std::invalid_argument);
  EXPECT_THROW(experiment::experiment_from_json(R"({"sweep_values": [1], "metrics": ["nope"]})"),
               std::invalid_argument);
  EXPECT_THROW(experiment::experiment_from_json(R"({"sweep_values": [1], "scheme": "ofdma"})"),
               std::invalid_argument);
  EXPECT_THROW(experiment::experiment_from_json(R"({"sweep_values": [1], "bogus_key": 2})"), std::invalid_argument);
  EXPECT_THROW(experiment::load_experiment("/nonexistent/exp.json"), std::runtime_error);
}

TEST(ExperimentJson, LoadsFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "bcnoma_exp_test.json";
  {
    std::ofstream f(path);
    f << R"({"sweep_values": [2.0], "engines": ["analytic"]})";
  }
  const auto res = experiment::run(experiment::load_experiment(path.string()));
  std::filesystem::remove(path);
  ASSERT_EQ(res.rows.size(), 1u);
  EXPECT_EQ(res.rows[0].metric, "series/normalized_c_suc");
}

TEST(Presets, AllNamedPresetsValidate) {
  const auto names = experiment::preset_names();
  EXPECT_EQ(names.size(), 11u);
  for (const auto& n : names) EXPECT_NO_THROW(experiment::preset(n).validate()) << n;
  EXPECT_THROW(experiment::preset("fig9"), std::invalid_argument);
}

TEST(Resolve, CoefficientRules) {
  experiment::Series s;
  s.rule = experiment::CoefficientRule::FarFromCriterion;
  const auto p = experiment::resolve(s, "gamma_db", 5.0);
  EXPECT_NEAR(p.coefficients[1], max_far_coefficient(p.config, p.partition, 0.7), 1e-15);
  s.rule = experiment::CoefficientRule::Equal;
  const auto q = experiment::resolve(s, "xi1", 0.4);
  EXPECT_EQ(q.coefficients, (std::vector<double>{0.4, 0.4}));
  s.rule = experiment::CoefficientRule::Fixed;
  const auto r = experiment::resolve(s, "r2", 30.0);
  EXPECT_DOUBLE_EQ(r.partition.radii[1], 30.0);
}
