#include <gtest/gtest.h>

#include <cmath>

#include "bcnoma/analytic_fading.hpp"
#include "bcnoma/quadrature.hpp"

using namespace bcnoma;
using fading::CompositeDist;

namespace {

SystemConfig nakagami(double m, double alpha, double gamma_db = 5.0) {
  SystemConfig c = default_config();
  c.fading = Nakagami{m};
  c.path_loss_exponent = alpha;
  c.sinr_threshold_db = gamma_db;
  return c;
}

}  // namespace

// References: E_r[P(m, m sqrt(x) r^alpha)] with r^2 uniform, by mpmath
// quadrature over 80 panels.
struct CdfCase {
  double m, alpha, x, expected;
};

class CompositeCdfTest : public ::testing::TestWithParam<CdfCase> {};

TEST_P(CompositeCdfTest, MatchesDirectExpectation) {
  const auto k = GetParam();
  const CompositeDist d{k.m, 1.0, 65.0, k.alpha};
  EXPECT_NEAR(fading::composite_cdf(d, k.x), k.expected, 1e-12);
  EXPECT_NEAR(fading::composite_ccdf(d, k.x), 1.0 - k.expected, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Reference, CompositeCdfTest,
                         ::testing::Values(CdfCase{1, 4, 1e-16, 0.05645986052489485},
                                           CdfCase{1, 4, 3e-15, 0.2489881531281516},
                                           CdfCase{1, 4, 1e-13, 0.6274311466644125},
                                           CdfCase{1, 4, 5.602044746332411e-11, 0.9235475099701953},
                                           CdfCase{1, 4, 1e-3, 0.9990544361007017},
                                           CdfCase{4, 2.5, 3e-10, 0.04965805203484364},
                                           CdfCase{4, 2.5, 8.6e-10, 0.1660828263147419},
                                           CdfCase{4, 2.5, 5e-9, 0.5161474723010551},
                                           CdfCase{4, 2.5, 2.9357333630581883e-08, 0.7610522653964268},
                                           CdfCase{4, 2.5, 1e-3, 0.9965569807480452}));

TEST(Composite, PdfIsDerivativeOfCdf) {
  for (auto [m, a] : {std::pair{1.0, 4.0}, std::pair{4.0, 2.5}, std::pair{2.0, 3.0}}) {
    const CompositeDist d{m, 1.0, 65.0, a};
    const double pivot = fading::composite_pivot(d);
    for (double s : {1e-4, 0.01, 1.0, 100.0}) {
      const double x = pivot * s, h = x * 1e-5;
      const double fd = (fading::composite_cdf(d, x + h) - fading::composite_cdf(d, x - h)) / (2 * h);
      EXPECT_NEAR(fading::composite_pdf(d, x), fd, 1e-5 * std::abs(fd) + 1e-300) << "m=" << m << " x=" << x;
    }
  }
}

TEST(Composite, PdfIntegratesToOneAndStaysFiniteNearZero) {
  for (auto [m, a] : {std::pair{1.0, 4.0}, std::pair{4.0, 2.5}, std::pair{0.5, 2.0}}) {
    const CompositeDist d{m, 1.0, 65.0, a};
    EXPECT_TRUE(std::isfinite(fading::composite_pdf(d, 1e-300)));
    const double mass = integrate_log([&](double x) { return fading::composite_pdf(d, x); }, 0.0, INFINITY,
                                      {1e-14, 1e-12, 4000}, fading::composite_pivot(d))
                            .value;
    EXPECT_NEAR(mass, 1.0, 1e-8) << "m=" << m << " alpha=" << a;
  }
}

TEST(Composite, LimitsAndValidation) {
  const CompositeDist d{2.0, 1.0, 65.0, 2.5};
  EXPECT_EQ(fading::composite_cdf(d, 0.0), 0.0);
  EXPECT_EQ(fading::composite_cdf(d, INFINITY), 1.0);
  EXPECT_EQ(fading::composite_pdf(d, -1.0), 0.0);
  EXPECT_THROW((CompositeDist{0.2, 1.0, 65.0, 2.5}.validate()), std::invalid_argument);
  EXPECT_THROW((CompositeDist{1.0, 5.0, 2.0, 2.5}.validate()), std::invalid_argument);
}

TEST(PowerDivision, MedianSplit) {
  for (auto [m, a] : {std::pair{4.0, 2.5}, std::pair{1.0, 4.0}}) {
    const SystemConfig c = nakagami(m, a);
    const auto pol = fading::solve_beta_tilde(c, 0.5);
    const CompositeDist whole{m, c.inner_radius_m, c.outer_radius_m, a};
    EXPECT_NEAR(fading::composite_cdf(whole, pol.beta_tilde), 0.5, 1e-9);
    EXPECT_NEAR(pol.p_near, 0.5, 1e-9);
    EXPECT_NEAR(fading::power_policy(c, pol.beta_tilde).p_near, 0.5, 1e-9);
  }
  EXPECT_THROW(fading::solve_beta_tilde(nakagami(4, 2.5), 1.5), std::invalid_argument);
}

TEST(PowerDivision, ProbabilitiesAreConsistent) {
  const SystemConfig c = nakagami(4.0, 2.5, 5.0);
  const auto pol = fading::solve_beta_tilde(c, 0.5);
  const auto p = fading::pair_probs_power(c, 0.7, 0.5, pol);
  EXPECT_GE(p.p2, 0.0);
  EXPECT_LE(p.p1 + p.p2, 1.0 + 1e-12);
  for (auto g : {fading::Group::Near, fading::Group::Far}) {
    const double s = fading::solo_success_power(c, g, 0.5, pol);
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
  }
  // A high-power node alone beats beta_tilde by construction.
  const double noise_floor = c.noise_power_w() * c.threshold() / (c.reader_power_w() * pol.beta_tilde);
  EXPECT_DOUBLE_EQ(fading::solo_success_power(c, fading::Group::Near, 1.01 * noise_floor, pol), 1.0);
}

TEST(RegionDivision, HighShapeApproachesFadingFree) {
  // Nakagami m -> infinity removes fading.
  SystemConfig free = default_config();
  free.sinr_threshold_db = 8.0;
  SystemConfig heavy = free;
  heavy.fading = Nakagami{4000.0};
  const auto part = default_partition(free);
  const auto a = ff::pair_probs(free, 0.7, 0.5, part);
  const auto b = fading::pair_probs_region(heavy, 0.7, 0.5, part);
  EXPECT_NEAR(a.p2, b.p2, 0.01);
  EXPECT_NEAR(a.p1, b.p1, 0.01);
}

TEST(RegionDivision, FadingDefaultsStayInRange) {
  for (double g = 0; g <= 10; g += 2.5) {
    const SystemConfig c = nakagami(4.0, 2.5, g);
    const auto part = default_partition(c);
    const auto p = fading::pair_probs_region(c, 0.7, 0.5, part);
    EXPECT_GE(p.p2, 0.0);
    EXPECT_LE(p.m2, 2.0 + 1e-12);
    const double near = fading::solo_success_region(c, part, fading::Group::Near, 0.7);
    const double far = fading::solo_success_region(c, part, fading::Group::Far, 0.5);
    EXPECT_GE(near, far);
  }
}
