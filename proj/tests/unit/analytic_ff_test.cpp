#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "bcnoma/analytic_ff.hpp"

using namespace bcnoma;

namespace {

SystemConfig cfg_at(double gamma_db, double noise_dbm = -100.0) {
  SystemConfig c = default_config();
  c.sinr_threshold_db = gamma_db;
  c.noise_power_dbm = noise_dbm;
  return c;
}

}  // namespace

// References: one-dimensional integral over the far node's r^2 of the
// closed-form uniform CDF of the near node (mpmath, 600 panels). No 2F1.
struct PairCase {
  double gamma_db, noise_dbm, xi2, p2, p1;
};

class PairProbsTest : public ::testing::TestWithParam<PairCase> {};

TEST_P(PairProbsTest, MatchesDirectIntegration) {
  const auto k = GetParam();
  const SystemConfig c = cfg_at(k.gamma_db, k.noise_dbm);
  const auto p = ff::pair_probs(c, 0.7, k.xi2, default_partition(c));
  EXPECT_NEAR(p.p2, k.p2, 1e-9);
  EXPECT_NEAR(p.p1, k.p1, 1e-9);
  EXPECT_NEAR(p.m2, p.p1 + 2 * p.p2, 1e-15);
}

INSTANTIATE_TEST_SUITE_P(Reference, PairProbsTest,
                         ::testing::Values(PairCase{0, -100, 0.5, 1.0, 0.0},
                                           PairCase{5, -100, 0.5, 0.946360031077681, 0.0},
                                           PairCase{10, -100, 0.5, 0.682922335790061, 0.0},
                                           PairCase{10, -100, 0.05, 1.0, 0.0},
                                           PairCase{5, -60, 0.5, 0.346549181078, 0.565760697867},
                                           PairCase{5, -60, 0.05, 0.0, 1.0},
                                           PairCase{10, -60, 0.5, 0.0, 0.596796245908}));

TEST(Omega, StableFormAgreesWithTextbookWhereThatIsAccurate) {
  // At high noise the textbook 2F1 expression has not yet lost precision.
  for (double g : {0.0, 3.0, 7.0}) {
    const SystemConfig c = cfg_at(g, -55.0);
    const auto part = default_partition(c);
    const double a = c.path_loss_exponent;
    const double p = std::pow(65.0, -2 * a), q = std::pow(part.radii[1], -2 * a);
    for (double w : {p, 0.5 * (p + q)}) {
      const double s = ff::omega(p, q, w, c, part, 0.7, 0.5);
      const double d = ff::omega_direct(p, q, w, c, part, 0.7, 0.5);
      EXPECT_NEAR(s, d, 1e-9 * std::max(1.0, std::abs(d))) << "gamma=" << g;
    }
  }
}

TEST(Omega, EmptyIntegralLeavesTheFarNodeMass) {
  // q = p: only Pr(w <= y2 <= p) remains, with r2^2 uniform on [R2^2, R^2].
  const SystemConfig c = cfg_at(5.0);
  const auto part = default_partition(c);
  const double a = c.path_loss_exponent, r2s = part.radii[1] * part.radii[1], rs = 65.0 * 65.0;
  const double w = std::pow(60.0, -2 * a), p = std::pow(50.0, -2 * a);
  EXPECT_NEAR(ff::omega(p, p, w, c, part, 0.7, 0.5), (std::pow(w, -1 / a) - std::pow(p, -1 / a)) / (rs - r2s), 1e-12);
}

TEST(PairProbs, ProbabilitiesStayInRangeAndFallWithThreshold) {
  double last_m2 = 3.0;
  for (int g = -5; g <= 15; ++g) {
    const SystemConfig c = cfg_at(g);
    const auto p = ff::pair_probs(c, 0.7, 0.5, default_partition(c));
    EXPECT_GE(p.p2, 0.0);
    EXPECT_GE(p.p1, 0.0);
    EXPECT_LE(p.p1 + p.p2, 1.0 + 1e-12);
    EXPECT_LE(p.m2, last_m2 + 1e-12) << g;
    last_m2 = p.m2;
  }
}

TEST(SoloSuccess, ClosedForm) {
  const SystemConfig c = cfg_at(5.0, -60.0);
  const auto part = default_partition(c);
  EXPECT_NEAR(ff::solo_success(c, 0.5, part.lower(1), part.upper(1)), 0.428072049371, 1e-11);
  EXPECT_DOUBLE_EQ(ff::solo_success(cfg_at(5.0), 0.5, part.lower(1), part.upper(1)), 1.0);
  EXPECT_DOUBLE_EQ(ff::solo_success(cfg_at(5.0, 0.0), 0.5, part.lower(1), part.upper(1)), 0.0);
}

TEST(NoiseFreeLimit, MatchesPairProbsInEveryBranch) {
  SystemConfig c = cfg_at(0.0, -200.0);
  const auto part = default_partition(c);
  const double kappa = 0.5;
  for (double gk : {0.5, 2.0, 50.0, 3e4, 1e8, 5e8, 3e9}) {
    c.sinr_threshold_db = 10 * std::log10(gk / kappa);
    const auto p = ff::pair_probs(c, 0.7, 0.7 * kappa, part);
    EXPECT_NEAR(ff::m2_asymptotic(c, part, kappa), p.m2, 1e-6) << "gamma*kappa=" << gk;
  }
}

TEST(NoiseFreeLimit, ContinuousAcrossBranchEdges) {
  SystemConfig c = cfg_at(0.0, -200.0);
  const auto part = default_partition(c);
  const double a = c.path_loss_exponent, r1 = part.radii[0], r2 = part.radii[1], r = part.radii[2];
  const double kappa = 1.0;
  for (double edge : {1.0, std::pow(r / r2, 2 * a), std::pow(r2 / r1, 2 * a), std::pow(r / r1, 2 * a)}) {
    c.sinr_threshold_db = 10 * std::log10(edge * (1 - 1e-9));
    const double below = ff::m2_asymptotic(c, part, kappa);
    c.sinr_threshold_db = 10 * std::log10(edge * (1 + 1e-9));
    const double above = ff::m2_asymptotic(c, part, kappa);
    EXPECT_NEAR(below, above, 1e-6) << "edge " << edge;
  }
}

TEST(BinomialWeights, SumToOneAndMatchMean) {
  for (double p : {0.0, 0.1, 0.5, 0.93, 1.0}) {
    const auto w = binomial_weights(60, p);
    ASSERT_EQ(w.size(), 61u);
    EXPECT_NEAR(std::accumulate(w.begin(), w.end(), 0.0), 1.0, 1e-12);
    double mean = 0.0;
    for (std::size_t t = 0; t < w.size(); ++t) mean += t * w[t];
    EXPECT_NEAR(mean, 60 * p, 1e-10);
  }
  EXPECT_NEAR(binomial_weights(4, 0.5)[2], 6.0 / 16.0, 1e-15);
}

TEST(Throughput, PerfectDecodingNormalizesToOne) {
  const SystemConfig c = default_config();
  const auto t = throughput_two_node(c, make_pair_probs(1.0, 0.0), 1.0, 1.0, 0.5);
  EXPECT_NEAR(t.normalized, 1.0, 1e-12);
  EXPECT_NEAR(t.c_suc_bits, t.total_bits, 1e-9);
  const auto none = throughput_two_node(c, make_pair_probs(0.0, 0.0), 0.0, 0.0, 0.5);
  EXPECT_EQ(none.c_suc_bits, 0.0);
}

TEST(Throughput, AllNodesNearServesEveryoneAlone) {
  // p_near = 1: no pairs, every node alone with its near-class factor.
  const SystemConfig c = default_config();
  const auto t = throughput_two_node(c, make_pair_probs(0.0, 0.0), 0.8, 0.1, 1.0);
  EXPECT_NEAR(t.normalized, 0.8, 1e-12);
}
