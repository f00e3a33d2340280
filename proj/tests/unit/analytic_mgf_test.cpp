#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "bcnoma/analytic_ff.hpp"
#include "bcnoma/analytic_mgf.hpp"

using namespace bcnoma;

namespace {

SystemConfig three_regions(double gamma_db) {
  SystemConfig c = default_config();
  c.subregion_count = 3;
  c.sinr_threshold_db = gamma_db;
  return c;
}

}  // namespace

TEST(Mgf, InterfererPathsAgree) {
  const SystemConfig c = three_regions(5.0);
  const auto part = default_partition(c);
  mgf::Options direct;
  direct.path = mgf::InterfererPath::DirectQuadrature;
  for (int j = 1; j < 3; ++j)
    for (Complex k : {Complex(1e6, 0), Complex(3e8, 2e9), Complex(1e10, -4e10)}) {
      const Complex gi = mgf::interferer_factor(c, part, j, k);
      const Complex dq = mgf::interferer_factor(c, part, j, k, direct);
      EXPECT_NEAR(std::abs(gi - dq), 0.0, 1e-8) << "j=" << j << " k=" << k;
    }
}

TEST(Mgf, OutageAgreesAcrossInterfererPaths) {
  const auto lad = make_ladder({0.7, 0.5, 0.3});
  mgf::Options direct;
  direct.path = mgf::InterfererPath::DirectQuadrature;
  for (double g : {5.0, 10.0}) {
    const SystemConfig c = three_regions(g);
    const auto part = default_partition(c);
    for (int rank = 1; rank <= 3; ++rank)
      EXPECT_NEAR(mgf::outage_probability(c, lad, part, rank),
                  mgf::outage_probability(c, lad, part, rank, direct), 1e-8)
          << "gamma=" << g << " rank=" << rank;
  }
}

TEST(Mgf, MgfAtZeroIsOne) {
  const SystemConfig c = three_regions(5.0);
  const Complex v = mgf::inverse_sinr_mgf(c, {0.7, 0.5, 0.3}, default_partition(c), 1, Complex(0.0));
  EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-12);
}

TEST(Mgf, LastRankWithCertainDecodeHasNoOutage) {
  for (double g : {0.0, 5.0, 10.0}) {
    const SystemConfig c = three_regions(g);
    const auto part = default_partition(c);
    EXPECT_NEAR(ff::solo_success(c, 0.3, part.lower(2), part.upper(2)), 1.0, 0.0);
    EXPECT_NEAR(mgf::outage_probability(c, make_ladder({0.7, 0.5, 0.3}), part, 3), 0.0, 1e-6);
  }
}

TEST(Mgf, LastRankTracksSoloSuccessInsideTheSupport) {
  // The inverse SINR of the last rank has bounded support with a density
  // jump; Euler-summed inversion resolves it to about 1e-3 only.
  const SystemConfig c = three_regions(5.0);
  const auto part = default_partition(c);
  const double solo = ff::solo_success(c, 1e-4, part.lower(2), part.upper(2));
  ASSERT_GT(solo, 0.1);
  ASSERT_LT(solo, 0.9);
  EXPECT_NEAR(mgf::outage_probability(c, make_ladder({0.7, 0.5, 1e-4}), part, 3), 1.0 - solo, 1e-3);
}

TEST(Mgf, VanishingThresholdMeansNoOutage) {
  const SystemConfig c = three_regions(-30.0);
  const auto part = default_partition(c);
  for (int rank = 1; rank <= 3; ++rank)
    EXPECT_NEAR(mgf::outage_probability(c, make_ladder({0.7, 0.5, 0.3}), part, rank), 0.0, 1e-6);
}

// The exact outage is zero here, but the worst case sits exactly on the
// threshold so the inverse-SINR support ends at the evaluation point.
TEST(Mgf, DesignedLadderDecodesEveryone) {
  const SystemConfig c = three_regions(5.0);
  const auto part = default_partition(c);
  const auto out = mgf::multiplex_outcome(c, design_ladder(c, part), part);
  for (double p : out.p_out) EXPECT_LE(p, 1e-3);
  EXPECT_GE(out.m_n, 3 - 1e-2);
}

TEST(Mgf, TwoNodeCaseMatchesPairAnalysis) {
  for (double g : {0.0, 2.0, 5.0}) {
    SystemConfig c = default_config();
    c.sinr_threshold_db = g;
    const auto part = default_partition(c);
    const auto out = mgf::multiplex_outcome(c, make_ladder({0.7, 0.5}), part);
    EXPECT_NEAR(out.m_n, ff::pair_probs(c, 0.7, 0.5, part).m2, 0.03) << g;
  }
}

TEST(Mgf, NumberDecodedFallsWithThreshold) {
  const auto lad = make_ladder({0.7, 0.5, 0.3});
  double last = 4.0;
  for (int g = 0; g <= 10; g += 2) {
    const SystemConfig c = three_regions(g);
    const auto out = mgf::multiplex_outcome(c, lad, default_partition(c));
    EXPECT_LE(out.m_n, last + 1e-6) << g;
    last = out.m_n;
  }
}

TEST(Mgf, RejectsBadRank) {
  const SystemConfig c = three_regions(5.0);
  const auto part = default_partition(c);
  EXPECT_THROW(mgf::outage_probability(c, make_ladder({0.7, 0.5, 0.3}), part, 0), std::invalid_argument);
  EXPECT_THROW(mgf::outage_probability(c, make_ladder({0.7, 0.5, 0.3}), part, 4), std::invalid_argument);
}

TEST(Compose, TelescopingProduct) {
  const auto perfect = mgf::compose_outcome({0.0, 0.0, 0.0});
  EXPECT_DOUBLE_EQ(perfect.p_k.back(), 1.0);
  EXPECT_DOUBLE_EQ(perfect.m_n, 3.0);

  const auto dead = mgf::compose_outcome({1.0, 0.2, 0.4});
  EXPECT_DOUBLE_EQ(dead.p_k[0], 1.0);
  EXPECT_DOUBLE_EQ(dead.m_n, 0.0);

  const auto mixed = mgf::compose_outcome({0.1, 0.2, 0.3});
  ASSERT_EQ(mixed.p_k.size(), 4u);
  EXPECT_NEAR(std::accumulate(mixed.p_k.begin(), mixed.p_k.end(), 0.0), 1.0, 1e-12);
  EXPECT_NEAR(mixed.p_k[0], 0.1, 1e-15);
  EXPECT_NEAR(mixed.p_k[1], 0.9 * 0.2, 1e-15);
  EXPECT_NEAR(mixed.p_k[2], 0.9 * 0.8 * 0.3, 1e-15);
  EXPECT_NEAR(mixed.p_k[3], 0.9 * 0.8 * 0.7, 1e-15);
  EXPECT_NEAR(mixed.m_n, mixed.p_k[1] + 2 * mixed.p_k[2] + 3 * mixed.p_k[3], 1e-15);
}
