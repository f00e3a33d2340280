#pragma once

#include "bcnoma/analytic_ff.hpp"
#include "bcnoma/config.hpp"
#include "bcnoma/design.hpp"

namespace bcnoma::fading {

// x = g^2 r^{-2 alpha} with g ~ Gamma(m, scale 1/m) and r area-uniform on
// [r_lo, r_hi].
struct CompositeDist {
  double m = 1.0;
  double r_lo = 1.0;
  double r_hi = 2.0;
  double alpha = 2.5;

  void validate() const;
};

double composite_cdf(const CompositeDist& d, double x);
double composite_ccdf(const CompositeDist& d, double x);
double composite_pdf(const CompositeDist& d, double x);
// Geometric centre of the path-loss range; a good split point for integrals.
double composite_pivot(const CompositeDist& d);

enum class Group { Near, Far };

// Region division: classes are the two annuli of the partition.
PairDecodeProbs pair_probs_region(const SystemConfig& cfg, double xi1, double xi2,
                                  const SubregionPartition& partition);
double solo_success_region(const SystemConfig& cfg, const SubregionPartition& partition, Group which, double xi);

// Power division: nodes whose x = g^2 r^{-2 alpha} reaches beta_tilde form the
// high-power group.
struct PowerDivisionPolicy {
  double beta_tilde = 0.0;
  double p_near = 0.0;  // 1 - Phi(beta_tilde) over the whole annulus
};

PowerDivisionPolicy power_policy(const SystemConfig& cfg, double beta_tilde);
PowerDivisionPolicy solve_beta_tilde(const SystemConfig& cfg, double target_p_near);

PairDecodeProbs pair_probs_power(const SystemConfig& cfg, double xi1, double xi2, const PowerDivisionPolicy& policy);

// Normalized uses the truncated class distributions (what the simulator
// measures). Unnormalized drops the truncation normaliser.
enum class SoloForm { Normalized, Unnormalized };
double solo_success_power(const SystemConfig& cfg, Group which, double xi, const PowerDivisionPolicy& policy,
                          SoloForm form = SoloForm::Normalized);

}  // namespace bcnoma::fading
