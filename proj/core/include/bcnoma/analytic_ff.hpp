#pragma once

#include <vector>

#include "bcnoma/config.hpp"
#include "bcnoma/design.hpp"

namespace bcnoma {

struct PairDecodeProbs {
  double p2 = 0.0;  // both paired nodes decoded
  double p1 = 0.0;  // only the stronger node decoded
  double m2 = 0.0;  // p1 + 2 p2
};

PairDecodeProbs make_pair_probs(double p2, double p1);

struct ThroughputReport {
  double c_suc_bits = 0.0;
  double normalized = 0.0;
  double total_bits = 0.0;
};

namespace ff {

// Two-node pairing without fading. Received powers are normalised as
// y = r^{-2 alpha}; the near node is always decoded first.
//
// omega(p, q, w) is the probability mass
//   int_p^q Pr(y1 >= gamma kappa y + c) f2(y) dy + Pr(w <= y2 <= p),
// written through 2F1. Evaluated in a cancellation-free rearrangement so it
// stays accurate when the noise is tiny.
double omega(double p, double q, double w, const SystemConfig& cfg, const SubregionPartition& partition,
             double xi1, double xi2);
// Same quantity from the textbook 2F1 expression; loses all precision once
// PT xi2 q / noise is large and is kept for cross-checking.
double omega_direct(double p, double q, double w, const SystemConfig& cfg, const SubregionPartition& partition,
                    double xi1, double xi2);

PairDecodeProbs pair_probs(const SystemConfig& cfg, double xi1, double xi2, const SubregionPartition& partition);

// Noise-free limit of M2 as a function of gamma * kappa.
double m2_asymptotic(const SystemConfig& cfg, const SubregionPartition& partition, double kappa);

// Probability that a lone node uniformly placed in [r_lo, r_hi] is decoded.
double solo_success(const SystemConfig& cfg, double xi, double r_lo, double r_hi);

}  // namespace ff

// Binomial weights C(M, t) p^t (1-p)^{M-t}, t = 0..M.
std::vector<double> binomial_weights(int m, double p);

// Average decoded bits per slot for two-class pairing: t near nodes form
// min(t, M-t) pairs, the |M-2t| leftovers go solo. Shared by every pairing
// rule; total_bits uses ideal factors (M2 = 2, M1 = 1).
ThroughputReport throughput_two_node(const SystemConfig& cfg, const PairDecodeProbs& probs, double m1_near,
                                     double m1_far, double p_near);

}  // namespace bcnoma
