#pragma once

#include <cmath>
#include <vector>

#include "bcnoma/config.hpp"
#include "bcnoma/design.hpp"
#include "bcnoma/quadrature.hpp"
#include "bcnoma/specfun.hpp"

namespace bcnoma::mgf {

// Fourier-series Laplace inversion with Euler summation of the tail.
struct EulerInversionParams {
  double A = 8.0 * std::log(10.0);
  int B = 11;
  int C = 14;
};

// How the expectation over one interferer position is evaluated.
enum class InterfererPath { IncompleteGamma, DirectQuadrature };

struct Options {
  EulerInversionParams euler{};
  InterfererPath path = InterfererPath::IncompleteGamma;
  QuadratureSpec outer{1e-13, 1e-11, 4000};
  QuadratureSpec inner{1e-14, 1e-12, 4000};
};

struct MultiplexOutcome {
  std::vector<double> p_out;  // rank 1..N
  std::vector<double> p_k;    // k = 0..N decoded
  double m_n = 0.0;
};

// E[exp(-K r^{-2 alpha})] for r uniform in area over subregion j (0-based).
Complex interferer_factor(const SystemConfig& cfg, const SubregionPartition& partition, int j, Complex k,
                          const Options& opt = {});

// MGF of the inverse SINR of the rank-th node (1-based), positions independent.
Complex inverse_sinr_mgf(const SystemConfig& cfg, const std::vector<double>& xi, const SubregionPartition& partition,
                         int rank, Complex s, const Options& opt = {});

// Pr(SINR_rank < gamma). Throws std::runtime_error when the inversion lands
// more than 1e-2 outside [0,1]; smaller excursions are inversion noise and
// are clamped.
double outage_probability(const SystemConfig& cfg, const CoefficientLadder& ladder,
                          const SubregionPartition& partition, int rank, const Options& opt = {});

// p_k = p_out^{(k+1)} prod_{i<=k} (1 - p_out^{(i)}), p_out^{(N+1)} = 1.
MultiplexOutcome compose_outcome(const std::vector<double>& p_out);

MultiplexOutcome multiplex_outcome(const SystemConfig& cfg, const CoefficientLadder& ladder,
                                   const SubregionPartition& partition, const Options& opt = {});

}  // namespace bcnoma::mgf
