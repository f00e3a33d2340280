#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <variant>
#include <vector>

#include "bcnoma/analytic_fading.hpp"
#include "bcnoma/config.hpp"
#include "bcnoma/design.hpp"

namespace bcnoma::sim {

using Rng = std::mt19937_64;

// Independent stream seed for (master, stream index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  long long trials = 0;
};

struct NodeRealization {
  int id = 0;
  double distance_m = 0.0;
  double fading_gain = 1.0;  // g; the round trip sees g^2
  int group = 0;             // subregion or power class, 0 = strongest class
  double reflection_coeff = 1.0;

  double fading_amplitude_sq() const { return fading_gain * fading_gain; }
  // Path-loss-and-fading factor x = g^2 r^{-2 alpha}.
  double composite(double alpha) const { return fading_amplitude_sq() * std::pow(distance_m, -2.0 * alpha); }
};

struct RegionDivision {
  SubregionPartition partition;
};
struct PowerDivision {
  double beta_tilde = 0.0;
};
// Everyone transmits alone.
struct Tdma {};
using PairingPolicy = std::variant<RegionDivision, PowerDivision, Tdma>;

enum class LinkModel { Backscatter, Conventional };
struct LinkBudget {
  LinkModel model = LinkModel::Backscatter;
  double conventional_power_dbm = 20.0;
};

struct RunOptions {
  unsigned threads = 0;          // 0: hardware concurrency
  std::ostream* trace = nullptr;  // one JSON line per mini-slot; forces a serial run
};

// Positions are area-uniform on the annulus; g ~ Gamma(m, 1/m) under Nakagami, 1 otherwise.
std::vector<NodeRealization> sample_nodes(const SystemConfig& cfg, Rng& rng);
std::vector<NodeRealization> sample_nodes(const SystemConfig& cfg, std::uint64_t seed);

// Labels each node with its class and the class reflection coefficient.
void classify(std::vector<NodeRealization>& nodes, const PairingPolicy& policy, const SystemConfig& cfg,
              const CoefficientLadder& ladder);

struct MiniSlot {
  std::vector<int> members;  // indices into the node list
  double duration_fraction = 0.0;  // share of the slot, n/M
};

// Each mini-slot takes one random unserved node from every class that still
// has one; a group of n nodes lasts n L / M.
std::vector<MiniSlot> schedule(const std::vector<NodeRealization>& nodes, const PairingPolicy& policy,
                               const SystemConfig& cfg, Rng& rng);

double received_power(const NodeRealization& node, const SystemConfig& cfg, const LinkBudget& link = {});

// SIC on raw powers: decode in descending power (ties by position in the
// list), stop at the first SINR below threshold. Returns the decoded count.
int sic_decode(const std::vector<double>& powers, double noise_w, double threshold);
int sic_decode(const std::vector<NodeRealization>& group, const SystemConfig& cfg, const LinkBudget& link = {});

struct MiniSlotRecord {
  std::vector<int> ids;          // in decoding order
  std::vector<double> powers_w;  // same order
  double duration_fraction = 0.0;
  int decoded = 0;
  double bits = 0.0;
};

struct TrialOutcome {
  std::vector<MiniSlotRecord> minislots;
  double bits_decoded = 0.0;
  double bits_offered = 0.0;
};

TrialOutcome run_trial(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                       Rng& rng, const LinkBudget& link = {});

struct SlotMetrics {
  Estimate c_suc;       // decoded bits per slot
  Estimate normalized;  // decoded bits / offered bits
  Estimate m_n;         // decoded per full-size group
  std::vector<Estimate> p_k;  // k = 0..N over full-size groups
  Estimate p2, p1, m2;        // over two-node groups
  Estimate m1_near, m1_far;   // solo groups of class 0 / class 1
};

SlotMetrics estimate_metrics(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                             long long trials, std::uint64_t seed, const LinkBudget& link = {},
                             const RunOptions& opt = {});

// Dedicated samplers: one pair, one lone node or one full group per trial.
struct PairMetrics {
  Estimate p2, p1, m2;
};
PairMetrics estimate_pair(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                          long long trials, std::uint64_t seed, const RunOptions& opt = {});
Estimate estimate_solo(const SystemConfig& cfg, const PairingPolicy& policy, const CoefficientLadder& ladder,
                       fading::Group which, long long trials, std::uint64_t seed, const RunOptions& opt = {});

struct GroupMetrics {
  Estimate m_n;
  std::vector<Estimate> p_k;
  long long failures = 0;  // trials where some node was lost
};
GroupMetrics estimate_group(const SystemConfig& cfg, const SubregionPartition& partition,
                            const CoefficientLadder& ladder, long long trials, std::uint64_t seed,
                            const RunOptions& opt = {});

// Fraction of area-uniform nodes whose x = g^2 r^{-2 alpha} reaches beta_tilde.
Estimate estimate_high_fraction(const SystemConfig& cfg, double beta_tilde, long long trials, std::uint64_t seed,
                                const RunOptions& opt = {});

enum class BenchmarkSystem { BackcomNoma, BackcomTdma, ConvNoma, ConvTdma };
const char* to_string(BenchmarkSystem s);

struct BenchmarkResult {
  Estimate c_suc;
  Estimate normalized;
};
// BackCom variants: xi = 0.7 everywhere, double attenuation. Conventional
// variants: 20 dBm transmitters, single attenuation r^{-alpha}
// with the same g^2 fading factor. NOMA pairs across the
// equal-area two-subregion split; TDMA serves every node alone.
BenchmarkResult benchmark(const SystemConfig& cfg, BenchmarkSystem system, long long trials, std::uint64_t seed,
                          const RunOptions& opt = {});

}  // namespace bcnoma::sim
