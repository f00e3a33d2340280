#pragma once

#include <optional>
#include <vector>

#include "bcnoma/config.hpp"

namespace bcnoma {

// Annular subregions R_1 < R_2 < ... < R_{N+1}; subregion i (0-based) is
// [radii[i], radii[i+1]].
struct SubregionPartition {
  std::vector<double> radii;

  int count() const { return static_cast<int>(radii.size()) - 1; }
  double lower(int i) const { return radii.at(i); }
  double upper(int i) const { return radii.at(i + 1); }
  // Share of the annulus area held by subregion i; this is the placement
  // probability of a uniformly dropped node.
  double area_fraction(int i) const;
  // Subregion index containing r (radii on a boundary go to the outer one).
  int locate(double r) const;
};

// Equal-area split: R_i = sqrt(((i-1)R^2 + (N+1-i)R_1^2)/N).
SubregionPartition default_partition(const SystemConfig& cfg);
// Validated partition; endpoints must match the config radii.
SubregionPartition make_partition(const SystemConfig& cfg, std::vector<double> radii);
SubregionPartition two_region_partition(const SystemConfig& cfg, double r2);
// R_2 giving the requested near-subregion probability.
double radius_for_near_fraction(const SystemConfig& cfg, double p_near);

struct CoefficientLadder {
  std::vector<double> coefficients;  // xi_1 >= ... >= xi_N > 0
  bool feasible = true;
  // Right-hand side of the worst-case decoding condition at each index.
  std::vector<double> binding_constraints;

  int size() const { return static_cast<int>(coefficients.size()); }
  double operator[](int i) const { return coefficients.at(i); }
};

// Checks ordering and range; feasible = (xi_1 <= 1). Throws on bad input.
CoefficientLadder make_ladder(std::vector<double> coefficients);

// Worst-case right-hand side for index i given the coefficients below it.
double ladder_requirement(const SystemConfig& cfg, const SubregionPartition& partition,
                          const std::vector<double>& coefficients, int i);

// Minimal ladder that guarantees every multiplexed node decodes whatever its
// position inside its subregion. When last is given it replaces the smallest
// coefficient; the others are built upward from it. slack >= 1 scales every step.
CoefficientLadder design_ladder(const SystemConfig& cfg, const SubregionPartition& partition,
                                double slack = 1.0, std::optional<double> last = std::nullopt);

// True when every index meets its worst-case requirement (relative tolerance).
bool satisfies_guarantee(const SystemConfig& cfg, const SubregionPartition& partition,
                         const std::vector<double>& coefficients, double rel_tol = 1e-12);

// Two-subregion helpers. Largest xi_2 still meeting the guarantee for a given
// xi_1 (may be <= 0 when none exists), and smallest xi_1 for a given xi_2.
double max_far_coefficient(const SystemConfig& cfg, const SubregionPartition& partition, double xi1);
double min_near_coefficient(const SystemConfig& cfg, const SubregionPartition& partition, double xi2);

// Power-division counterpart: max{xi2, gamma (xi2 + noise/(PT beta_tilde))}.
double design_power_division_floor(const SystemConfig& cfg, double beta_tilde, double xi2);

}  // namespace bcnoma
