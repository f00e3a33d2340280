#include "bcnoma/design.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bcnoma {

double SubregionPartition::area_fraction(int i) const {
  const double r0 = radii.front(), r1 = radii.back();
  return (upper(i) * upper(i) - lower(i) * lower(i)) / (r1 * r1 - r0 * r0);
}

int SubregionPartition::locate(double r) const {
  auto it = std::upper_bound(radii.begin() + 1, radii.end() - 1, r);
  return static_cast<int>(it - radii.begin()) - 1;
}

SubregionPartition default_partition(const SystemConfig& cfg) {
  cfg.validate();
  const int n = cfg.subregion_count;
  const double r1 = cfg.inner_radius_m, r = cfg.outer_radius_m;
  SubregionPartition p;
  p.radii.resize(n + 1);
  p.radii[0] = r1;
  for (int i = 2; i <= n; ++i)
    p.radii[i - 1] = std::sqrt(((i - 1) * r * r + (n + 1 - i) * r1 * r1) / n);
  p.radii[n] = r;
  return p;
}

SubregionPartition make_partition(const SystemConfig& cfg, std::vector<double> radii) {
  if (radii.size() < 2) throw std::invalid_argument("partition needs at least two radii");
  if (radii.front() != cfg.inner_radius_m || radii.back() != cfg.outer_radius_m)
    throw std::invalid_argument("partition endpoints must equal the config radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw std::invalid_argument("partition radii must be strictly increasing");
  return SubregionPartition{std::move(radii)};
}

SubregionPartition two_region_partition(const SystemConfig& cfg, double r2) {
  return make_partition(cfg, {cfg.inner_radius_m, r2, cfg.outer_radius_m});
}

double radius_for_near_fraction(const SystemConfig& cfg, double p_near) {
  if (!(p_near > 0.0 && p_near < 1.0)) throw std::invalid_argument("p_near must lie in (0,1)");
  const double a = cfg.inner_radius_m * cfg.inner_radius_m;
  const double b = cfg.outer_radius_m * cfg.outer_radius_m;
  return std::sqrt(a + p_near * (b - a));
}

CoefficientLadder make_ladder(std::vector<double> coefficients) {
  if (coefficients.empty()) throw std::invalid_argument("ladder needs at least one coefficient");
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (!(coefficients[i] > 0.0) || !std::isfinite(coefficients[i]))
      throw std::invalid_argument("reflection coefficients must be positive");
    if (i > 0 && coefficients[i] > coefficients[i - 1])
      throw std::invalid_argument("reflection coefficients must be non-increasing (xi_" +
                                  std::to_string(i + 1) + " > xi_" + std::to_string(i) + ")");
  }
  CoefficientLadder l;
  l.feasible = coefficients.front() <= 1.0;
  l.coefficients = std::move(coefficients);
  return l;
}

double ladder_requirement(const SystemConfig& cfg, const SubregionPartition& partition,
                          const std::vector<double>& xi, int i) {
  const int n = partition.count();
  const double two_alpha = 2.0 * cfg.path_loss_exponent;
  const double edge = std::pow(partition.radii[i + 1], two_alpha);
  double interference = 0.0;
  for (int j = i + 1; j < n; ++j) interference += xi[j] * edge / std::pow(partition.radii[j], two_alpha);
  return cfg.threshold() * (interference + cfg.noise_power_w() * edge / cfg.reader_power_w());
}

CoefficientLadder design_ladder(const SystemConfig& cfg, const SubregionPartition& partition,
                                double slack, std::optional<double> last) {
  cfg.validate();
  if (!(slack >= 1.0) || !std::isfinite(slack)) throw std::invalid_argument("slack must be finite and >= 1");
  const int n = partition.count();
  if (partition.radii.front() != cfg.inner_radius_m || partition.radii.back() != cfg.outer_radius_m)
    throw std::invalid_argument("partition inconsistent with config");

  CoefficientLadder l;
  l.coefficients.assign(n, 0.0);
  l.binding_constraints.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    const double need = ladder_requirement(cfg, partition, l.coefficients, i);
    l.binding_constraints[i] = need;
    if (i == n - 1)
      l.coefficients[i] = last ? *last : slack * need;
    else
      l.coefficients[i] = slack * std::max(l.coefficients[i + 1], need);
  }
  l.feasible = l.coefficients.front() <= 1.0;
  return l;
}

bool satisfies_guarantee(const SystemConfig& cfg, const SubregionPartition& partition,
                         const std::vector<double>& xi, double rel_tol) {
  if (static_cast<int>(xi.size()) != partition.count()) return false;
  for (int i = 0; i < partition.count(); ++i)
    if (xi[i] < ladder_requirement(cfg, partition, xi, i) * (1.0 - rel_tol)) return false;
  return true;
}

double max_far_coefficient(const SystemConfig& cfg, const SubregionPartition& partition, double xi1) {
  if (partition.count() != 2) throw std::invalid_argument("two-subregion partition required");
  const double edge = std::pow(partition.radii[1], 2.0 * cfg.path_loss_exponent);
  return std::min(xi1, xi1 / cfg.threshold() - cfg.noise_power_w() * edge / cfg.reader_power_w());
}

double min_near_coefficient(const SystemConfig& cfg, const SubregionPartition& partition, double xi2) {
  if (partition.count() != 2) throw std::invalid_argument("two-subregion partition required");
  return std::max(xi2, ladder_requirement(cfg, partition, {0.0, xi2}, 0));
}

double design_power_division_floor(const SystemConfig& cfg, double beta_tilde, double xi2) {
  if (!(beta_tilde > 0.0)) throw std::invalid_argument("beta_tilde must be positive");
  if (!(xi2 > 0.0 && xi2 <= 1.0)) throw std::invalid_argument("xi2 must lie in (0,1]");
  return std::max(xi2, cfg.threshold() * (xi2 + cfg.noise_power_w() / (cfg.reader_power_w() * beta_tilde)));
}

}  // namespace bcnoma
