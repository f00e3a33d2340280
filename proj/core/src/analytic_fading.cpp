#include "bcnoma/analytic_fading.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "bcnoma/quadrature.hpp"
#include "bcnoma/specfun.hpp"

namespace bcnoma::fading {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const QuadratureSpec kSpec{1e-12, 1e-10, 2000};

// Gamma(m + 2/alpha) / Gamma(m) without overflow for large m.
double gamma_ratio(double m, double alpha) { return 1.0 / boost::math::tgamma_delta_ratio(m, 2.0 / alpha); }

struct Terms {
  double area, lo2, hi2, scale, pu, pl, qu, ql, mid;  // mid = Gamma[m+2/a, ul, uu]/Gamma(m) scaled
};

Terms terms(const CompositeDist& d, double x) {
  const double c = d.m * std::sqrt(x);
  const double ul = c * std::pow(d.r_lo, d.alpha), uu = c * std::pow(d.r_hi, d.alpha);
  Terms t;
  t.lo2 = d.r_lo * d.r_lo;
  t.hi2 = d.r_hi * d.r_hi;
  t.area = t.hi2 - t.lo2;
  t.scale = std::pow(c, -2.0 / d.alpha);
  t.pu = gamma_p(d.m, uu);
  t.pl = gamma_p(d.m, ul);
  t.qu = gamma_q(d.m, uu);
  t.ql = gamma_q(d.m, ul);
  t.mid = gamma_ratio(d.m, d.alpha) * regularized_gamma_diff(d.m + 2.0 / d.alpha, ul, uu);
  return t;
}

CompositeDist dist(const SystemConfig& cfg, double r_lo, double r_hi) {
  CompositeDist d{cfg.nakagami_m(), r_lo, r_hi, cfg.path_loss_exponent};
  d.validate();
  return d;
}

// int_lo^hi f(x) phi_d(x) dx over a log grid.
template <class F>
double against_density(const CompositeDist& d, F f, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  auto g = [&](double x) { return f(x) * composite_pdf(d, x); };
  return integrate_log(g, lo, hi, kSpec, composite_pivot(d)).value;
}

}  // namespace

void CompositeDist::validate() const {
  if (!(m >= 0.5) || !std::isfinite(m)) throw std::invalid_argument("composite: m must be >= 0.5");
  if (!(r_lo > 0.0 && r_lo < r_hi)) throw std::invalid_argument("composite: need 0 < r_lo < r_hi");
  if (!(alpha > 1.0)) throw std::invalid_argument("composite: alpha must exceed 1");
}

double composite_cdf(const CompositeDist& d, double x) {
  if (!(x > 0.0)) return 0.0;
  if (std::isinf(x)) return 1.0;
  const Terms t = terms(d, x);
  const double low = (t.hi2 * t.pu - t.lo2 * t.pl - t.scale * t.mid) / t.area;
  if (low <= 0.5) return std::max(low, 0.0);
  const double upper = (t.hi2 * t.qu - t.lo2 * t.ql + t.scale * t.mid) / t.area;
  return std::clamp(1.0 - upper, 0.0, 1.0);
}

double composite_ccdf(const CompositeDist& d, double x) {
  if (!(x > 0.0)) return 1.0;
  if (std::isinf(x)) return 0.0;
  const Terms t = terms(d, x);
  const double upper = (t.hi2 * t.qu - t.lo2 * t.ql + t.scale * t.mid) / t.area;
  if (upper <= 0.5) return std::max(upper, 0.0);
  const double low = (t.hi2 * t.pu - t.lo2 * t.pl - t.scale * t.mid) / t.area;
  return std::clamp(1.0 - low, 0.0, 1.0);
}

double composite_pdf(const CompositeDist& d, double x) {
  if (!(x > 0.0) || std::isinf(x)) return 0.0;
  const double c = d.m * std::sqrt(x);
  const double ul = c * std::pow(d.r_lo, d.alpha), uu = c * std::pow(d.r_hi, d.alpha);
  const double diff = regularized_gamma_diff(d.m + 2.0 / d.alpha, ul, uu);
  if (diff == 0.0) return 0.0;
  const double k = gamma_ratio(d.m, d.alpha) * diff /
                   (std::pow(d.m, 2.0 / d.alpha) * d.alpha * (d.r_hi * d.r_hi - d.r_lo * d.r_lo));
  // x^{-1/alpha-1} overflows long before the density does for tiny x.
  return std::exp(std::log(k) - (1.0 / d.alpha + 1.0) * std::log(x));
}

double composite_pivot(const CompositeDist& d) { return std::pow(d.r_lo * d.r_hi, -d.alpha); }

PairDecodeProbs pair_probs_region(const SystemConfig& cfg, double xi1, double xi2,
                                  const SubregionPartition& partition) {
  cfg.validate();
  if (partition.count() != 2) throw std::invalid_argument("two-subregion partition required");
  if (!(xi1 >= xi2 && xi2 > 0.0)) throw std::invalid_argument("need xi1 >= xi2 > 0");
  const CompositeDist a = dist(cfg, partition.radii[0], partition.radii[1]);
  const CompositeDist b = dist(cfg, partition.radii[1], partition.radii[2]);
  const double g = cfg.threshold(), kappa = xi2 / xi1;
  const double v1 = cfg.noise_power_w() * g / (cfg.reader_power_w() * xi1);
  const double v2 = cfg.noise_power_w() * g / (cfg.reader_power_w() * xi2);

  auto near_beats = [&](double x2) { return composite_ccdf(a, g * kappa * x2 + v1); };
  auto far_beats = [&](double x1) { return composite_ccdf(b, g * x1 / kappa + v2); };

  double p2;
  if (g < 1.0) {
    const double s2 = v2 / (1.0 - g), s1 = v1 / (1.0 - g);
    p2 = against_density(b, [&](double x2) { return composite_ccdf(a, kappa * x2); }, s2, kInf) +
         against_density(b, near_beats, v2, s2) +
         against_density(a, [&](double x1) { return composite_ccdf(b, x1 / kappa); }, s1, kInf) +
         against_density(a, far_beats, v1, s1);
  } else {
    p2 = against_density(b, near_beats, v2, kInf) + against_density(a, far_beats, v1, kInf);
  }
  const double p1 = against_density(b, near_beats, 0.0, v2) + against_density(a, far_beats, 0.0, v1);
  return make_pair_probs(p2, p1);
}

double solo_success_region(const SystemConfig& cfg, const SubregionPartition& partition, Group which, double xi) {
  cfg.validate();
  if (partition.count() != 2) throw std::invalid_argument("two-subregion partition required");
  const int k = which == Group::Near ? 0 : 1;
  const CompositeDist d = dist(cfg, partition.lower(k), partition.upper(k));
  return composite_ccdf(d, cfg.noise_power_w() * cfg.threshold() / (cfg.reader_power_w() * xi));
}

PowerDivisionPolicy power_policy(const SystemConfig& cfg, double beta_tilde) {
  if (!(beta_tilde > 0.0)) throw std::invalid_argument("beta_tilde must be positive");
  const CompositeDist d = dist(cfg, cfg.inner_radius_m, cfg.outer_radius_m);
  return {beta_tilde, composite_ccdf(d, beta_tilde)};
}

PowerDivisionPolicy solve_beta_tilde(const SystemConfig& cfg, double target) {
  cfg.validate();
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target p_near must lie in (0,1)");
  const CompositeDist d = dist(cfg, cfg.inner_radius_m, cfg.outer_radius_m);
  double lo = std::log(1e-30), hi = std::log(1e10);
  if (!(composite_ccdf(d, std::exp(lo)) >= target && composite_ccdf(d, std::exp(hi)) <= target))
    throw std::runtime_error("solve_beta_tilde: no bracket in [1e-30, 1e10]");
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (composite_ccdf(d, std::exp(mid)) > target ? lo : hi) = mid;
  }
  const double beta = std::exp(0.5 * (lo + hi));
  const double p = composite_ccdf(d, beta);
  if (std::abs(p - target) > 1e-9) throw std::runtime_error("solve_beta_tilde: residual above 1e-9");
  return {beta, p};
}

PairDecodeProbs pair_probs_power(const SystemConfig& cfg, double xi1, double xi2, const PowerDivisionPolicy& policy) {
  cfg.validate();
  if (!(xi1 >= xi2 && xi2 > 0.0)) throw std::invalid_argument("need xi1 >= xi2 > 0");
  const double beta = policy.beta_tilde;
  if (!(beta > 0.0)) throw std::invalid_argument("beta_tilde must be positive");
  const CompositeDist d = dist(cfg, cfg.inner_radius_m, cfg.outer_radius_m);
  const double g = cfg.threshold(), kappa = xi2 / xi1;
  const double n_over = cfg.noise_power_w() / (cfg.reader_power_w() * xi2);
  const double v1 = cfg.noise_power_w() * g / (cfg.reader_power_w() * xi1);
  const double v2 = g * n_over;
  const double phi_b = composite_cdf(d, beta), tail_b = composite_ccdf(d, beta);
  // x2 below sure_edge leaves the high-group node certain to clear its SINR.
  const double sure_edge = beta / (g * kappa) - n_over;
  auto near_ok = [&](double x2) { return composite_ccdf(d, g * kappa * x2 + v1) / tail_b; };

  double p2 = 0.0;
  if (beta > v2) {
    const double l = std::min(beta, std::max(v2, sure_edge));
    p2 = against_density(d, near_ok, l, beta) / phi_b + (composite_cdf(d, l) - composite_cdf(d, v2)) / phi_b;
  }
  const double up = std::min(beta, v2);
  const double lp = std::min({beta, v2, std::max(0.0, sure_edge)});
  const double p1 = against_density(d, near_ok, lp, up) / phi_b + composite_cdf(d, lp) / phi_b;
  return make_pair_probs(p2, p1);
}

double solo_success_power(const SystemConfig& cfg, Group which, double xi, const PowerDivisionPolicy& policy,
                          SoloForm form) {
  cfg.validate();
  const CompositeDist d = dist(cfg, cfg.inner_radius_m, cfg.outer_radius_m);
  const double beta = policy.beta_tilde;
  const double v = cfg.noise_power_w() * cfg.threshold() / (xi * cfg.reader_power_w());
  if (which == Group::Near) {
    if (v <= beta) return 1.0;
    return form == SoloForm::Normalized ? composite_ccdf(d, v) / composite_ccdf(d, beta)
                                        : 1.0 - composite_cdf(d, v);
  }
  if (v >= beta) return 0.0;
  return form == SoloForm::Normalized ? (composite_cdf(d, beta) - composite_cdf(d, v)) / composite_cdf(d, beta)
                                      : composite_ccdf(d, v);
}

}  // namespace bcnoma::fading
