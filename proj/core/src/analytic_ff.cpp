#include "bcnoma/analytic_ff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bcnoma/specfun.hpp"

namespace bcnoma {

PairDecodeProbs make_pair_probs(double p2, double p1) {
  p2 = std::clamp(p2, 0.0, 1.0);
  p1 = std::clamp(p1, 0.0, 1.0 - p2);
  return {p2, p1, p1 + 2.0 * p2};
}

namespace ff {
namespace {

struct Pair {
  double alpha, gamma, kappa, noise, pt, xi1, xi2;
  double r1, r2, r;  // radii
  double y_max, y_mid, y_min;  // R1^{-2a}, R2^{-2a}, R^{-2a}

  Pair(const SystemConfig& cfg, const SubregionPartition& part, double x1, double x2)
      : alpha(cfg.path_loss_exponent), gamma(cfg.threshold()), kappa(x2 / x1), noise(cfg.noise_power_w()),
        pt(cfg.reader_power_w()), xi1(x1), xi2(x2) {
    if (part.count() != 2) throw std::invalid_argument("two-node pairing needs a two-subregion partition");
    if (!(x1 > 0.0 && x2 > 0.0)) throw std::invalid_argument("reflection coefficients must be positive");
    if (x1 < x2) throw std::invalid_argument("xi1 must be >= xi2 (near subregion reflects more)");
    r1 = part.radii[0];
    r2 = part.radii[1];
    r = part.radii[2];
    y_max = std::pow(r1, -2.0 * alpha);
    y_mid = std::pow(r2, -2.0 * alpha);
    y_min = std::pow(r, -2.0 * alpha);
  }
  double c0() const { return noise * gamma / (pt * xi1); }        // noise offset on y1
  double zeta() const { return pt * xi2 / noise; }
  double v2() const { return noise * gamma / (xi2 * pt); }        // far node SNR floor
  double gk() const { return gamma * kappa; }
  double ya() const { return y_mid / gk() - noise / (xi2 * pt); }  // near surely decodes below
  double yb() const { return y_max / gk() - noise / (xi2 * pt); }  // near never decodes above
  double area_near() const { return r2 * r2 - r1 * r1; }
  double area_far() const { return r * r - r2 * r2; }
  double inv_root(double y) const { return std::pow(y, -1.0 / alpha); }  // r^2 for y = r^{-2a}

  // Shifted antiderivative term; the dropped constant is y-independent.
  double h_shifted(double y) const {
    const double a = alpha, zy = zeta() * y;
    if (zy >= 2.0)
      return 0.5 * std::pow(gk(), -1.0 / a) * std::pow(y, -2.0 / a) *
             gauss_2f1(1.0 / a, 2.0 / a, 1.0 + 2.0 / a, -1.0 / zy);
    const double k = std::tgamma(1.0 - 1.0 / a) * std::tgamma(2.0 / a) / std::tgamma(1.0 / a) *
                     std::pow(zeta() / c0(), 1.0 / a);
    return std::pow(c0() * y, -1.0 / a) * gauss_2f1(-1.0 / a, 1.0 / a, 1.0 - 1.0 / a, -zy) - k;
  }
  double h_direct(double y) const {
    const double a = alpha;
    return std::pow(pt * xi1 / (noise * gamma * y), 1.0 / a) * gauss_2f1(-1.0 / a, 1.0 / a, (a - 1.0) / a, -zeta() * y);
  }
  double tail(double p, double w) const { return (inv_root(w) - inv_root(p)) / area_far(); }
};

}  // namespace

double omega(double p, double q, double w, const SystemConfig& cfg, const SubregionPartition& partition, double xi1,
             double xi2) {
  if (!(p > 0.0 && q > 0.0 && w > 0.0)) throw std::invalid_argument("omega arguments must be positive");
  const Pair s(cfg, partition, xi1, xi2);
  const double bracket = s.r1 * s.r1 * (s.inv_root(q) - s.inv_root(p)) - (s.h_shifted(q) - s.h_shifted(p));
  return bracket / (s.area_near() * s.area_far()) + s.tail(p, w);
}

double omega_direct(double p, double q, double w, const SystemConfig& cfg, const SubregionPartition& partition,
                    double xi1, double xi2) {
  if (!(p > 0.0 && q > 0.0 && w > 0.0)) throw std::invalid_argument("omega arguments must be positive");
  const Pair s(cfg, partition, xi1, xi2);
  const double r1sq = s.r1 * s.r1;
  const double bracket = s.inv_root(q) * r1sq - s.h_direct(q) - s.inv_root(p) * r1sq + s.h_direct(p);
  return bracket / (s.area_near() * s.area_far()) + s.tail(p, w);
}

PairDecodeProbs pair_probs(const SystemConfig& cfg, double xi1, double xi2, const SubregionPartition& partition) {
  cfg.validate();
  const Pair s(cfg, partition, xi1, xi2);
  const double g = s.gamma, gk = s.gk();

  // Both decoded. Ties resolve to the earlier branch.
  double p2;
  const double lo2 = std::max(s.y_min, s.v2());
  if (g >= s.pt * xi2 * s.y_mid / s.noise) {
    p2 = 0.0;
  } else if (g <= s.y_mid / (s.kappa * s.y_mid + s.noise / (xi1 * s.pt))) {
    p2 = (s.inv_root(lo2) - s.r2 * s.r2) / s.area_far();
  } else if (s.y_max <= s.c0() + lo2 * gk) {
    p2 = 0.0;
  } else {
    const double p = std::max({s.y_min, s.ya(), s.v2()});
    const double q = std::min(s.y_mid, s.yb());
    p2 = omega(p, q, lo2, cfg, partition, xi1, xi2);
  }

  // Stronger decoded, weaker lost.
  double p1;
  const double up1 = std::min(s.y_mid, s.v2());
  if (g <= s.pt * xi2 * s.y_min / s.noise) {
    p1 = 0.0;
  } else if (s.y_mid >= s.c0() + up1 * gk) {
    p1 = (s.r * s.r - s.inv_root(up1)) / s.area_far();
  } else if (g >= s.y_max / (s.kappa * s.y_min + s.noise / (xi1 * s.pt))) {
    p1 = 0.0;
  } else {
    const double p = std::max(s.y_min, s.ya());
    const double q = std::min({s.y_mid, s.yb(), s.v2()});
    p1 = omega(p, q, s.y_min, cfg, partition, xi1, xi2);
  }
  return make_pair_probs(p2, p1);
}

double m2_asymptotic(const SystemConfig& cfg, const SubregionPartition& partition, double kappa) {
  if (!(kappa > 0.0 && kappa <= 1.0)) throw std::invalid_argument("kappa must lie in (0,1]");
  if (partition.count() != 2) throw std::invalid_argument("two-subregion partition required");
  const double a = cfg.path_loss_exponent;
  const double gk = cfg.threshold() * kappa;
  const double r1 = partition.radii[0], r2 = partition.radii[1], r = partition.radii[2];
  const double r1s = r1 * r1, r2s = r2 * r2, rs = r * r;
  // M2 = 2 Pr(r2^2 >= (gamma kappa)^{1/alpha} r1^2); continuous at every branch edge.
  const double den = (r2s - r1s) * (rs - r2s);
  const double up = std::pow(gk, 1.0 / a), down = std::pow(gk, -1.0 / a);
  if (gk <= 1.0) return 2.0;
  if (std::pow(r / r2, 2.0 * a) > std::pow(r2 / r1, 2.0 * a)) {
    // Branch edges in the other order: integrate r1^2 over its clamped ranges directly.
    const double c = up;
    const double u1 = std::clamp(r2s / c, r1s, r2s), u2 = std::clamp(rs / c, r1s, r2s);
    const double half = (rs - r2s) * (u1 - r1s) + rs * (u2 - u1) - 0.5 * c * (u2 * u2 - u1 * u1);
    return 2.0 * half / den;
  }
  if (gk <= std::pow(r / r2, 2.0 * a))
    return (2.0 * r2s * rs + 2.0 * r1s * r2s - 2.0 * r1s * rs - r2s * r2s * (down + up)) / den;
  if (gk <= std::pow(r2 / r1, 2.0 * a))
    return (2.0 * r1s * r2s - 2.0 * r1s * rs + (rs * rs - r2s * r2s) * down) / den;
  if (gk <= std::pow(r / r1, 2.0 * a)) return (-2.0 * r1s * rs + rs * rs * down + r1s * r1s * up) / den;
  return 0.0;
}

double solo_success(const SystemConfig& cfg, double xi, double r_lo, double r_hi) {
  if (!(r_lo >= cfg.inner_radius_m && r_lo < r_hi && r_hi <= cfg.outer_radius_m))
    throw std::invalid_argument("solo_success needs R1 <= r_lo < r_hi <= R");
  const double a = cfg.path_loss_exponent, pt = cfg.reader_power_w(), n = cfg.noise_power_w(), g = cfg.threshold();
  if (pt * xi * std::pow(r_lo, -2.0 * a) / n < g) return 0.0;
  const double reach = std::pow(pt * xi / (g * n), 1.0 / a);  // largest decodable r^2
  return (std::min(r_hi * r_hi, reach) - r_lo * r_lo) / (r_hi * r_hi - r_lo * r_lo);
}

}  // namespace ff

std::vector<double> binomial_weights(int m, double p) {
  if (m < 0) throw std::invalid_argument("binomial_weights: negative count");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_weights: p outside [0,1]");
  std::vector<double> w(m + 1, 0.0);
  if (p == 0.0) {
    w[0] = 1.0;
    return w;
  }
  if (p == 1.0) {
    w[m] = 1.0;
    return w;
  }
  const double lp = std::log(p), lq = std::log1p(-p);
  for (int t = 0; t <= m; ++t)
    w[t] = std::exp(std::lgamma(m + 1.0) - std::lgamma(t + 1.0) - std::lgamma(m - t + 1.0) + t * lp + (m - t) * lq);
  return w;
}

ThroughputReport throughput_two_node(const SystemConfig& cfg, const PairDecodeProbs& probs, double m1_near,
                                     double m1_far, double p_near) {
  const int m = cfg.node_count;
  if (m < 2) throw std::invalid_argument("throughput_two_node needs M >= 2");
  for (double v : {probs.p1, probs.p2, m1_near, m1_far, p_near})
    if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("throughput_two_node: probability outside [0,1]");
  const std::vector<double> w = binomial_weights(m, p_near);
  const double unit = cfg.slot_bits / m;
  double bits = 0.0, total = 0.0;
  for (int t = 0; t <= m; ++t) {
    const int pairs = std::min(t, m - t);
    const int solos = std::abs(m - 2 * t);
    const double solo_factor = 2 * t <= m ? m1_far : m1_near;
    bits += w[t] * unit * (2.0 * pairs * probs.m2 + solos * solo_factor);
    total += w[t] * unit * (2.0 * pairs * 2.0 + solos);
  }
  ThroughputReport out;
  out.c_suc_bits = bits;
  out.total_bits = total;
  out.normalized = total > 0.0 ? bits / total : 0.0;
  return out;
}

}  // namespace bcnoma
