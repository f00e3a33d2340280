#include "bcnoma/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace bcnoma {
namespace {

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }
bool integer(double x) { return x == std::floor(x); }

// Plain hypergeometric series. Terminates exactly for polynomial cases;
// otherwise needs |z| < 1.
double series_2f1(double a, double b, double c, double z) {
  constexpr long kMaxTerms = 5'000'000;
  double term = 1.0, sum = 1.0;
  for (long n = 0; n < kMaxTerms; ++n) {
    term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    // Ratio of the next term; once it settles below 1 the tail is geometric.
    const double r = std::abs((a + n + 1) * (b + n + 1) / ((c + n + 1) * (n + 2.0)) * z);
    if (n > 2 && r < 1.0 && std::abs(term) * r / (1.0 - r) <= 1e-17 * std::abs(sum)) return sum;
  }
  throw std::domain_error("gauss_2f1: series did not converge");
}

}  // namespace

double rgamma(double x) {
  if (nonpositive_integer(x)) return 0.0;
  const double g = std::tgamma(x);
  return std::isinf(g) ? 0.0 : 1.0 / g;
}

double gauss_2f1(double a, double b, double c, double z) {
  if (std::isnan(a) || std::isnan(b) || std::isnan(c) || std::isnan(z))
    throw std::domain_error("gauss_2f1: NaN argument");
  if (nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a pole (non-positive integer)");
  if (z == 0.0) return 1.0;
  if (nonpositive_integer(a) || nonpositive_integer(b)) return series_2f1(a, b, c, z);
  if (!(z < 1.0)) throw std::domain_error("gauss_2f1: z must be < 1");
  if (b == c) return std::pow(1.0 - z, -a);
  if (a == c) return std::pow(1.0 - z, -b);

  if (z >= -0.5) return series_2f1(a, b, c, z);

  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)).
  auto pfaff = [&] { return std::pow(1.0 - z, -a) * series_2f1(a, c - b, c, z / (z - 1.0)); };
  if (z >= -3.0 || integer(b - a)) return pfaff();

  // Large negative z: expansion in 1/z (needs b - a non-integer).
  const double w = 1.0 / z;
  const double t1 = std::tgamma(c) * std::tgamma(b - a) * rgamma(b) * rgamma(c - a) * std::pow(-z, -a) *
                    series_2f1(a, a - c + 1.0, a - b + 1.0, w);
  const double t2 = std::tgamma(c) * std::tgamma(a - b) * rgamma(a) * rgamma(c - b) * std::pow(-z, -b) *
                    series_2f1(b, b - c + 1.0, b - a + 1.0, w);
  return t1 + t2;
}

namespace {

// Boost raises overflow for P(a, x) with large a and tiny x, where the value
// has long underflowed. For x < a/2, P(a, x) <= 2 x^a e^{-x} / Gamma(a+1).
bool lower_underflows(double a, double x) {
  return x == 0.0 || (x < 0.5 * a && a * std::log(x) - x - std::lgamma(a + 1.0) + std::log(2.0) < -760.0);
}

}  // namespace

double gamma_p(double a, double x) { return lower_underflows(a, x) ? 0.0 : boost::math::gamma_p(a, x); }
double gamma_q(double a, double x) { return lower_underflows(a, x) ? 1.0 : boost::math::gamma_q(a, x); }

double regularized_gamma_diff(double a, double x0, double x1) {
  if (!(a > 0.0)) throw std::domain_error("regularized_gamma_diff: a must be positive");
  if (!(x0 >= 0.0) || !(x1 >= x0)) throw std::domain_error("regularized_gamma_diff: need 0 <= x0 <= x1");
  if (x0 == x1) return 0.0;
  if (std::isinf(x1)) return gamma_q(a, x0);
  if (x1 <= a) return gamma_p(a, x1) - gamma_p(a, x0);
  if (x0 >= a) return gamma_q(a, x0) - gamma_q(a, x1);
  return 1.0 - gamma_p(a, x0) - gamma_q(a, x1);
}

double gamma_gen_incomplete(double a, double x0, double x1) {
  if (a > 0.0 && x0 >= 0.0 && x1 >= 0.0) {
    if (x1 < x0) return -gamma_gen_incomplete(a, x1, x0);
    return std::tgamma(a) * regularized_gamma_diff(a, x0, x1);
  }
  return gamma_gen_incomplete(a, Complex(x0), Complex(x1)).real();
}

Complex gamma_gen_incomplete(double a, Complex z0, Complex z1, const QuadratureSpec& spec) {
  if (z0 == z1) return {0.0, 0.0};
  if (z0 == Complex(0.0)) {
    if (!(a > 0.0)) throw std::domain_error("gamma_gen_incomplete: a must be positive when the path starts at 0");
    // t = z1 w^{1/a}: the endpoint singularity t^{a-1} disappears.
    const double inv = 1.0 / a;
    auto f = [&](double w) -> Complex { return std::exp(-z1 * std::pow(w, inv)); };
    return std::pow(z1, a) * inv * integrate<Complex>(f, 0.0, 1.0, spec).value;
  }
  if (z1 == Complex(0.0)) return -gamma_gen_incomplete(a, z1, z0, spec);

  const Complex ratio = z1 / z0;
  if (ratio.real() > 0.0 && std::abs(ratio.imag()) <= 1e-13 * ratio.real()) {
    // Same ray: t = z0 rho^u, dt = t ln(rho) du.
    const double log_rho = std::log(std::abs(z1) / std::abs(z0));
    const Complex log_z0 = std::log(z0);
    auto f = [&](double u) -> Complex {
      const Complex log_t = log_z0 + u * log_rho;
      return std::exp(a * log_t - std::exp(log_t));
    };
    return log_rho * integrate<Complex>(f, 0.0, 1.0, spec).value;
  }
  const Complex d = z1 - z0;
  auto f = [&](double u) -> Complex {
    const Complex t = z0 + u * d;
    return std::exp((a - 1.0) * std::log(t) - t);
  };
  return d * integrate<Complex>(f, 0.0, 1.0, spec).value;
}

}  // namespace bcnoma
