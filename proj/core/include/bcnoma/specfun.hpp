#pragma once

#include <complex>

#include "bcnoma/quadrature.hpp"

namespace bcnoma {

using Complex = std::complex<double>;

// Gauss hypergeometric 2F1(a, b; c; z) for real z < 1.
// Throws std::domain_error for c a non-positive integer, z >= 1 outside the
// polynomial case, or a continuation that does not converge.
double gauss_2f1(double a, double b, double c, double z);

// 1/Gamma(x), zero at the poles.
double rgamma(double x);

// Regularized incomplete gamma P(a, x) and Q(a, x), a > 0, x >= 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// P(a, x1) - P(a, x0) for a > 0, 0 <= x0 <= x1 <= inf, taken from whichever
// tail keeps the difference free of cancellation.
double regularized_gamma_diff(double a, double x0, double x1);

// Generalized incomplete gamma  int_{x0}^{x1} t^{a-1} e^{-t} dt.
// Real arguments with a > 0 use the regularized incomplete gamma functions.
double gamma_gen_incomplete(double a, double x0, double x1);

// Complex endpoints: contour quadrature along the straight segment z0 -> z1.
// When both endpoints lie on one ray from the origin the segment is walked in
// geometric steps, which keeps wide ranges of modulus cheap.
Complex gamma_gen_incomplete(double a, Complex z0, Complex z1, const QuadratureSpec& spec = {});

}  // namespace bcnoma
