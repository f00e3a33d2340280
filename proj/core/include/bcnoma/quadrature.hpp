#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcnoma {

struct QuadratureSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_subdivisions = 2000;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double achieved_error)
      : std::runtime_error(what + " (error estimate " + std::to_string(achieved_error) + ")"),
        achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

template <class T>
struct Integral {
  T value{};
  double abs_error = 0.0;
  int intervals = 0;
};

namespace detail {

// 21-point Gauss-Kronrod rule with its embedded 10-point Gauss rule.
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525468350, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }
inline bool finite(double v) { return std::isfinite(v); }
inline bool finite(const std::complex<double>& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <class T>
struct Piece {
  double a, b;
  T value;
  double error;
  bool operator<(const Piece& o) const { return error < o.error; }
};

template <class T, class F>
Piece<T> gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  T fc = f(c);
  T kron = fc * kWgk[10];
  T gauss{};
  for (int k = 0; k < 10; ++k) {
    const double dx = h * kXgk[k];
    const T sum = f(c - dx) + f(c + dx);
    kron += sum * kWgk[k];
    if (k % 2 == 1) gauss += sum * kWg[k / 2];
  }
  kron *= h;
  gauss *= h;
  if (!finite(kron)) throw std::domain_error("integrand is not finite on [" + std::to_string(a) + ", " +
                                             std::to_string(b) + "]");
  return {a, b, kron, magnitude(kron - gauss)};
}

template <class T, class F>
Integral<T> adaptive(F& f, double lo, double hi, const QuadratureSpec& spec) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) || spec.max_subdivisions < 1)
    throw std::invalid_argument("invalid quadrature tolerances");
  std::priority_queue<Piece<T>> heap;
  Piece<T> first = gk21<T>(f, lo, hi);
  T total = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  while (error > std::max(spec.abs_tol, spec.rel_tol * magnitude(total))) {
    if (intervals >= spec.max_subdivisions)
      throw ConvergenceError("quadrature subdivision limit reached", error);
    Piece<T> worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // The interval cannot be split further in double precision.
      if (worst.error > std::max(spec.abs_tol, spec.rel_tol * magnitude(total)))
        throw ConvergenceError("quadrature interval collapsed", error);
      break;
    }
    heap.pop();
    Piece<T> left = gk21<T>(f, worst.a, mid);
    Piece<T> right = gk21<T>(f, mid, worst.b);
    total += (left.value + right.value) - worst.value;
    error += (left.error + right.error) - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
    // Recompute the running sums now and then so cancellation in the
    // incremental updates cannot accumulate.
    if (intervals % 64 == 0) {
      auto copy = heap;
      total = T{};
      error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        error += copy.top().error;
        copy.pop();
      }
    }
  }
  // Final total summed from the pieces so results do not depend on update order.
  T sum{};
  double err = 0.0;
  std::vector<Piece<T>> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece<T>& x, const Piece<T>& y) { return x.a < y.a; });
  for (const auto& p : pieces) {
    sum += p.value;
    err += p.error;
  }
  return {sum, err, intervals};
}

}  // namespace detail

// Adaptive Gauss-Kronrod quadrature of f over [lo, hi]. hi may be +infinity,
// handled by x = lo + (1 - u)/u on u in (0, 1]. T is double or std::complex<double>.
template <class T = double, class F>
Integral<T> integrate(F&& f, double lo, double hi, const QuadratureSpec& spec = {}) {
  if (std::isnan(lo) || std::isnan(hi) || !(lo <= hi)) throw std::invalid_argument("integrate requires lo <= hi");
  if (!std::isfinite(lo)) throw std::invalid_argument("integrate requires a finite lower limit");
  if (lo == hi) return {};
  if (std::isfinite(hi)) {
    auto g = [&](double x) -> T { return f(x); };
    return detail::adaptive<T>(g, lo, hi, spec);
  }
  auto g = [&](double u) -> T {
    const double x = lo + (1.0 - u) / u;
    return T(f(x)) * (1.0 / (u * u));
  };
  return detail::adaptive<T>(g, 0.0, 1.0, spec);
}

// Quadrature on 0 <= lo < hi <= infinity in the variable t = ln x, for
// integrands whose mass spreads over many decades. pivot splits [0, inf).
template <class T = double, class F>
Integral<T> integrate_log(F&& f, double lo, double hi, const QuadratureSpec& spec = {}, double pivot = 1.0) {
  if (!(lo >= 0.0) || !(lo <= hi)) throw std::invalid_argument("integrate_log requires 0 <= lo <= hi");
  if (lo == hi) return {};
  if (lo == 0.0 && std::isinf(hi)) {
    if (!(pivot > 0.0) || !std::isfinite(pivot)) throw std::invalid_argument("integrate_log pivot must be positive");
    Integral<T> a = integrate_log<T>(f, 0.0, pivot, spec);
    Integral<T> b = integrate_log<T>(f, pivot, hi, spec);
    return {a.value + b.value, a.abs_error + b.abs_error, a.intervals + b.intervals};
  }
  if (lo == 0.0) {
    // x = hi e^{-v}, v in [0, inf)
    auto g = [&](double v) -> T {
      const double x = hi * std::exp(-v);
      return x == 0.0 ? T{} : T(f(x)) * x;
    };
    return integrate<T>(g, 0.0, std::numeric_limits<double>::infinity(), spec);
  }
  if (std::isinf(hi)) {
    auto g = [&](double v) -> T {
      const double x = lo * std::exp(v);
      return std::isinf(x) ? T{} : T(f(x)) * x;
    };
    return integrate<T>(g, 0.0, std::numeric_limits<double>::infinity(), spec);
  }
  auto g = [&](double t) -> T {
    const double x = std::exp(t);
    return T(f(x)) * x;
  };
  return integrate<T>(g, std::log(lo), std::log(hi), spec);
}

}  // namespace bcnoma
