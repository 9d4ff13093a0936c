#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <type_traits>
#include <vector>

#include "lcrp/error.hpp"

namespace lcrp {

struct QuadOptions {
  double abs_tol = 1e-6;
  double rel_tol = 0.0;  // accept if error <= max(abs_tol, rel_tol * |value|)
  int max_depth = 30;
  std::size_t max_intervals = 50000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T, class F>
void gk15(F& f, double a, double b, T& value, double& error) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const T sum = f(c - dx) + f(c + dx);
    kronrod += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  value = kronrod * h;
  error = magnitude(T((kronrod - gauss) * h));
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]: the interval with the
// largest error estimate is bisected until the summed estimate meets the
// tolerance. Throws QuadratureNonConvergence when an interval would exceed
// max_depth bisections or the interval budget is spent.
template <class F>
auto integrate(F&& f, double a, double b, const QuadOptions& opt = {})
    -> QuadResult<std::decay_t<std::invoke_result_t<F&, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double>>;
  QuadResult<T> res;
  if (a == b) return res;

  struct Piece {
    double a, b;
    T value;
    double error;
    int depth;
    bool operator<(const Piece& o) const { return error < o.error; }
  };
  std::priority_queue<Piece> heap;
  T total{};
  double total_err = 0.0;

  auto eval = [&](double lo, double hi, int depth) {
    Piece p{lo, hi, T{}, 0.0, depth};
    detail::gk15<T>(f, lo, hi, p.value, p.error);
    res.evaluations += 15;
    total += p.value;
    total_err += p.error;
    heap.push(p);
  };

  eval(a, b, 0);
  std::size_t count = 1;
  for (;;) {
    const double tol = std::max(opt.abs_tol, opt.rel_tol * detail::magnitude(total));
    if (total_err <= tol) break;
    if (!std::isfinite(total_err))
      throw QuadratureNonConvergence("integrand produced non-finite values");
    Piece worst = heap.top();
    heap.pop();
    if (worst.depth >= opt.max_depth || count >= opt.max_intervals)
      throw QuadratureNonConvergence(
          "adaptive quadrature did not reach tolerance: error estimate " +
          std::to_string(total_err));
    total -= worst.value;
    total_err -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    eval(worst.a, mid, worst.depth + 1);
    eval(mid, worst.b, worst.depth + 1);
    ++count;
  }
  // Re-sum to shed cancellation from the running updates.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = sum;
  res.error = err;
  return res;
}

}  // namespace lcrp
