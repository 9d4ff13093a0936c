#include <cmath>
#include <numbers>

#include "lcrp/limits.hpp"
#include "lcrp/potential.hpp"

namespace lcrp {
namespace {

constexpr double kPi = std::numbers::pi;

cplx gaussian(double x, double y, double s) {
  return std::exp(-kPi * (x * x + y * y) / (s * s));
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

// Each report stores deviations |value(param) - limit value| with target 0.
LimitReport finish(std::string name, std::vector<double> params, std::vector<double> dev,
                   double tolerance, std::string note) {
  LimitReport r;
  r.name = std::move(name);
  r.parameters = std::move(params);
  r.values = std::move(dev);
  r.limit = r.values.back();
  r.target = 0.0;
  r.tolerance = tolerance;
  r.passed = strictly_decreasing(r.values) && r.limit <= tolerance;
  r.note = std::move(note);
  return r;
}

// (i) chirp rate a -> 0 at fixed beta: lcrp_direct approaches the classical
// Riesz potential.
LimitReport chirp_limit() {
  const WindowedField wf{[](double x, double y) { return gaussian(x, y, 1.0); },
                         Window{-6, 6, -6, 6}, 0.25};
  const double beta = 1.0;
  const double x1 = 0.25, x2 = -0.125;
  QuadOptions opt;
  opt.abs_tol = 1e-8;
  const cplx classical = lcrp_direct(wf, ChirpRates{}, beta, x1, x2, opt);
  std::vector<double> as{0.1, 0.01, 0.001}, dev;
  for (double a : as) {
    const cplx v = lcrp_direct(wf, ChirpRates{a, 1.0, a, 1.0}, beta, x1, x2, opt);
    dev.push_back(std::abs(v - classical));
  }
  return finish("chirp_a_to_0", as, dev, 1e-3, "|I^{a,b}_1 f(x) - I_1 f(x)|");
}

// (ii) beta -> 0 of the grid operator at the center of a Gaussian.
LimitReport order_limit() {
  const Grid1D g = Grid1D::make(512, 0.25);
  const LCTParams p{make_matrix(1, 100, 0, 1), make_matrix(1, 100, 0, 1)};
  ComplexGrid f(g, g);
  for (std::size_t r = 0; r < f.rows; ++r)
    for (std::size_t c = 0; c < f.cols; ++c) f(r, c) = gaussian(g.coord(c), g.coord(r), 3.0);
  const std::size_t mid = g.n / 2;
  std::vector<double> betas{0.2, 0.1, 0.05}, dev;
  for (double b : betas) dev.push_back(std::abs(apply_lcrp(f, p, b)(mid, mid) - f(mid, mid)));
  return finish("order_beta_to_0", betas, dev, 1e-2, "|I^A_beta f(0) - f(0)|");
}

// (iii) beta -> 2 with the chirp-weighted integral of f forced to vanish:
// lcrp_direct approaches the normalized logarithmic potential.
LimitReport log_limit() {
  const Window w{-8, 8, -8, 8};
  const ChirpRates rates{0.3, 1.0, 0.2, 1.0};
  const double x1 = 0.25, x2 = -0.125;
  QuadOptions tight;
  tight.abs_tol = 1e-12;
  const WindowedField g1{[](double x, double y) { return gaussian(x, y, 1.0); }, w, 0.25};
  const WindowedField g2{[](double x, double y) { return gaussian(x, y, 2.0); }, w, 0.25};
  const cplx m1 = power_kernel_integral(g1, rates, 0.0, x1, x2, tight);
  const cplx m2 = power_kernel_integral(g2, rates, 0.0, x1, x2, tight);
  const cplx c = m1 / m2;
  const WindowedField f{[c](double x, double y) {
                          return gaussian(x, y, 1.0) - c * gaussian(x, y, 2.0);
                        },
                        w, 0.25};
  QuadOptions opt;
  opt.abs_tol = 1e-9;
  const cplx pre = std::polar(1.0, -kPi * (rates.r1() * x1 * x1 + rates.r2() * x2 * x2));
  const cplx target =
      log_potential_constant(2) * pre * log_kernel_integral(f, rates, x1, x2, opt);
  std::vector<double> eps{0.1, 0.01, 0.001}, dev;
  for (double e : eps) dev.push_back(std::abs(lcrp_direct(f, rates, 2.0 - e, x1, x2, opt) - target));
  return finish("order_beta_to_2", eps, dev, 1e-3,
                "parameter is 2 - beta; |I^{a,b}_beta f(x) - I^{a,b}_2 f(x)|");
}

}  // namespace

std::vector<LimitReport> critical_limit_suite() {
  return {chirp_limit(), order_limit(), log_limit()};
}

}  // namespace lcrp
