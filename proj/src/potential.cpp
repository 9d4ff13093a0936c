#include "lcrp/potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "lcrp/gamma_norm.hpp"

namespace lcrp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(sign * order * ln(2 pi |ũ|)), ũ = 0 bin set to 1.
SymbolGrid power_symbol(const Grid1D& g1, const Grid1D& g2, double b1, double b2,
                        double order, double sign) {
  if (b1 == 0.0 || b2 == 0.0) throw ZeroBError("symbol needs nonzero b entries");
  if (!std::isfinite(order)) throw NonFiniteError("symbol order must be finite");
  SymbolGrid s;
  s.rows = g2.n;
  s.cols = g1.n;
  s.values.assign(s.rows * s.cols, 1.0);
  s.beta = order;
  s.b1 = b1;
  s.b2 = b2;
  const double log2pi = std::log(kTwoPi);
  for (std::size_t r = 0; r < s.rows; ++r) {
    const double v = g2.coord(r) / b2;
    for (std::size_t c = 0; c < s.cols; ++c) {
      const double u = g1.coord(c) / b1;
      const double q = u * u + v * v;
      if (q == 0.0) continue;
      s(r, c) = std::exp(sign * order * (0.5 * std::log(q) + log2pi));
    }
  }
  return s;
}

ComplexGrid apply_symbol_op(const ComplexGrid& field, const LCTParams& p,
                            double order, double sign, Exec exec) {
  ComplexGrid spec = lct_2d(field, p, exec);
  const SymbolGrid s =
      power_symbol(spec.grid1, spec.grid2, p.ax1.b, p.ax2.b, order, sign);
  return ilct_2d(symbol_multiply_in_lct_domain(spec, s, exec), p, exec);
}

// Distance from (px, py) to the boundary of w along direction (c, s).
double ray_exit(const Window& w, double px, double py, double c, double s) {
  double t = std::numeric_limits<double>::infinity();
  if (c > 0) t = std::min(t, (w.x1 - px) / c);
  if (c < 0) t = std::min(t, (w.x0 - px) / c);
  if (s > 0) t = std::min(t, (w.y1 - py) / s);
  if (s < 0) t = std::min(t, (w.y0 - py) / s);
  return std::max(0.0, t);
}

enum class Kernel { power, log };

// \int_W f(y) e_{a,b}(y) k(|x - y|) dy in polar coordinates around x, where
// k(r) = r^{-kappa} or ln(1/r).
cplx polar_integral(const WindowedField& field, const ChirpRates& rates,
                    Kernel kernel, double kappa, double x1, double x2,
                    const QuadOptions& opt) {
  const Window& w = field.window;
  if (!w.contains(x1, x2)) throw DomainError("evaluation point outside window");
  if (kernel == Kernel::power && !(kappa < 2.0))
    throw DomainError("kernel exponent must be < 2");
  const double h = field.h;
  const double beta = 2.0 - kappa;  // radial weight r^{beta-1}
  const double r1 = rates.r1(), r2 = rates.r2();

  QuadOptions radial = opt;
  radial.abs_tol = opt.abs_tol / (4.0 * kTwoPi);
  QuadOptions angular = opt;
  angular.abs_tol = opt.abs_tol / 8.0;

  auto g = [&](double r, double c, double s) {
    const double y1 = x1 + r * c, y2 = x2 + r * s;
    return field.f(y1, y2) * std::polar(1.0, kPi * (r1 * y1 * y1 + r2 * y2 * y2));
  };

  auto along_ray = [&](double phi) -> cplx {
    const double c = std::cos(phi), s = std::sin(phi);
    const double rmax = ray_exit(w, x1, x2, c, s);
    const double rin = std::min(h, rmax);
    cplx total = 0.0;
    if (kernel == Kernel::power) {
      // \int_0^rin r^{beta-1} g dr = (1/beta) \int_0^{rin^beta} g(s^{1/beta}) ds
      if (rin > 0.0) {
        const double smax = std::pow(rin, beta);
        total += integrate([&](double t) { return g(std::pow(t, 1.0 / beta), c, s); },
                           0.0, smax, radial)
                     .value /
                 beta;
      }
      if (rmax > rin)
        total += integrate([&](double r) { return g(r, c, s) * std::pow(r, beta - 1.0); },
                           rin, rmax, radial)
                     .value;
    } else {
      auto integrand = [&](double r) {
        return r > 0.0 ? g(r, c, s) * (-r * std::log(r)) : cplx(0.0);
      };
      if (rin > 0.0) total += integrate(integrand, 0.0, rin, radial).value;
      if (rmax > rin) total += integrate(integrand, rin, rmax, radial).value;
    }
    return total;
  };

  // Split the angle at the window corners, where the exit distance has kinks.
  std::array<double, 4> corners = {
      std::atan2(w.y0 - x2, w.x0 - x1), std::atan2(w.y0 - x2, w.x1 - x1),
      std::atan2(w.y1 - x2, w.x1 - x1), std::atan2(w.y1 - x2, w.x0 - x1)};
  for (double& a : corners)
    if (a < 0) a += kTwoPi;
  std::sort(corners.begin(), corners.end());
  cplx total = 0.0;
  for (std::size_t k = 0; k < corners.size(); ++k) {
    const double lo = corners[k];
    const double hi = (k + 1 < corners.size()) ? corners[k + 1] : corners[0] + kTwoPi;
    if (hi > lo) total += integrate(along_ray, lo, hi, angular).value;
  }
  return total;
}

}  // namespace

SymbolGrid riesz_symbol(const Grid1D& g1, const Grid1D& g2, double b1, double b2,
                        double beta) {
  return power_symbol(g1, g2, b1, b2, beta, -1.0);
}

SymbolGrid laplacian_symbol(const Grid1D& g1, const Grid1D& g2, double b1,
                            double b2, double gamma) {
  return power_symbol(g1, g2, b1, b2, gamma, 1.0);
}

ComplexGrid symbol_multiply_in_lct_domain(const ComplexGrid& field,
                                          const SymbolGrid& s, Exec exec) {
  if (!field.same_shape(s.rows, s.cols))
    throw DimensionMismatch("symbol and field shapes differ");
  ComplexGrid out = field;
  for_each_index(exec, out.rows, [&](std::size_t r) {
    auto line = out.row(r);
    const auto sym = s.row(r);
    for (std::size_t c = 0; c < line.size(); ++c) line[c] *= sym[c];
  });
  return out;
}

ComplexGrid apply_lcrp(const ComplexGrid& field, const LCTParams& p, double beta,
                       Exec exec) {
  return apply_symbol_op(field, p, beta, -1.0, exec);
}

ComplexGrid apply_lclo(const ComplexGrid& field, const LCTParams& p, double gamma,
                       Exec exec) {
  return apply_symbol_op(field, p, gamma, 1.0, exec);
}

WindowedField sampled_field(const RealGrid& samples, const Grid1D& g1,
                            const Grid1D& g2) {
  if (!samples.same_shape(g2.n, g1.n))
    throw DimensionMismatch("samples do not match grids");
  WindowedField wf;
  wf.window = Window{g1.coord(0), g1.coord(g1.n - 1), g2.coord(0), g2.coord(g2.n - 1)};
  wf.h = std::min(g1.spacing, g2.spacing);
  wf.f = [samples, g1, g2](double x, double y) -> cplx {
    const double fx = x / g1.spacing + static_cast<double>(g1.n / 2);
    const double fy = y / g2.spacing + static_cast<double>(g2.n / 2);
    if (fx < 0 || fy < 0 || fx > g1.n - 1 || fy > g2.n - 1) return 0.0;
    const auto c0 = std::min(static_cast<std::size_t>(fx), g1.n - 2);
    const auto r0 = std::min(static_cast<std::size_t>(fy), g2.n - 2);
    const double tx = fx - c0, ty = fy - r0;
    return (1 - ty) * ((1 - tx) * samples(r0, c0) + tx * samples(r0, c0 + 1)) +
           ty * ((1 - tx) * samples(r0 + 1, c0) + tx * samples(r0 + 1, c0 + 1));
  };
  return wf;
}

cplx lcrp_direct(const WindowedField& field, const ChirpRates& rates, double beta,
                 double x1, double x2, const QuadOptions& opt) {
  if (!(beta > 0.0 && beta < 2.0)) throw DomainError("beta must lie in (0, 2)");
  const double norm = gamma_norm(beta, 2);
  QuadOptions raw = opt;
  raw.abs_tol = opt.abs_tol / norm;
  const cplx integral =
      polar_integral(field, rates, Kernel::power, 2.0 - beta, x1, x2, raw);
  const cplx pre = std::polar(1.0, -kPi * (rates.r1() * x1 * x1 + rates.r2() * x2 * x2));
  return norm * pre * integral;
}

cplx power_kernel_integral(const WindowedField& field, const ChirpRates& rates,
                           double kappa, double x1, double x2,
                           const QuadOptions& opt) {
  return polar_integral(field, rates, Kernel::power, kappa, x1, x2, opt);
}

cplx log_kernel_integral(const WindowedField& field, const ChirpRates& rates,
                         double x1, double x2, const QuadOptions& opt) {
  return polar_integral(field, rates, Kernel::log, 0.0, x1, x2, opt);
}

}  // namespace lcrp
