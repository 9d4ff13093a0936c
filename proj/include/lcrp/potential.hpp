#pragma once

#include <functional>

#include "lcrp/exec.hpp"
#include "lcrp/grid.hpp"
#include "lcrp/lct.hpp"
#include "lcrp/quadrature.hpp"

namespace lcrp {

// Real multiplier sampled on an LCT-domain grid, ũ = (u1/b1, u2/b2).
// The ũ = 0 bin is pinned to 1 in every symbol so that the discrete LCRP and
// LCLO are exact inverses on the grid.
struct SymbolGrid : Field2D<double> {
  double beta = 0.0;  // order (beta for the LCRP, gamma for the LCLO)
  double b1 = 1.0;
  double b2 = 1.0;
};

// (2 pi |ũ|)^{-beta}, evaluated in log space.
SymbolGrid riesz_symbol(const Grid1D& g1, const Grid1D& g2, double b1, double b2,
                        double beta);
// (2 pi |ũ|)^{gamma}.
SymbolGrid laplacian_symbol(const Grid1D& g1, const Grid1D& g2, double b1,
                            double b2, double gamma);

// Elementwise product; throws DimensionMismatch.
ComplexGrid symbol_multiply_in_lct_domain(const ComplexGrid& field,
                                          const SymbolGrid& s,
                                          Exec exec = Exec::parallel);

// ilct_2d(lct_2d(field) * riesz_symbol(beta)).
ComplexGrid apply_lcrp(const ComplexGrid& field, const LCTParams& p, double beta,
                       Exec exec = Exec::parallel);
// ilct_2d(lct_2d(field) * laplacian_symbol(gamma)).
ComplexGrid apply_lclo(const ComplexGrid& field, const LCTParams& p, double gamma,
                       Exec exec = Exec::parallel);

// Axis-aligned rectangle [x0, x1] x [y0, y1].
struct Window {
  double x0, x1, y0, y1;
  bool contains(double x, double y) const {
    return x >= x0 && x <= x1 && y >= y0 && y <= y1;
  }
};

// A field known pointwise on a bounded window; zero outside.
struct WindowedField {
  std::function<cplx(double, double)> f;
  Window window;
  double h = 1.0;  // radius of the disk integrated in polar form around x
};

// Bilinear interpolant of grid samples; the window is the sample extent and
// h one grid spacing.
WindowedField sampled_field(const RealGrid& samples, const Grid1D& g1,
                            const Grid1D& g2);

// Chirp rates of e_{a,b}(y) = exp(i pi (a1/b1 y1^2 + a2/b2 y2^2)).
struct ChirpRates {
  double a1 = 0.0, b1 = 1.0, a2 = 0.0, b2 = 1.0;
  double r1() const { return a1 / b1; }
  double r2() const { return a2 / b2; }
};

// Quadrature of
//   (1/gamma(beta)) e_{-a,b}(x) \int_W f(y) |x - y|^{beta-2} e_{a,b}(y) dy
// in polar coordinates around x: the disk r < h with s = r^beta (removing the
// r^{beta-1} singularity), the rest out to the window boundary. Throws
// QuadratureNonConvergence, DomainError.
cplx lcrp_direct(const WindowedField& field, const ChirpRates& rates, double beta,
                 double x1, double x2, const QuadOptions& opt = {});

// The same quadrature with kernel |x - y|^{-kappa} and no normalization or
// chirp prefactor: \int_W f(y) e_{a,b}(y) |x - y|^{-kappa} dy, kappa < 2.
// kappa = 0 gives the plain weighted integral; see also log_kernel_integral.
cplx power_kernel_integral(const WindowedField& field, const ChirpRates& rates,
                           double kappa, double x1, double x2,
                           const QuadOptions& opt = {});

// \int_W f(y) e_{a,b}(y) ln(1/|x - y|) dy.
cplx log_kernel_integral(const WindowedField& field, const ChirpRates& rates,
                         double x1, double x2, const QuadOptions& opt = {});

}  // namespace lcrp
