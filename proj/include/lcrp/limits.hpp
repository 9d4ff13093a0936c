#pragma once

#include <array>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

#include "lcrp/gamma_norm.hpp"
#include "lcrp/grid.hpp"
#include "lcrp/quadrature.hpp"

namespace lcrp {

using Point = std::array<double, 2>;

// Sentinel for the upper limit of fresnel_incomplete.
inline constexpr double kFresnelInfinity = std::numeric_limits<double>::infinity();

// F_kappa(s) = \int_0^s exp(i pi kappa t^2) dt for s >= 0 or kFresnelInfinity
// (negative s by oddness). Quadrature on [0, W0] in the scaled variable,
// asymptotic tail series beyond. Throws DomainError for kappa == 0.
cplx fresnel_incomplete(double kappa, double s);

// (1/gamma(beta)) theta R^beta / beta: the Riesz potential of the indicator
// of a sector of opening theta and radius R at its apex.
double sector_potential(double theta, double R, double beta);

// Strictly convex polygon with counter-clockwise vertices.
struct Polygon {
  std::vector<Point> vertices;

  // Throws DomainError unless >= 3 distinct vertices, CCW, strictly convex.
  static Polygon make(std::vector<Point> vertices);
  static Polygon regular(std::size_t n, double radius, Point center = {0, 0},
                         double phase = 0.0);
  Polygon translated(Point d) const;
  double area() const;
};

// Square (-1, 1)^2.
Polygon unit_square();

// Sector of opening theta and radius R with apex at the origin, the arc
// replaced by `segments` chords.
Polygon sector_polygon(double theta, double R, std::size_t segments);

// (1/gamma(beta)) \int_P |x - y|^{beta-2} dy, as a signed triangle fan from x
// with each triangle integrated in polar form around x (radial part exact).
double riesz_indicator(const Polygon& P, Point x, double beta,
                       const QuadOptions& opt = {1e-10});

struct LimitReport {
  std::string name;
  std::vector<double> parameters;  // monotone toward the critical index
  std::vector<double> values;
  double limit = 0.0;              // extrapolated (or last) value
  double target = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

// Two-point linear extrapolation to parameter 0 from the last two entries.
double richardson_to_zero(const std::vector<double>& params,
                          const std::vector<double>& values);

enum class PointKind { interior, exterior, edge, corner };

// Runs riesz_indicator over descending betas and extrapolates to beta = 0.
// Target: 1 (interior), 0 (exterior), 1/2 (edge), alpha/(2 pi) (corner).
LimitReport polygon_limit_experiment(const Polygon& P, Point x, PointKind kind,
                                     const std::vector<double>& betas,
                                     double alpha = 0.0, double tolerance = 5e-3);

// Square interior/exterior/edge/corner, equilateral-triangle corner and
// regular-hexagon corner at betas {0.4, 0.2, 0.1, 0.05}.
std::vector<LimitReport> polygon_limit_suite();

// f(x) = sum_n c_n 1_[2n, 2n+1](x_1).
struct GratingSpec {
  std::vector<double> c;

  double sup_norm() const;
};

struct GrowthTable {
  std::vector<double> radii;
  std::vector<double> values;
  double slope = 0.0;      // least squares of value vs ln R
  double intercept = 0.0;
  double r_squared = 0.0;
  bool strictly_increasing = false;
};

// Classical I_1 f(x) truncated to |y| <= R for each radius.
GrowthTable grating_divergence_probe(const GratingSpec& g, Point x,
                                     const std::vector<double>& radii);

// Beyond R0 = kGratingAveraging / sqrt(min|k|) the Fresnel value at a stripe
// edge is replaced by its oscillation average F_K(+-inf); the dropped part is
// bounded by grating_tail_bound.
inline constexpr double kGratingAveraging = 100.0;

// Chirped I_1^{a,b} f(x) with k_j = a_j / b_j, radial cutoff T (|y - x| <= T),
// via the per-stripe polar form and incomplete Fresnel integrals.
cplx grating_lcrp_value(const GratingSpec& g, double k1, double k2, Point x,
                        double cutoff);

// Upper bound on the modulus of the edge tails dropped by the averaging.
double grating_tail_bound(const GratingSpec& g, double k1, double k2, Point x);

struct GratingBound {
  std::vector<double> cutoffs;
  std::vector<cplx> values;
  double value = 0.0;         // stabilized modulus (largest cutoff)
  double cauchy = 0.0;        // |V(T_last) - V(T_prev)|
  double tail_bound = 0.0;    // see grating_tail_bound
};

// Evaluates grating_lcrp_value over increasing cutoffs until successive
// moduli agree; requires k1, k2 of equal sign (DomainError otherwise).
GratingBound grating_lcrp_bound(const GratingSpec& g, double k1, double k2, Point x,
                                const std::vector<double>& cutoffs = {1e3, 1e4, 1e5});

// Critical limits: (i) chirp a -> 0, (ii) beta -> 0 of the grid
// operator, (iii) beta -> 2 towards the logarithmic potential.
std::vector<LimitReport> critical_limit_suite();

void write_limit_csv(std::ostream& os, const std::vector<LimitReport>& reports);

}  // namespace lcrp
