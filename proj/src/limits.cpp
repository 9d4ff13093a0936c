#include "lcrp/limits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "lcrp/potential.hpp"

namespace lcrp {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Below W0 the unit Fresnel integral is integrated directly; above it the
// asymptotic series of the tail has converged to rounding.
constexpr double kFresnelW0 = 8.0;

// \int_w^\infty exp(i pi t^2) dt
//   = -exp(i pi w^2) sum_k (2k-1)!! / ((2 pi i)^{k+1} w^{2k+1}).
cplx fresnel_tail(double w) {
  const cplx step = 1.0 / cplx(0.0, kTwoPi * w * w);
  cplx term = 1.0 / cplx(0.0, kTwoPi * w);
  cplx sum = 0.0;
  for (int k = 0; k < 60; ++k) {
    sum += term;
    const cplx next = term * step * double(2 * k + 1);
    if (std::abs(next) >= std::abs(term) || std::abs(next) < 1e-18) break;
    term = next;
  }
  return -std::polar(1.0, kPi * w * w) * sum;
}

cplx fresnel_direct(double w) {
  QuadOptions opt;
  opt.abs_tol = 1e-13;
  return integrate([](double t) { return std::polar(1.0, kPi * t * t); }, 0.0, w, opt).value;
}

cplx fresnel_unit_infinity() {
  static const cplx value = fresnel_direct(kFresnelW0) + fresnel_tail(kFresnelW0);
  return value;
}

// F_1(w) for w >= 0.
cplx fresnel_unit(double w) {
  if (w <= kFresnelW0) return fresnel_direct(w);
  return fresnel_unit_infinity() - fresnel_tail(w);
}

double cross(Point a, Point b) { return a[0] * b[1] - a[1] * b[0]; }
double dot(Point a, Point b) { return a[0] * b[0] + a[1] * b[1]; }
Point sub(Point a, Point b) { return {a[0] - b[0], a[1] - b[1]}; }

double fit_r_squared(const std::vector<double>& x, const std::vector<double>& y,
                     double& slope, double& intercept) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  slope = sxx > 0 ? sxy / sxx : 0.0;
  intercept = my - slope * mx;
  if (syy == 0.0) return 1.0;
  return (sxy * sxy) / (sxx * syy);
}

}  // namespace

cplx fresnel_incomplete(double kappa, double s) {
  if (kappa == 0.0 || !std::isfinite(kappa))
    throw DomainError("fresnel_incomplete needs finite nonzero kappa");
  if (std::isnan(s)) throw DomainError("fresnel upper limit is NaN");
  if (s < 0.0) return -fresnel_incomplete(kappa, -s);
  const double root = std::sqrt(std::abs(kappa));
  const cplx unit =
      std::isinf(s) ? fresnel_unit_infinity() : fresnel_unit(s * root);
  const cplx value = unit / root;
  return kappa > 0 ? value : std::conj(value);
}

double sector_potential(double theta, double R, double beta) {
  if (!(theta > 0.0 && theta <= kTwoPi)) throw DomainError("theta must lie in (0, 2 pi]");
  if (!(R > 0.0)) throw DomainError("R must be positive");
  if (!(beta > 0.0 && beta < 2.0)) throw DomainError("beta must lie in (0, 2)");
  return gamma_norm(beta, 2) * theta * std::pow(R, beta) / beta;
}

Polygon Polygon::make(std::vector<Point> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) throw DomainError("polygon needs at least 3 vertices");
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point e0 = sub(vertices[(i + 1) % n], vertices[i]);
    const Point e1 = sub(vertices[(i + 2) % n], vertices[(i + 1) % n]);
    if (dot(e0, e0) == 0.0) throw DomainError("polygon has repeated vertices");
    if (!(cross(e0, e1) > 0.0))
      throw DomainError("polygon must be strictly convex and counter-clockwise");
    turning += std::atan2(cross(e0, e1), dot(e0, e1));
  }
  if (std::abs(turning - kTwoPi) > 1e-9) throw DomainError("polygon winds more than once");
  return Polygon{std::move(vertices)};
}

Polygon Polygon::regular(std::size_t n, double radius, Point center, double phase) {
  std::vector<Point> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = phase + kTwoPi * double(k) / double(n);
    v[k] = {center[0] + radius * std::cos(a), center[1] + radius * std::sin(a)};
  }
  return make(std::move(v));
}

Polygon Polygon::translated(Point d) const {
  Polygon out = *this;
  for (auto& v : out.vertices) {
    v[0] += d[0];
    v[1] += d[1];
  }
  return out;
}

double Polygon::area() const {
  double a = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    a += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  return 0.5 * a;
}

Polygon unit_square() { return Polygon::make({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

Polygon sector_polygon(double theta, double R, std::size_t segments) {
  if (!(theta > 0.0 && theta < kPi)) throw DomainError("sector polygon needs theta in (0, pi)");
  std::vector<Point> v{{0.0, 0.0}};
  for (std::size_t k = 0; k <= segments; ++k) {
    const double a = theta * double(k) / double(segments);
    v.push_back({R * std::cos(a), R * std::sin(a)});
  }
  return Polygon::make(std::move(v));
}

double riesz_indicator(const Polygon& P, Point x, double beta, const QuadOptions& opt) {
  if (!(beta > 0.0 && beta < 2.0)) throw DomainError("beta must lie in (0, 2)");
  const auto& v = P.vertices;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point p = sub(v[i], x);
    const Point q = sub(v[(i + 1) % v.size()], x);
    const Point e = sub(q, p);
    const double c = cross(p, q);
    const double len = std::sqrt(dot(e, e));
    const double h = std::abs(c) / len;
    if (h <= 1e-14 * len) continue;  // x on the edge line: degenerate triangle
    // Angles measured from the foot of the perpendicular from x to the edge;
    // there the radial extent is h / cos(psi).
    const double t = -dot(p, e) / dot(e, e);
    const Point foot{p[0] + t * e[0], p[1] + t * e[1]};
    const double phi0 = std::atan2(foot[1], foot[0]);
    auto rel = [&](Point w) { return std::remainder(std::atan2(w[1], w[0]) - phi0, kTwoPi); };
    const double psi_p = rel(p);
    const double psi_q = rel(q);
    // \int r^{beta-1} dr from 0 to h / cos(psi) = (h / cos psi)^beta / beta.
    const double ang = integrate(
        [&](double psi) { return std::pow(std::cos(psi), -beta); }, psi_p, psi_q, opt)
                           .value;
    total += std::pow(h, beta) * ang;  // sign carried by the orientation
  }
  return gamma_norm(beta, 2) / beta * total;
}

double richardson_to_zero(const std::vector<double>& params,
                          const std::vector<double>& values) {
  const std::size_t n = params.size();
  if (n == 0 || values.size() != n) throw DimensionMismatch("empty or mismatched sequence");
  if (n == 1) return values[0];
  const double b1 = params[n - 2], b2 = params[n - 1];
  return (b1 * values[n - 1] - b2 * values[n - 2]) / (b1 - b2);
}

LimitReport polygon_limit_experiment(const Polygon& P, Point x, PointKind kind,
                                     const std::vector<double>& betas, double alpha,
                                     double tolerance) {
  if (betas.empty()) throw DomainError("beta sequence is empty");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0 && betas[i] <= 0.5)) throw DomainError("betas must lie in (0, 0.5]");
    if (i > 0 && !(betas[i] < betas[i - 1])) throw DomainError("betas must be descending");
  }
  LimitReport rep;
  switch (kind) {
    case PointKind::interior: rep.target = 1.0; rep.name = "interior"; break;
    case PointKind::exterior: rep.target = 0.0; rep.name = "exterior"; break;
    case PointKind::edge: rep.target = 0.5; rep.name = "edge"; break;
    case PointKind::corner:
      rep.target = alpha / kTwoPi;
      rep.name = "corner";
      break;
  }
  rep.parameters = betas;
  for (double b : betas) rep.values.push_back(riesz_indicator(P, x, b));
  rep.limit = richardson_to_zero(rep.parameters, rep.values);
  rep.tolerance = tolerance;
  rep.passed = std::abs(rep.limit - rep.target) <= tolerance;
  rep.note = "richardson";
  return rep;
}

std::vector<LimitReport> polygon_limit_suite() {
  const std::vector<double> betas{0.4, 0.2, 0.1, 0.05};
  const Polygon sq = unit_square();
  const Polygon tri = Polygon::regular(3, 1.0);
  const Polygon hex = Polygon::regular(6, 1.0);
  auto named = [](LimitReport r, std::string name) {
    r.name = std::move(name);
    return r;
  };
  return {
      named(polygon_limit_experiment(sq, {0.3, -0.2}, PointKind::interior, betas), "square_interior"),
      named(polygon_limit_experiment(sq, {3.0, 2.0}, PointKind::exterior, betas), "square_exterior"),
      named(polygon_limit_experiment(sq, {1.0, 0.25}, PointKind::edge, betas), "square_edge"),
      named(polygon_limit_experiment(sq, {1.0, 1.0}, PointKind::corner, betas, kTwoPi / 4),
            "square_corner"),
      named(polygon_limit_experiment(tri, tri.vertices[0], PointKind::corner, betas, kTwoPi / 6),
            "triangle_corner"),
      named(polygon_limit_experiment(hex, hex.vertices[0], PointKind::corner, betas, kTwoPi / 3),
            "hexagon_corner"),
  };
}

double GratingSpec::sup_norm() const {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

GrowthTable grating_divergence_probe(const GratingSpec& g, Point x,
                                     const std::vector<double>& radii) {
  if (radii.size() < 3) throw DomainError("need at least 3 radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1])) throw DomainError("radii must increase");
  GrowthTable t;
  t.radii = radii;
  const double norm = gamma_norm(1.0, 2);
  for (double R : radii) {
    double total = 0.0;
    for (std::size_t n = 1; n <= g.c.size(); ++n) {
      if (g.c[n - 1] == 0.0) continue;
      const double lo = std::max(2.0 * n, -R), hi = std::min(2.0 * n + 1.0, R);
      if (hi <= lo) continue;
      // \int_{|y2| <= Y} dy2 / |x - y| = asinh((Y - x2)/|a|) + asinh((Y + x2)/|a|).
      auto inner = [&](double y1) {
        const double a = std::abs(y1 - x[0]);
        const double Y = std::sqrt(std::max(0.0, R * R - y1 * y1));
        if (a == 0.0) return 0.0;  // measure zero; only reachable at a split point
        return std::asinh((Y - x[1]) / a) + std::asinh((Y + x[1]) / a);
      };
      QuadOptions opt;
      opt.abs_tol = 1e-9;
      double s = 0.0;
      if (x[0] > lo && x[0] < hi)
        s = integrate(inner, lo, x[0], opt).value + integrate(inner, x[0], hi, opt).value;
      else
        s = integrate(inner, lo, hi, opt).value;
      total += g.c[n - 1] * s;
    }
    t.values.push_back(norm * total);
  }
  t.strictly_increasing = true;
  for (std::size_t i = 1; i < t.values.size(); ++i)
    if (!(t.values[i] > t.values[i - 1])) t.strictly_increasing = false;
  std::vector<double> lr;
  for (double R : radii) lr.push_back(std::log(R));
  t.r_squared = fit_r_squared(lr, t.values, t.slope, t.intercept);
  return t;
}

double grating_tail_bound(const GratingSpec& g, double k1, double k2, Point x) {
  double rho = 0.0;
  for (std::size_t n = 1; n <= g.c.size(); ++n)
    rho += std::abs(g.c[n - 1]) *
           std::max(std::abs(2.0 * n - x[0]), std::abs(2.0 * n + 1.0 - x[0]));
  const double kmin = std::min(std::abs(k1), std::abs(k2));
  const double r0 = kGratingAveraging / std::sqrt(kmin);
  // Per edge: \int |tail| dtheta <= \int_{R0}^\infty (1/(2 pi K r)) (rho/r^2) dr.
  return 2.0 * rho / (4.0 * kPi * kmin * r0 * r0) / kTwoPi;
}

cplx grating_lcrp_value(const GratingSpec& g, double k1, double k2, Point x,
                        double cutoff) {
  if (k1 == 0.0 || k2 == 0.0) throw DomainError("chirp rates must be nonzero");
  if ((k1 > 0) != (k2 > 0)) throw DomainError("chirp rates must share a sign");
  if (!(cutoff > 0.0)) throw DomainError("cutoff must be positive");
  const double r0 = kGratingAveraging / std::sqrt(std::min(std::abs(k1), std::abs(k2)));
  // Fresnel value at a stripe edge; far edges take the oscillation average.
  auto edge_value = [&](double K, double t) -> cplx {
    if (std::abs(t) >= r0) {
      const cplx inf = fresnel_incomplete(K, kFresnelInfinity);
      return t > 0 ? inf : -inf;
    }
    return fresnel_incomplete(K, t);
  };
  cplx total = 0.0;
  for (std::size_t n = 1; n <= g.c.size(); ++n) {
    if (g.c[n - 1] == 0.0) continue;
    const double rho1 = 2.0 * n - x[0], rho2 = 2.0 * n + 1.0 - x[0];
    // J_n(theta): radial integral over {r : rho1 <= r cos <= rho2, r <= T}.
    auto J = [&](double th) -> cplx {
      const double c = std::cos(th), s = std::sin(th);
      if (c == 0.0) return 0.0;
      const double q1 = rho1 / c, q2 = rho2 / c;
      const double e1 = std::max(0.0, std::min(q1, q2));
      const double e2 = std::max(0.0, std::max(q1, q2));
      if (e1 >= cutoff) return 0.0;
      const double K = k1 * c * c + k2 * s * s;
      const double L = 2.0 * (k1 * x[0] * c + k2 * x[1] * s);
      const double shift = L / (2.0 * K);
      const cplx lower = e1 == 0.0 ? fresnel_incomplete(K, shift) : edge_value(K, e1 + shift);
      const cplx upper =
          e2 >= cutoff ? fresnel_incomplete(K, cutoff + shift) : edge_value(K, e2 + shift);
      return std::polar(1.0, -kPi * L * L / (4.0 * K)) * (upper - lower);
    };
    // Break the angle where a radial limit switches between a stripe edge and
    // the cutoff or the averaging radius, and where cos changes sign.
    std::vector<double> cuts{-kPi, -kPi / 2, 0.0, kPi / 2, kPi};
    for (double rho : {rho1, rho2})
      for (double R : {cutoff, r0}) {
        if (std::abs(rho) >= R) continue;
        const double a = std::acos(std::abs(rho) / R);
        for (double base : {a, kPi - a}) {
          cuts.push_back(base);
          cuts.push_back(-base);
        }
      }
    std::sort(cuts.begin(), cuts.end());
    QuadOptions opt;
    opt.abs_tol = 1e-7;
    opt.max_intervals = 2000000;
    cplx stripe = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
      if (cuts[i + 1] > cuts[i]) stripe += integrate(J, cuts[i], cuts[i + 1], opt).value;
    total += g.c[n - 1] * stripe;
  }
  return total / kTwoPi;
}

GratingBound grating_lcrp_bound(const GratingSpec& g, double k1, double k2, Point x,
                                const std::vector<double>& cutoffs) {
  if (cutoffs.size() < 2) throw DomainError("need at least two cutoffs");
  GratingBound b;
  b.cutoffs = cutoffs;
  for (double T : cutoffs) b.values.push_back(grating_lcrp_value(g, k1, k2, x, T));
  b.value = std::abs(b.values.back());
  b.cauchy = std::abs(b.values.back() - b.values[b.values.size() - 2]);
  b.tail_bound = grating_tail_bound(g, k1, k2, x);
  return b;
}

void write_limit_csv(std::ostream& os, const std::vector<LimitReport>& reports) {
  os << "experiment,parameter,value,target,abs_error\n";
  os.precision(12);
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.parameters.size(); ++i)
      os << r.name << ',' << r.parameters[i] << ',' << r.values[i] << ',' << r.target
         << ',' << std::abs(r.values[i] - r.target) << '\n';
    os << r.name << ",limit," << r.limit << ',' << r.target << ','
       << std::abs(r.limit - r.target) << '\n';
  }
}

}  // namespace lcrp
