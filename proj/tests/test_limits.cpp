#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "lcrp/limits.hpp"
#include "lcrp/potential.hpp"

using namespace lcrp;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

// Plain quadrature of exp(i pi kappa t^2) on [0, s].
cplx fresnel_reference(double kappa, double s) {
  QuadOptions opt;
  opt.abs_tol = 1e-12;
  opt.max_intervals = 1000000;
  return integrate([&](double t) { return std::polar(1.0, kPi * kappa * t * t); }, 0.0, s, opt)
      .value;
}

}  // namespace

TEST(Fresnel, ZeroUpperLimit) {
  for (double k : {0.25, 1.0, -3.0}) EXPECT_EQ(fresnel_incomplete(k, 0.0), cplx(0.0));
}

TEST(Fresnel, CompleteIntegral) {
  const cplx exact = std::polar(0.5, kPi / 4);
  EXPECT_LE(std::abs(fresnel_incomplete(1.0, kFresnelInfinity) - exact), 1e-5);
  // Independent route: quadrature to T = 40 plus the leading tail term
  // i exp(i pi T^2) / (2 pi T) and its first correction.
  const double T = 40.0;
  const cplx tail = std::polar(1.0, kPi * T * T) *
                    (cplx(0, 1) / (2 * kPi * T) + 1.0 / (4 * kPi * kPi * T * T * T));
  EXPECT_LE(std::abs(fresnel_incomplete(1.0, kFresnelInfinity) - (fresnel_reference(1.0, T) + tail)),
            1e-8);
  EXPECT_LE(std::abs(fresnel_incomplete(4.0, kFresnelInfinity) - exact / 2.0), 1e-10);
  EXPECT_LE(std::abs(fresnel_incomplete(-1.0, kFresnelInfinity) - std::conj(exact)), 1e-10);
}

TEST(Fresnel, MatchesQuadratureAcrossSeriesSwitch) {
  for (double k : {0.25, 1.0, 4.0, -1.0})
    for (double s : {0.3, 2.0, 7.9, 8.1, 12.0, 25.0}) {
      const double w = s * std::sqrt(std::abs(k));
      EXPECT_LE(std::abs(fresnel_incomplete(k, s) - fresnel_reference(k, s)), 1e-9)
          << "kappa " << k << " s " << s << " w " << w;
    }
  EXPECT_EQ(fresnel_incomplete(2.0, -1.5), -fresnel_incomplete(2.0, 1.5));
  EXPECT_THROW(fresnel_incomplete(0.0, 1.0), DomainError);
}

TEST(Fresnel, ScaledSupremumBounded) {
  double overall = 0.0;
  for (double k : {0.25, 1.0, 4.0, -1.0}) {
    double sup = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double s = 100.0 * i / 20000.0;
      sup = std::max(sup, std::abs(fresnel_incomplete(k, s)) * std::sqrt(std::abs(k)));
    }
    EXPECT_LE(sup, 1.0);
    overall = std::max(overall, sup);
  }
  // max |C(u) + i S(u)| / sqrt(2) for the standard Fresnel pair.
  EXPECT_NEAR(overall, 0.671084, 1e-5);
}

TEST(GammaNorm, ClosedForms) {
  EXPECT_NEAR(gamma_norm(1.0, 2), 1.0 / (2.0 * kPi), 1e-15);
  // n = 1, beta = 1/2: Gamma(1/4) / (sqrt(pi) sqrt(2) Gamma(1/4)).
  EXPECT_NEAR(gamma_norm(0.5, 1), 1.0 / std::sqrt(2.0 * kPi), 1e-14);
  EXPECT_THROW(gamma_norm(0.0, 2), DomainError);
  EXPECT_THROW(gamma_norm(2.0, 2), DomainError);
  EXPECT_NEAR(log_potential_constant(2), 1.0 / (2.0 * kPi), 1e-15);
}

TEST(GammaNorm, SmallBetaExpansion) {
  auto series = [](double b) {
    return (b / 2.0 + kEulerGamma * b * b / 2.0) / (kPi * std::exp2(b));
  };
  const double b = 0.01;
  EXPECT_LE(std::abs(gamma_norm(b, 2) - series(b)), 1e-5 * b);
  EXPECT_NEAR(gamma_norm(1e-4, 2) * 2.0 * kPi / 1e-4, 1.0, 1e-3);
  std::vector<double> ratio;
  for (double bb : {0.08, 0.04, 0.02, 0.01})
    ratio.push_back(std::abs(gamma_norm(bb, 2) - series(bb)) / (bb * bb * bb));
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  EXPECT_LT(*hi / *lo, 2.0);
}

TEST(Sector, ClosedForm) {
  EXPECT_NEAR(sector_potential(2 * kPi, 1.0, 1.0), 1.0, 1e-14);
  double prev = 1e9;
  for (double b : {0.4, 0.2, 0.1, 0.05}) {
    const double d = std::abs(sector_potential(kPi / 2, 2.0, b) - 0.25);
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 0.02);
  EXPECT_THROW(sector_potential(0.0, 1.0, 1.0), DomainError);
  EXPECT_THROW(sector_potential(1.0, -1.0, 1.0), DomainError);
}

TEST(Sector, AgreesWithPolygonQuadrature) {
  // Chords sit inside the arc by at most R (1 - cos(dtheta / 2)).
  const double exact = sector_potential(kPi / 2, 2.0, 0.5);
  EXPECT_NEAR(riesz_indicator(sector_polygon(kPi / 2, 2.0, 128), {0, 0}, 0.5), exact, 1e-4);
  for (double b : {0.3, 1.0, 1.7}) {
    const double e = sector_potential(kPi / 3, 1.5, b);
    EXPECT_NEAR(riesz_indicator(sector_polygon(kPi / 3, 1.5, 256), {0, 0}, b), e, 1e-3);
  }
}

TEST(Polygon, Validation) {
  EXPECT_THROW(Polygon::make({{0, 0}, {1, 0}}), DomainError);
  EXPECT_THROW(Polygon::make({{0, 0}, {0, 1}, {1, 0}}), DomainError);           // clockwise
  EXPECT_THROW(Polygon::make({{0, 0}, {1, 0}, {2, 0}, {1, 1}}), DomainError);   // collinear
  EXPECT_THROW(Polygon::make({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), DomainError);   // repeat
  EXPECT_NEAR(unit_square().area(), 4.0, 1e-15);
}

TEST(RieszIndicator, TranslationInvariant) {
  const Polygon P = Polygon::regular(5, 1.3, {0.2, -0.1}, 0.3);
  for (Point x : {Point{0.1, 0.2}, Point{3.0, -2.0}, P.vertices[2]}) {
    const double v = riesz_indicator(P, x, 0.7);
    const Point d{12.5, -7.25};
    const double w = riesz_indicator(P.translated(d), {x[0] + d[0], x[1] + d[1]}, 0.7);
    EXPECT_NEAR(v, w, 1e-8);
  }
}

TEST(RieszIndicator, MonotoneInRegion) {
  const Polygon small = Polygon::make({{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}});
  const Polygon big = unit_square();
  for (Point x : {Point{0, 0}, Point{0.5, 0.5}, Point{2, 0.3}})
    for (double b : {0.2, 1.0, 1.8})
      EXPECT_LE(riesz_indicator(small, x, b), riesz_indicator(big, x, b));
}

TEST(RieszIndicator, MatchesDirectPotentialAtSquareCenter) {
  const WindowedField one{[](double, double) { return cplx(1.0); }, Window{-1, 1, -1, 1}, 0.25};
  QuadOptions opt;
  opt.abs_tol = 1e-8;
  const cplx d = lcrp_direct(one, ChirpRates{}, 1.0, 0.0, 0.0, opt);
  EXPECT_NEAR(d.real(), riesz_indicator(unit_square(), {0, 0}, 1.0), 1e-5);
  EXPECT_NEAR(d.imag(), 0.0, 1e-12);
}

TEST(PolygonLimits, Targets) {
  const std::vector<double> betas{0.4, 0.2, 0.1, 0.05};
  const Polygon sq = unit_square();
  const Polygon tri = Polygon::regular(3, 1.0);
  const Polygon hex = Polygon::regular(6, 1.0);
  const struct {
    LimitReport r;
    double target;
  } cases[] = {
      {polygon_limit_experiment(sq, {0, 0}, PointKind::interior, betas), 1.0},
      {polygon_limit_experiment(sq, {3, 3}, PointKind::exterior, betas), 0.0},
      {polygon_limit_experiment(sq, {1, 0}, PointKind::edge, betas), 0.5},
      {polygon_limit_experiment(sq, {1, 1}, PointKind::corner, betas, kPi / 2), 0.25},
      {polygon_limit_experiment(tri, tri.vertices[0], PointKind::corner, betas, kPi / 3), 1.0 / 6},
      {polygon_limit_experiment(hex, hex.vertices[0], PointKind::corner, betas, 2 * kPi / 3),
       1.0 / 3},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(c.r.target, c.target);
    EXPECT_TRUE(c.r.passed) << c.r.name << " limit " << c.r.limit;
    EXPECT_NEAR(c.r.limit, c.target, 5e-3);
  }
  EXPECT_THROW(polygon_limit_experiment(sq, {0, 0}, PointKind::interior, {0.1, 0.2}),
               DomainError);
  EXPECT_THROW(polygon_limit_experiment(sq, {0, 0}, PointKind::interior, {0.8}), DomainError);
}

TEST(Richardson, RemovesLinearTerm) {
  const std::vector<double> p{0.4, 0.2};
  EXPECT_NEAR(richardson_to_zero(p, {3.0 + 2 * 0.4, 3.0 + 2 * 0.2}), 3.0, 1e-14);
}

TEST(Grating, ClassicalGrowsLogLinearly) {
  const GratingSpec g{{1.0, 1.0}};
  const auto t = grating_divergence_probe(g, {0, 0}, {1e2, 1e3, 1e4});
  EXPECT_TRUE(t.strictly_increasing);
  EXPECT_GT(t.slope, 0.0);
  EXPECT_GE(t.r_squared, 0.99);
  // Each unit-width stripe adds (1/(2 pi)) 2 ln R asymptotically.
  EXPECT_NEAR(t.slope, 2.0 / kPi, 1e-3);

  const auto z = grating_divergence_probe(GratingSpec{{0.0, 0.0}}, {0, 0}, {1e2, 1e3, 1e4});
  for (double v : z.values) EXPECT_EQ(v, 0.0);
  const auto d = grating_divergence_probe(GratingSpec{{2.0, 2.0}}, {0, 0}, {1e2, 1e3, 1e4});
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(d.values[i], 2.0 * t.values[i], 1e-9);
  // A point inside a stripe (log singular inner integrand).
  const auto in = grating_divergence_probe(g, {2.5, 0.0}, {1e2, 1e3, 1e4});
  EXPECT_TRUE(in.strictly_increasing);
  EXPECT_THROW(grating_divergence_probe(g, {0, 0}, {1e2, 1e3}), DomainError);
}

TEST(Grating, ChirpedPotentialStabilizes) {
  const GratingSpec g{{1.0, 1.0}};
  const auto b1 = grating_lcrp_bound(g, 1.0, 1.0, {0, 0});
  EXPECT_TRUE(std::isfinite(b1.value));
  EXPECT_LT(b1.cauchy, 1e-3);
  EXPECT_LT(b1.tail_bound, 1e-3);
  const auto b4 = grating_lcrp_bound(g, 4.0, 4.0, {0, 0});
  EXPECT_LE(b4.value, b1.value);                   // C/sqrt(k) envelope shape
  EXPECT_LE(b4.value * 2.0, b1.value * 1.0 + 1e-12);
  const auto z = grating_lcrp_bound(GratingSpec{{0.0}}, 1.0, 1.0, {0, 0});
  EXPECT_EQ(z.value, 0.0);
  EXPECT_THROW(grating_lcrp_value(g, 1.0, -1.0, {0, 0}, 1e3), DomainError);
}

TEST(Grating, ChirpedPotentialLinearInCoefficients) {
  const cplx a = grating_lcrp_value(GratingSpec{{1.0, 0.0}}, 2.0, 1.5, {0.5, 1.0}, 1e3);
  const cplx b = grating_lcrp_value(GratingSpec{{0.0, 1.0}}, 2.0, 1.5, {0.5, 1.0}, 1e3);
  const cplx ab = grating_lcrp_value(GratingSpec{{2.0, -1.0}}, 2.0, 1.5, {0.5, 1.0}, 1e3);
  EXPECT_NEAR(std::abs(ab - (2.0 * a - b)), 0.0, 1e-9);
}

TEST(CriticalLimits, SuitePasses) {
  const auto reports = critical_limit_suite();
  ASSERT_EQ(reports.size(), 3u);
  for (const auto& r : reports) EXPECT_TRUE(r.passed) << r.name << " " << r.limit;
  std::ostringstream os;
  write_limit_csv(os, reports);
  EXPECT_EQ(os.str().substr(0, 41), "experiment,parameter,value,target,abs_err");
}

// Riesz potential at the origin of exp(-pi alpha |y|^2), alpha = 1/s^2 - i a/b:
// Gamma(1 - beta/2) (4 pi alpha)^(-beta/2), relative to the periodic discrete value.
TEST(CriticalLimits, DiscreteOrderLimitMatchesChirpedGaussian) {
  const LCTParams p{make_matrix(1, 100, 0, 1), make_matrix(1, 100, 0, 1)};
  const double s = 3.0;
  const cplx alpha(1.0 / (s * s), -0.01);
  auto error = [&](std::size_t n, double b) {
    const Grid1D g = Grid1D::make(n, 0.25);
    ComplexGrid f(g, g);
    for (std::size_t r = 0; r < f.rows; ++r)
      for (std::size_t c = 0; c < f.cols; ++c) {
        const double x = g.coord(c), y = g.coord(r);
        f(r, c) = std::exp(-kPi * (x * x + y * y) / (s * s));
      }
    const cplx exact = std::tgamma(1.0 - b / 2) * std::pow(4.0 * kPi * alpha, -b / 2);
    return std::abs(apply_lcrp(f, p, b)(n / 2, n / 2) - exact) / std::abs(exact);
  };
  for (double b : {0.05, 0.2, 0.5}) {
    const double e512 = error(512, b), e1024 = error(1024, b);
    EXPECT_LE(e512, 5e-3) << b;
    EXPECT_LT(e1024, 0.5 * e512) << b;  // residual is the finite period
  }
}
