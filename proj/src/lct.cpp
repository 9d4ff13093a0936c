#include "lcrp/lct.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace lcrp {
namespace {

constexpr double kPi = std::numbers::pi;

// Precomputed factors for transforming lines of length n on grid g.
struct LinePlan {
  std::vector<cplx> pre;   // e_{a,b}(x_j) (-1)^j
  std::vector<cplx> post;  // C_A dx e_{d,b}(u_m) (-1)^m
  bool forward = true;

  LinePlan(const Grid1D& g, const Matrix2& m) : pre(g.n), post(g.n) {
    const Grid1D out = lct_output_grid(g, m);
    const cplx scale = lct_constant(m) * g.spacing;
    const double ra = m.a / m.b;
    const double rd = m.d / m.b;
    for (std::size_t j = 0; j < g.n; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      const double x = g.coord(j);
      const double u = out.coord(j);
      pre[j] = sign * std::polar(1.0, kPi * ra * x * x);
      post[j] = sign * scale * std::polar(1.0, kPi * rd * u * u);
    }
    forward = m.b > 0.0;
  }

  void run(std::span<cplx> line) const {
    for (std::size_t j = 0; j < line.size(); ++j) line[j] *= pre[j];
    detail::dft_inplace(line, forward);
    for (std::size_t j = 0; j < line.size(); ++j) line[j] *= post[j];
  }
};

void check_finite(std::span<const cplx> v) {
  if (!all_finite(v)) throw NonFiniteError("LCT produced non-finite samples");
}

}  // namespace

Matrix2 make_matrix(double a, double b, double c, double d) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) ||
      !std::isfinite(d))
    throw NonFiniteError("matrix entries must be finite");
  if (b == 0.0) throw ZeroBError("matrix entry b must be nonzero");
  const double det = a * d - b * c;
  if (std::abs(det - 1.0) > 1e-9)
    throw DeterminantError("matrix is not unimodular, det = " +
                           std::to_string(det));
  return Matrix2{a, b, c, d};
}

Matrix2 inverse_matrix(const Matrix2& m) { return Matrix2{m.d, -m.b, -m.c, m.a}; }

LCTParams inverse_params(const LCTParams& p) {
  return LCTParams{inverse_matrix(p.ax1), inverse_matrix(p.ax2)};
}

std::vector<cplx> chirp_grid(double rate, const Grid1D& g) {
  std::vector<cplx> out(g.n);
  for (std::size_t j = 0; j < g.n; ++j) {
    const double x = g.coord(j);
    out[j] = std::polar(1.0, kPi * rate * x * x);
  }
  return out;
}

ComplexGrid chirp_grid(double rate, const Grid1D& g1, const Grid1D& g2) {
  ComplexGrid out(g1, g2);
  const auto cx = chirp_grid(rate, g1);
  const auto cy = chirp_grid(rate, g2);
  for (std::size_t r = 0; r < out.rows; ++r)
    for (std::size_t c = 0; c < out.cols; ++c) out(r, c) = cy[r] * cx[c];
  return out;
}

Grid1D lct_output_grid(const Grid1D& in, const Matrix2& m) {
  return Grid1D::make(in.n, std::abs(m.b) / (static_cast<double>(in.n) * in.spacing));
}

cplx lct_constant(const Matrix2& m) { return std::sqrt(1.0 / cplx(0.0, m.b)); }

std::vector<cplx> lct_1d(std::span<const cplx> signal, const Grid1D& g,
                         const Matrix2& m) {
  if (signal.size() != g.n)
    throw DimensionMismatch("signal length does not match grid");
  std::vector<cplx> out(signal.begin(), signal.end());
  LinePlan(g, m).run(out);
  check_finite(out);
  return out;
}

ComplexGrid lct_along(const ComplexGrid& field, Axis axis, const Matrix2& m,
                      Exec exec) {
  if (!field.same_shape(field.grid2.n, field.grid1.n))
    throw DimensionMismatch("field does not match its grids");
  ComplexGrid out = field;
  if (axis == Axis::x) {
    out.grid1 = lct_output_grid(field.grid1, m);
    const LinePlan plan(field.grid1, m);
    for_each_index(exec, out.rows, [&](std::size_t r) { plan.run(out.row(r)); });
  } else {
    out.grid2 = lct_output_grid(field.grid2, m);
    const LinePlan plan(field.grid2, m);
    for_each_index(exec, out.cols, [&](std::size_t c) {
      std::vector<cplx> line(out.rows);
      for (std::size_t r = 0; r < out.rows; ++r) line[r] = out(r, c);
      plan.run(line);
      for (std::size_t r = 0; r < out.rows; ++r) out(r, c) = line[r];
    });
  }
  check_finite(out.values);
  return out;
}

ComplexGrid lct_2d(const ComplexGrid& field, const LCTParams& p, Exec exec) {
  return lct_along(lct_along(field, Axis::x, p.ax1, exec), Axis::y, p.ax2, exec);
}

ComplexGrid ilct_2d(const ComplexGrid& field, const LCTParams& p, Exec exec) {
  return lct_2d(field, inverse_params(p), exec);
}

}  // namespace lcrp
