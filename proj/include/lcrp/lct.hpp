#pragma once

#include <span>
#include <vector>

#include "lcrp/exec.hpp"
#include "lcrp/grid.hpp"

namespace lcrp {

// One unimodular axis matrix [a b; c d] with b != 0.
struct Matrix2 {
  double a = 0.0;
  double b = 1.0;
  double c = -1.0;
  double d = 0.0;

  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

// Throws DeterminantError if |ad - bc - 1| > 1e-9, ZeroBError if b == 0.
Matrix2 make_matrix(double a, double b, double c, double d);

// (d, -b, -c, a).
Matrix2 inverse_matrix(const Matrix2& m);

// Axis matrices of a separable 2D transform: ax1 acts along x (columns of a
// row), ax2 along y (rows).
struct LCTParams {
  Matrix2 ax1;
  Matrix2 ax2;

  friend bool operator==(const LCTParams&, const LCTParams&) = default;
};

LCTParams inverse_params(const LCTParams& p);

// exp(i*pi*rate*x^2) sampled on g.
std::vector<cplx> chirp_grid(double rate, const Grid1D& g);
// exp(i*pi*rate*(x^2 + y^2)) on g1 x g2.
ComplexGrid chirp_grid(double rate, const Grid1D& g1, const Grid1D& g2);

// Output sampling of the discrete transform: same n, spacing |b|/(n*dx).
Grid1D lct_output_grid(const Grid1D& in, const Matrix2& m);

// sqrt(1/(i*b)), principal branch.
cplx lct_constant(const Matrix2& m);

// Discrete 1D LCT via chirp -> FFT -> chirp. The result lives on
// lct_output_grid(g, m). Throws DimensionMismatch or NonFiniteError.
std::vector<cplx> lct_1d(std::span<const cplx> signal, const Grid1D& g,
                         const Matrix2& m);

enum class Axis { x, y };

// Transforms every line of `field` along one axis; the other axis is untouched.
ComplexGrid lct_along(const ComplexGrid& field, Axis axis, const Matrix2& m,
                      Exec exec = Exec::parallel);

// Separable 2D LCT: ax1 along x, then ax2 along y.
ComplexGrid lct_2d(const ComplexGrid& field, const LCTParams& p,
                   Exec exec = Exec::parallel);

// lct_2d with both axis matrices inverted. `field` must sit on the output
// grids of lct_2d(., p).
ComplexGrid ilct_2d(const ComplexGrid& field, const LCTParams& p,
                    Exec exec = Exec::parallel);

}  // namespace lcrp
