#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lcrp/error.hpp"

namespace lcrp {

using cplx = std::complex<double>;

// Uniform, center-aligned sampling of one axis: x_j = (j - n/2) * spacing.
struct Grid1D {
  std::size_t n = 0;
  double spacing = 1.0;

  // Throws DomainError unless n is a power of two >= 8 and spacing > 0.
  static Grid1D make(std::size_t n, double spacing);

  double coord(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n / 2)) * spacing;
  }
  std::vector<double> coords() const;

  friend bool operator==(const Grid1D&, const Grid1D&) = default;
};

bool is_power_of_two(std::size_t n);
std::size_t next_power_of_two(std::size_t n);

// Dense row-major 2D field. Axis 1 (x) runs along a row (column index, grid1),
// axis 2 (y) runs down the columns (row index, grid2).
template <class T>
struct Field2D {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> values;

  Field2D() = default;
  Field2D(std::size_t r, std::size_t c, T fill = T{})
      : rows(r), cols(c), values(r * c, fill) {}

  T& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return values[r * cols + c];
  }
  std::span<T> row(std::size_t r) { return {values.data() + r * cols, cols}; }
  std::span<const T> row(std::size_t r) const {
    return {values.data() + r * cols, cols};
  }
  std::size_t size() const { return values.size(); }
  bool same_shape(std::size_t r, std::size_t c) const {
    return rows == r && cols == c;
  }
};

using RealGrid = Field2D<double>;

// Complex field together with the sampling grids of its two axes.
struct ComplexGrid : Field2D<cplx> {
  Grid1D grid1;  // along a row (x, cols)
  Grid1D grid2;  // down a column (y, rows)

  ComplexGrid() = default;
  ComplexGrid(Grid1D g1, Grid1D g2, cplx fill = {})
      : Field2D<cplx>(g2.n, g1.n, fill), grid1(g1), grid2(g2) {}

  static ComplexGrid from_real(const RealGrid& re, Grid1D g1, Grid1D g2);
};

RealGrid abs(const ComplexGrid& f);
RealGrid arg(const ComplexGrid& f);
bool all_finite(std::span<const cplx> v);

}  // namespace lcrp
