#include "lcrp/grid.hpp"

#include <cmath>
#include <string>

namespace lcrp {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

Grid1D Grid1D::make(std::size_t n, double spacing) {
  if (!is_power_of_two(n) || n < 8)
    throw DomainError("grid size must be a power of two >= 8, got " +
                      std::to_string(n));
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw DomainError("grid spacing must be finite and > 0");
  return Grid1D{n, spacing};
}

std::vector<double> Grid1D::coords() const {
  std::vector<double> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = coord(j);
  return x;
}

ComplexGrid ComplexGrid::from_real(const RealGrid& re, Grid1D g1, Grid1D g2) {
  if (re.rows != g2.n || re.cols != g1.n)
    throw DimensionMismatch("real field does not match grid dimensions");
  ComplexGrid out(g1, g2);
  for (std::size_t i = 0; i < re.size(); ++i) out.values[i] = re.values[i];
  return out;
}

RealGrid abs(const ComplexGrid& f) {
  RealGrid out(f.rows, f.cols);
  for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = std::abs(f.values[i]);
  return out;
}

RealGrid arg(const ComplexGrid& f) {
  RealGrid out(f.rows, f.cols);
  for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = std::arg(f.values[i]);
  return out;
}

bool all_finite(std::span<const cplx> v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace lcrp
