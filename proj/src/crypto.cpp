#include "lcrp/crypto.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcrp/potential.hpp"
#include "lcrp/rng.hpp"

namespace lcrp {

namespace {

constexpr double kPi = std::numbers::pi;

struct StageGrids {
  Grid1D in1, in2, out1, out2;
};

StageGrids stage_grids(std::size_t rows, std::size_t cols, const LCTParams& p) {
  const Grid1D in1 = Grid1D::make(cols, 1.0);
  const Grid1D in2 = Grid1D::make(rows, 1.0);
  return {in1, in2, lct_output_grid(in1, p.ax1), lct_output_grid(in2, p.ax2)};
}

bool same_dims(const RealGrid& a, std::size_t rows, std::size_t cols) {
  return a.same_shape(rows, cols);
}

template <class T>
bool same_values(const std::vector<Field2D<T>>& a, const std::vector<Field2D<T>>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].rows != b[i].rows || a[i].values != b[i].values) return false;
  return true;
}

}  // namespace

PlainSet PlainSet::make(std::vector<RealGrid> images) {
  if (images.empty()) throw DomainError("plain set needs at least one image");
  const std::size_t r = images.front().rows, c = images.front().cols;
  for (const auto& im : images) {
    if (!im.same_shape(r, c)) throw DimensionMismatch("plain images differ in size");
    for (double v : im.values)
      if (!(v >= 0.0 && v <= 1.0)) throw RangeError("plain pixel outside [0, 1]");
  }
  return PlainSet{std::move(images)};
}

void KeyBundle::validate() const {
  const std::size_t m = stages.size();
  if (m == 0) throw KeyIntegrityError("key has no stages");
  for (const auto& s : stages) {
    for (const Matrix2& a : {s.matrices.ax1, s.matrices.ax2}) {
      try {
        make_matrix(a.a, a.b, a.c, a.d);
      } catch (const Error& e) {
        throw KeyIntegrityError(std::string("stage matrix: ") + e.what());
      }
    }
    if (!(s.beta > 0.0 && s.beta < 2.0)) throw KeyIntegrityError("stage order outside (0, 2)");
  }
  if (taus.size() != m || xis.size() != m)
    throw KeyIntegrityError("phase key count differs from stage count");
  auto check = [&](const RealGrid& g) {
    if (!same_dims(g, rows, cols)) throw KeyIntegrityError("phase key dims");
    for (double v : g.values)
      if (!std::isfinite(v)) throw KeyIntegrityError("non-finite phase key");
  };
  for (const auto& g : taus) check(g);
  for (const auto& g : xis) check(g);
  if (!gamma_mask.same_shape(rows, cols)) throw KeyIntegrityError("gamma mask dims");
  for (auto v : gamma_mask.values)
    if (v > 1) throw KeyIntegrityError("gamma mask is not binary");
}

bool operator==(const KeyBundle& a, const KeyBundle& b) {
  return a.stages == b.stages && a.rows == b.rows && a.cols == b.cols && a.seed == b.seed &&
         a.gamma_mask.rows == b.gamma_mask.rows &&
         a.gamma_mask.values == b.gamma_mask.values && same_values(a.taus, b.taus) &&
         same_values(a.xis, b.xis);
}

std::vector<PhasePair> generate_phase_masks(const PlainSet& p, std::uint64_t seed) {
  std::vector<PhasePair> out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const RealGrid& f = p.images[k];
    PhasePair pp{uniform_phase_grid(f.rows, f.cols, seed, k + 1), RealGrid(f.rows, f.cols)};
    for (std::size_t i = 0; i < f.size(); ++i) {
      const double v = f.values[i];
      if (!(v >= 0.0 && v <= 1.0)) throw RangeError("plain pixel outside [0, 1]");
      // acos((2 - v^2)/2) written as 2 asin(v/2): no cancellation near v = 0.
      pp.phi.values[i] = pp.theta.values[i] + kPi - 2.0 * std::asin(v / 2.0);
    }
    out.push_back(std::move(pp));
  }
  return out;
}

Modulation modulate_phases(const std::vector<RealGrid>& phis, std::uint64_t seed) {
  if (phis.empty()) throw DomainError("no phases to modulate");
  const std::size_t m = phis.size(), rows = phis[0].rows, cols = phis[0].cols;
  for (const auto& p : phis)
    if (!p.same_shape(rows, cols)) throw DimensionMismatch("phase grids differ in size");
  Modulation out{RealGrid(rows, cols), std::vector<RealGrid>(m, RealGrid(rows, cols))};
  const RealGrid decoy = uniform_phase_grid(rows, cols, seed, m + 1);
  for (std::size_t i = 0; i < out.sum.size(); ++i) {
    double rest = 0.0;  // sum over d >= 2
    for (std::size_t d = 1; d < m; ++d) rest += phis[d].values[i];
    const double g = phis[0].values[i] + rest;
    out.sum.values[i] = g;
    out.taus[0].values[i] = rest + decoy.values[i];
    for (std::size_t k = 1; k < m; ++k) out.taus[k].values[i] = g - phis[k].values[i];
  }
  return out;
}

Correction phase_correction(const RealGrid& sum) {
  Correction out{RealGrid(sum.rows, sum.cols), BitGrid(sum.rows, sum.cols)};
  for (std::size_t i = 0; i < sum.size(); ++i) {
    const double g = sum.values[i];
    out.gamma_mask.values[i] = g < 0.0 ? 1 : 0;
    out.h0.values[i] = std::abs(g);
  }
  return out;
}

CascadeResult cascade_encrypt(const RealGrid& h0, const std::vector<RealGrid>& thetas,
                              const std::vector<StageParams>& params, Exec exec) {
  if (thetas.size() != params.size() || params.empty())
    throw DimensionMismatch("one stage key per stage required");
  const std::size_t rows = h0.rows, cols = h0.cols;
  CascadeResult out;
  RealGrid h = h0;
  for (std::size_t j = 0; j < params.size(); ++j) {
    if (!thetas[j].same_shape(rows, cols)) throw DimensionMismatch("stage key dims");
    const StageGrids sg = stage_grids(rows, cols, params[j].matrices);
    ComplexGrid psi(sg.in1, sg.in2);
    for (std::size_t i = 0; i < psi.size(); ++i)
      psi.values[i] = std::polar(h.values[i], thetas[j].values[i]);
    const ComplexGrid spec = lct_2d(psi, params[j].matrices, exec);
    const SymbolGrid sym = riesz_symbol(sg.out1, sg.out2, params[j].matrices.ax1.b,
                                        params[j].matrices.ax2.b, params[j].beta);
    const ComplexGrid gam = symbol_multiply_in_lct_domain(spec, sym, exec);
    RealGrid xi(rows, cols);
    for (std::size_t i = 0; i < gam.size(); ++i) {
      h.values[i] = std::abs(gam.values[i]);
      xi.values[i] = std::arg(gam.values[i]);
    }
    if (!all_finite(gam.values)) throw NonFiniteError("stage output not finite");
    out.xis.push_back(std::move(xi));
  }
  out.cipher.amplitude = std::move(h);
  return out;
}

Encrypted encrypt(const PlainSet& p, const std::vector<StageParams>& stages,
                  std::uint64_t seed, Exec exec) {
  if (stages.size() != p.size()) throw DimensionMismatch("one stage per image required");
  const auto masks = generate_phase_masks(p, seed);
  std::vector<RealGrid> phis, thetas;
  for (const auto& mp : masks) {
    phis.push_back(mp.phi);
    thetas.push_back(mp.theta);
  }
  Modulation mod = modulate_phases(phis, seed);
  Correction cor = phase_correction(mod.sum);
  CascadeResult cas = cascade_encrypt(cor.h0, thetas, stages, exec);
  KeyBundle k{stages,      std::move(mod.taus), std::move(cor.gamma_mask), std::move(cas.xis),
              p.rows(),    p.cols(),            seed};
  return {std::move(cas.cipher), std::move(k)};
}

PlainSet decrypt(const Ciphertext& c, const KeyBundle& k, Exec exec) {
  k.validate();
  const std::size_t rows = k.rows, cols = k.cols, m = k.m();
  if (!c.amplitude.same_shape(rows, cols)) throw DimensionMismatch("ciphertext dims");
  RealGrid h = c.amplitude;
  std::vector<RealGrid> thetas(m, RealGrid(rows, cols));
  for (std::size_t jj = m; jj-- > 0;) {
    const StageParams& s = k.stages[jj];
    const StageGrids sg = stage_grids(rows, cols, s.matrices);
    ComplexGrid gam(sg.out1, sg.out2);
    for (std::size_t i = 0; i < gam.size(); ++i)
      gam.values[i] = std::polar(h.values[i], k.xis[jj].values[i]);
    const SymbolGrid sym =
        laplacian_symbol(sg.out1, sg.out2, s.matrices.ax1.b, s.matrices.ax2.b, s.beta);
    const ComplexGrid psi =
        ilct_2d(symbol_multiply_in_lct_domain(gam, sym, exec), s.matrices, exec);
    for (std::size_t i = 0; i < psi.size(); ++i) {
      h.values[i] = std::abs(psi.values[i]);
      thetas[jj].values[i] = std::arg(psi.values[i]);
    }
  }
  PlainSet out{std::vector<RealGrid>(m, RealGrid(rows, cols))};
  for_each_index(exec, rows, [&](std::size_t r) {
    for (std::size_t col = 0; col < cols; ++col) {
      const std::size_t i = r * cols + col;
      const double g = k.gamma_mask.values[i] ? -h.values[i] : h.values[i];
      double rest = 0.0;
      for (std::size_t q = 1; q < m; ++q) {
        const double phi = g - k.taus[q].values[i];
        rest += phi;
        out.images[q].values[i] =
            std::min(1.0, std::abs(std::polar(1.0, phi) + std::polar(1.0, thetas[q].values[i])));
      }
      const double phi1 = g - rest;
      out.images[0].values[i] =
          std::min(1.0, std::abs(std::polar(1.0, phi1) + std::polar(1.0, thetas[0].values[i])));
    }
  });
  return out;
}

std::vector<StageParams> reference_stages() {
  return {
      {{make_matrix(6, 7, 5, 6), make_matrix(1, 20, 0, 1)}, 1.0},
      {{make_matrix(5, 12, 2, 5), make_matrix(1, 11, 9, 100)}, 1.5},
      {{make_matrix(7, 11, 5, 8), make_matrix(11, 21, 1, 2)}, 0.7},
  };
}

std::array<Encrypted, 3> encrypt_rgb(const std::array<PlainSet, 3>& channels,
                                     const std::vector<StageParams>& stages,
                                     std::uint64_t seed, Exec exec) {
  return {encrypt(channels[0], stages, channel_seed(seed, 0), exec),
          encrypt(channels[1], stages, channel_seed(seed, 1), exec),
          encrypt(channels[2], stages, channel_seed(seed, 2), exec)};
}

}  // namespace lcrp
