#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lcrp/exec.hpp"
#include "lcrp/grid.hpp"
#include "lcrp/lct.hpp"

namespace lcrp {

using BitGrid = Field2D<std::uint8_t>;

// Normalized input images f_1..f_m, values in [0, 1], common dims.
struct PlainSet {
  std::vector<RealGrid> images;

  // Throws DomainError (empty), DimensionMismatch, RangeError.
  static PlainSet make(std::vector<RealGrid> images);

  std::size_t size() const { return images.size(); }
  std::size_t rows() const { return images.front().rows; }
  std::size_t cols() const { return images.front().cols; }
};

// |e^{i phi} + e^{i theta}| = f pixelwise.
struct PhasePair {
  RealGrid theta;
  RealGrid phi;
};

struct StageParams {
  LCTParams matrices;
  double beta = 1.0;

  friend bool operator==(const StageParams&, const StageParams&) = default;
};

struct KeyBundle {
  std::vector<StageParams> stages;  // A_j, beta_j
  std::vector<RealGrid> taus;
  BitGrid gamma_mask;
  std::vector<RealGrid> xis;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint64_t seed = 0;

  std::size_t m() const { return stages.size(); }
  // Throws KeyIntegrityError on any broken invariant.
  void validate() const;

  friend bool operator==(const KeyBundle&, const KeyBundle&);
};

// Nonnegative amplitude h_m.
struct Ciphertext {
  RealGrid amplitude;
};

// theta_k uniform on [0, 2 pi) from stream k (1-based); phi_k = theta_k + alpha_k
// with alpha = pi - acos((2 - f^2)/2). Throws RangeError.
std::vector<PhasePair> generate_phase_masks(const PlainSet& p, std::uint64_t seed);

struct Modulation {
  RealGrid sum;               // G = sum_k phi_k
  std::vector<RealGrid> taus; // tau_1 = sum_{d>=2} phi_d + R, tau_k = G - phi_k
};

// R is drawn from stream m + 1.
Modulation modulate_phases(const std::vector<RealGrid>& phis, std::uint64_t seed);

struct Correction {
  RealGrid h0;  // |G|
  BitGrid gamma_mask;
};

Correction phase_correction(const RealGrid& sum);

struct CascadeResult {
  Ciphertext cipher;
  std::vector<RealGrid> xis;
};

// Stage j: Psi = h_{j-1} e^{i theta_j} on the unit pixel grid, Gamma = LCT_{A_j}
// times the order-beta_j Riesz symbol, h_j = |Gamma|, xi_j = arg Gamma.
// Throws DimensionMismatch unless thetas and params have one entry per stage.
CascadeResult cascade_encrypt(const RealGrid& h0, const std::vector<RealGrid>& thetas,
                              const std::vector<StageParams>& params,
                              Exec exec = Exec::parallel);

struct Encrypted {
  Ciphertext cipher;
  KeyBundle keys;
};

// Requires one stage per image.
Encrypted encrypt(const PlainSet& p, const std::vector<StageParams>& stages,
                  std::uint64_t seed, Exec exec = Exec::parallel);

// Inverse cascade; outputs clamped to [0, 1]. Throws DimensionMismatch,
// KeyIntegrityError.
PlainSet decrypt(const Ciphertext& c, const KeyBundle& k, Exec exec = Exec::parallel);

// Three matrices/orders used throughout the examples:
// A_1 = ([6 7; 5 6], [1 20; 0 1]), beta 1
// A_2 = ([5 12; 2 5], [1 11; 9 100]), beta 1.5
// A_3 = ([7 11; 5 8], [11 21; 1 2]), beta 0.7
std::vector<StageParams> reference_stages();

// Per-channel pipelines with channel_seed sub-seeds; channel c of every
// image forms plain set c.
std::array<Encrypted, 3> encrypt_rgb(const std::array<PlainSet, 3>& channels,
                                     const std::vector<StageParams>& stages,
                                     std::uint64_t seed, Exec exec = Exec::parallel);

}  // namespace lcrp
