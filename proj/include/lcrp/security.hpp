#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lcrp/crypto.hpp"

namespace lcrp {

using Image8 = Field2D<std::uint8_t>;

// round(255 clamp(v, 0, 1)) per pixel.
Image8 to_image8(const RealGrid& g);
// Amplitude divided by its maximum, then quantized.
Image8 cipher_image8(const Ciphertext& c);

// Mean squared difference on the 0-255 scale. Throws DimensionMismatch.
double mse(const Image8& a, const Image8& b);

enum class Direction { horizontal, vertical, diagonal };
const char* to_string(Direction d);

struct CorrelationReport {
  std::string subject;    // free label for tables, e.g. "cipher"
  std::string direction;  // horizontal, vertical, diagonal or global
  double value = 0.0;
  bool constant = false;  // zero variance; value reported as 0
};

// Pearson r over every adjacent pair (no sampling). Throws DomainError for
// images smaller than 2x2.
CorrelationReport adjacent_correlation(const Image8& img, Direction d);
// Pearson rho over all pixels. Throws DimensionMismatch.
CorrelationReport global_correlation(const Image8& a, const Image8& b);

// Pixel values / 255 binned uniformly on [0, 1]. Throws DomainError if bins < 2.
std::vector<std::size_t> histogram(const Image8& img, std::size_t bins = 256);

struct ChiSquare {
  double statistic = 0.0;
  double critical = 0.0;  // upper alpha quantile, bins - 1 degrees of freedom
  bool uniform = false;   // statistic < critical
};
ChiSquare chi_square_uniformity(const std::vector<std::size_t>& counts, double alpha = 0.01);

// sum |p_a - p_b| of the normalized histograms.
double histogram_l1(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);

struct SweepPoint {
  double value = 0.0;
  double mse = 0.0;
  bool skipped = false;
  std::string flag;  // reason for a skipped point
};

struct SweepResult {
  std::string kind;       // "matrix" or "beta"
  std::size_t stage = 0;  // 0-based
  std::vector<SweepPoint> points;
  std::size_t correct_index = 0;

  double correct_mse() const { return points[correct_index].mse; }
  std::size_t argmin() const;         // over evaluated points
  double min_wrong_mse() const;
  double max_wrong_mse() const;
  // (max - min) / mean over the evaluated wrong-key points.
  double plateau_variation() const;
};

// [a b' c' d] with c' = (a d - 1)/b' so the determinant stays 1. Throws
// DomainError for b' = 0.
Matrix2 repair_unimodular(const Matrix2& m, double b);

// Sweeps entry (1,2) of the second axis matrix of stage `stage` over
// b0 + i delta, i = -half_steps..half_steps, repairing c = (a d - 1)/b, and
// records the MSE of decrypted image `stage` against originals.images[stage].
// b = 0 points are skipped and flagged "singular".
SweepResult key_sweep_matrix(const Ciphertext& c, const KeyBundle& k, const PlainSet& originals,
                             std::size_t stage, double delta = 2.0, std::size_t half_steps = 15,
                             Exec exec = Exec::parallel);

// The same over beta_stage; points outside (0, 2) are flagged "domain".
SweepResult key_sweep_beta(const Ciphertext& c, const KeyBundle& k, const PlainSet& originals,
                           std::size_t stage, double delta = 0.025, std::size_t half_steps = 15,
                           Exec exec = Exec::parallel);

// M + lambda G with G standard normal (stream 1 of seed), clamped at 0 so the
// result stays an amplitude. Throws DomainError for lambda < 0.
Ciphertext noise_attack(const Ciphertext& c, double lambda, std::uint64_t seed);

struct Rect {
  std::size_t row0 = 0, col0 = 0, rows = 0, cols = 0;
};
// Zeroes the rectangle. Throws OutOfBounds.
Ciphertext occlusion_attack(const Ciphertext& c, const Rect& region);

// Named occlusion regions: top-left quarter, bottom-left quarter, left half.
struct OcclusionPreset {
  std::string name;
  Rect region;
};
std::vector<OcclusionPreset> occlusion_presets(std::size_t rows, std::size_t cols);

// Global correlation of each decrypted image with its original.
struct RobustnessRow {
  std::string attack;
  double parameter = 0.0;  // lambda or occluded area fraction
  std::vector<double> correlations;
};
std::vector<RobustnessRow> noise_table(const Ciphertext& c, const KeyBundle& k,
                                       const PlainSet& originals,
                                       const std::vector<double>& lambdas, std::uint64_t seed);
std::vector<RobustnessRow> occlusion_table(const Ciphertext& c, const KeyBundle& k,
                                           const PlainSet& originals);

void write_sweep_csv(std::ostream& os, const SweepResult& s);
void write_correlation_csv(std::ostream& os, const std::vector<CorrelationReport>& rows);
void write_histogram_csv(std::ostream& os, const std::vector<std::size_t>& counts);
void write_robustness_csv(std::ostream& os, const std::vector<RobustnessRow>& rows);

}  // namespace lcrp
