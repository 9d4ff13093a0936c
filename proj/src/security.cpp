#include "lcrp/security.hpp"

#include <algorithm>
#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <limits>

#include "lcrp/rng.hpp"

namespace lcrp {

namespace {

// Pearson coefficient of paired samples, accumulated in one pass about the
// first pair to limit cancellation.
template <class Pairs>
CorrelationReport pearson(std::string name, std::size_t n, Pairs&& pair) {
  const auto [x0, y0] = pair(0);
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto [xr, yr] = pair(i);
    const double x = xr - x0, y = yr - y0;
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  const double vx = sxx - sx * sx / dn, vy = syy - sy * sy / dn;
  if (vx <= 0.0 || vy <= 0.0) return {"", std::move(name), 0.0, true};
  const double r = (sxy - sx * sy / dn) / std::sqrt(vx * vy);
  return {"", std::move(name), std::clamp(r, -1.0, 1.0), false};
}

double stage_mse(const Ciphertext& c, const KeyBundle& k, const PlainSet& originals,
                 std::size_t stage) {
  const PlainSet d = decrypt(c, k, Exec::serial);
  return mse(to_image8(originals.images[stage]), to_image8(d.images[stage]));
}

template <class Apply>
SweepResult sweep(std::string kind, const Ciphertext& c, const KeyBundle& k,
                  const PlainSet& originals, std::size_t stage, double center, double delta,
                  std::size_t half_steps, Exec exec, Apply&& apply) {
  if (stage >= k.m() || stage >= originals.size()) throw OutOfBounds("sweep stage index");
  SweepResult out{std::move(kind), stage, std::vector<SweepPoint>(2 * half_steps + 1), half_steps};
  for_each_index(exec, out.points.size(), [&](std::size_t i) {
    SweepPoint& p = out.points[i];
    p.value = center + (static_cast<double>(i) - static_cast<double>(half_steps)) * delta;
    if (i == half_steps) p.value = center;
    KeyBundle kk = k;
    p.flag = apply(kk.stages[stage], p.value);
    p.skipped = !p.flag.empty();
    if (!p.skipped) p.mse = stage_mse(c, kk, originals, stage);
  });
  return out;
}

double recovered_correlation(const PlainSet& o, const PlainSet& d, std::size_t i) {
  return global_correlation(to_image8(o.images[i]), to_image8(d.images[i])).value;
}

}  // namespace

Image8 to_image8(const RealGrid& g) {
  Image8 out(g.rows, g.cols);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double v = std::clamp(g.values[i], 0.0, 1.0);
    out.values[i] = static_cast<std::uint8_t>(std::floor(255.0 * v + 0.5));
  }
  return out;
}

Image8 cipher_image8(const Ciphertext& c) {
  const auto& v = c.amplitude.values;
  const double top = v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
  RealGrid g = c.amplitude;
  for (double& x : g.values) x = top > 0 ? x / top : 0.0;
  return to_image8(g);
}

double mse(const Image8& a, const Image8& b) {
  if (!a.same_shape(b.rows, b.cols)) throw DimensionMismatch("mse of different sizes");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a.values[i]) - b.values[i];
    s += d * d;
  }
  return s / static_cast<double>(a.size());
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::horizontal: return "horizontal";
    case Direction::vertical: return "vertical";
    case Direction::diagonal: return "diagonal";
  }
  return "?";
}

CorrelationReport adjacent_correlation(const Image8& img, Direction d) {
  if (img.rows < 2 || img.cols < 2) throw DomainError("correlation needs at least 2x2");
  const std::size_t dr = d == Direction::horizontal ? 0 : 1;
  const std::size_t dc = d == Direction::vertical ? 0 : 1;
  const std::size_t w = img.cols - dc, h = img.rows - dr;
  return pearson(to_string(d), w * h, [&](std::size_t i) {
    const std::size_t r = i / w, c = i % w;
    return std::pair<double, double>(img(r, c), img(r + dr, c + dc));
  });
}

CorrelationReport global_correlation(const Image8& a, const Image8& b) {
  if (!a.same_shape(b.rows, b.cols)) throw DimensionMismatch("correlation of different sizes");
  return pearson("global", a.size(), [&](std::size_t i) {
    return std::pair<double, double>(a.values[i], b.values[i]);
  });
}

std::vector<std::size_t> histogram(const Image8& img, std::size_t bins) {
  if (bins < 2) throw DomainError("histogram needs at least two bins");
  std::vector<std::size_t> counts(bins, 0);
  for (auto v : img.values) {
    const auto b = static_cast<std::size_t>(v / 255.0 * static_cast<double>(bins));
    ++counts[std::min(b, bins - 1)];
  }
  return counts;
}

ChiSquare chi_square_uniformity(const std::vector<std::size_t>& counts, double alpha) {
  if (counts.size() < 2) throw DomainError("chi-square needs at least two bins");
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expect = total / static_cast<double>(counts.size());
  ChiSquare out;
  for (auto c : counts) out.statistic += (c - expect) * (c - expect) / expect;
  const boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  out.critical = boost::math::quantile(boost::math::complement(dist, alpha));
  out.uniform = out.statistic < out.critical;
  return out;
}

double histogram_l1(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("histograms have different bin counts");
  double na = 0, nb = 0;
  for (auto v : a) na += static_cast<double>(v);
  for (auto v : b) nb += static_cast<double>(v);
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] / na - b[i] / nb);
  return s;
}

std::size_t SweepResult::argmin() const {
  std::size_t best = correct_index;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!points[i].skipped && points[i].mse < points[best].mse) best = i;
  return best;
}

double SweepResult::min_wrong_mse() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != correct_index && !points[i].skipped) m = std::min(m, points[i].mse);
  return m;
}

double SweepResult::max_wrong_mse() const {
  double m = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != correct_index && !points[i].skipped) m = std::max(m, points[i].mse);
  return m;
}

double SweepResult::plateau_variation() const {
  double s = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (i != correct_index && !points[i].skipped) {
      s += points[i].mse;
      ++n;
    }
  if (n == 0) return 0.0;
  return (max_wrong_mse() - min_wrong_mse()) / (s / static_cast<double>(n));
}

Matrix2 repair_unimodular(const Matrix2& m, double b) {
  if (b == 0.0) throw DomainError("b = 0 has no unimodular repair");
  return Matrix2{m.a, b, (m.a * m.d - 1.0) / b, m.d};
}

SweepResult key_sweep_matrix(const Ciphertext& c, const KeyBundle& k, const PlainSet& originals,
                             std::size_t stage, double delta, std::size_t half_steps, Exec exec) {
  if (stage >= k.m()) throw OutOfBounds("sweep stage index");
  const Matrix2 m0 = k.stages[stage].matrices.ax2;
  return sweep("matrix", c, k, originals, stage, m0.b, delta, half_steps, exec,
               [&](StageParams& s, double b) -> std::string {
                 if (b == 0.0) return "singular";
                 s.matrices.ax2 = repair_unimodular(m0, b);
                 return {};
               });
}

SweepResult key_sweep_beta(const Ciphertext& c, const KeyBundle& k, const PlainSet& originals,
                           std::size_t stage, double delta, std::size_t half_steps, Exec exec) {
  if (stage >= k.m()) throw OutOfBounds("sweep stage index");
  return sweep("beta", c, k, originals, stage, k.stages[stage].beta, delta, half_steps, exec,
               [](StageParams& s, double beta) -> std::string {
                 if (!(beta > 0.0 && beta < 2.0)) return "domain";
                 s.beta = beta;
                 return {};
               });
}

Ciphertext noise_attack(const Ciphertext& c, double lambda, std::uint64_t seed) {
  if (!(lambda >= 0.0)) throw DomainError("noise strength must be >= 0");
  Ciphertext out = c;
  if (lambda == 0.0) return out;
  const RealGrid g = normal_grid(c.amplitude.rows, c.amplitude.cols, seed, 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    out.amplitude.values[i] = std::max(0.0, out.amplitude.values[i] + lambda * g.values[i]);
  return out;
}

Ciphertext occlusion_attack(const Ciphertext& c, const Rect& region) {
  const RealGrid& a = c.amplitude;
  if (region.row0 + region.rows > a.rows || region.col0 + region.cols > a.cols)
    throw OutOfBounds("occlusion region outside the ciphertext");
  Ciphertext out = c;
  for (std::size_t r = region.row0; r < region.row0 + region.rows; ++r)
    for (std::size_t col = region.col0; col < region.col0 + region.cols; ++col)
      out.amplitude(r, col) = 0.0;
  return out;
}

std::vector<OcclusionPreset> occlusion_presets(std::size_t rows, std::size_t cols) {
  return {{"top_left_quarter", {0, 0, rows / 2, cols / 2}},
          {"bottom_left_quarter", {rows - rows / 2, 0, rows / 2, cols / 2}},
          {"left_half", {0, 0, rows, cols / 2}}};
}

std::vector<RobustnessRow> noise_table(const Ciphertext& c, const KeyBundle& k,
                                       const PlainSet& originals,
                                       const std::vector<double>& lambdas, std::uint64_t seed) {
  std::vector<RobustnessRow> rows;
  for (double lam : lambdas) {
    const PlainSet d = decrypt(noise_attack(c, lam, seed), k);
    RobustnessRow row{"noise", lam, {}};
    for (std::size_t i = 0; i < d.size(); ++i)
      row.correlations.push_back(recovered_correlation(originals, d, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RobustnessRow> occlusion_table(const Ciphertext& c, const KeyBundle& k,
                                           const PlainSet& originals) {
  std::vector<RobustnessRow> rows;
  const double area = static_cast<double>(c.amplitude.size());
  for (const auto& p : occlusion_presets(c.amplitude.rows, c.amplitude.cols)) {
    const PlainSet d = decrypt(occlusion_attack(c, p.region), k);
    RobustnessRow row{p.name, static_cast<double>(p.region.rows * p.region.cols) / area, {}};
    for (std::size_t i = 0; i < d.size(); ++i)
      row.correlations.push_back(recovered_correlation(originals, d, i));
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const SweepResult& s) {
  os.precision(12);
  os << "kind,stage,value,mse,correct,skipped\n";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    os << s.kind << ',' << s.stage + 1 << ',' << p.value << ',';
    if (p.skipped)
      os << "nan";
    else
      os << p.mse;
    os << ',' << (i == s.correct_index) << ',' << p.flag << '\n';
  }
}

void write_correlation_csv(std::ostream& os, const std::vector<CorrelationReport>& rows) {
  os.precision(12);
  os << "subject,direction,value,constant\n";
  for (const auto& r : rows) os << r.subject << ',' << r.direction << ',' << r.value << ',' << r.constant << '\n';
}

void write_histogram_csv(std::ostream& os, const std::vector<std::size_t>& counts) {
  os << "bin,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) os << i << ',' << counts[i] << '\n';
}

void write_robustness_csv(std::ostream& os, const std::vector<RobustnessRow>& rows) {
  os.precision(12);
  os << "attack,parameter,image,correlation\n";
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.correlations.size(); ++i)
      os << r.attack << ',' << r.parameter << ',' << i + 1 << ',' << r.correlations[i] << '\n';
}

}  // namespace lcrp
