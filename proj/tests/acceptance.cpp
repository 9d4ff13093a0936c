// Acceptance gate: one PASS/FAIL line per criterion. `--only N` runs one.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "lcrp/gamma_norm.hpp"
#include "lcrp/io.hpp"
#include "lcrp/limits.hpp"
#include "lcrp/potential.hpp"
#include "lcrp/security.hpp"

using namespace lcrp;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286061;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += (ok ? "" : "!") + what;
  }
};

std::string fmt(const char* f, auto... v) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, v...);
  return buf;
}

PlainSet load_set(std::initializer_list<const char*> names) {
  std::vector<RealGrid> v;
  for (const char* n : names)
    v.push_back(load_image(fs::path(LCRP_TEST_DATA) / (std::string(n) + ".pgm")).channels.at(0));
  return PlainSet::make(std::move(v));
}

constexpr std::uint64_t kSeed = 2024;

struct Run {
  PlainSet plain;
  Encrypted enc;
  double encrypt_seconds = 0.0;
};

const Run& reference_run() {
  static const Run run = [] {
    Run r{load_set({"camera", "astronaut", "coffee"}), {}, 0.0};
    const auto t0 = Clock::now();
    r.enc = encrypt(r.plain, reference_stages(), kSeed);
    r.encrypt_seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

// 1. Discrete LCT of exp(-pi x^2) against quadrature of the continuous kernel.
Verdict lct_correctness() {
  Verdict v;
  const std::size_t n = 256;
  const Grid1D g = Grid1D::make(n, 1.0 / 32);
  std::vector<cplx> f(n);
  for (std::size_t j = 0; j < n; ++j) f[j] = std::exp(-kPi * g.coord(j) * g.coord(j));
  QuadOptions opt;
  opt.abs_tol = 1e-10;  // peak |output| is O(1)
  opt.max_intervals = 1000000;
  for (const Matrix2& m : {make_matrix(0, 1, -1, 0), make_matrix(6, 7, 5, 6),
                           make_matrix(40, 15.99, 100, 40)}) {
    const auto t0 = Clock::now();
    const auto out = lct_1d(f, g, m);
    const double t = seconds_since(t0);
    const Grid1D og = lct_output_grid(g, m);
    const cplx ca = lct_constant(m);
    double err = 0.0, peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double u = og.coord(k);
      const cplx ref =
          ca * integrate(
                   [&](double x) {
                     return std::polar(std::exp(-kPi * x * x),
                                       kPi * (m.a * x * x - 2 * x * u + m.d * u * u) / m.b);
                   },
                   -7.0, 7.0, opt)
                   .value;
      err = std::max(err, std::abs(out[k] - ref));
      peak = std::max(peak, std::abs(ref));
    }
    v.check(err / peak <= 1e-6 && t < 1.0,
            fmt("[%g %g %g %g] rel %.2e in %.3f s", m.a, m.b, m.c, m.d, err / peak, t));
  }
  return v;
}

// 2. LCLO after LCRP with the same matrices and order.
Verdict inverse_pairing() {
  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto random_matrix = [&] {
    const double a = -3 + 6 * u(eng), d = -3 + 6 * u(eng);
    const double b = (0.5 + 4.5 * u(eng)) * (u(eng) < 0.5 ? -1 : 1);
    return make_matrix(a, b, (a * d - 1) / b, d);
  };
  const Grid1D g = Grid1D::make(128, 1.0);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    ComplexGrid f(g, g);
    for (auto& x : f.values) x = {u(eng), u(eng)};
    const LCTParams p{random_matrix(), random_matrix()};
    const double beta = 0.05 + 1.9 * u(eng);
    const ComplexGrid back = apply_lclo(apply_lcrp(f, p, beta), p, beta);
    for (std::size_t i = 0; i < f.size(); ++i) worst = std::max(worst, std::abs(back.values[i] - f.values[i]));
  }
  Verdict v;
  v.check(worst <= 1e-6, fmt("100 trials, max abs error %.2e", worst));
  return v;
}

// 3. O(beta^3) remainder of 1/gamma(beta) for n = 2.
Verdict gamma_expansion() {
  std::vector<double> ratio;
  std::string d;
  for (double b : {0.08, 0.04, 0.02, 0.01}) {
    const double series = (b / 2 + kEulerGamma * b * b / 2) / (kPi * std::exp2(b));
    ratio.push_back(std::abs(gamma_norm(b, 2) - series) / (b * b * b));
    d += fmt("%.4f ", ratio.back());
  }
  const auto [lo, hi] = std::minmax_element(ratio.begin(), ratio.end());
  Verdict v;
  v.check(*hi / *lo < 2.0, "remainder/beta^3 = " + d + fmt("(spread %.3f)", *hi / *lo));
  return v;
}

// 4. Polygon indicator limits as beta -> 0.
Verdict polygon_limits() {
  Verdict v;
  const auto t0 = Clock::now();
  const auto reports = polygon_limit_suite();
  const double t = seconds_since(t0);
  for (const auto& r : reports)
    v.check(r.passed && std::abs(r.limit - r.target) <= 5e-3,
            fmt("%s %.6f (target %.6f)", r.name.c_str(), r.limit, r.target));
  v.check(t < 30.0, fmt("%.2f s total", t));
  return v;
}

// 5. Classical divergence vs chirped stabilization on a two-stripe grating.
Verdict grating_dichotomy() {
  Verdict v;
  const GratingSpec g{{1.0, 1.0}};
  const GrowthTable t = grating_divergence_probe(g, {0, 0}, {1e2, 1e3, 1e4});
  v.check(t.strictly_increasing && t.slope > 0 && t.r_squared >= 0.99,
          fmt("I_1 growth slope %.4f R^2 %.6f", t.slope, t.r_squared));
  std::vector<double> c_obs;
  std::string cs;
  for (double k : {0.5, 1.0, 2.0, 4.0}) {
    const GratingBound b = grating_lcrp_bound(g, k, k, {0, 0});
    v.check(b.cauchy < 1e-3, fmt("k=%g |V|=%.5f cauchy %.1e tail<=%.1e", k, b.value, b.cauchy, b.tail_bound));
    c_obs.push_back(b.value * std::sqrt(k) / g.sup_norm());
    cs += fmt("%.4f ", c_obs.back());
  }
  double mean = 0.0;
  for (double c : c_obs) mean += c / static_cast<double>(c_obs.size());
  bool flat = true;
  for (double c : c_obs) flat = flat && std::abs(c - mean) <= 0.2 * mean;
  v.check(flat, "C_obs = " + cs + fmt("within 20%% of mean %.4f", mean));
  return v;
}

// 6. Uniform Fresnel bound and the complete integral.
Verdict fresnel_bound() {
  Verdict v;
  double sup = 0.0;
  for (double k : {0.25, 1.0, 4.0, -1.0})
    for (int i = 0; i <= 100000; ++i)
      sup = std::max(sup, std::abs(fresnel_incomplete(k, 100.0 * i / 100000)) * std::sqrt(std::abs(k)));
  v.check(sup <= 1.0, fmt("sup sqrt|k||F| = %.6f", sup));
  const double e = std::abs(fresnel_incomplete(1.0, kFresnelInfinity) - std::polar(0.5, kPi / 4));
  v.check(e <= 1e-5, fmt("|F_1(inf) - e^{i pi/4}/2| = %.1e", e));
  return v;
}

// 7. Round trip of the reference run.
Verdict round_trip() {
  Verdict v;
  const Run& r = reference_run();
  const auto t0 = Clock::now();
  const PlainSet d = decrypt(r.enc.cipher, r.enc.keys);
  const double total = r.encrypt_seconds + seconds_since(t0);
  for (std::size_t k = 0; k < 3; ++k) {
    const double e = mse(to_image8(r.plain.images[k]), to_image8(d.images[k]));
    v.check(e < 1.0, fmt("image %zu MSE %.3g", k + 1, e));
  }
  v.check(total < 10.0, fmt("%.2f s", total));
  return v;
}

// 8. Key sweeps over the matrix entry and the order of every stage.
Verdict key_sensitivity() {
  Verdict v;
  const Run& r = reference_run();
  for (std::size_t s = 0; s < 3; ++s)
    for (const bool beta : {false, true}) {
      const SweepResult sw = beta ? key_sweep_beta(r.enc.cipher, r.enc.keys, r.plain, s)
                                  : key_sweep_matrix(r.enc.cipher, r.enc.keys, r.plain, s);
      double mean = 0.0;
      std::size_t n = 0;
      for (std::size_t i = 0; i < sw.points.size(); ++i)
        if (i != sw.correct_index && !sw.points[i].skipped) {
          mean += sw.points[i].mse;
          ++n;
        }
      mean /= static_cast<double>(n);
      const bool ok = sw.argmin() == sw.correct_index &&
                      sw.min_wrong_mse() >= 100.0 * sw.correct_mse() &&
                      sw.plateau_variation() < 0.25 && mean >= 1e3 && mean <= 1e5;
      v.check(ok, fmt("stage %zu %s: argmin@correct %d, correct %.3g, min wrong %.4g, "
                      "variation %.3f, mean %.3g",
                      s + 1, sw.kind.c_str(), sw.argmin() == sw.correct_index, sw.correct_mse(),
                      sw.min_wrong_mse(), sw.plateau_variation(), mean));
    }
  return v;
}

// 9. Correlation, histogram uniformity and histogram similarity.
Verdict statistics() {
  Verdict v;
  const Run& r = reference_run();
  const Image8 c8 = cipher_image8(r.enc.cipher);
  for (Direction d : {Direction::horizontal, Direction::vertical, Direction::diagonal}) {
    const double c = adjacent_correlation(c8, d).value;
    v.check(std::abs(c) < 0.05, fmt("cipher %s r %.4f", to_string(d), c));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const double g = global_correlation(to_image8(r.plain.images[k]), c8).value;
    v.check(std::abs(g) < 0.05, fmt("global rho%zu %.4f", k + 1, g));
    const double pv = adjacent_correlation(to_image8(r.plain.images[k]), Direction::vertical).value;
    v.check(pv > 0.9, fmt("plain%zu vertical r %.4f", k + 1, pv));
  }
  const auto h = histogram(c8);
  const ChiSquare chi = chi_square_uniformity(h);
  v.check(chi.uniform, fmt("chi2 %.1f vs %.1f", chi.statistic, chi.critical));
  const PlainSet other = load_set({"chelsea", "rocket", "coins"});
  const Encrypted e2 = encrypt(other, reference_stages(), kSeed);
  const double l1 = histogram_l1(h, histogram(cipher_image8(e2.cipher)));
  v.check(l1 < 0.1, fmt("histogram L1 %.4f", l1));
  return v;
}

// 10. Noise and occlusion robustness.
Verdict robustness() {
  Verdict v;
  const Run& r = reference_run();
  const auto noise = noise_table(r.enc.cipher, r.enc.keys, r.plain, {0.2, 0.4, 0.6, 0.8, 1.0}, 99);
  for (std::size_t k = 0; k < 3; ++k) {
    double worst = 1.0;
    bool monotone = true;
    for (std::size_t i = 0; i < noise.size(); ++i) {
      worst = std::min(worst, noise[i].correlations[k]);
      if (i > 0) monotone = monotone && noise[i].correlations[k] <= noise[i - 1].correlations[k] * 1.05;
    }
    v.check(worst >= 0.3 && monotone, fmt("noise image %zu min rho %.5f", k + 1, worst));
  }
  for (const auto& row : occlusion_table(r.enc.cipher, r.enc.keys, r.plain)) {
    if (row.parameter > 0.25) continue;
    for (std::size_t k = 0; k < 3; ++k)
      v.check(row.correlations[k] >= 0.3,
              fmt("%s image %zu rho %.4f", row.attack.c_str(), k + 1, row.correlations[k]));
  }
  return v;
}

// 11. Byte-identical outputs, exact key round trip, CRC detection.
Verdict determinism() {
  Verdict v;
  const Run& r = reference_run();
  const fs::path dir = fs::temp_directory_path() / "lcrp_acceptance";
  fs::create_directories(dir);
  const Encrypted again = encrypt(r.plain, reference_stages(), kSeed);
  save_cipher({r.enc.cipher, 256, 256}, dir / "c1.pgm");
  save_cipher({again.cipher, 256, 256}, dir / "c2.pgm");
  save_keys(r.enc.keys, dir / "k1.lcrk");
  save_keys(again.keys, dir / "k2.lcrk");
  v.check(read_bytes(dir / "c1.pgm") == read_bytes(dir / "c2.pgm"), "ciphertext files identical");
  v.check(read_bytes(dir / "k1.lcrk") == read_bytes(dir / "k2.lcrk"), "key files identical");
  const KeyBundle back = load_keys(dir / "k1.lcrk");
  v.check(back == r.enc.keys && serialize_keys(back) == read_bytes(dir / "k1.lcrk"),
          "key round trip bit-exact");
  const auto good = read_bytes(dir / "k1.lcrk");
  std::mt19937_64 eng(3);
  std::size_t detected = 0, tried = 0;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t pos = t < 28 ? static_cast<std::size_t>(t) : 28 + eng() % (good.size() - 28);
    auto bad = good;
    bad[pos] ^= static_cast<std::uint8_t>(1u << (eng() % 8));
    ++tried;
    try {
      deserialize_keys(bad);
    } catch (const CrcError&) {
      ++detected;
    } catch (const FormatError&) {
      detected += pos < 28;  // header fields are checked before the CRC
    }
  }
  v.check(detected == tried, fmt("%zu/%zu single-byte corruptions detected", detected, tried));
  return v;
}

struct Criterion {
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const Criterion all[] = {
      {"LCT correctness", lct_correctness},   {"inverse pairing", inverse_pairing},
      {"gamma expansion", gamma_expansion},   {"polygon limits", polygon_limits},
      {"grating dichotomy", grating_dichotomy}, {"Fresnel bound", fresnel_bound},
      {"encryption round trip", round_trip},  {"key sensitivity", key_sensitivity},
      {"statistical security", statistics},   {"robustness", robustness},
      {"determinism and persistence", determinism},
  };
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  if (only < 0 || only > 11) {
    std::fprintf(stderr, "--only takes 1..11\n");
    return 2;
  }
  bool ok = true;
  for (int i = 1; i <= 11; ++i) {
    if (only && only != i) continue;
    Verdict v;
    try {
      v = all[i - 1].run();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    std::printf("%s criterion %d (%s): %s\n", v.pass ? "PASS" : "FAIL", i, all[i - 1].name,
                v.detail.c_str());
    ok = ok && v.pass;
  }
  return ok ? 0 : 1;
}
