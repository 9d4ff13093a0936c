// Command-line front end: encrypt, decrypt, analyze, verify-limits, simulate.
#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "lcrp/io.hpp"
#include "lcrp/limits.hpp"
#include "lcrp/potential.hpp"
#include "lcrp/security.hpp"

namespace fs = std::filesystem;
using namespace lcrp;

namespace {

constexpr int kUsage = 2;
constexpr int kModule = 1;
constexpr int kVerify = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* const kTags[3] = {"r", "g", "b"};

std::vector<StageParams> stages_for(const std::vector<std::string>& texts, std::size_t m) {
  if (texts.empty()) {
    if (m > 3) throw UsageError("more than 3 images need explicit --stage values");
    auto s = reference_stages();
    s.resize(m);
    return s;
  }
  if (texts.size() != m) throw UsageError("give one --stage per image");
  std::vector<StageParams> out;
  for (const auto& t : texts) out.push_back(parse_stage(t));
  return out;
}

struct Inputs {
  std::vector<LoadedImage> images;
  std::size_t channels = 1;
};

Inputs load_inputs(const std::vector<std::string>& paths) {
  Inputs in;
  for (const auto& p : paths) in.images.push_back(load_image(p));
  const LoadedImage& f = in.images.front();
  in.channels = f.channels.size();
  for (const auto& im : in.images)
    if (im.channels.size() != in.channels || im.orig_rows != f.orig_rows || im.orig_cols != f.orig_cols)
      throw UsageError("all images need the same size and channel count");
  return in;
}

PlainSet channel_set(const Inputs& in, std::size_t c) {
  std::vector<RealGrid> v;
  for (const auto& im : in.images) v.push_back(im.channels[c]);
  return PlainSet::make(std::move(v));
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream os(p);
  if (!os) throw IoError("cannot write " + p.string());
  return os;
}

int cmd_encrypt(const std::vector<std::string>& images, const std::vector<std::string>& stage_texts,
                std::uint64_t seed, const fs::path& keys, const fs::path& cipher) {
  const Inputs in = load_inputs(images);
  const auto stages = stages_for(stage_texts, images.size());
  const std::size_t r = in.images[0].orig_rows, c = in.images[0].orig_cols;
  if (in.channels == 1) {
    const Encrypted e = encrypt(channel_set(in, 0), stages, seed);
    save_cipher({e.cipher, r, c}, cipher);
    save_keys(e.keys, keys);
  } else {
    const auto e = encrypt_rgb({channel_set(in, 0), channel_set(in, 1), channel_set(in, 2)}, stages, seed);
    for (int ch = 0; ch < 3; ++ch) {
      save_cipher({e[ch].cipher, r, c}, with_tag(cipher, kTags[ch]));
      save_keys(e[ch].keys, with_tag(keys, kTags[ch]));
    }
  }
  return 0;
}

int cmd_decrypt(const fs::path& cipher, const fs::path& keys, const std::vector<std::string>& outs) {
  const bool colour = !fs::exists(cipher) && fs::exists(with_tag(cipher, "r"));
  std::vector<PlainSet> planes;
  std::size_t rows = 0, cols = 0;
  for (int ch = 0; ch < (colour ? 3 : 1); ++ch) {
    const CipherFile cf = load_cipher(colour ? with_tag(cipher, kTags[ch]) : cipher);
    const KeyBundle k = load_keys(colour ? with_tag(keys, kTags[ch]) : keys);
    planes.push_back(decrypt(cf.cipher, k));
    rows = cf.orig_rows;
    cols = cf.orig_cols;
  }
  if (outs.size() != planes[0].size())
    throw UsageError("key holds " + std::to_string(planes[0].size()) + " images; give that many --out paths");
  for (std::size_t i = 0; i < outs.size(); ++i) {
    std::vector<RealGrid> ch;
    for (const auto& p : planes) ch.push_back(p.images[i]);
    save_image(ch, rows, cols, outs[i]);
  }
  return 0;
}

struct AnalyzeOptions {
  std::vector<std::string> images;
  std::vector<std::string> stage_texts;
  std::uint64_t seed = 1;
  std::string sweep = "all";
  std::size_t stage = 0;  // 1-based; 0 = every stage
  std::vector<double> lambdas{0.2, 0.4, 0.6, 0.8, 1.0};
  fs::path out_dir = ".";
};

int cmd_analyze(const AnalyzeOptions& o) {
  const Inputs in = load_inputs(o.images);
  if (in.channels != 1) throw UsageError("analyze works on grey images");
  const PlainSet plain = channel_set(in, 0);
  const Encrypted e = encrypt(plain, stages_for(o.stage_texts, plain.size()), o.seed);
  if (o.stage > plain.size()) throw UsageError("--stage exceeds the image count");
  fs::create_directories(o.out_dir);

  std::vector<std::size_t> stages;
  for (std::size_t s = 0; s < plain.size(); ++s)
    if (o.stage == 0 || o.stage == s + 1) stages.push_back(s);
  for (const char* kind : {"matrix", "beta"}) {
    if (o.sweep != "all" && o.sweep != kind) continue;
    for (std::size_t s : stages) {
      const SweepResult r = std::string(kind) == "matrix"
                                ? key_sweep_matrix(e.cipher, e.keys, plain, s)
                                : key_sweep_beta(e.cipher, e.keys, plain, s);
      auto os = open_out(o.out_dir / ("sweep_" + std::string(kind) + "_stage" + std::to_string(s + 1) + ".csv"));
      write_sweep_csv(os, r);
    }
  }

  const Image8 c8 = cipher_image8(e.cipher);
  std::vector<CorrelationReport> corr;
  auto add = [&](std::string subject, CorrelationReport r) {
    r.subject = std::move(subject);
    corr.push_back(std::move(r));
  };
  for (Direction d : {Direction::horizontal, Direction::vertical, Direction::diagonal}) {
    add("cipher", adjacent_correlation(c8, d));
    for (std::size_t k = 0; k < plain.size(); ++k)
      add("plain" + std::to_string(k + 1), adjacent_correlation(to_image8(plain.images[k]), d));
  }
  for (std::size_t k = 0; k < plain.size(); ++k)
    add("plain" + std::to_string(k + 1) + "_vs_cipher", global_correlation(to_image8(plain.images[k]), c8));
  {
    auto os = open_out(o.out_dir / "correlations.csv");
    write_correlation_csv(os, corr);
  }
  const auto hist = histogram(c8);
  {
    auto os = open_out(o.out_dir / "histogram.csv");
    write_histogram_csv(os, hist);
  }
  {
    const ChiSquare chi = chi_square_uniformity(hist);
    auto os = open_out(o.out_dir / "chi_square.csv");
    os.precision(12);
    os << "statistic,critical,uniform\n" << chi.statistic << ',' << chi.critical << ',' << chi.uniform << '\n';
  }
  {
    auto rows = noise_table(e.cipher, e.keys, plain, o.lambdas, o.seed);
    const auto occ = occlusion_table(e.cipher, e.keys, plain);
    rows.insert(rows.end(), occ.begin(), occ.end());
    auto os = open_out(o.out_dir / "robustness.csv");
    write_robustness_csv(os, rows);
  }
  return 0;
}

int cmd_verify_limits(const std::string& out) {
  auto reports = polygon_limit_suite();
  const auto crit = critical_limit_suite();
  reports.insert(reports.end(), crit.begin(), crit.end());
  if (out.empty()) {
    write_limit_csv(std::cout, reports);
  } else {
    auto os = open_out(out);
    write_limit_csv(os, reports);
  }
  bool ok = true;
  for (const auto& r : reports) {
    if (!r.passed) std::cerr << "limit failed: " << r.name << " (" << r.limit << " vs " << r.target << ")\n";
    ok = ok && r.passed;
  }
  return ok ? 0 : kVerify;
}

LCTParams figure_matrices(const std::string& set) {
  if (set == "A") return {make_matrix(6, 50, 0.7, 6), make_matrix(3, 400, 0.02, 3)};
  if (set == "B") return {make_matrix(10, 495, 0.2, 10), make_matrix(1, 20, 0, 1)};
  if (set == "C") return {make_matrix(20, 399, 1, 20), make_matrix(40, 15.99, 100, 40)};
  if (set == "D") return {make_matrix(20, 39.9, 10, 20), make_matrix(3, 400, 0.02, 3)};
  throw UsageError("--set must be A, B, C or D");
}

void save_amplitude(const ComplexGrid& f, const fs::path& p) {
  RealGrid a = abs(f);
  double top = 0.0;
  for (double v : a.values) top = std::max(top, v);
  for (double& v : a.values) v = top > 0 ? v / top : 0.0;
  save_image({a}, a.rows, a.cols, p);
}

int cmd_simulate(const std::string& set, double beta, std::size_t size, double sigma,
                 const fs::path& out_dir) {
  const LCTParams p = figure_matrices(set);
  const Grid1D g = Grid1D::make(size, 1.0);
  ComplexGrid f(g, g);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      const double x = g.coord(c), y = g.coord(r);
      f(r, c) = std::exp(-(x * x + y * y) / (2 * sigma * sigma));
    }
  fs::create_directories(out_dir);
  const ComplexGrid spec = lct_2d(f, p);
  const ComplexGrid riesz = apply_lcrp(f, p, beta);
  const ComplexGrid lap = apply_lclo(f, p, beta);
  const ComplexGrid riesz_spec = lct_2d(riesz, p);
  const ComplexGrid lap_spec = lct_2d(lap, p);
  save_amplitude(f, out_dir / "gaussian.pgm");
  save_amplitude(spec, out_dir / "gaussian_lct.pgm");
  save_amplitude(riesz, out_dir / "lcrp.pgm");
  save_amplitude(riesz_spec, out_dir / "lcrp_lct.pgm");
  save_amplitude(lap, out_dir / "lclo.pgm");
  save_amplitude(lap_spec, out_dir / "lclo_lct.pgm");
  auto os = open_out(out_dir / "amplitude.csv");
  os.precision(12);
  os << "field,row,col,amplitude\n";
  const std::pair<const char*, const ComplexGrid*> fields[] = {
      {"gaussian_lct", &spec}, {"lcrp", &riesz}, {"lcrp_lct", &riesz_spec},
      {"lclo", &lap},          {"lclo_lct", &lap_spec}};
  for (const auto& [name, fld] : fields)
    for (std::size_t r = 0; r < size; ++r)
      for (std::size_t c = 0; c < size; ++c)
        os << name << ',' << r << ',' << c << ',' << std::abs((*fld)(r, c)) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear canonical Riesz potential toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> images, stage_texts, outs;
  std::uint64_t seed = 1;
  std::string keys, cipher;
  auto* enc = app.add_subcommand("encrypt", "encrypt 1-3 images into one ciphertext");
  enc->add_option("--images", images, "plain images (PGM/PNG)")->required()->check(CLI::ExistingFile);
  enc->add_option("--stage", stage_texts, "per-stage 'a,b,c,d;a,b,c,d;beta=v'");
  enc->add_option("--seed", seed);
  enc->add_option("--keys", keys)->required();
  enc->add_option("--cipher", cipher)->required();

  auto* dec = app.add_subcommand("decrypt", "recover the images");
  dec->add_option("--cipher", cipher)->required();
  dec->add_option("--keys", keys)->required();
  dec->add_option("--out", outs, "one output path per image")->required();

  AnalyzeOptions ao;
  auto* ana = app.add_subcommand("analyze", "security tables as CSV");
  ana->add_option("--images", ao.images)->required()->check(CLI::ExistingFile);
  ana->add_option("--params", ao.stage_texts, "per-stage 'a,b,c,d;a,b,c,d;beta=v'");
  ana->add_option("--seed", ao.seed);
  ana->add_option("--sweep", ao.sweep)->check(CLI::IsMember({"all", "matrix", "beta", "none"}));
  ana->add_option("--stage", ao.stage, "1-based stage to sweep (default: all)");
  ana->add_option("--lambda", ao.lambdas, "noise strengths");
  ana->add_option("--out-dir", ao.out_dir);

  std::string limits_out;
  auto* ver = app.add_subcommand("verify-limits", "limit experiments; exit 3 on failure");
  ver->add_option("--out", limits_out, "CSV path (default stdout)");

  std::string set = "A";
  double beta = 1.1, sigma = 50.0;
  std::size_t size = 512;
  fs::path sim_dir = ".";
  auto* sim = app.add_subcommand("simulate", "Gaussian through LCT, LCRP and LCLO");
  sim->add_option("--set", set, "matrix set A, B, C or D");
  sim->add_option("--beta", beta);
  sim->add_option("--sigma", sigma);
  sim->add_option("--size", size);
  sim->add_option("--out-dir", sim_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*enc) return cmd_encrypt(images, stage_texts, seed, keys, cipher);
    if (*dec) return cmd_decrypt(cipher, keys, outs);
    if (*ana) return cmd_analyze(ao);
    if (*ver) return cmd_verify_limits(limits_out);
    if (*sim) return cmd_simulate(set, beta, size, sigma, sim_dir);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kModule;
  }
  return kUsage;
}
