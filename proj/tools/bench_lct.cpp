// Serial reference vs OpenMP kernels.
#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "lcrp/crypto.hpp"
#include "lcrp/potential.hpp"

using namespace lcrp;

namespace {

ComplexGrid random_field(std::size_t n) {
  const Grid1D g = Grid1D::make(n, 1.0);
  ComplexGrid f(g, g);
  std::mt19937_64 eng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (auto& v : f.values) v = {u(eng), u(eng)};
  return f;
}

const LCTParams kParams{make_matrix(6, 7, 5, 6), make_matrix(1, 20, 0, 1)};

Exec mode(const benchmark::State& s) { return s.range(1) ? Exec::parallel : Exec::serial; }

void BM_Lct2d(benchmark::State& state) {
  const ComplexGrid f = random_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(lct_2d(f, kParams, mode(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_ApplyLcrp(benchmark::State& state) {
  const ComplexGrid f = random_field(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(apply_lcrp(f, kParams, 1.1, mode(state)));
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

void BM_EncryptDecrypt(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<RealGrid> imgs;
  for (int k = 0; k < 3; ++k) {
    RealGrid g(n, n);
    for (std::size_t i = 0; i < g.size(); ++i) g.values[i] = 0.5 + 0.5 * std::sin(0.01 * i * (k + 1));
    imgs.push_back(std::move(g));
  }
  const PlainSet p = PlainSet::make(std::move(imgs));
  for (auto _ : state) {
    const Encrypted e = encrypt(p, reference_stages(), 1, mode(state));
    benchmark::DoNotOptimize(decrypt(e.cipher, e.keys, mode(state)));
  }
  state.SetLabel(state.range(1) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_Lct2d)->ArgsProduct({{256, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyLcrp)->ArgsProduct({{256, 512, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EncryptDecrypt)->ArgsProduct({{256, 512}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
