#include "lcrp/rng.hpp"

#include <cmath>
#include <numbers>

namespace lcrp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(splitmix64(seed ^ (stream * 0x9E3779B97F4A7C15ULL)));
}

double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

double standard_normal(std::mt19937_64& engine) {
  const double u1 = 1.0 - uniform01(engine);  // (0, 1]
  const double u2 = uniform01(engine);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RealGrid uniform_phase_grid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            std::uint64_t stream) {
  auto eng = stream_engine(seed, stream);
  RealGrid g(rows, cols);
  for (double& v : g.values) v = 2.0 * std::numbers::pi * uniform01(eng);
  return g;
}

RealGrid normal_grid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                     std::uint64_t stream) {
  auto eng = stream_engine(seed, stream);
  RealGrid g(rows, cols);
  for (double& v : g.values) v = standard_normal(eng);
  return g;
}

std::uint64_t channel_seed(std::uint64_t seed, int channel) {
  return splitmix64(seed + 0x632BE59BD9B4E019ULL * static_cast<std::uint64_t>(channel + 1));
}

}  // namespace lcrp
