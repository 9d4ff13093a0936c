#pragma once

#include <random>
#include <string>

#include "lcrp/io.hpp"

namespace lcrp::testing {

// Grey 256x256 fixture from tests/data.
inline RealGrid fixture(const std::string& name) {
  return load_image(std::string(LCRP_TEST_DATA) + "/" + name + ".pgm").channels.at(0);
}

inline PlainSet fixture_set(std::initializer_list<const char*> names) {
  std::vector<RealGrid> v;
  for (const char* n : names) v.push_back(fixture(n));
  return PlainSet::make(std::move(v));
}

inline RealGrid random_image(std::size_t rows, std::size_t cols, unsigned seed) {
  std::mt19937 eng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealGrid g(rows, cols);
  for (double& v : g.values) v = u(eng);
  return g;
}

inline double mse01(const RealGrid& a, const RealGrid& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a.values[i] - b.values[i]) * (a.values[i] - b.values[i]);
  return s / static_cast<double>(a.size());
}

}  // namespace lcrp::testing
