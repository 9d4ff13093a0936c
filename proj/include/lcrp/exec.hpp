#pragma once

#include <cstddef>
#include <cstdint>

namespace lcrp {

// Selects the OpenMP kernel or the serial reference path. Both produce
// bit-identical results; the serial path exists for testing and benchmarks.
enum class Exec { serial, parallel };

// Runs body(i) for i in [0, n). Iterations must be independent.
template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
  if (exec == Exec::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace lcrp
