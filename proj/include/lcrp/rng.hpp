#pragma once

#include <cstdint>
#include <random>

#include "lcrp/grid.hpp"

namespace lcrp {

// mt19937_64 for stream `stream` of `seed`; the engine seed is the first
// splitmix64 output of seed ^ (stream * golden ratio). Outputs are identical
// on every platform.
std::mt19937_64 stream_engine(std::uint64_t seed, std::uint64_t stream);

// Top 53 bits of one draw, in [0, 1).
double uniform01(std::mt19937_64& engine);

// Box-Muller on uniform01 draws (the standard-library distributions are not
// portable across implementations).
double standard_normal(std::mt19937_64& engine);

// Row-major grids of i.i.d. draws from one stream.
RealGrid uniform_phase_grid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            std::uint64_t stream);  // [0, 2 pi)
RealGrid normal_grid(std::size_t rows, std::size_t cols, std::uint64_t seed,
                     std::uint64_t stream);

// Sub-seed for colour channel c (0, 1, 2).
std::uint64_t channel_seed(std::uint64_t seed, int channel);

}  // namespace lcrp
