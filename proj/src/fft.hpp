#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace lcrp::detail {

// In-place unnormalized DFT of length n (power of two) backed by FFTW.
// forward: X_k = sum_j x_j exp(-2 pi i jk/n); backward uses exp(+2 pi i jk/n).
// Safe to call concurrently; plans are created once per (n, direction).
void dft_inplace(std::span<std::complex<double>> data, bool forward);

}  // namespace lcrp::detail
