#pragma once

// Internal FFTW wrapper: cached c2c plans, deterministic (FFTW_ESTIMATE),
// thread-safe plan creation.  Not installed.

#include <complex>
#include <cstddef>
#include <vector>

namespace planch::detail {

using cplx = std::complex<double>;

/// Unnormalized DFT, sign = -1: sum_j x_j e^{-2 pi i jk / n} (FFTW_FORWARD).
void fft_forward(std::vector<cplx>& data);

/// Unnormalized inverse-sign DFT, sign = +1 (FFTW_BACKWARD, no 1/n factor).
void fft_backward(std::vector<cplx>& data);

/// Smallest power of two >= n.
std::size_t next_pow2(std::size_t n);

}  // namespace planch::detail
