#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sincnet {

bool is_power_of_two(int n);

// In-place iterative radix-2 FFT. data.size() must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& data);

// Magnitude of the DFT of the zero-padded input, bins 0..n_fft/2.
// n_fft must be a power of two and >= signal length.
std::vector<double> magnitude_spectrum(const std::vector<double>& signal, int n_fft);

}  // namespace sincnet
