#include "sincnet/dsp.h"

#include <cmath>
#include <stdexcept>

namespace sincnet {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void fft_radix2(std::vector<std::complex<double>>& data) {
  const std::size_t n = data.size();
  if (!is_power_of_two(static_cast<int>(n))) {
    throw std::invalid_argument("fft_radix2: size must be a power of two");
  }
  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = -2.0 * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = data[i + k];
        std::complex<double> v = data[i + k + len / 2] * w;
        data[i + k] = u + v;
        data[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

std::vector<double> magnitude_spectrum(const std::vector<double>& signal, int n_fft) {
  if (!is_power_of_two(n_fft)) {
    throw std::invalid_argument("magnitude_spectrum: n_fft must be a power of two");
  }
  if (static_cast<std::size_t>(n_fft) < signal.size()) {
    throw std::invalid_argument("magnitude_spectrum: n_fft smaller than signal");
  }
  std::vector<std::complex<double>> buf(static_cast<std::size_t>(n_fft));
  for (std::size_t i = 0; i < signal.size(); ++i) buf[i] = signal[i];
  fft_radix2(buf);
  std::vector<double> mag(static_cast<std::size_t>(n_fft) / 2 + 1);
  for (std::size_t k = 0; k < mag.size(); ++k) mag[k] = std::abs(buf[k]);
  return mag;
}

}  // namespace sincnet
