#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sincnet {

// Hard constraints on the learnable cut-off frequencies. Applied at
// initialization and re-projected after every optimizer step.
constexpr double kFMinHz = 30.0;
constexpr double kMinBandwidthHz = 50.0;

// Highest admissible lower edge: sr/2 - (f_min + b).
double f_max_hz(double sample_rate);

double mel_from_hz(double f_hz);
double hz_from_mel(double mel);

// One band-pass filter, parameterized by its two cut-off frequencies.
struct SincFilter {
  double f_low_hz = 0.0;
  double f_high_hz = 0.0;

  double centre_hz() const { return 0.5 * (f_low_hz + f_high_hz); }
  double bandwidth_hz() const { return f_high_hz - f_low_hz; }
};

enum class InitScheme { kMel, kUniform, kFlat };

struct FilterbankInit {
  InitScheme scheme = InitScheme::kMel;
  std::uint64_t seed = 0;  // consumed by kUniform only
};

struct SincFilterbank {
  double sample_rate = 0.0;
  int filter_length = 0;  // L, odd
  std::vector<SincFilter> filters;
  std::vector<double> gains;  // one per filter; 1.0 and untrained unless adapted

  int size() const { return static_cast<int>(filters.size()); }
};

// sin(x)/x with the removable singularity filled in: sinc_eval(0) = 1.
double sinc_eval(double x);

// Time-domain band-pass kernel over the symmetric index n in
// [-(L-1)/2, (L-1)/2]: g[n] = 2*fh^*sinc(2*pi*fh^*n) - 2*fl^*sinc(2*pi*fl^*n)
// with fh^ = f_high/sr, fl^ = f_low/sr. Even-symmetric about the centre tap.
// Requires odd length, 0 <= f_low <= f_high <= sr/2.
std::vector<double> ideal_kernel(const SincFilter& f, int length, double sample_rate);

// w[n] = 0.54 - 0.46*cos(2*pi*n/L), n = 0..L-1 (periodic form, denominator L).
std::vector<double> hamming_window(int length);

// Windowed kernel: the periodic Hamming above, evaluated centred on the
// kernel so its maximum (exactly 1) lands on the centre tap:
// g_w[c+j] = (0.54 + 0.46*cos(2*pi*j/L)) * g[j]. Keeps the kernel exactly
// even-symmetric.
std::vector<double> windowed_kernel(const SincFilter& f, int length, double sample_rate);

// Analytic partials of the windowed kernel w.r.t. the cut-offs, in Hz:
// d g_w[j]/d f_high =  w(j) * (2/sr) * cos(2*pi*fh^*j)
// d g_w[j]/d f_low  = -w(j) * (2/sr) * cos(2*pi*fl^*j)
struct KernelPartials {
  std::vector<double> d_f_low;
  std::vector<double> d_f_high;
};
KernelPartials kernel_partials(const SincFilter& f, int length, double sample_rate);

// Project a filter onto the constraint set:
// f_low in [f_min, sr/2 - b], f_high in [f_low + b, sr/2]. Idempotent.
SincFilter constrain_filter(SincFilter f, double sample_rate);
SincFilterbank constrain_filterbank(SincFilterbank fb);

// Build an N-filter bank per the chosen scheme:
//   kMel     — N+1 band edges linearly interpolated in mel space over
//              [f_min, f_max]; filter i spans (edge[i], edge[i+1]).
//   kUniform — N lower edges ~ U(f_min, f_max), sorted; upper edge of filter
//              i is the next lower edge; the last upper edge is f_max.
//   kFlat    — every filter starts at (f_min, f_min + b).
// Mel/Uniform banks are constraint-projected afterwards. Gains start at 1.
SincFilterbank init_filterbank(const FilterbankInit& init, int n_filters, int filter_length,
                               double sample_rate);

// |DFT| of the zero-padded kernel, bins 0..n_fft/2. n_fft must be a power of
// two and >= kernel length.
std::vector<double> frequency_response(const std::vector<double>& kernel, int n_fft);

nlohmann::json filterbank_to_json(const SincFilterbank& fb);
SincFilterbank filterbank_from_json(const nlohmann::json& j);

}  // namespace sincnet
