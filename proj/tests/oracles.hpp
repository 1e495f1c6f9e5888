// Test-only reference implementations, kept deliberately naive and
// independent of the library's FFT-based code paths: direct-summation
// transforms, direct convolution, and direct probability formulas. Unit and
// acceptance tests compare the production pipeline against these.
#pragma once

#include "assr/classify.hpp"
#include "assr/types.hpp"

#include <complex>
#include <span>
#include <vector>

namespace oracles {

// O(N^2) discrete Fourier transform by direct summation (tabulated twiddles).
std::vector<std::complex<double>> naive_dft(
    const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> naive_idft(
    const std::vector<std::complex<double>>& x);

// Analytic signal via the frequency-domain construction, on naive transforms:
// zero the negative-frequency bins, double the positive ones, invert.
struct NaiveAnalytic {
  std::vector<double> real;
  std::vector<double> imag;
  std::vector<double> phase;  // atan2(imag, real)
};
NaiveAnalytic naive_analytic(std::span<const double> x);

// Zero-phase filtering by direct convolution: odd-reflection pad by one tap
// length, convolve, reverse, convolve, reverse, unpad.
std::vector<double> naive_filtfilt(std::span<const double> x,
                                   const std::vector<double>& taps);

// |1/L sum exp(i(theta_a - theta_b))| by direct summation.
double naive_plv(std::span<const double> theta_a,
                 std::span<const double> theta_b);

// Full naive feature chain for one epoch: filtfilt with the given taps,
// analytic transform, edge trim, pairwise PLVs in (1,2), (1,3), ... order.
std::vector<double> naive_feature_vector(const assr::Epoch& epoch,
                                         const std::vector<double>& narrowband_taps,
                                         int trim);

// Direct-formula Gaussian naive Bayes log-posteriors for one sample.
std::vector<double> naive_nbc_log_posteriors(const assr::Dataset& train,
                                             const std::vector<double>& x,
                                             double variance_floor,
                                             bool uniform_priors);

// Magnitude of the DFT of x evaluated at one frequency (Goertzel-style
// direct projection); independent single-bin check.
double projection_magnitude(std::span<const double> x, double freq, double rate);

double rms(std::span<const double> x);

}  // namespace oracles
