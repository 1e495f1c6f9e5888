#pragma once

#include "assr/types.hpp"

#include <complex>
#include <span>
#include <vector>

namespace assr {

/// Linear-phase FIR filter (windowed-sinc, Hamming window), applied
/// forward-backward so the net phase response is zero. Tap count is odd.
///
/// The order rule: taps = round(3.3 * rate / transition_hz), capped at the
/// largest odd value <= (L - 1) / 3 so short epochs stay filterable with a
/// wider transition band. Signals shorter than taps + 1 samples are rejected.
class FirFilter {
 public:
  static FirFilter band_pass(double f_lo, double f_hi, double rate,
                             double transition_hz, int max_signal_len);
  static FirFilter band_stop(double f_lo, double f_hi, double rate,
                             double transition_hz, int max_signal_len);

  /// Zero-phase application: odd-reflection pad by one tap length, filter
  /// forward, filter backward, unpad. Attenuation in dB doubles relative to
  /// a single pass.
  std::vector<double> filtfilt(std::span<const double> x) const;

  int n_taps() const { return static_cast<int>(taps_.size()); }
  const std::vector<double>& taps() const { return taps_; }
  int min_signal_len() const { return n_taps() + 1; }

 private:
  FirFilter() = default;
  std::vector<double> taps_;
  // cached spectra of the taps, keyed by FFT length, for fast convolution
  mutable std::vector<std::pair<size_t, std::vector<std::complex<double>>>> h_cache_;
};

/// Complex analytic series: real part is the input, imaginary part its
/// Hilbert transform; phase and magnitude are derived elementwise.
struct AnalyticSeries {
  std::vector<double> real;
  std::vector<double> imag;
  std::vector<double> phase;      // atan2(imag, real); 0 where magnitude < 1e-12
  std::vector<double> magnitude;
  bool low_magnitude_flagged = false;  // > 1% of samples below magnitude 1e-12
};

/// Frequency-domain analytic signal: zero the negative frequencies, double
/// the positive ones, inverse-transform. Input length must be >= 8.
AnalyticSeries analytic(std::span<const double> signal);

/// Generalized phase difference n*theta_a - m*theta_b (n = m = 1 by default).
std::vector<double> phase_diff(std::span<const double> theta_a,
                               std::span<const double> theta_b, int n = 1,
                               int m = 1);

/// Phase locking value |mean over l of exp(i * delta(l))|, clamped to [0, 1].
double plv(std::span<const double> delta);

/// 5-100 Hz band-pass followed by a 48-52 Hz band-stop, both zero-phase.
Epoch preprocess_raw(const Epoch& epoch);

/// Zero-phase band-pass with passband [f_m - 2, f_m + 2] Hz.
Epoch narrowband(const Epoch& epoch, double f_m);

struct PlvOptions {
  double trim_fraction = 0.1;  // fraction of samples dropped at each end
};

/// Pairwise PLVs in the fixed order (1,2), (1,3), ..., (1,N), (2,3), ...,
/// (N-1,N) together with the labels of the source epoch.
struct FeatureVector {
  std::vector<double> values;
  double f_m = 0.0;
  Direction direction = Direction::Left;
  bool attended = false;
  StimKind kind = StimKind::Sam;
  double length_s = 0.0;
  int trial_index = 0;

  /// Flat index of pair (a, b), 1-based channels, a < b <= n_channels.
  static int pair_index(int a, int b, int n_channels);
};

/// Reusable per-condition pipeline: narrowband -> analytic -> edge trim ->
/// pairwise PLV. Construct once per (rate, length, f_m) and feed epochs.
class PlvPipeline {
 public:
  PlvPipeline(double eeg_rate, int n_samples, double f_m,
              PlvOptions options = {});
  FeatureVector features(const Epoch& epoch) const;

  int trim_count() const { return trim_; }

 private:
  double rate_;
  int n_samples_;
  double f_m_;
  PlvOptions options_;
  int trim_;
  std::vector<FirFilter> filters_;  // single narrowband filter
};

/// One-shot convenience wrapper around PlvPipeline.
FeatureVector feature_vector(const Epoch& epoch, double f_m,
                             PlvOptions options = {});

}  // namespace assr
