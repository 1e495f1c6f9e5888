#include "assr/dsp.hpp"

#include "assr/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace assr {

namespace {

constexpr double kMagnitudeFloor = 1e-12;

// Hamming-windowed sinc lowpass prototype, odd length, cutoff in Hz.
std::vector<double> windowed_sinc_lowpass(double cutoff_hz, double rate,
                                          int n_taps) {
  std::vector<double> h(n_taps);
  const int mid = (n_taps - 1) / 2;
  const double fc = cutoff_hz / rate;  // normalized (cycles/sample)
  for (int i = 0; i < n_taps; ++i) {
    const int k = i - mid;
    const double sinc = k == 0 ? 2.0 * fc
                               : std::sin(2.0 * M_PI * fc * k) / (M_PI * k);
    const double w = 0.54 - 0.46 * std::cos(2.0 * M_PI * i / (n_taps - 1));
    h[i] = sinc * w;
  }
  return h;
}

int choose_taps(double rate, double transition_hz, int max_signal_len) {
  // Hamming main-lobe rule; shrink for short signals (wider transition).
  int taps = static_cast<int>(std::lround(3.3 * rate / transition_hz));
  const int cap = std::max(11, (max_signal_len - 1) / 3);
  taps = std::min(taps, cap);
  taps = std::max(taps, 11);
  if (taps % 2 == 0) ++taps;
  return taps;
}

// Response magnitude of taps at frequency f (single pass).
double tap_gain_at(const std::vector<double>& h, double f, double rate) {
  std::complex<double> acc = 0.0;
  for (size_t k = 0; k < h.size(); ++k) {
    const double w = 2.0 * M_PI * f / rate * static_cast<double>(k);
    acc += h[k] * std::complex<double>(std::cos(w), -std::sin(w));
  }
  return std::abs(acc);
}

// Linear convolution via FFT, returning the "same"-aligned segment so a
// symmetric kernel introduces no delay.
std::vector<double> conv_same(std::span<const double> x,
                              const std::vector<double>& h,
                              std::vector<std::pair<size_t, std::vector<std::complex<double>>>>& h_cache) {
  const size_t nx = x.size(), nh = h.size();
  const size_t full = nx + nh - 1;
  const size_t nfft = fft::next_pow2(full);

  const std::vector<std::complex<double>>* hf = nullptr;
  for (const auto& entry : h_cache)
    if (entry.first == nfft) hf = &entry.second;
  if (hf == nullptr) {
    std::vector<std::complex<double>> spec(nfft, 0.0);
    for (size_t i = 0; i < nh; ++i) spec[i] = h[i];
    fft::forward(spec);
    h_cache.emplace_back(nfft, std::move(spec));
    hf = &h_cache.back().second;
  }

  std::vector<std::complex<double>> xf(nfft, 0.0);
  for (size_t i = 0; i < nx; ++i) xf[i] = x[i];
  fft::forward(xf);
  for (size_t i = 0; i < nfft; ++i) xf[i] *= (*hf)[i];
  fft::inverse(xf);

  const size_t delay = (nh - 1) / 2;
  std::vector<double> y(nx);
  for (size_t i = 0; i < nx; ++i) y[i] = xf[i + delay].real();
  return y;
}

std::vector<double> filter_channel(const FirFilter& filt,
                                   std::span<const double> x) {
  return filt.filtfilt(x);
}

Epoch apply_filters(const Epoch& epoch, const std::vector<FirFilter>& filters) {
  Epoch out = epoch;
  for (int c = 0; c < epoch.n_channels; ++c) {
    std::vector<double> y(epoch.channel(c).begin(), epoch.channel(c).end());
    for (const auto& f : filters) y = filter_channel(f, y);
    std::copy(y.begin(), y.end(), out.channel(c).begin());
  }
  return out;
}

void check_epoch_length(const Epoch& epoch, const std::vector<FirFilter>& filters) {
  int need = 0;
  for (const auto& f : filters) need = std::max(need, f.min_signal_len());
  if (epoch.n_samples < need)
    throw ValidationError("epoch too short for the designed filter: need at least " +
                          std::to_string(need) + " samples, got " +
                          std::to_string(epoch.n_samples));
}

}  // namespace

FirFilter FirFilter::band_pass(double f_lo, double f_hi, double rate,
                               double transition_hz, int max_signal_len) {
  if (!(0.0 < f_lo && f_lo < f_hi && f_hi < rate / 2.0))
    throw ValidationError("band-pass requires 0 < f_lo < f_hi < rate/2");
  const int n_taps = choose_taps(rate, transition_hz, max_signal_len);
  auto lo = windowed_sinc_lowpass(f_lo, rate, n_taps);
  auto hi = windowed_sinc_lowpass(f_hi, rate, n_taps);
  FirFilter f;
  f.taps_.resize(n_taps);
  for (int i = 0; i < n_taps; ++i) f.taps_[i] = hi[i] - lo[i];
  // Normalize to unit gain at the band center.
  const double g = tap_gain_at(f.taps_, 0.5 * (f_lo + f_hi), rate);
  if (g > 0.0)
    for (auto& t : f.taps_) t /= g;
  return f;
}

FirFilter FirFilter::band_stop(double f_lo, double f_hi, double rate,
                               double transition_hz, int max_signal_len) {
  FirFilter bp = band_pass(f_lo, f_hi, rate, transition_hz, max_signal_len);
  FirFilter f;
  f.taps_.assign(bp.taps_.size(), 0.0);
  const size_t mid = (bp.taps_.size() - 1) / 2;
  for (size_t i = 0; i < bp.taps_.size(); ++i) f.taps_[i] = -bp.taps_[i];
  f.taps_[mid] += 1.0;
  // Normalize to unit gain at DC.
  const double g = std::abs(std::accumulate(f.taps_.begin(), f.taps_.end(), 0.0));
  if (g > 0.0)
    for (auto& t : f.taps_) t /= g;
  return f;
}

std::vector<double> FirFilter::filtfilt(std::span<const double> x) const {
  const int pad = n_taps();
  if (static_cast<int>(x.size()) < min_signal_len())
    throw ValidationError("signal too short for filtfilt: need at least " +
                          std::to_string(min_signal_len()) + " samples, got " +
                          std::to_string(x.size()));
  const size_t n = x.size();

  // Odd-symmetric reflection padding keeps filter transients off the signal.
  std::vector<double> xp(n + 2 * pad);
  for (int i = 0; i < pad; ++i)
    xp[i] = 2.0 * x[0] - x[pad - i];
  for (size_t i = 0; i < n; ++i) xp[pad + i] = x[i];
  for (int i = 0; i < pad; ++i)
    xp[pad + n + i] = 2.0 * x[n - 1] - x[n - 2 - i];

  std::vector<double> y = conv_same(xp, taps_, h_cache_);
  std::reverse(y.begin(), y.end());
  y = conv_same(y, taps_, h_cache_);
  std::reverse(y.begin(), y.end());

  return std::vector<double>(y.begin() + pad, y.begin() + pad + n);
}

AnalyticSeries analytic(std::span<const double> signal) {
  const size_t n = signal.size();
  if (n < 8) throw ValidationError("analytic() requires at least 8 samples");
  for (double v : signal)
    if (!std::isfinite(v)) throw ValidationError("analytic() requires finite input");

  std::vector<std::complex<double>> spec(signal.begin(), signal.end());
  fft::forward(spec);
  // Single-sided spectrum: DC and Nyquist unchanged, positive bins doubled,
  // negative bins removed.
  const size_t half = n / 2;
  for (size_t k = 1; k < (n + 1) / 2; ++k) spec[k] *= 2.0;
  for (size_t k = half + 1; k < n; ++k) spec[k] = 0.0;
  fft::inverse(spec);

  AnalyticSeries out;
  out.real.assign(signal.begin(), signal.end());
  out.imag.resize(n);
  out.phase.resize(n);
  out.magnitude.resize(n);
  size_t n_low = 0;
  for (size_t i = 0; i < n; ++i) {
    out.imag[i] = spec[i].imag();
    const double mag = std::hypot(out.real[i], out.imag[i]);
    out.magnitude[i] = mag;
    if (mag < kMagnitudeFloor) {
      out.phase[i] = 0.0;  // convention for (near-)zero samples
      ++n_low;
    } else {
      out.phase[i] = std::atan2(out.imag[i], out.real[i]);
    }
  }
  out.low_magnitude_flagged = n_low * 100 > n;
  return out;
}

std::vector<double> phase_diff(std::span<const double> theta_a,
                               std::span<const double> theta_b, int n, int m) {
  if (theta_a.size() != theta_b.size())
    throw ValidationError("phase_diff requires equal-length series");
  if (n <= 0 || m <= 0)
    throw ValidationError("phase_diff ratios n, m must be positive");
  std::vector<double> d(theta_a.size());
  for (size_t i = 0; i < d.size(); ++i)
    d[i] = n * theta_a[i] - m * theta_b[i];
  return d;
}

double plv(std::span<const double> delta) {
  if (delta.empty()) throw ValidationError("plv of an empty series");
  double re = 0.0, im = 0.0;
  for (double d : delta) {
    re += std::cos(d);
    im += std::sin(d);
  }
  const double v = std::hypot(re, im) / static_cast<double>(delta.size());
  return std::clamp(v, 0.0, 1.0);
}

Epoch preprocess_raw(const Epoch& epoch) {
  for (double v : epoch.data)
    if (!std::isfinite(v)) throw ValidationError("epoch contains non-finite samples");
  std::vector<FirFilter> filters;
  filters.push_back(
      FirFilter::band_pass(5.0, 100.0, epoch.eeg_rate, 4.0, epoch.n_samples));
  filters.push_back(
      FirFilter::band_stop(48.0, 52.0, epoch.eeg_rate, 4.0, epoch.n_samples));
  check_epoch_length(epoch, filters);
  return apply_filters(epoch, filters);
}

Epoch narrowband(const Epoch& epoch, double f_m) {
  if (!(f_m - 2.0 > 0.0))
    throw ValidationError("narrowband requires f_m - 2 > 0");
  if (!(f_m + 2.0 < epoch.eeg_rate / 2.0))
    throw ValidationError("narrowband requires f_m + 2 < eeg_rate/2");
  // Cutoffs sit 1 Hz outside the passband edges; the stopband then begins
  // well before f_m +- 6 Hz for full-length filters.
  std::vector<FirFilter> filters;
  filters.push_back(FirFilter::band_pass(f_m - 3.0, f_m + 3.0, epoch.eeg_rate,
                                         4.0, epoch.n_samples));
  check_epoch_length(epoch, filters);
  return apply_filters(epoch, filters);
}

int FeatureVector::pair_index(int a, int b, int n_channels) {
  if (!(1 <= a && a < b && b <= n_channels))
    throw ValidationError("pair_index requires 1 <= a < b <= n_channels");
  // Pairs (1,2)...(1,N) come first, then (2,3)...(2,N), etc.
  const int before = (a - 1) * n_channels - (a - 1) * a / 2;
  return before + (b - a - 1);
}

PlvPipeline::PlvPipeline(double eeg_rate, int n_samples, double f_m,
                         PlvOptions options)
    : rate_(eeg_rate), n_samples_(n_samples), f_m_(f_m), options_(options) {
  if (options.trim_fraction < 0.0 || options.trim_fraction >= 0.5)
    throw ValidationError("trim_fraction must be in [0, 0.5)");
  if (!(f_m - 2.0 > 0.0) || !(f_m + 2.0 < eeg_rate / 2.0))
    throw ValidationError("f_m out of range for narrowband analysis");
  filters_.push_back(
      FirFilter::band_pass(f_m - 3.0, f_m + 3.0, eeg_rate, 4.0, n_samples));
  trim_ = static_cast<int>(std::ceil(options.trim_fraction * n_samples));
  if (n_samples < filters_[0].min_signal_len())
    throw ValidationError("epoch too short for the designed filter: need at least " +
                          std::to_string(filters_[0].min_signal_len()) +
                          " samples, got " + std::to_string(n_samples));
  if (n_samples - 2 * trim_ < 8)
    throw ValidationError("epoch too short after edge trimming");
}

FeatureVector PlvPipeline::features(const Epoch& epoch) const {
  if (epoch.n_samples != n_samples_ || epoch.eeg_rate != rate_)
    throw ValidationError("epoch shape does not match this pipeline");
  if (epoch.n_channels < 2)
    throw ValidationError("feature vector requires at least 2 channels");

  const int nc = epoch.n_channels;
  const int t0 = trim_, t1 = n_samples_ - trim_;
  const int nt = t1 - t0;

  // Unit phasors e^{i theta_c(t)} per channel over the trimmed window.
  // The per-pair PLV below is algebraically plv(phase_diff(theta_a, theta_b)).
  std::vector<std::vector<std::complex<double>>> unit(nc);
  for (int c = 0; c < nc; ++c) {
    std::vector<double> y(epoch.channel(c).begin(), epoch.channel(c).end());
    for (const auto& f : filters_) y = f.filtfilt(y);
    AnalyticSeries a = analytic(y);
    unit[c].resize(nt);
    for (int t = 0; t < nt; ++t) {
      const double mag = a.magnitude[t0 + t];
      if (mag < kMagnitudeFloor) {
        unit[c][t] = {1.0, 0.0};  // phase-0 convention
      } else {
        unit[c][t] = {a.real[t0 + t] / mag, a.imag[t0 + t] / mag};
      }
    }
  }

  FeatureVector fv;
  fv.values.reserve(static_cast<size_t>(nc) * (nc - 1) / 2);
  for (int a = 0; a < nc; ++a) {
    for (int b = a + 1; b < nc; ++b) {
      std::complex<double> acc = 0.0;
      for (int t = 0; t < nt; ++t) acc += unit[a][t] * std::conj(unit[b][t]);
      fv.values.push_back(std::clamp(std::abs(acc) / nt, 0.0, 1.0));
    }
  }
  fv.f_m = f_m_;
  fv.direction = epoch.direction;
  fv.attended = epoch.attended;
  fv.kind = epoch.kind;
  fv.length_s = epoch.length_s;
  fv.trial_index = epoch.trial_index;
  return fv;
}

FeatureVector feature_vector(const Epoch& epoch, double f_m, PlvOptions options) {
  PlvPipeline pipeline(epoch.eeg_rate, epoch.n_samples, f_m, options);
  return pipeline.features(epoch);
}

}  // namespace assr
