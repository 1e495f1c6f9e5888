#include "assr/eegsim.hpp"

#include "assr/fft.hpp"
#include "assr/rng.hpp"

#include <cmath>
#include <complex>

namespace assr {

namespace {

constexpr uint64_t kNoiseTag = 0x6e6f697365ULL;
constexpr uint64_t kJitterTag = 0x6a69747465ULL;

// Unit-RMS 1/f^alpha noise: spectrally shaped seeded white noise.
std::vector<double> shaped_noise(int n, double rate, double alpha, Rng& rng) {
  std::vector<std::complex<double>> spec(n);
  for (int i = 0; i < n; ++i) spec[i] = rng.normal();
  fft::forward(spec);
  spec[0] = 0.0;
  // Scale bin k and its mirror by the same real factor to keep the spectrum
  // Hermitian (input is real), so the inverse transform stays real.
  for (int k = 1; k <= n / 2; ++k) {
    const double f = static_cast<double>(k) * rate / n;
    const double g = std::pow(f, -alpha / 2.0);
    spec[k] *= g;
    if (n - k != k) spec[n - k] *= g;
  }
  fft::inverse(spec);
  std::vector<double> out(n);
  double power = 0.0;
  for (int i = 0; i < n; ++i) {
    out[i] = spec[i].real();
    power += out[i] * out[i];
  }
  const double rms = std::sqrt(power / n);
  if (rms > 0.0)
    for (auto& v : out) v /= rms;
  return out;
}

}  // namespace

void SimConfig::validate() const {
  if (n_channels < 2) throw ValidationError("n_channels must be >= 2");
  if (eeg_rate <= 0.0) throw ValidationError("eeg_rate must be positive");
  if (assr_amplitude < 0.0) throw ValidationError("assr_amplitude must be >= 0");
  if (attention_gain < 1.0) throw ValidationError("attention_gain must be >= 1");
  if (noise_level < 0.0) throw ValidationError("noise_level must be >= 0");
  if (noise_exponent < 0.0) throw ValidationError("noise_exponent must be >= 0");
  if (phase_jitter_ignored < 0.0 || phase_jitter_attended < 0.0)
    throw ValidationError("phase jitter must be >= 0");
  if (!channel_phase_lags.empty() &&
      static_cast<int>(channel_phase_lags.size()) != n_channels)
    throw ValidationError("channel_phase_lags must have n_channels entries");
}

double SimConfig::phase_lag(int channel) const {
  if (!channel_phase_lags.empty()) return channel_phase_lags[channel];
  // default: fixed spread over channels
  return std::fmod(0.37 * (channel + 1), 2.0 * M_PI);
}

Epoch simulate_epoch(const SimConfig& cfg, double f_m, double length_s,
                     bool attended, uint64_t seed) {
  cfg.validate();
  if (f_m <= 0.0) throw ValidationError("f_m must be positive");
  if (length_s <= 0.0) throw ValidationError("length_s must be positive");
  if (cfg.eeg_rate <= 2.0 * f_m)
    throw ValidationError("eeg_rate must exceed 2x the modulation frequency");

  const int n = static_cast<int>(std::llround(length_s * cfg.eeg_rate));
  Epoch epoch;
  epoch.n_channels = cfg.n_channels;
  epoch.n_samples = n;
  epoch.eeg_rate = cfg.eeg_rate;
  epoch.f_m = f_m;
  epoch.attended = attended;
  epoch.length_s = length_s;
  epoch.data.resize(static_cast<size_t>(cfg.n_channels) * n);

  const double amp = attended ? cfg.assr_amplitude * cfg.attention_gain
                              : cfg.assr_amplitude;
  const double jitter =
      attended ? cfg.phase_jitter_attended : cfg.phase_jitter_ignored;
  const double step_sd = jitter / std::sqrt(cfg.eeg_rate);

  for (int c = 0; c < cfg.n_channels; ++c) {
    auto ch = epoch.channel(c);
    if (cfg.noise_level > 0.0) {
      Rng noise_rng(mix64(seed, kNoiseTag, static_cast<uint64_t>(c)));
      auto noise = shaped_noise(n, cfg.eeg_rate, cfg.noise_exponent, noise_rng);
      for (int t = 0; t < n; ++t) ch[t] = cfg.noise_level * noise[t];
    } else {
      for (int t = 0; t < n; ++t) ch[t] = 0.0;
    }
    if (amp > 0.0) {
      const double phi = cfg.phase_lag(c);
      if (step_sd > 0.0) {
        Rng jitter_rng(mix64(seed, kJitterTag, static_cast<uint64_t>(c)));
        double walk = 0.0;
        for (int t = 0; t < n; ++t) {
          walk += step_sd * jitter_rng.normal();
          ch[t] += amp * std::sin(2.0 * M_PI * f_m * t / cfg.eeg_rate + phi + walk);
        }
      } else {
        for (int t = 0; t < n; ++t)
          ch[t] += amp * std::sin(2.0 * M_PI * f_m * t / cfg.eeg_rate + phi);
      }
    }
  }
  return epoch;
}

EpochSet simulate_condition(const ProtocolConfig& protocol, const SimConfig& cfg,
                            StimKind kind, double length_s, uint64_t seed) {
  protocol.validate();
  cfg.validate();

  const uint64_t condition_seed =
      mix64(seed, static_cast<uint64_t>(kind),
            static_cast<uint64_t>(std::llround(length_s * 1000.0)));

  EpochSet set;
  set.kind = kind;
  set.length_s = length_s;
  set.seed = seed;
  set.trials = schedule_trials(protocol, condition_seed);
  set.epochs.reserve(set.trials.size() * 3);
  set.onsets_s.reserve(set.trials.size() * 3);

  double clock_s = 0.0;
  for (const Trial& trial : set.trials) {
    if (trial.index > 0 && trial.index % protocol.trials_per_block == 0)
      clock_s += protocol.inter_block_break_s;
    for (Direction dir : trial.order) {
      const uint64_t epoch_seed =
          mix64(condition_seed, static_cast<uint64_t>(trial.index) * 4 +
                                    static_cast<uint64_t>(dir) + 1);
      Epoch e = simulate_epoch(cfg, protocol.frequency_of(dir), length_s,
                               dir == trial.target, epoch_seed);
      e.direction = dir;
      e.kind = kind;
      e.trial_index = trial.index;
      set.epochs.push_back(std::move(e));
      set.onsets_s.push_back(clock_s);
      clock_s += length_s + protocol.inter_stimulus_gap_s;
    }
  }
  return set;
}

std::vector<EpochSet> simulate_session(const ProtocolConfig& protocol,
                                       const SimConfig& cfg, uint64_t seed) {
  protocol.validate();
  std::vector<EpochSet> sets;
  sets.reserve(protocol.stimulus_kinds.size() * protocol.stimulus_lengths_s.size());
  for (StimKind kind : protocol.stimulus_kinds)
    for (double length : protocol.stimulus_lengths_s)
      sets.push_back(simulate_condition(protocol, cfg, kind, length, seed));
  return sets;
}

}  // namespace assr
