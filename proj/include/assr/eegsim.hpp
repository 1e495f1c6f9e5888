#pragma once

#include "assr/protocol.hpp"
#include "assr/types.hpp"

#include <cstdint>
#include <vector>

namespace assr {

/// Synthetic-EEG generator configuration.
///
/// Generative model per channel c:
///   x_c(t) = noise_level * n_c(t) + A * sin(2*pi*f_m*t + phi_c + w_c(t))
/// where A = assr_amplitude * attention_gain for attended epochs and
/// assr_amplitude otherwise, n_c is independent unit-RMS 1/f^alpha noise,
/// phi_c is a fixed per-channel lag, and w_c is a per-channel phase random
/// walk whose diffusion (rad/sqrt(s)) depends on the attended flag.
///
/// Ignored responses default to a non-zero phase jitter so that attended
/// responses are separable by phase locking even in noise-free runs;
/// set phase_jitter_ignored = 0 for a purely amplitude-modulated model.
///
/// Noise synthesis (documented for reproducibility): L i.i.d. standard
/// normals from a seeded stream are transformed to the frequency domain,
/// bin k is scaled by f_k^(-alpha/2) (DC removed), the series is
/// inverse-transformed and normalized to unit RMS. All draws come from
/// per-(seed, channel, purpose) substreams, so output is fully determined
/// by the epoch seed.
struct SimConfig {
  int n_channels = 16;
  double eeg_rate = 512.0;
  double assr_amplitude = 1.0;
  double attention_gain = 2.0;       // multiplier >= 1 for attended epochs
  double noise_level = 14.0;         // noise RMS per channel (calibrated default)
  double noise_exponent = 1.0;       // alpha in 1/f^alpha
  double phase_jitter_ignored = 0.35; // rad/sqrt(s) random-walk diffusion
  double phase_jitter_attended = 0.0;
  std::vector<double> channel_phase_lags;  // radians; empty -> default spread

  void validate() const;
  double phase_lag(int channel) const;
};

/// One labeled epoch, fully determined by (cfg, f_m, length, attended, seed).
Epoch simulate_epoch(const SimConfig& cfg, double f_m, double length_s,
                     bool attended, uint64_t seed);

/// All epochs of one (kind, length) condition plus its trial plan.
struct EpochSet {
  StimKind kind = StimKind::Sam;
  double length_s = 0.0;
  uint64_t seed = 0;
  std::vector<Trial> trials;
  std::vector<Epoch> epochs;      // 3 per trial, in presentation order
  std::vector<double> onsets_s;   // stimulus onset times within the session
};

/// Simulates one condition: n_trials x 3 epochs with attended flags set by
/// the block structure and per-trial seeded presentation order. Epoch seeds
/// are derived from (seed, kind, length, trial, direction).
EpochSet simulate_condition(const ProtocolConfig& protocol, const SimConfig& cfg,
                            StimKind kind, double length_s, uint64_t seed);

/// Full sweep over the protocol's kinds x lengths condition matrix.
std::vector<EpochSet> simulate_session(const ProtocolConfig& protocol,
                                       const SimConfig& cfg, uint64_t seed);

}  // namespace assr
