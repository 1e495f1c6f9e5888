#pragma once

#include "assr/types.hpp"

#include <vector>

namespace assr {

/// Parameters of one auditory steady-state stimulus.
///
/// `f_c` is the carrier for Sam/Fam; `f_c1`/`f_c2` are the alternating
/// carriers for AmFm; Clicks ignores all carriers. `f_m` is the envelope
/// modulation frequency (for Clicks, the click rate).
struct StimulusSpec {
  StimKind kind = StimKind::Sam;
  double f_c = 440.0;
  double f_c1 = 440.0;
  double f_c2 = 880.0;
  double f_m = 40.0;
  double duration = 3.0;        // seconds
  double audio_rate = 44100.0;  // samples/second
  double amplitude = 1.0;       // peak scale, in (0, 1]

  /// Throws ValidationError if any invariant for `kind` is violated.
  void validate() const;
};

struct MonoWaveform {
  std::vector<double> samples;
  double rate = 0.0;
};

struct StereoWaveform {
  MonoWaveform left;
  MonoWaveform right;
};

/// Carrier tone gated by a sinusoidal envelope: a * sin(2π f_c t) sin(π f_m t).
MonoWaveform synth_sam(const StimulusSpec& spec);

/// Half-wave gated tone: a * sin(2π f_c t) sin(2π f_m t) while the envelope
/// sine is strictly positive, exactly 0 otherwise (silent half-cycles).
MonoWaveform synth_fam(const StimulusSpec& spec);

/// f_m biphasic clicks per second: one sample at +a immediately followed by
/// one at -a, at onsets t = k/f_m (nearest sample), zero elsewhere.
/// Click count = round-half-up(f_m * duration).
MonoWaveform synth_clicks(const StimulusSpec& spec);

/// Alternating-carrier tone under the Sam-shaped envelope: carrier f_c1 while
/// sin(π f_m t) > 0, carrier f_c2 otherwise.
MonoWaveform synth_amfm(const StimulusSpec& spec);

/// Dispatch on spec.kind.
MonoWaveform synthesize(const StimulusSpec& spec);

/// Left -> (wave, silence); Right -> (silence, wave); Center -> (wave, wave).
StereoWaveform spatialize(const MonoWaveform& wave, Direction direction);

/// Number of samples for a duration at a rate: round(duration * rate).
int64_t sample_count(double duration, double rate);

}  // namespace assr
