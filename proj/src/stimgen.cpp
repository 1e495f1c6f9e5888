#include "assr/stimgen.hpp"

#include <cmath>

namespace assr {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw ValidationError(msg);
}

}  // namespace

void StimulusSpec::validate() const {
  require(std::isfinite(f_m) && f_m > 0.0, "f_m must be positive");
  require(std::isfinite(duration) && duration > 0.0, "duration must be positive");
  require(std::isfinite(audio_rate) && audio_rate > 0.0,
          "audio_rate must be positive");
  require(amplitude > 0.0 && amplitude <= 1.0, "amplitude must be in (0, 1]");

  switch (kind) {
    case StimKind::Sam:
    case StimKind::Fam:
      require(f_c > 0.0, "f_c must be positive");
      require(audio_rate >= 4.0 * f_c,
              "audio_rate must be at least 4x the carrier frequency");
      break;
    case StimKind::AmFm:
      require(f_c1 > 0.0 && f_c2 > 0.0, "f_c1 and f_c2 must be positive");
      require(f_c1 != f_c2, "AM/FM requires two distinct carriers");
      require(audio_rate >= 4.0 * std::max(f_c1, f_c2),
              "audio_rate must be at least 4x the higher carrier frequency");
      break;
    case StimKind::Clicks:
      // A click occupies two samples, so rates below 2*f_m would overlap.
      require(f_m < audio_rate / 2.0,
              "click rate must be below audio_rate/2 (clicks would overlap)");
      break;
  }
}

int64_t sample_count(double duration, double rate) {
  return static_cast<int64_t>(std::llround(duration * rate));
}

MonoWaveform synth_sam(const StimulusSpec& spec) {
  require(spec.kind == StimKind::Sam, "spec.kind must be SAM");
  spec.validate();
  const int64_t n = sample_count(spec.duration, spec.audio_rate);
  MonoWaveform w{std::vector<double>(n), spec.audio_rate};
  for (int64_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / spec.audio_rate;
    w.samples[k] = spec.amplitude * std::sin(2.0 * M_PI * spec.f_c * t) *
                   std::sin(M_PI * spec.f_m * t);
  }
  return w;
}

MonoWaveform synth_fam(const StimulusSpec& spec) {
  require(spec.kind == StimKind::Fam, "spec.kind must be FAM");
  spec.validate();
  const int64_t n = sample_count(spec.duration, spec.audio_rate);
  MonoWaveform w{std::vector<double>(n), spec.audio_rate};
  for (int64_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / spec.audio_rate;
    const double env = std::sin(2.0 * M_PI * spec.f_m * t);
    // Strict inequality: the zero branch wins when the envelope sine is 0.
    w.samples[k] = env > 0.0
                       ? spec.amplitude * std::sin(2.0 * M_PI * spec.f_c * t) * env
                       : 0.0;
  }
  return w;
}

MonoWaveform synth_clicks(const StimulusSpec& spec) {
  require(spec.kind == StimKind::Clicks, "spec.kind must be Clicks");
  spec.validate();
  const int64_t n = sample_count(spec.duration, spec.audio_rate);
  MonoWaveform w{std::vector<double>(n, 0.0), spec.audio_rate};
  // Round half up so e.g. 25 Hz * 0.5 s -> 13 clicks.
  const int64_t n_clicks =
      static_cast<int64_t>(std::floor(spec.f_m * spec.duration + 0.5));
  for (int64_t k = 0; k < n_clicks; ++k) {
    const double onset = static_cast<double>(k) / spec.f_m;
    const int64_t i = static_cast<int64_t>(std::llround(onset * spec.audio_rate));
    if (i + 1 >= n) break;
    w.samples[i] = spec.amplitude;
    w.samples[i + 1] = -spec.amplitude;
  }
  return w;
}

MonoWaveform synth_amfm(const StimulusSpec& spec) {
  require(spec.kind == StimKind::AmFm, "spec.kind must be AM/FM");
  spec.validate();
  const int64_t n = sample_count(spec.duration, spec.audio_rate);
  MonoWaveform w{std::vector<double>(n), spec.audio_rate};
  for (int64_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / spec.audio_rate;
    const double env = std::sin(M_PI * spec.f_m * t);
    const double carrier = env > 0.0 ? spec.f_c1 : spec.f_c2;
    w.samples[k] = spec.amplitude * std::sin(2.0 * M_PI * carrier * t) * env;
  }
  return w;
}

MonoWaveform synthesize(const StimulusSpec& spec) {
  switch (spec.kind) {
    case StimKind::Sam: return synth_sam(spec);
    case StimKind::Fam: return synth_fam(spec);
    case StimKind::Clicks: return synth_clicks(spec);
    case StimKind::AmFm: return synth_amfm(spec);
  }
  throw ValidationError("unknown stimulus kind");
}

StereoWaveform spatialize(const MonoWaveform& wave, Direction direction) {
  MonoWaveform silence{std::vector<double>(wave.samples.size(), 0.0), wave.rate};
  switch (direction) {
    case Direction::Left: return {wave, std::move(silence)};
    case Direction::Right: return {std::move(silence), wave};
    case Direction::Center: return {wave, wave};
  }
  throw ValidationError("unknown direction");
}

}  // namespace assr
