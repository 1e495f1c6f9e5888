#include <doctest.h>

#include "assr/fft.hpp"
#include "assr/stimgen.hpp"
#include "assr/wav.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>

using namespace assr;

namespace {

StimulusSpec make_spec(StimKind kind, double f_m, double duration,
                       double rate = 44100.0) {
  StimulusSpec spec;
  spec.kind = kind;
  spec.f_m = f_m;
  spec.duration = duration;
  spec.audio_rate = rate;
  return spec;
}

// Frequency of the k-th DFT bin and the two largest magnitude bins up to
// Nyquist, by brute-force scan.
std::pair<double, double> top_two_bin_frequencies(const std::vector<double>& x,
                                                  double rate) {
  auto spec = fft::spectrum(x);
  const size_t half = spec.size() / 2;
  size_t best = 1, second = 1;
  double best_mag = -1.0, second_mag = -1.0;
  for (size_t k = 0; k <= half; ++k) {
    const double m = std::abs(spec[k]);
    if (m > best_mag) {
      second = best;
      second_mag = best_mag;
      best = k;
      best_mag = m;
    } else if (m > second_mag) {
      second = k;
      second_mag = m;
    }
  }
  const double df = rate / static_cast<double>(x.size());
  return {best * df, second * df};
}

}  // namespace

TEST_SUITE("stimgen") {

TEST_CASE("sam starts at zero and respects the amplitude bound") {
  auto spec = make_spec(StimKind::Sam, 40.0, 0.25);
  spec.amplitude = 0.8;
  const auto w = synth_sam(spec);
  CHECK(w.samples.size() == 11025);
  CHECK(w.samples[0] == 0.0);
  for (double s : w.samples) {
    CHECK(std::isfinite(s));
    CHECK(std::abs(s) <= 0.8 + 1e-12);
  }
}

TEST_CASE("sam is zero wherever the envelope sine crosses the sample grid") {
  // 48 kHz with f_m = 40 puts t = k / f_m exactly on the grid every
  // 1200 samples.
  auto spec = make_spec(StimKind::Sam, 40.0, 1.0, 48000.0);
  const auto w = synth_sam(spec);
  for (size_t k = 0; k < w.samples.size(); k += 1200)
    CHECK(std::abs(w.samples[k]) < 1e-9);
}

TEST_CASE("sam spectrum concentrates at f_c +- f_m/2") {
  const auto w = synth_sam(make_spec(StimKind::Sam, 40.0, 3.0));
  auto [f1, f2] = top_two_bin_frequencies(w.samples, w.rate);
  if (f1 > f2) std::swap(f1, f2);
  CHECK(std::abs(f1 - 420.0) <= 0.5);
  CHECK(std::abs(f2 - 460.0) <= 0.5);
  // Cross-check the winning bins against direct projections.
  const double side = oracles::projection_magnitude(w.samples, 431.0, w.rate);
  const double peak = oracles::projection_magnitude(w.samples, 420.0, w.rate);
  CHECK(peak / side > 100.0);  // >= 40 dB
}

TEST_CASE("sam envelope repeats at the modulation frequency") {
  // The rectified signal also carries lines at the carrier harmonics
  // (2 f_c etc.), so the envelope fundamental is scanned for in the
  // modulation band [1, 200] Hz, well below the 440 Hz carriers.
  for (StimKind kind : {StimKind::Sam, StimKind::AmFm}) {
    const auto w = synthesize(make_spec(kind, 40.0, 3.0));
    std::vector<double> rect(w.samples.size());
    for (size_t i = 0; i < rect.size(); ++i) rect[i] = std::abs(w.samples[i]);
    auto spec = fft::spectrum(rect);
    const double df = w.rate / static_cast<double>(rect.size());
    size_t best = 0;
    double best_mag = -1.0;
    for (size_t k = static_cast<size_t>(std::ceil(1.0 / df));
         k <= static_cast<size_t>(200.0 / df); ++k) {
      if (std::abs(spec[k]) > best_mag) {
        best_mag = std::abs(spec[k]);
        best = k;
      }
    }
    CHECK(std::abs(best * df - 40.0) <= 0.5);
  }
}

TEST_CASE("sam rejects invalid specs") {
  auto spec = make_spec(StimKind::Sam, 40.0, 3.0);
  spec.duration = 0.0;
  CHECK_THROWS_AS(synth_sam(spec), ValidationError);
  spec = make_spec(StimKind::Sam, 0.0, 3.0);
  CHECK_THROWS_AS(synth_sam(spec), ValidationError);
  spec = make_spec(StimKind::Sam, 40.0, 3.0, 1000.0);  // rate < 4 * f_c
  CHECK_THROWS_AS(synth_sam(spec), ValidationError);
  spec = make_spec(StimKind::Fam, 40.0, 3.0);
  CHECK_THROWS_AS(synth_sam(spec), ValidationError);
}

TEST_CASE("fam is exactly zero on non-positive envelope half-cycles") {
  auto spec = make_spec(StimKind::Fam, 40.0, 1.0, 48000.0);
  const auto w = synth_fam(spec);
  int zeros = 0;
  int violations = 0;
  for (size_t k = 0; k < w.samples.size(); ++k) {
    // Same sample-time formula as the synthesizer (t first, then the sine),
    // so the branch decision is reproduced bit-for-bit.
    const double t = static_cast<double>(k) / w.rate;
    const double env = std::sin(2.0 * M_PI * spec.f_m * t);
    if (env <= 0.0) {
      if (w.samples[k] != 0.0) ++violations;
      ++zeros;
    }
  }
  CHECK(violations == 0);
  // Half-wave gating over 40 whole envelope periods.
  const double fraction = static_cast<double>(zeros) / w.samples.size();
  CHECK(std::abs(fraction - 0.5) <= 0.01);
}

TEST_CASE("fam rectified envelope has its fundamental at f_m") {
  const auto w = synth_fam(make_spec(StimKind::Fam, 40.0, 3.0));
  std::vector<double> rect(w.samples.size());
  for (size_t i = 0; i < rect.size(); ++i) rect[i] = std::abs(w.samples[i]);
  auto spec = fft::spectrum(rect);
  const double df = w.rate / static_cast<double>(rect.size());
  size_t best = 0;
  double best_mag = -1.0;
  for (size_t k = static_cast<size_t>(std::ceil(1.0 / df)); k <= rect.size() / 2;
       ++k) {
    if (std::abs(spec[k]) > best_mag) {
      best_mag = std::abs(spec[k]);
      best = k;
    }
  }
  CHECK(std::abs(best * df - 40.0) <= 0.5);
}

TEST_CASE("fam silence intervals recur at exactly 1/f_m") {
  auto spec = make_spec(StimKind::Fam, 40.0, 1.0, 48000.0);
  const auto w = synth_fam(spec);
  // Runs of consecutive zeros longer than a quarter period are the gated
  // half-cycles; their onsets must be spaced by one envelope period
  // (up to one boundary sample of grid slack).
  const int period = 1200;  // rate / f_m
  std::vector<int> run_starts;
  int run_len = 0;
  for (size_t i = 0; i <= w.samples.size(); ++i) {
    if (i < w.samples.size() && w.samples[i] == 0.0) {
      ++run_len;
    } else {
      if (run_len > period / 4)
        run_starts.push_back(static_cast<int>(i) - run_len);
      run_len = 0;
    }
  }
  REQUIRE(run_starts.size() == 40);
  for (size_t r = 1; r < run_starts.size(); ++r)
    CHECK(std::abs(run_starts[r] - run_starts[r - 1] - period) <= 1);
}

TEST_CASE("clicks: one second at 40 Hz gives exactly 40 balanced pairs") {
  auto spec = make_spec(StimKind::Clicks, 40.0, 1.0);
  const auto w = synth_clicks(spec);
  int positives = 0, negatives = 0;
  double sum = 0.0;
  for (double s : w.samples) {
    if (s > 0) ++positives;
    if (s < 0) ++negatives;
    sum += s;
  }
  CHECK(positives == 40);
  CHECK(negatives == 40);
  CHECK(sum == 0.0);
}

TEST_CASE("clicks: 0.5 s at 25 Hz rounds half-up to 13 clicks") {
  // Onset enumeration: k/25 < 0.5 for k = 0..12, and 12.5 rounds up.
  auto spec = make_spec(StimKind::Clicks, 25.0, 0.5);
  const auto w = synth_clicks(spec);
  const long positives =
      std::count_if(w.samples.begin(), w.samples.end(),
                    [](double s) { return s > 0.0; });
  CHECK(positives == 13);
}

TEST_CASE("clicks reject rates where clicks would overlap") {
  auto spec = make_spec(StimKind::Clicks, 30000.0, 1.0);
  CHECK_THROWS_AS(synth_clicks(spec), ValidationError);
}

TEST_CASE("amfm starts at zero and stays inside the envelope") {
  auto spec = make_spec(StimKind::AmFm, 40.0, 1.0);
  const auto w = synth_amfm(spec);
  CHECK(w.samples[0] == 0.0);
  for (size_t k = 0; k < w.samples.size(); ++k) {
    const double env =
        std::abs(std::sin(M_PI * spec.f_m * static_cast<double>(k) / w.rate));
    CHECK(std::abs(w.samples[k]) <= env + 1e-12);
  }
}

TEST_CASE("amfm alternates carrier energy between half-cycles") {
  auto spec = make_spec(StimKind::AmFm, 40.0, 1.0);
  const auto w = synth_amfm(spec);
  // One full envelope period is 2/f_m seconds (the sin(pi f_m t) sign flips
  // at t = 1/f_m). Project each half onto both carriers.
  const int half_len = static_cast<int>(w.rate / spec.f_m);  // 1/f_m seconds
  std::span<const double> first(w.samples.data(), half_len);
  std::span<const double> second(w.samples.data() + half_len, half_len);
  const double f1_on_c1 = oracles::projection_magnitude(first, 440.0, w.rate);
  const double f1_on_c2 = oracles::projection_magnitude(first, 880.0, w.rate);
  const double f2_on_c1 = oracles::projection_magnitude(second, 440.0, w.rate);
  const double f2_on_c2 = oracles::projection_magnitude(second, 880.0, w.rate);
  CHECK(f1_on_c1 > 5.0 * f1_on_c2);
  CHECK(f2_on_c2 > 5.0 * f2_on_c1);
}

TEST_CASE("amfm rejects equal carriers") {
  auto spec = make_spec(StimKind::AmFm, 40.0, 1.0);
  spec.f_c1 = spec.f_c2 = 440.0;
  CHECK_THROWS_AS(synth_amfm(spec), ValidationError);
}

TEST_CASE("synthesis is deterministic") {
  for (StimKind kind :
       {StimKind::Sam, StimKind::Fam, StimKind::Clicks, StimKind::AmFm}) {
    const auto a = synthesize(make_spec(kind, 40.0, 0.5));
    const auto b = synthesize(make_spec(kind, 40.0, 0.5));
    CHECK(a.samples == b.samples);
  }
}

TEST_CASE("spatialize routes copies and zeros only") {
  const auto w = synth_sam(make_spec(StimKind::Sam, 40.0, 0.1));
  const auto left = spatialize(w, Direction::Left);
  CHECK(left.left.samples == w.samples);
  CHECK(std::all_of(left.right.samples.begin(), left.right.samples.end(),
                    [](double s) { return s == 0.0; }));
  const auto right = spatialize(w, Direction::Right);
  CHECK(right.right.samples == w.samples);
  CHECK(std::all_of(right.left.samples.begin(), right.left.samples.end(),
                    [](double s) { return s == 0.0; }));
  const auto center = spatialize(w, Direction::Center);
  CHECK(center.left.samples == center.right.samples);
  CHECK(center.left.samples == w.samples);
}

TEST_CASE("wav: full-scale mapping and zero payload") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "assr_wav_test";
  fs::create_directories(dir);

  MonoWaveform mono{std::vector<double>(16, 0.0), 44100.0};
  mono.samples[3] = 1.0;
  mono.samples[5] = -1.0;
  const auto path = (dir / "scale.wav").string();
  write_wav(spatialize(mono, Direction::Center), path);
  const auto back = read_wav(path);
  CHECK(back.left.samples[3] == doctest::Approx(1.0));
  CHECK(back.left.samples[5] == doctest::Approx(-1.0));
  CHECK(back.left.samples[0] == 0.0);
  CHECK(back.right.samples[3] == back.left.samples[3]);
  fs::remove_all(dir);
}

TEST_CASE("wav round-trip stays within one quantization step") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "assr_wav_rt";
  fs::create_directories(dir);

  const auto w = synth_sam(make_spec(StimKind::Sam, 40.0, 0.25));
  const auto path = (dir / "sam.wav").string();
  write_wav(spatialize(w, Direction::Left), path);
  const auto back = read_wav(path);
  REQUIRE(back.left.samples.size() == w.samples.size());
  for (size_t i = 0; i < w.samples.size(); ++i)
    CHECK(std::abs(back.left.samples[i] - w.samples[i]) <= 1.0 / 32767.0);
  fs::remove_all(dir);
}

TEST_CASE("wav rejects out-of-range samples") {
  MonoWaveform mono{std::vector<double>(8, 0.0), 44100.0};
  mono.samples[0] = 1.5;
  CHECK_THROWS_AS(write_wav(spatialize(mono, Direction::Center), "/tmp/x.wav"),
                  ValidationError);
}

}  // TEST_SUITE
