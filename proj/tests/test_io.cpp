#include <doctest.h>

#include "assr/config.hpp"
#include "assr/epoch_io.hpp"
#include "assr/feature_csv.hpp"
#include "assr/rng.hpp"

#include <filesystem>
#include <fstream>

using namespace assr;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("assr_" + tag);
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(f)),
                     std::istreambuf_iterator<char>());
}

Epoch small_epoch(uint64_t seed) {
  SimConfig cfg;
  cfg.n_channels = 3;
  Epoch e = simulate_epoch(cfg, 25.0, 0.25, true, seed);
  e.direction = Direction::Right;
  e.kind = StimKind::Clicks;
  e.trial_index = 7;
  return e;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("epoch files survive a write-read-write round trip bit-exactly") {
  TempDir tmp("epoch_rt");
  const Epoch original = small_epoch(1);
  const auto p1 = (tmp.path / "a.bin").string();
  const auto p2 = (tmp.path / "b.bin").string();
  write_epoch(original, p1);
  const Epoch loaded = read_epoch(p1);

  CHECK(loaded.n_channels == original.n_channels);
  CHECK(loaded.n_samples == original.n_samples);
  CHECK(loaded.eeg_rate == original.eeg_rate);
  CHECK(loaded.f_m == original.f_m);
  CHECK(loaded.direction == original.direction);
  CHECK(loaded.attended == original.attended);
  // Values are stored as 32-bit floats: reading back gives exactly the
  // float-cast of the original doubles.
  for (size_t i = 0; i < original.data.size(); ++i)
    CHECK(loaded.data[i] == static_cast<double>(
                                static_cast<float>(original.data[i])));

  write_epoch(loaded, p2);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("epoch reader rejects foreign and truncated files") {
  TempDir tmp("epoch_bad");
  const auto bad = (tmp.path / "bad.bin").string();
  {
    std::ofstream f(bad, std::ios::binary);
    f << "this is not an epoch file at all";
  }
  CHECK_THROWS_AS(read_epoch(bad), IoError);

  const auto truncated = (tmp.path / "trunc.bin").string();
  write_epoch(small_epoch(2), truncated);
  const std::string full = slurp(truncated);
  {
    std::ofstream f(truncated, std::ios::binary);
    f << full.substr(0, full.size() / 2);
  }
  CHECK_THROWS_AS(read_epoch(truncated), IoError);

  CHECK_THROWS_AS(read_epoch((tmp.path / "absent.bin").string()),
                  ValidationError);
}

TEST_CASE("epoch sets round-trip through a condition directory") {
  TempDir tmp("epoch_set");
  ProtocolConfig protocol;
  SimConfig cfg;
  cfg.n_channels = 2;
  protocol.trials_per_block = 2;  // 6 trials, 18 epochs
  EpochSet set = simulate_condition(protocol, cfg, StimKind::AmFm, 0.5, 33);

  const auto dir = (tmp.path / "amfm_0500ms").string();
  write_epoch_set(set, dir);
  CHECK(fs::exists(fs::path(dir) / "manifest.json"));
  CHECK(fs::exists(fs::path(dir) / "epoch_000.bin"));

  const EpochSet loaded = read_epoch_set(dir);
  CHECK(loaded.kind == StimKind::AmFm);
  CHECK(loaded.length_s == 0.5);
  CHECK(loaded.seed == 33);
  REQUIRE(loaded.epochs.size() == set.epochs.size());
  for (size_t i = 0; i < set.epochs.size(); ++i) {
    const Epoch& a = set.epochs[i];
    const Epoch& b = loaded.epochs[i];
    CHECK(a.trial_index == b.trial_index);
    CHECK(a.direction == b.direction);
    CHECK(a.attended == b.attended);
    CHECK(a.kind == b.kind);
    CHECK(a.f_m == b.f_m);
  }
  CHECK(loaded.onsets_s == set.onsets_s);

  SUBCASE("missing manifest is a validation error") {
    fs::remove(fs::path(dir) / "manifest.json");
    CHECK_THROWS_AS(read_epoch_set(dir), ValidationError);
  }
}

TEST_CASE("feature CSV round-trips exactly and rewrites byte-identically") {
  TempDir tmp("fcsv");
  Rng rng(12);
  std::vector<FeatureVector> features;
  for (int i = 0; i < 7; ++i) {
    FeatureVector fv;
    fv.values.resize(120);
    for (auto& v : fv.values) v = rng.uniform();
    fv.f_m = 40.0;
    fv.direction = Direction::Center;
    fv.attended = i % 3 == 0;
    fv.kind = StimKind::Fam;
    fv.length_s = 0.5;
    fv.trial_index = i;
    features.push_back(std::move(fv));
  }
  const auto p1 = (tmp.path / "a.csv").string();
  const auto p2 = (tmp.path / "b.csv").string();
  write_feature_csv(features, p1);
  const auto loaded = read_feature_csv(p1);
  REQUIRE(loaded.size() == features.size());
  for (size_t i = 0; i < features.size(); ++i) {
    CHECK(loaded[i].values == features[i].values);  // %.17g round-trips
    CHECK(loaded[i].direction == features[i].direction);
    CHECK(loaded[i].attended == features[i].attended);
    CHECK(loaded[i].kind == features[i].kind);
    CHECK(loaded[i].length_s == features[i].length_s);
    CHECK(loaded[i].trial_index == features[i].trial_index);
  }
  write_feature_csv(loaded, p2);
  CHECK(slurp(p1) == slurp(p2));
}

TEST_CASE("feature CSV parser names the offending row") {
  TempDir tmp("fcsv_bad");
  std::vector<FeatureVector> features(1);
  features[0].values.assign(120, 0.5);
  const auto path = (tmp.path / "f.csv").string();
  write_feature_csv(features, path);

  std::string text = slurp(path);
  SUBCASE("non-numeric value") {
    const auto pos = text.find("0.5");
    text.replace(pos, 3, "oops");
    std::ofstream(path) << text;
    CHECK_THROWS_WITH_AS(read_feature_csv(path), doctest::Contains("row 2"),
                         ValidationError);
  }
  SUBCASE("wrong field count") {
    std::ofstream(path, std::ios::app) << "1,2,3\n";
    CHECK_THROWS_WITH_AS(read_feature_csv(path), doctest::Contains("row 3"),
                         ValidationError);
  }
  SUBCASE("bad header") {
    text[0] = 'q';
    std::ofstream(path) << text;
    CHECK_THROWS_AS(read_feature_csv(path), ValidationError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_feature_csv((tmp.path / "absent.csv").string()),
                    ValidationError);
  }
}

TEST_CASE("config parsing applies defaults and rejects unknown fields") {
  const RunConfig defaults = parse_config_json("{}");
  CHECK(defaults.sim.n_channels == 16);
  CHECK(defaults.protocol.trials_per_block == 10);

  const RunConfig custom = parse_config_json(R"({
    "protocol": {"stimulus_kinds": ["sam"], "stimulus_lengths_s": [1.0],
                 "direction_frequencies": {"left": 21, "center": 41, "right": 61}},
    "sim": {"n_channels": 4, "noise_level": 0.5}
  })");
  CHECK(custom.protocol.stimulus_kinds.size() == 1);
  CHECK(custom.protocol.direction_frequencies[0] == 21.0);
  CHECK(custom.sim.n_channels == 4);
  CHECK(custom.sim.noise_level == 0.5);

  CHECK_THROWS_WITH_AS(parse_config_json(R"({"sim": {"noise_levle": 1}})"),
                       doctest::Contains("noise_levle"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_config_json(R"({"sim": {"n_channels": "many"}})"),
                       doctest::Contains("n_channels"), ValidationError);
  CHECK_THROWS_AS(parse_config_json("{"), ValidationError);
  CHECK_THROWS_AS(parse_config_json(R"({"sim": {"attention_gain": 0.1}})"),
                  ValidationError);

  // The built-in default template parses back to itself.
  const RunConfig round = parse_config_json(default_config_json());
  CHECK(round.sim.noise_level == defaults.sim.noise_level);
  CHECK(round.protocol.stimulus_kinds == defaults.protocol.stimulus_kinds);
}

}  // TEST_SUITE
