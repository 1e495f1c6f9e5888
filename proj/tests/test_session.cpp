#include <doctest.h>

#include "assr/report.hpp"
#include "assr/session.hpp"

#include <cmath>
#include <string>

using namespace assr;

TEST_SUITE("session") {

TEST_CASE("schedule_trials follows the block structure deterministically") {
  ProtocolConfig cfg;
  const auto a = schedule_trials(cfg, 12);
  const auto b = schedule_trials(cfg, 12);
  REQUIRE(a.size() == 30);
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].target == b[i].target);
    CHECK(a[i].order == b[i].order);
  }
  CHECK(a[10].target == Direction::Center);  // trial 11, 1-based

  const auto c = schedule_trials(cfg, 13);
  bool differs = false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i].order != c[i].order) differs = true;
  CHECK(differs);
}

TEST_CASE("run_condition produces the documented epoch shapes") {
  ProtocolConfig protocol;
  SimConfig cfg;
  cfg.n_channels = 16;
  SUBCASE("3 s epochs have 1536 samples") {
    const EpochSet set = run_condition(StimKind::Sam, 3.0, protocol, cfg, 1);
    REQUIRE(set.epochs.size() == 90);
    for (const Epoch& e : set.epochs) {
      CHECK(e.n_samples == 1536);
      CHECK(e.n_channels == 16);
    }
  }
  SUBCASE("0.5 s epochs have 256 samples") {
    const EpochSet set = run_condition(StimKind::Sam, 0.5, protocol, cfg, 1);
    for (const Epoch& e : set.epochs) CHECK(e.n_samples == 256);
  }
}

TEST_CASE("a full sweep enumerates 12 conditions of 90 epochs") {
  ProtocolConfig protocol;
  SimConfig cfg;
  cfg.n_channels = 2;
  const auto sets = simulate_session(protocol, cfg, 2);
  REQUIRE(sets.size() == 12);
  size_t total = 0;
  for (const auto& set : sets) total += set.epochs.size();
  CHECK(total == 1080);
}

TEST_CASE("stimulus onsets advance by length plus the 375 ms gap") {
  ProtocolConfig protocol;
  SimConfig cfg;
  cfg.n_channels = 2;
  const EpochSet set = run_condition(StimKind::Sam, 1.0, protocol, cfg, 6);
  REQUIRE(set.onsets_s.size() == 90);
  CHECK(set.onsets_s[0] == 0.0);
  CHECK(set.onsets_s[1] == doctest::Approx(1.375));
  CHECK(set.onsets_s[2] == doctest::Approx(2.75));
  // Block boundary (after trial 10) adds the longer break.
  const double within = set.onsets_s[1] - set.onsets_s[0];
  const double across_block = set.onsets_s[30] - set.onsets_s[29];
  CHECK(across_block == doctest::Approx(within + protocol.inter_block_break_s));
}

TEST_CASE("evaluate_condition scores both tasks from labeled features") {
  // Hand-built features: the attended direction's block is shifted, so both
  // tasks are perfectly decodable.
  std::vector<FeatureVector> features;
  for (int trial = 0; trial < 30; ++trial) {
    const Direction target = trial < 10   ? Direction::Left
                             : trial < 20 ? Direction::Center
                                          : Direction::Right;
    for (Direction d :
         {Direction::Left, Direction::Center, Direction::Right}) {
      FeatureVector fv;
      fv.values.assign(120, d == target ? 0.9 : 0.2);
      // tiny deterministic wiggle so variances are non-degenerate
      fv.values[0] += 0.001 * ((trial * 3 + static_cast<int>(d)) % 7);
      fv.direction = d;
      fv.attended = d == target;
      fv.trial_index = trial;
      features.push_back(std::move(fv));
    }
  }
  const ConditionScores scores =
      evaluate_condition(features, StimKind::Clicks, 1.0);
  CHECK(scores.kind == StimKind::Clicks);
  CHECK(scores.length_s == 1.0);
  CHECK(scores.direction_accuracy == 1.0);
  CHECK(scores.tvnt_mean == 1.0);
  for (double acc : scores.tvnt_accuracy) CHECK(acc == 1.0);
}

TEST_CASE("report renders every bundled reference value as printed") {
  const std::string text = reference::render_tables();

  // Target vs non-target by length, rows then the average row.
  for (const char* cell :
       {"60.67%", "66.44%", "74.44%", "54.00%", "64.22%", "72.67%", "57.78%",
        "64.67%", "70.67%", "57.33%", "61.33%", "71.78%", "57.44%", "64.17%",
        "72.39%"})
    CHECK(text.find(cell) != std::string::npos);

  // Target vs non-target at 3 s by subject.
  for (const char* cell :
       {"72.22%", "80.00%", "70.00%", "73.33%", "86.67%", "81.11%", "58.89%",
        "77.78%", "71.11%", "82.22%", "90.00%", "88.89%", "62.22%", "61.11%",
        "64.44%"})
    CHECK(text.find(cell) != std::string::npos);

  // Direction task by length.
  for (const char* cell :
       {"36.00%", "47.33%", "45.33%", "52.67%", "60.67%", "39.33%", "51.33%",
        "37.33%", "40.67%", "64.00%", "39.50%", "48.00%", "63.00%"})
    CHECK(text.find(cell) != std::string::npos);

  // Direction task by subject.
  for (const char* cell :
       {"66.67%", "63.33%", "36.67%", "96.67%", "46.67%", "56.67%", "43.33%",
        "60.00%", "70.00%", "57.33%"})
    CHECK(text.find(cell) != std::string::npos);

  // Best stimulus per subject, averaged.
  CHECK(text.find("78.00%") != std::string::npos);
}

TEST_CASE("reference averages are consistent with their rows") {
  // Row/column averages embedded in the fixtures reproduce the arithmetic
  // means of their cells within print rounding.
  for (int li = 0; li < 3; ++li) {
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += reference::kTvntByLength[k][li];
    CHECK(std::abs(sum / 4.0 - reference::kTvntLengthAverage[li]) <= 0.01);
    sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += reference::kDirectionByLength[k][li];
    CHECK(std::abs(sum / 4.0 - reference::kDirectionLengthAverage[li]) <= 0.01);
  }
  // The 3 s direction column averages to 63.00.
  double sum3 = 0.0;
  for (int k = 0; k < 4; ++k) sum3 += reference::kDirectionByLength[k][2];
  CHECK(std::abs(sum3 / 4.0 - 63.00) <= 0.01);

  // Best per subject in the direction table averages to 78.00.
  double best_sum = 0.0;
  for (int s = 0; s < 5; ++s) {
    double best = 0.0;
    for (int k = 0; k < 4; ++k)
      best = std::max(best, reference::kDirectionBySubject[s][k]);
    best_sum += best;
  }
  CHECK(std::abs(best_sum / 5.0 - reference::kBestPerSubjectAverage) <= 0.005);
}

TEST_CASE("evaluation report renders grids, per-seed rows and placeholders") {
  EvaluationReport report;
  ConditionScores s;
  s.kind = StimKind::Sam;
  s.length_s = 3.0;
  s.tvnt_accuracy[0] = s.tvnt_accuracy[1] = s.tvnt_accuracy[2] = 0.8;
  s.tvnt_mean = 0.8;
  s.direction_accuracy = 0.7;
  report.add(1, s);
  s.kind = StimKind::Fam;
  s.direction_accuracy = 0.5;
  report.add(1, s);

  const std::string text = report.render_text();
  CHECK(text.find("80.00%") != std::string::npos);
  CHECK(text.find("70.00%") != std::string::npos);
  CHECK(text.find("seed #1") != std::string::npos);
  CHECK(text.find("---") != std::string::npos);  // missing cells
  CHECK(text.find("Reference") != std::string::npos);

  CHECK(report.mean_tvnt(StimKind::Sam, 3.0).value() == doctest::Approx(0.8));
  CHECK(!report.mean_tvnt(StimKind::Clicks, 3.0).has_value());

  const std::string csv = report.render_csv();
  CHECK(csv.find("seed,kind,length_s") == 0);
  CHECK(csv.find("1,sam,3,") != std::string::npos);
  CHECK(csv.find("1,fam,3,") != std::string::npos);
}

TEST_CASE("report completeness: a full sweep fills the 4 x 3 grid") {
  EvaluationReport report;
  for (StimKind kind :
       {StimKind::Sam, StimKind::Fam, StimKind::Clicks, StimKind::AmFm})
    for (double length : {0.5, 1.0, 3.0}) {
      ConditionScores s;
      s.kind = kind;
      s.length_s = length;
      s.tvnt_mean = 0.7;
      s.direction_accuracy = 0.6;
      report.add(9, s);
    }
  const std::string text = report.render_text();
  const std::string synthetic = text.substr(0, text.find("Reference"));
  CHECK(synthetic.find("---") == std::string::npos);
  for (StimKind kind :
       {StimKind::Sam, StimKind::Fam, StimKind::Clicks, StimKind::AmFm})
    for (double length : {0.5, 1.0, 3.0})
      CHECK(report.mean_direction(kind, length).has_value());
}

}  // TEST_SUITE
