#pragma once

#include "assr/session.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace assr {

/// Bundled reference accuracy tables (percent) from an earlier five-subject
/// offline study of the same four stimulus kinds and three lengths. These
/// are static fixtures rendered for side-by-side comparison only; nothing in
/// this project recomputes them.
namespace reference {

inline constexpr std::array<const char*, 4> kKindNames = {"SAM", "FAM",
                                                          "Clicks", "AM/FM"};
inline constexpr std::array<const char*, 4> kSubjectKindNames = {
    "SAM", "Flutter", "Clicks", "FM"};
inline constexpr std::array<double, 3> kLengthsSeconds = {0.5, 1.0, 3.0};

// Target vs non-target accuracy by stimulation length (rows = kind).
inline constexpr double kTvntByLength[4][3] = {{60.67, 66.44, 74.44},
                                               {54.00, 64.22, 72.67},
                                               {57.78, 64.67, 70.67},
                                               {57.33, 61.33, 71.78}};
inline constexpr double kTvntLengthAverage[3] = {57.44, 64.17, 72.39};

// Target vs non-target accuracy at 3 s by subject (rows = subject 1..5).
inline constexpr double kTvntBySubject[5][4] = {{72.22, 80.00, 70.00, 73.33},
                                                {86.67, 81.11, 58.89, 77.78},
                                                {71.11, 82.22, 90.00, 88.89},
                                                {77.78, 62.22, 61.11, 57.78},
                                                {64.44, 57.78, 73.33, 61.11}};
inline constexpr double kTvntSubjectAverage[4] = {74.44, 72.67, 70.67, 71.78};

// Target-direction accuracy by stimulation length (rows = kind).
inline constexpr double kDirectionByLength[4][3] = {{36.00, 47.33, 70.00},
                                                    {45.33, 52.67, 60.67},
                                                    {39.33, 51.33, 57.33},
                                                    {37.33, 40.67, 64.00}};
inline constexpr double kDirectionLengthAverage[3] = {39.50, 48.00, 63.00};

// Target-direction accuracy at 3 s by subject (rows = subject 1..5).
inline constexpr double kDirectionBySubject[5][4] = {
    {66.67, 73.33, 63.33, 66.67},
    {86.67, 66.67, 36.67, 66.67},
    {63.33, 73.33, 86.67, 96.67},
    {73.33, 46.67, 56.67, 33.33},
    {60.00, 43.33, 43.33, 56.67}};
inline constexpr double kDirectionSubjectAverage[4] = {70.00, 60.67, 57.33,
                                                       64.00};

// Direction-task accuracy averaged over each subject's best stimulus kind.
inline constexpr double kBestPerSubjectAverage = 78.00;

/// Renders the four reference tables as aligned text.
std::string render_tables();

}  // namespace reference

/// Accumulates per-seed, per-condition scores and renders them in the same
/// two views as the reference tables: kind x length grids for both tasks,
/// and per-seed breakdowns at the longest stimulus length.
class EvaluationReport {
 public:
  void add(uint64_t seed, const ConditionScores& scores);

  /// Aligned text tables; missing cells render as em-dash placeholders.
  /// Reference tables are appended, labeled as bundled fixtures.
  std::string render_text() const;

  /// Machine-readable variant: one row per (seed, kind, length) with both
  /// task accuracies.
  std::string render_csv() const;

  bool empty() const { return entries_.empty(); }

  /// Mean over seeds for one cell, if present.
  std::optional<double> mean_tvnt(StimKind kind, double length_s) const;
  std::optional<double> mean_direction(StimKind kind, double length_s) const;

 private:
  struct Entry {
    uint64_t seed;
    ConditionScores scores;
  };
  std::vector<Entry> entries_;
};

}  // namespace assr
