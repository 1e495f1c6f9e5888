#include "assr/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace assr {

namespace {

std::string pct(double value) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.2f%%", value);
  return buf;
}

std::string length_label(double seconds) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%gs", seconds);
  return buf;
}

void render_row(std::ostringstream& os, const std::string& head,
                const std::vector<std::string>& cells, size_t head_w,
                size_t cell_w) {
  os << "  " << head << std::string(head_w - head.size(), ' ');
  for (const auto& c : cells)
    os << " | " << std::string(cell_w > c.size() ? cell_w - c.size() : 0, ' ')
       << c;
  os << "\n";
}

constexpr const char* kMissing = "---";

}  // namespace

namespace reference {

std::string render_tables() {
  std::ostringstream os;
  const size_t hw = 24, cw = 8;

  os << "Reference: target vs non-target accuracy by stimulation length\n";
  render_row(os, "stimulus", {"0.5s", "1s", "3s"}, hw, cw);
  for (int k = 0; k < 4; ++k)
    render_row(os, kKindNames[k],
               {pct(kTvntByLength[k][0]), pct(kTvntByLength[k][1]),
                pct(kTvntByLength[k][2])},
               hw, cw);
  render_row(os, "Average of all stimuli",
             {pct(kTvntLengthAverage[0]), pct(kTvntLengthAverage[1]),
              pct(kTvntLengthAverage[2])},
             hw, cw);
  os << "\n";

  os << "Reference: target vs non-target accuracy at 3s by subject\n";
  render_row(os, "subject",
             {kSubjectKindNames[0], kSubjectKindNames[1], kSubjectKindNames[2],
              kSubjectKindNames[3]},
             hw, cw);
  for (int s = 0; s < 5; ++s) {
    char head[8];
    std::snprintf(head, sizeof(head), "#%d", s + 1);
    render_row(os, head,
               {pct(kTvntBySubject[s][0]), pct(kTvntBySubject[s][1]),
                pct(kTvntBySubject[s][2]), pct(kTvntBySubject[s][3])},
               hw, cw);
  }
  render_row(os, "Average of all",
             {pct(kTvntSubjectAverage[0]), pct(kTvntSubjectAverage[1]),
              pct(kTvntSubjectAverage[2]), pct(kTvntSubjectAverage[3])},
             hw, cw);
  os << "\n";

  os << "Reference: target-direction accuracy by stimulation length\n";
  render_row(os, "stimulus", {"0.5s", "1s", "3s"}, hw, cw);
  for (int k = 0; k < 4; ++k)
    render_row(os, kKindNames[k],
               {pct(kDirectionByLength[k][0]), pct(kDirectionByLength[k][1]),
                pct(kDirectionByLength[k][2])},
               hw, cw);
  render_row(os, "Average of all stimuli",
             {pct(kDirectionLengthAverage[0]), pct(kDirectionLengthAverage[1]),
              pct(kDirectionLengthAverage[2])},
             hw, cw);
  os << "\n";

  os << "Reference: target-direction accuracy at 3s by subject\n";
  render_row(os, "subject",
             {kSubjectKindNames[0], kSubjectKindNames[1], kSubjectKindNames[2],
              kSubjectKindNames[3]},
             hw, cw);
  for (int s = 0; s < 5; ++s) {
    char head[8];
    std::snprintf(head, sizeof(head), "#%d", s + 1);
    render_row(os, head,
               {pct(kDirectionBySubject[s][0]), pct(kDirectionBySubject[s][1]),
                pct(kDirectionBySubject[s][2]), pct(kDirectionBySubject[s][3])},
               hw, cw);
  }
  render_row(os, "Average of all",
             {pct(kDirectionSubjectAverage[0]), pct(kDirectionSubjectAverage[1]),
              pct(kDirectionSubjectAverage[2]), pct(kDirectionSubjectAverage[3])},
             hw, cw);
  os << "\n";
  os << "Reference: direction accuracy averaged over each subject's best "
        "stimulus: "
     << pct(kBestPerSubjectAverage) << "\n";
  return os.str();
}

}  // namespace reference

void EvaluationReport::add(uint64_t seed, const ConditionScores& scores) {
  entries_.push_back({seed, scores});
}

namespace {

constexpr StimKind kKindOrder[4] = {StimKind::Sam, StimKind::Fam,
                                    StimKind::Clicks, StimKind::AmFm};

}  // namespace

std::optional<double> EvaluationReport::mean_tvnt(StimKind kind,
                                                  double length_s) const {
  double sum = 0.0;
  int n = 0;
  for (const auto& e : entries_)
    if (e.scores.kind == kind && e.scores.length_s == length_s) {
      sum += e.scores.tvnt_mean;
      ++n;
    }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::optional<double> EvaluationReport::mean_direction(StimKind kind,
                                                       double length_s) const {
  double sum = 0.0;
  int n = 0;
  for (const auto& e : entries_)
    if (e.scores.kind == kind && e.scores.length_s == length_s) {
      sum += e.scores.direction_accuracy;
      ++n;
    }
  if (n == 0) return std::nullopt;
  return sum / n;
}

std::string EvaluationReport::render_text() const {
  std::ostringstream os;
  const size_t hw = 24, cw = 8;

  std::set<double> length_set;
  std::set<uint64_t> seed_set;
  for (const auto& e : entries_) {
    length_set.insert(e.scores.length_s);
    seed_set.insert(e.seed);
  }
  std::vector<double> lengths(length_set.begin(), length_set.end());

  auto grid = [&](const char* title, auto mean_fn) {
    os << title << " (mean over " << seed_set.size() << " seed" <<
        (seed_set.size() == 1 ? "" : "s") << ")\n";
    std::vector<std::string> header;
    for (double l : lengths) header.push_back(length_label(l));
    render_row(os, "stimulus", header, hw, cw);
    std::vector<double> col_sums(lengths.size(), 0.0);
    std::vector<int> col_counts(lengths.size(), 0);
    for (StimKind kind : kKindOrder) {
      std::vector<std::string> cells;
      for (size_t li = 0; li < lengths.size(); ++li) {
        const auto v = mean_fn(kind, lengths[li]);
        if (v.has_value()) {
          cells.push_back(pct(*v * 100.0));
          col_sums[li] += *v;
          col_counts[li] += 1;
        } else {
          cells.push_back(kMissing);
        }
      }
      render_row(os, reference::kKindNames[static_cast<int>(kind)], cells, hw,
                 cw);
    }
    std::vector<std::string> avg_cells;
    for (size_t li = 0; li < lengths.size(); ++li)
      avg_cells.push_back(col_counts[li] == 4
                              ? pct(col_sums[li] / col_counts[li] * 100.0)
                              : kMissing);
    render_row(os, "Average of all stimuli", avg_cells, hw, cw);
    os << "\n";
  };

  grid("Synthetic: target vs non-target accuracy",
       [&](StimKind k, double l) { return mean_tvnt(k, l); });
  grid("Synthetic: target-direction accuracy",
       [&](StimKind k, double l) { return mean_direction(k, l); });

  // Per-seed breakdown at the longest length, mirroring the by-subject view.
  if (!lengths.empty()) {
    const double lmax = lengths.back();
    for (int task = 0; task < 2; ++task) {
      os << (task == 0 ? "Synthetic: target vs non-target accuracy at "
                       : "Synthetic: target-direction accuracy at ")
         << length_label(lmax) << " by seed\n";
      render_row(os, "seed",
                 {reference::kKindNames[0], reference::kKindNames[1],
                  reference::kKindNames[2], reference::kKindNames[3]},
                 hw, cw);
      for (uint64_t seed : seed_set) {
        std::vector<std::string> cells;
        for (StimKind kind : kKindOrder) {
          std::optional<double> v;
          for (const auto& e : entries_)
            if (e.seed == seed && e.scores.kind == kind &&
                e.scores.length_s == lmax)
              v = task == 0 ? e.scores.tvnt_mean : e.scores.direction_accuracy;
          cells.push_back(v.has_value() ? pct(*v * 100.0) : kMissing);
        }
        render_row(os, "seed #" + std::to_string(seed), cells, hw, cw);
      }
      os << "\n";
    }
  }

  os << reference::render_tables();
  return os.str();
}

std::string EvaluationReport::render_csv() const {
  std::ostringstream os;
  os << "seed,kind,length_s,tvnt_left,tvnt_center,tvnt_right,tvnt_mean,"
        "direction\n";
  for (const auto& e : entries_) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%llu,%s,%g,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                  static_cast<unsigned long long>(e.seed),
                  to_string(e.scores.kind).c_str(), e.scores.length_s,
                  e.scores.tvnt_accuracy[0], e.scores.tvnt_accuracy[1],
                  e.scores.tvnt_accuracy[2], e.scores.tvnt_mean,
                  e.scores.direction_accuracy);
    os << buf;
  }
  return os.str();
}

}  // namespace assr
