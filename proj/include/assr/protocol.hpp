#pragma once

#include "assr/types.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace assr {

/// Experimental protocol: three spatial directions with fixed modulation
/// frequencies, 10-trial blocks per target direction, and the condition
/// matrix of stimulus kinds x lengths.
struct ProtocolConfig {
  // direction -> modulation frequency, indexed by Direction
  std::array<double, 3> direction_frequencies = {25.0, 40.0, 60.0};
  int trials_per_block = 10;
  std::array<Direction, 3> block_targets = {Direction::Left, Direction::Center,
                                            Direction::Right};
  double inter_stimulus_gap_s = 0.375;
  double inter_block_break_s = 10.0;  // timeline metadata only
  std::vector<double> stimulus_lengths_s = {0.5, 1.0, 3.0};
  std::vector<StimKind> stimulus_kinds = {StimKind::Sam, StimKind::Fam,
                                          StimKind::Clicks, StimKind::AmFm};

  int n_trials() const { return trials_per_block * 3; }
  double frequency_of(Direction d) const {
    return direction_frequencies[static_cast<int>(d)];
  }
  void validate() const;
};

/// One trial: a target direction and the seeded presentation order of the
/// three direction stimuli.
struct Trial {
  int index = 0;  // 0-based
  Direction target = Direction::Left;
  std::array<Direction, 3> order = {Direction::Left, Direction::Center,
                                    Direction::Right};
};

/// 30 trials; trials 0-9 target Left, 10-19 Center, 20-29 Right; within each
/// trial the three directions appear in a seeded random order.
std::vector<Trial> schedule_trials(const ProtocolConfig& cfg, uint64_t seed);

}  // namespace assr
