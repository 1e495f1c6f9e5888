#include "assr/protocol.hpp"

#include "assr/rng.hpp"

namespace assr {

void ProtocolConfig::validate() const {
  if (trials_per_block < 1)
    throw ValidationError("trials_per_block must be >= 1");
  if (direction_frequencies[0] == direction_frequencies[1] ||
      direction_frequencies[0] == direction_frequencies[2] ||
      direction_frequencies[1] == direction_frequencies[2])
    throw ValidationError("direction frequencies must be distinct");
  for (double f : direction_frequencies)
    if (f <= 0.0) throw ValidationError("direction frequencies must be positive");
  if (stimulus_lengths_s.empty() || stimulus_kinds.empty())
    throw ValidationError("condition matrix must be non-empty");
  for (double l : stimulus_lengths_s)
    if (l <= 0.0) throw ValidationError("stimulus lengths must be positive");
  if (inter_stimulus_gap_s < 0.0)
    throw ValidationError("inter_stimulus_gap_s must be >= 0");
}

std::vector<Trial> schedule_trials(const ProtocolConfig& cfg, uint64_t seed) {
  cfg.validate();
  Rng rng(mix64(seed, 0x7261726964617465ULL));
  std::vector<Trial> trials;
  trials.reserve(cfg.n_trials());
  for (int i = 0; i < cfg.n_trials(); ++i) {
    Trial t;
    t.index = i;
    t.target = cfg.block_targets[i / cfg.trials_per_block];
    t.order = {Direction::Left, Direction::Center, Direction::Right};
    rng.shuffle(t.order);
    trials.push_back(t);
  }
  return trials;
}

}  // namespace assr
