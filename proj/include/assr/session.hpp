#pragma once

#include "assr/classify.hpp"
#include "assr/dsp.hpp"
#include "assr/eegsim.hpp"
#include "assr/protocol.hpp"

#include <cstdint>
#include <vector>

namespace assr {

/// Simulates one (kind, length) condition under the protocol's block / trial
/// structure; identical to eegsim::simulate_condition, re-exported here as
/// the session-level entry point.
inline EpochSet run_condition(StimKind kind, double length_s,
                              const ProtocolConfig& protocol,
                              const SimConfig& cfg, uint64_t seed) {
  return simulate_condition(protocol, cfg, kind, length_s, seed);
}

struct FeatureOptions {
  bool apply_preprocess = true;  // 5-100 Hz + 48-52 Hz stop before analysis
  PlvOptions plv;
};

/// Runs every epoch of a condition through the PLV pipeline at its own
/// modulation frequency.
std::vector<FeatureVector> extract_features(const EpochSet& set,
                                            const FeatureOptions& options = {});

/// Both evaluation tasks for one condition.
struct ConditionScores {
  StimKind kind = StimKind::Sam;
  double length_s = 0.0;
  double tvnt_accuracy[3] = {0.0, 0.0, 0.0};  // indexed by Direction
  double tvnt_mean = 0.0;
  double direction_accuracy = 0.0;
};

ConditionScores evaluate_condition(const std::vector<FeatureVector>& features,
                                   StimKind kind, double length_s,
                                   const NbcOptions& nbc = {});

/// simulate -> features -> both LOO tasks for one condition.
ConditionScores run_and_score(StimKind kind, double length_s,
                              const ProtocolConfig& protocol,
                              const SimConfig& cfg, uint64_t seed,
                              const FeatureOptions& features = {},
                              const NbcOptions& nbc = {});

/// Full kinds x lengths sweep for one seed.
std::vector<ConditionScores> run_sweep(const ProtocolConfig& protocol,
                                       const SimConfig& cfg, uint64_t seed,
                                       const FeatureOptions& features = {},
                                       const NbcOptions& nbc = {});

}  // namespace assr
