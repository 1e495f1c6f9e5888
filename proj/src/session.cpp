#include "assr/session.hpp"

namespace assr {

std::vector<FeatureVector> extract_features(const EpochSet& set,
                                            const FeatureOptions& options) {
  std::vector<FeatureVector> out;
  out.reserve(set.epochs.size());
  // One pipeline per modulation frequency; all epochs in a set share rate
  // and length.
  std::map<double, PlvPipeline> pipelines;
  for (const Epoch& epoch : set.epochs) {
    auto it = pipelines.find(epoch.f_m);
    if (it == pipelines.end()) {
      it = pipelines
               .emplace(epoch.f_m, PlvPipeline(epoch.eeg_rate, epoch.n_samples,
                                               epoch.f_m, options.plv))
               .first;
    }
    if (options.apply_preprocess) {
      out.push_back(it->second.features(preprocess_raw(epoch)));
    } else {
      out.push_back(it->second.features(epoch));
    }
  }
  return out;
}

ConditionScores evaluate_condition(const std::vector<FeatureVector>& features,
                                   StimKind kind, double length_s,
                                   const NbcOptions& nbc) {
  ConditionScores scores;
  scores.kind = kind;
  scores.length_s = length_s;

  const auto tvnt = assemble_tvnt(features);
  double sum = 0.0;
  for (const auto& [dir, dataset] : tvnt) {
    const CvResult r = loo_cv(dataset, nbc);
    scores.tvnt_accuracy[static_cast<int>(dir)] = r.accuracy;
    sum += r.accuracy;
  }
  scores.tvnt_mean = sum / 3.0;
  scores.direction_accuracy = loo_cv(assemble_direction(features), nbc).accuracy;
  return scores;
}

ConditionScores run_and_score(StimKind kind, double length_s,
                              const ProtocolConfig& protocol,
                              const SimConfig& cfg, uint64_t seed,
                              const FeatureOptions& features,
                              const NbcOptions& nbc) {
  const EpochSet set = run_condition(kind, length_s, protocol, cfg, seed);
  return evaluate_condition(extract_features(set, features), kind, length_s, nbc);
}

std::vector<ConditionScores> run_sweep(const ProtocolConfig& protocol,
                                       const SimConfig& cfg, uint64_t seed,
                                       const FeatureOptions& features,
                                       const NbcOptions& nbc) {
  protocol.validate();
  std::vector<ConditionScores> out;
  for (StimKind kind : protocol.stimulus_kinds)
    for (double length : protocol.stimulus_lengths_s)
      out.push_back(
          run_and_score(kind, length, protocol, cfg, seed, features, nbc));
  return out;
}

}  // namespace assr
