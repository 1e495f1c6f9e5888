#pragma once

#include "assr/dsp.hpp"

#include <string>
#include <vector>

namespace assr {

/// Feature table serialization for 16-channel epochs (120 PLV columns).
///
/// Column order is a compatibility contract:
///   pair_01_02, pair_01_03, ..., pair_15_16, f_m, direction, attended,
///   kind, length, trial
/// Values are written with round-trippable precision so re-running a write
/// over identical inputs is byte-identical.
void write_feature_csv(const std::vector<FeatureVector>& features,
                       const std::string& path);

std::vector<FeatureVector> read_feature_csv(const std::string& path);

}  // namespace assr
