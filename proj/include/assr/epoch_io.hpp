#pragma once

#include "assr/eegsim.hpp"
#include "assr/types.hpp"

#include <string>
#include <vector>

namespace assr {

/// Binary epoch file: an 8-field little-endian uint32 header
///   magic ("ASR1"), version, n_channels, n_samples, eeg_rate (integral Hz),
///   round(f_m * 1000), direction code, attended flag
/// followed by n_channels * n_samples little-endian 32-bit floats,
/// channel-major. Re-writing a loaded epoch is byte-identical.
void write_epoch(const Epoch& epoch, const std::string& path);
Epoch read_epoch(const std::string& path);

/// Writes one condition directory: epoch_000.bin ... plus manifest.json
/// listing per-epoch labels (trial, direction, f_m, attended, onset).
void write_epoch_set(const EpochSet& set, const std::string& dir);

/// Loads a condition directory written by write_epoch_set.
EpochSet read_epoch_set(const std::string& dir);

}  // namespace assr
