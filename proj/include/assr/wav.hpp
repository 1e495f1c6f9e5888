#pragma once

#include "assr/stimgen.hpp"

#include <string>

namespace assr {

/// Writes a stereo waveform as RIFF/WAVE, PCM format tag 1, 2 channels,
/// 16 bits/sample, little-endian, interleaved L/R. Samples map to PCM as
/// round(sample * 32767); any |sample| > 1 is a ValidationError.
void write_wav(const StereoWaveform& stereo, const std::string& path);

/// Reads a file written by write_wav back into [-1, 1] doubles (PCM/32767).
StereoWaveform read_wav(const std::string& path);

}  // namespace assr
