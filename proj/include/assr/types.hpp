#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace assr {

/// Raised when an input violates a documented precondition or invariant.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised on filesystem / format failures. The CLI maps this to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction : int { Left = 0, Center = 1, Right = 2 };

enum class StimKind : int { Sam = 0, Fam = 1, Clicks = 2, AmFm = 3 };

std::string to_string(Direction d);
std::string to_string(StimKind k);
Direction direction_from_string(const std::string& s);
StimKind stim_kind_from_string(const std::string& s);

/// One stimulus-locked multichannel EEG segment with its labels.
/// Samples are stored channel-major: data[c * n_samples + t].
struct Epoch {
  int n_channels = 0;
  int n_samples = 0;
  double eeg_rate = 0.0;
  double f_m = 0.0;          // modulation frequency of the evoking stimulus
  Direction direction = Direction::Left;
  bool attended = false;
  StimKind kind = StimKind::Sam;
  double length_s = 0.0;     // nominal stimulus length in seconds
  int trial_index = 0;

  std::vector<double> data;

  std::span<const double> channel(int c) const {
    return std::span<const double>(data).subspan(
        static_cast<size_t>(c) * n_samples, n_samples);
  }
  std::span<double> channel(int c) {
    return std::span<double>(data).subspan(
        static_cast<size_t>(c) * n_samples, n_samples);
  }
  double& at(int c, int t) { return data[static_cast<size_t>(c) * n_samples + t]; }
  double at(int c, int t) const { return data[static_cast<size_t>(c) * n_samples + t]; }
};

}  // namespace assr
