#pragma once

#include "assr/dsp.hpp"
#include "assr/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace assr {

/// Labeled feature matrix. Class labels are strings; the class order used
/// everywhere (priors, confusion matrix, tie-breaking) is the sorted order
/// of the distinct labels.
struct Dataset {
  std::vector<std::vector<double>> samples;
  std::vector<std::string> labels;

  int dimension() const {
    return samples.empty() ? 0 : static_cast<int>(samples.front().size());
  }
  std::vector<std::string> classes() const;
  void validate() const;
};

/// Gaussian naive Bayes: per-class empirical priors and per-feature mean /
/// unbiased variance, with a variance floor for degenerate features.
struct NbcModel {
  std::vector<std::string> classes;          // sorted
  std::vector<double> log_priors;            // per class
  std::vector<std::vector<double>> means;    // [class][feature]
  std::vector<std::vector<double>> variances;
  double variance_floor = 1e-9;
};

struct NbcOptions {
  double variance_floor = 1e-9;
  bool uniform_priors = false;  // empirical priors by default
};

NbcModel fit_nbc(const Dataset& train, const NbcOptions& options = {});

struct Prediction {
  std::string label;
  std::vector<double> log_posteriors;  // unnormalized, per class in order
};

/// argmax over classes of log prior + sum of per-feature log densities.
/// Exact ties break toward the earlier class in sorted order.
Prediction predict_nbc(const NbcModel& model, const std::vector<double>& x);

/// Leave-one-out cross-validation result.
struct CvResult {
  double accuracy = 0.0;
  std::vector<std::string> classes;
  std::vector<std::string> truths;       // per fold
  std::vector<std::string> predictions;  // per fold
  std::vector<std::vector<int>> confusion;  // [truth][predicted]

  std::string to_json() const;
};

CvResult loo_cv(const Dataset& data, const NbcOptions& options = {});

/// Target / non-target assembly: one 30-sample binary dataset per direction
/// (10 target + 20 non-target), from the 90 feature vectors of a condition.
std::map<Direction, Dataset> assemble_tvnt(const std::vector<FeatureVector>& features);

/// Direction assembly: one 30-sample dataset whose rows concatenate each
/// trial's three vectors keyed by direction (left | center | right), labeled
/// with the trial's target direction.
Dataset assemble_direction(const std::vector<FeatureVector>& features);

inline const char* kTargetLabel = "target";
inline const char* kNonTargetLabel = "non-target";

}  // namespace assr
