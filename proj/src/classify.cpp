#include "assr/classify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace assr {

std::vector<std::string> Dataset::classes() const {
  std::set<std::string> s(labels.begin(), labels.end());
  return std::vector<std::string>(s.begin(), s.end());
}

void Dataset::validate() const {
  if (samples.size() != labels.size())
    throw ValidationError("dataset samples/labels size mismatch");
  if (samples.empty()) throw ValidationError("dataset is empty");
  const size_t dim = samples.front().size();
  if (dim == 0) throw ValidationError("dataset has zero-dimensional samples");
  for (const auto& row : samples)
    if (row.size() != dim)
      throw ValidationError("dataset rows have inconsistent dimensions");
  if (classes().size() < 2)
    throw ValidationError("dataset needs at least 2 classes");
}

NbcModel fit_nbc(const Dataset& train, const NbcOptions& options) {
  train.validate();
  if (options.variance_floor <= 0.0)
    throw ValidationError("variance floor must be positive");

  NbcModel model;
  model.classes = train.classes();
  model.variance_floor = options.variance_floor;
  const int n_classes = static_cast<int>(model.classes.size());
  const int dim = train.dimension();
  const int n = static_cast<int>(train.samples.size());

  model.log_priors.resize(n_classes);
  model.means.assign(n_classes, std::vector<double>(dim, 0.0));
  model.variances.assign(n_classes, std::vector<double>(dim, 0.0));

  for (int ci = 0; ci < n_classes; ++ci) {
    const std::string& cls = model.classes[ci];
    std::vector<const std::vector<double>*> members;
    for (int i = 0; i < n; ++i)
      if (train.labels[i] == cls) members.push_back(&train.samples[i]);
    const int m = static_cast<int>(members.size());
    if (m < 2)
      throw ValidationError("class '" + cls +
                            "' has fewer than 2 samples; cannot fit");
    model.log_priors[ci] =
        options.uniform_priors
            ? -std::log(static_cast<double>(n_classes))
            : std::log(static_cast<double>(m) / static_cast<double>(n));
    for (int f = 0; f < dim; ++f) {
      double mean = 0.0;
      for (const auto* row : members) mean += (*row)[f];
      mean /= m;
      double ss = 0.0;
      for (const auto* row : members) {
        const double d = (*row)[f] - mean;
        ss += d * d;
      }
      model.means[ci][f] = mean;
      model.variances[ci][f] = std::max(ss / (m - 1), options.variance_floor);
    }
  }
  return model;
}

Prediction predict_nbc(const NbcModel& model, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) !=
      static_cast<int>(model.means.empty() ? 0 : model.means.front().size()))
    throw ValidationError("predict_nbc dimension mismatch");
  for (double v : x)
    if (!std::isfinite(v))
      throw ValidationError("predict_nbc requires finite input");

  Prediction p;
  p.log_posteriors.resize(model.classes.size());
  int best = 0;
  for (size_t ci = 0; ci < model.classes.size(); ++ci) {
    double lp = model.log_priors[ci];
    for (size_t f = 0; f < x.size(); ++f) {
      const double var = model.variances[ci][f];
      const double d = x[f] - model.means[ci][f];
      lp += -0.5 * std::log(2.0 * M_PI * var) - d * d / (2.0 * var);
    }
    p.log_posteriors[ci] = lp;
    if (lp > p.log_posteriors[best]) best = static_cast<int>(ci);
  }
  p.label = model.classes[best];
  return p;
}

CvResult loo_cv(const Dataset& data, const NbcOptions& options) {
  data.validate();
  const auto classes = data.classes();
  const int n = static_cast<int>(data.samples.size());

  // Every fold's training set must still cover all classes.
  for (const auto& cls : classes) {
    const auto count = std::count(data.labels.begin(), data.labels.end(), cls);
    if (count < 2)
      throw ValidationError("class '" + cls +
                            "' has fewer than 2 samples; leave-one-out folds "
                            "would lose it");
  }

  CvResult result;
  result.classes = classes;
  result.confusion.assign(classes.size(),
                          std::vector<int>(classes.size(), 0));
  result.truths.resize(n);
  result.predictions.resize(n);

  auto class_index = [&](const std::string& label) {
    return static_cast<int>(std::lower_bound(classes.begin(), classes.end(),
                                             label) -
                            classes.begin());
  };

  int correct = 0;
  for (int k = 0; k < n; ++k) {
    Dataset train;
    train.samples.reserve(n - 1);
    train.labels.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      train.samples.push_back(data.samples[i]);
      train.labels.push_back(data.labels[i]);
    }
    const NbcModel model = fit_nbc(train, options);
    const Prediction p = predict_nbc(model, data.samples[k]);
    result.truths[k] = data.labels[k];
    result.predictions[k] = p.label;
    result.confusion[class_index(data.labels[k])][class_index(p.label)] += 1;
    if (p.label == data.labels[k]) ++correct;
  }
  result.accuracy = static_cast<double>(correct) / n;
  return result;
}

std::string CvResult::to_json() const {
  nlohmann::json j;
  j["accuracy"] = accuracy;
  j["n_samples"] = truths.size();
  j["classes"] = classes;
  j["confusion"] = confusion;
  j["folds"] = nlohmann::json::array();
  for (size_t i = 0; i < truths.size(); ++i) {
    j["folds"].push_back({{"index", i},
                          {"truth", truths[i]},
                          {"predicted", predictions[i]}});
  }
  return j.dump(2);
}

std::map<Direction, Dataset> assemble_tvnt(
    const std::vector<FeatureVector>& features) {
  if (features.empty())
    throw ValidationError("assemble_tvnt: no feature vectors given");

  std::map<Direction, Dataset> out;
  for (Direction d :
       {Direction::Left, Direction::Center, Direction::Right}) {
    Dataset ds;
    int n_target = 0;
    for (const FeatureVector& fv : features) {
      if (fv.direction != d) continue;
      ds.samples.push_back(fv.values);
      ds.labels.push_back(fv.attended ? kTargetLabel : kNonTargetLabel);
      if (fv.attended) ++n_target;
    }
    const int n = static_cast<int>(ds.samples.size());
    if (n == 0)
      throw ValidationError("assemble_tvnt: no epochs for direction " +
                            to_string(d));
    if (n_target == 0 || n_target == n)
      throw ValidationError("assemble_tvnt: direction " + to_string(d) +
                            " needs both target and non-target epochs");
    out.emplace(d, std::move(ds));
  }
  return out;
}

Dataset assemble_direction(const std::vector<FeatureVector>& features) {
  if (features.empty())
    throw ValidationError("assemble_direction: no feature vectors given");

  std::map<int, std::map<Direction, const FeatureVector*>> trials;
  for (const FeatureVector& fv : features) {
    auto& slot = trials[fv.trial_index][fv.direction];
    if (slot != nullptr)
      throw ValidationError("assemble_direction: trial " +
                            std::to_string(fv.trial_index) +
                            " has duplicate direction " + to_string(fv.direction));
    slot = &fv;
  }

  Dataset ds;
  for (const auto& [trial, by_dir] : trials) {
    if (by_dir.size() != 3)
      throw ValidationError("assemble_direction: trial " + std::to_string(trial) +
                            " has " + std::to_string(by_dir.size()) +
                            " stimuli, expected 3");
    // Concatenation is keyed by direction (left | center | right), not by
    // presentation order, so the sample geometry is fixed.
    std::vector<double> row;
    const FeatureVector* attended = nullptr;
    for (Direction d :
         {Direction::Left, Direction::Center, Direction::Right}) {
      const FeatureVector* fv = by_dir.at(d);
      row.insert(row.end(), fv->values.begin(), fv->values.end());
      if (fv->attended) {
        if (attended != nullptr)
          throw ValidationError("assemble_direction: trial " +
                                std::to_string(trial) +
                                " has more than one attended stimulus");
        attended = fv;
      }
    }
    if (attended == nullptr)
      throw ValidationError("assemble_direction: trial " + std::to_string(trial) +
                            " has no attended stimulus");
    ds.samples.push_back(std::move(row));
    ds.labels.push_back(to_string(attended->direction));
  }
  return ds;
}

}  // namespace assr
