#include "roughdep/evaluation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace roughdep {

namespace {

std::vector<std::uint32_t> signature(const DecisionSystem& system, const AttributeSet& attrs,
                                     std::size_t object) {
  std::vector<std::uint32_t> sig;
  sig.reserve(attrs.size());
  for (const auto a : attrs.indices()) sig.push_back(system.value(object, a));
  return sig;
}

// Majority model over an arbitrary training subset of the universe.
MajorityModel train_on(const DecisionSystem& system, const AttributeSet& attrs,
                       const std::vector<std::size_t>& training) {
  for (const auto a : attrs.indices())
    if (a >= system.attribute_count() || a == system.decision_index())
      throw std::invalid_argument("train_majority: not a conditional attribute set");

  const std::size_t d = system.decision_index();
  const std::size_t classes = system.dictionary(d).size();
  std::map<std::vector<std::uint32_t>, std::vector<long long>> tallies;
  std::vector<long long> global(classes, 0);
  for (const auto x : training) {
    auto& tally = tallies.try_emplace(signature(system, attrs, x), classes, 0).first->second;
    ++tally[system.value(x, d)];
    ++global[system.value(x, d)];
  }

  const auto argmax = [](const std::vector<long long>& tally) {
    std::size_t best = 0;  // ties resolve to the smallest decision id
    for (std::size_t c = 1; c < tally.size(); ++c)
      if (tally[c] > tally[best]) best = c;
    return static_cast<std::uint32_t>(best);
  };

  MajorityModel model;
  model.attrs = attrs;
  model.schema_width = system.attribute_count();
  for (const auto& [sig, tally] : tallies) model.rules.emplace(sig, argmax(tally));
  model.fallback = argmax(global);
  return model;
}

}  // namespace

MajorityModel train_majority(const DecisionSystem& system, const AttributeSet& attrs) {
  std::vector<std::size_t> everyone(system.object_count());
  for (std::size_t x = 0; x < everyone.size(); ++x) everyone[x] = x;
  return train_on(system, attrs, everyone);
}

std::uint32_t predict(const MajorityModel& model, std::span<const std::uint32_t> row) {
  if (row.size() < model.schema_width)
    throw std::invalid_argument("predict: row does not cover the model's attributes");
  std::vector<std::uint32_t> sig;
  sig.reserve(model.attrs.size());
  for (const auto a : model.attrs.indices()) sig.push_back(row[a]);
  const auto it = model.rules.find(sig);
  return it != model.rules.end() ? it->second : model.fallback;
}

std::uint32_t predict(const MajorityModel& model, const DecisionSystem& system,
                      std::size_t object) {
  if (object >= system.object_count())
    throw std::invalid_argument("predict: object index out of range");
  std::vector<std::uint32_t> row;
  row.reserve(system.attribute_count());
  for (std::size_t a = 0; a < system.attribute_count(); ++a)
    row.push_back(system.value(object, a));
  return predict(model, row);
}

EvaluationMetrics confusion_metrics(const std::vector<std::uint32_t>& predictions,
                                    const std::vector<std::uint32_t>& truths) {
  if (predictions.size() != truths.size())
    throw std::invalid_argument("confusion_metrics: prediction/truth length mismatch");
  if (truths.empty()) throw std::invalid_argument("confusion_metrics: no observations");

  std::vector<std::uint32_t> labels;
  labels.insert(labels.end(), truths.begin(), truths.end());
  labels.insert(labels.end(), predictions.begin(), predictions.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  const long long n = static_cast<long long>(truths.size());
  EvaluationMetrics metrics;
  long long correct = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) correct += predictions[i] == truths[i] ? 1 : 0;
  metrics.accuracy = Fraction(correct, n);

  Fraction precision_sum, recall_sum, f1_sum;
  for (const auto label : labels) {
    long long tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < truths.size(); ++i) {
      const bool predicted = predictions[i] == label;
      const bool actual = truths[i] == label;
      tp += predicted && actual ? 1 : 0;
      fp += predicted && !actual ? 1 : 0;
      fn += !predicted && actual ? 1 : 0;
    }
    ClassMetrics cm;
    cm.label = label;
    cm.support = static_cast<std::size_t>(tp + fn);
    // Zero-denominator cells score 0 and are counted, not propagated as NaN.
    if (tp + fp == 0) {
      ++metrics.zero_denominator_cells;
    } else {
      cm.precision = Fraction(tp, tp + fp);
    }
    if (tp + fn == 0) {
      ++metrics.zero_denominator_cells;
    } else {
      cm.recall = Fraction(tp, tp + fn);
    }
    if (cm.precision + cm.recall == Fraction(0, 1)) {
      ++metrics.zero_denominator_cells;
    } else {
      cm.f1 = Fraction(2, 1) * cm.precision * cm.recall / (cm.precision + cm.recall);
    }
    const Fraction weight(static_cast<long long>(cm.support), n);
    precision_sum = precision_sum + weight * cm.precision;
    recall_sum = recall_sum + weight * cm.recall;
    f1_sum = f1_sum + weight * cm.f1;
    metrics.per_class.push_back(cm);
  }
  metrics.precision = precision_sum;
  metrics.recall = recall_sum;
  metrics.f1 = f1_sum;
  return metrics;
}

EvaluationMetrics evaluate_resubstitution(const DecisionSystem& system,
                                          const AttributeSet& attrs) {
  const MajorityModel model = train_majority(system, attrs);
  std::vector<std::uint32_t> predictions, truths;
  predictions.reserve(system.object_count());
  truths.reserve(system.object_count());
  for (std::size_t x = 0; x < system.object_count(); ++x) {
    predictions.push_back(predict(model, system, x));
    truths.push_back(system.value(x, system.decision_index()));
  }
  return confusion_metrics(predictions, truths);
}

std::vector<std::size_t> stratified_folds(const DecisionSystem& system, std::size_t k,
                                          std::uint64_t seed) {
  const std::size_t n = system.object_count();
  if (k < 2) throw std::invalid_argument("stratified_kfold: k must be at least 2");
  if (k > n) throw std::invalid_argument("stratified_kfold: k exceeds the universe size");

  // Frozen shuffle: mt19937_64 Fisher-Yates, then deal each class's members
  // round-robin with one global fold cursor. Fold sizes therefore differ by
  // at most one, both overall and within every class.
  std::vector<std::size_t> order(n);
  for (std::size_t x = 0; x < n; ++x) order[x] = x;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const std::size_t d = system.decision_index();
  std::vector<std::vector<std::size_t>> by_class(system.dictionary(d).size());
  for (const auto x : order) by_class[system.value(x, d)].push_back(x);

  std::vector<std::size_t> fold_of(n, 0);
  std::size_t cursor = 0;
  for (const auto& members : by_class) {
    for (const auto x : members) {
      fold_of[x] = cursor;
      cursor = (cursor + 1) % k;
    }
  }
  return fold_of;
}

EvaluationMetrics stratified_kfold(const DecisionSystem& system, const AttributeSet& attrs,
                                   std::size_t k, std::uint64_t seed) {
  const std::size_t n = system.object_count();
  const std::vector<std::size_t> fold_of = stratified_folds(system, k, seed);
  const std::size_t d = system.decision_index();

  std::vector<std::uint32_t> predictions(n, 0), truths(n, 0);
  for (std::size_t fold = 0; fold < k; ++fold) {
    std::vector<std::size_t> training;
    training.reserve(n);
    for (std::size_t x = 0; x < n; ++x)
      if (fold_of[x] != fold) training.push_back(x);
    const MajorityModel model = train_on(system, attrs, training);
    for (std::size_t x = 0; x < n; ++x) {
      if (fold_of[x] != fold) continue;
      predictions[x] = predict(model, system, x);
      truths[x] = system.value(x, d);
    }
  }

  EvaluationMetrics metrics = confusion_metrics(predictions, truths);
  metrics.k = k;
  metrics.seed = seed;
  return metrics;
}

}  // namespace roughdep
