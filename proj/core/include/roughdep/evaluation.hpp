#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "roughdep/dataset.hpp"
#include "roughdep/fraction.hpp"

namespace roughdep {

/// Majority-class rule table over the value signatures of a conditional
/// subset. Every training signature gets a rule labelled with its block's
/// majority decision (ties to the smallest decision id); unseen signatures
/// fall back to the training majority class.
struct MajorityModel {
  AttributeSet attrs;
  std::size_t schema_width = 0;  // attribute count of the originating system
  std::map<std::vector<std::uint32_t>, std::uint32_t> rules;
  std::uint32_t fallback = 0;
};

MajorityModel train_majority(const DecisionSystem& system, const AttributeSet& attrs);

/// Classify one full-width row of value ids. Throws std::invalid_argument if
/// the row does not provide a value for every model attribute.
std::uint32_t predict(const MajorityModel& model, std::span<const std::uint32_t> row);

/// Classify object `object` of `system` (which must share the schema the
/// model was trained on).
std::uint32_t predict(const MajorityModel& model, const DecisionSystem& system,
                      std::size_t object);

struct ClassMetrics {
  std::uint32_t label = 0;  // decision value id
  Fraction precision;
  Fraction recall;
  Fraction f1;
  std::size_t support = 0;
};

/// Exact-rational classification metrics. Aggregate precision/recall/f1 are
/// support-weighted averages over the classes present in the truth vector;
/// any 0/0 cell is reported as 0 and counted in zero_denominator_cells.
/// k = 0 means resubstitution, otherwise stratified k-fold with `seed`.
struct EvaluationMetrics {
  Fraction accuracy;
  Fraction precision;
  Fraction recall;
  Fraction f1;
  std::vector<ClassMetrics> per_class;
  std::size_t zero_denominator_cells = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

/// Metrics for a pooled prediction/truth pairing (decision value ids).
EvaluationMetrics confusion_metrics(const std::vector<std::uint32_t>& predictions,
                                    const std::vector<std::uint32_t>& truths);

/// Train on the full universe and score it back. The accuracy equals the
/// expected confidence dependency of `attrs` by construction.
EvaluationMetrics evaluate_resubstitution(const DecisionSystem& system, const AttributeSet& attrs);

/// Fold index per object for stratified k-fold, 2 <= k <= |U|. Objects are
/// shuffled once (mt19937_64 seeded Fisher-Yates), grouped by class, and
/// dealt round-robin to folds with one global cursor, so fold sizes differ by
/// at most one overall and within each class.
std::vector<std::size_t> stratified_folds(const DecisionSystem& system, std::size_t k,
                                          std::uint64_t seed);

/// Deterministic stratified k-fold cross-validation over stratified_folds.
/// Per-fold predictions are pooled before scoring.
EvaluationMetrics stratified_kfold(const DecisionSystem& system, const AttributeSet& attrs,
                                   std::size_t k, std::uint64_t seed);

}  // namespace roughdep
