#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughdep/dataset.hpp"
#include "roughdep/fraction.hpp"
#include "roughdep/partition.hpp"

namespace roughdep {

/// Lower and upper approximations of a target object set under the
/// indiscernibility relation of an attribute subset, plus their difference.
/// All three lists are ascending. lower ⊆ target ⊆ upper, and lower/upper are
/// unions of blocks of U/attrs.
struct ApproximationResult {
  std::vector<std::size_t> lower;
  std::vector<std::size_t> upper;
  std::vector<std::size_t> boundary;
};

ApproximationResult approximate(const DecisionSystem& system, const AttributeSet& attrs,
                                const std::vector<std::size_t>& target);

/// POS_attrs(D): ascending list of objects whose block decides the decision
/// unambiguously, i.e. the union of lower approximations of the decision
/// classes.
std::vector<std::size_t> positive_region(const DecisionSystem& system, const AttributeSet& attrs);

/// |POS_R(D)| / |U|.
Fraction classical_dependency(const DecisionSystem& system, const AttributeSet& attrs);

/// |U/R| / |U/(R ∪ D)|.
Fraction relative_dependency(const DecisionSystem& system, const AttributeSet& attrs);

/// |U/(R ∪ D)| / |U|.
Fraction direct_dependency(const DecisionSystem& system, const AttributeSet& attrs);

/// Conf(C_row → D_col) = counts[row][col] / row_sums[row].
Fraction confidence(const ContingencyTable& table, std::size_t row, std::size_t col);

/// W(R, D) = Σ over blocks of |block| · max confidence = Σ of per-block
/// majority counts. Always an integer in [0, |U|].
long long weighted_confidence_mass(const DecisionSystem& system, const AttributeSet& attrs);

/// Exp(R, D) = W(R, D) / |U|.
Fraction expected_confidence_dependency(const DecisionSystem& system, const AttributeSet& attrs);

/// Same value computed from an already-built contingency table:
/// Σ row_max / total.
Fraction ecd_from_contingency(const ContingencyTable& table);

enum class MeasureId { cla, rel, dir, ecd };

/// "cla", "rel", "dir", "ecd".
const std::string& measure_name(MeasureId id);

/// Inverse of measure_name; throws std::invalid_argument on unknown names.
MeasureId parse_measure(const std::string& name);

/// Uniform entry point used by selection and the CLI.
Fraction dependency(const DecisionSystem& system, const AttributeSet& attrs, MeasureId measure);

}  // namespace roughdep
