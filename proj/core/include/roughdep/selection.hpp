#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughdep/dataset.hpp"
#include "roughdep/fraction.hpp"
#include "roughdep/measures.hpp"

namespace roughdep {

enum class StepAction { added, removed };

struct SelectionStep {
  std::size_t attribute;  // index into the system's attributes
  StepAction action = StepAction::added;
  Fraction value;         // dependency of the working set after this step
};

/// Full record of a selection run: per-step decisions, the target dependency
/// Dep(C, D), the resulting subset, and whether the run ended with the exact
/// target value. Warnings flag non-monotone measures, whose greedy results
/// carry no optimality guarantee.
struct SelectionTrace {
  MeasureId measure = MeasureId::cla;
  Fraction target;
  std::vector<SelectionStep> steps;
  AttributeSet result;
  bool converged = false;
  std::vector<std::string> warnings;
};

/// Greedy forward search: start from ∅ and add the best single attribute per
/// round (ties to the lowest index, additions happen even at zero gain) until
/// Dep(R) = Dep(C) or R = C. For monotone measures the run converges, at
/// R = C at the latest.
SelectionTrace forward_select(const DecisionSystem& system, MeasureId measure);

/// Backward elimination: start from C, scan attributes by descending index,
/// and remove any whose removal keeps Dep exactly at Dep(C); each removal
/// restarts the scan. The invariant Dep(R) = Dep(C) holds throughout.
SelectionTrace backward_eliminate(const DecisionSystem& system, MeasureId measure);

/// True iff Dep(S) = Dep(C) and dropping any single attribute of S strictly
/// lowers the value. For monotone measures this is exactly minimality; for
/// rel/dir it is only the single-removal criterion.
bool is_reduct(const DecisionSystem& system, const AttributeSet& attrs, MeasureId measure);

/// All minimal subsets S with Dep(S) = Dep(C), enumerated in size-then-
/// lexicographic order (so the output is deterministic). Refuses systems with
/// more than max_attrs conditional attributes; the search is exponential by
/// design and exists as a ground-truth oracle for the greedy searches.
std::vector<AttributeSet> exhaustive_reducts(const DecisionSystem& system, MeasureId measure,
                                             std::size_t max_attrs = 20);

}  // namespace roughdep
