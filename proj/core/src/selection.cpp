#include "roughdep/selection.hpp"

#include <optional>
#include <stdexcept>

namespace roughdep {

namespace {

void require_conditionals(const DecisionSystem& system) {
  if (system.all_conditionals().empty())
    throw std::invalid_argument("selection requires at least one conditional attribute");
}

void warn_if_not_monotone(SelectionTrace& trace) {
  if (trace.measure == MeasureId::rel || trace.measure == MeasureId::dir)
    trace.warnings.push_back("measure '" + measure_name(trace.measure) +
                             "' is not monotone; the greedy result carries no minimality or "
                             "convergence guarantee");
}

}  // namespace

SelectionTrace forward_select(const DecisionSystem& system, MeasureId measure) {
  require_conditionals(system);
  const AttributeSet all = system.all_conditionals();

  SelectionTrace trace;
  trace.measure = measure;
  trace.target = dependency(system, all, measure);
  warn_if_not_monotone(trace);

  AttributeSet working;
  Fraction value = dependency(system, working, measure);
  while (value != trace.target && working != all) {
    // One argmax attribute per round, even at zero gain; ties resolve to the
    // lowest attribute index because only strict improvement replaces best.
    std::optional<std::size_t> best;
    Fraction best_value;
    for (const auto a : all.indices()) {
      if (working.contains(a)) continue;
      const Fraction candidate = dependency(system, working.with(a), measure);
      if (!best || candidate > best_value) {
        best = a;
        best_value = candidate;
      }
    }
    working = working.with(*best);
    value = best_value;
    trace.steps.push_back({*best, StepAction::added, value});
  }
  trace.result = working;
  trace.converged = value == trace.target;
  return trace;
}

SelectionTrace backward_eliminate(const DecisionSystem& system, MeasureId measure) {
  require_conditionals(system);
  const AttributeSet all = system.all_conditionals();

  SelectionTrace trace;
  trace.measure = measure;
  trace.target = dependency(system, all, measure);
  warn_if_not_monotone(trace);

  AttributeSet working = all;
  bool removed = true;
  while (removed) {
    removed = false;
    const auto scan = working.indices();  // descending-index scan, restart after a removal
    for (auto it = scan.rbegin(); it != scan.rend(); ++it) {
      const AttributeSet candidate = working.without(*it);
      const Fraction value = dependency(system, candidate, measure);
      if (value == trace.target) {
        working = candidate;
        trace.steps.push_back({*it, StepAction::removed, value});
        removed = true;
        break;
      }
    }
  }
  trace.result = working;
  trace.converged = dependency(system, working, measure) == trace.target;
  return trace;
}

bool is_reduct(const DecisionSystem& system, const AttributeSet& attrs, MeasureId measure) {
  require_conditionals(system);
  for (const auto a : attrs.indices())
    if (a >= system.attribute_count() || a == system.decision_index())
      throw std::invalid_argument("is_reduct: not a conditional attribute set");
  const Fraction target = dependency(system, system.all_conditionals(), measure);
  const Fraction value = dependency(system, attrs, measure);
  if (value != target) return false;
  for (const auto a : attrs.indices())
    if (dependency(system, attrs.without(a), measure) >= value) return false;
  return true;
}

std::vector<AttributeSet> exhaustive_reducts(const DecisionSystem& system, MeasureId measure,
                                             std::size_t max_attrs) {
  require_conditionals(system);
  const AttributeSet all = system.all_conditionals();
  const std::size_t n = all.size();
  if (n > max_attrs)
    throw std::invalid_argument("exhaustive_reducts: " + std::to_string(n) +
                                " conditional attributes exceed the cap of " +
                                std::to_string(max_attrs));
  const Fraction target = dependency(system, all, measure);

  // Size-then-lexicographic enumeration. A candidate is minimal iff it hits
  // the target and no smaller already-found reduct is contained in it: any
  // strict subset hitting the target contains a minimal one, and that minimal
  // subset was enumerated earlier.
  std::vector<AttributeSet> reducts;
  std::vector<std::size_t> pick;
  const auto is_covered = [&](const AttributeSet& candidate) {
    for (const auto& found : reducts)
      if (found.is_subset_of(candidate) && found != candidate) return true;
    return false;
  };
  for (std::size_t size = 0; size <= n; ++size) {
    pick.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      std::vector<std::size_t> subset(size);
      for (std::size_t i = 0; i < size; ++i) subset[i] = all.indices()[pick[i]];
      AttributeSet candidate(std::move(subset));
      if (!is_covered(candidate) && dependency(system, candidate, measure) == target)
        reducts.push_back(std::move(candidate));
      // Advance to the next size-`size` combination in lexicographic order.
      if (size == 0) break;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return reducts;
}

}  // namespace roughdep
