#include "roughdep/measures.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace roughdep {

ApproximationResult approximate(const DecisionSystem& system, const AttributeSet& attrs,
                                const std::vector<std::size_t>& target) {
  std::vector<bool> in_target(system.object_count(), false);
  for (const auto x : target) {
    if (x >= system.object_count())
      throw std::invalid_argument("approximate: target object index out of range");
    in_target[x] = true;
  }

  const Partition p = partition_by(system, attrs);
  ApproximationResult result;
  for (const auto& block : p.blocks()) {
    std::size_t hits = 0;
    for (const auto x : block) hits += in_target[x] ? 1 : 0;
    if (hits == block.size())
      result.lower.insert(result.lower.end(), block.begin(), block.end());
    if (hits > 0) result.upper.insert(result.upper.end(), block.begin(), block.end());
    if (hits > 0 && hits < block.size())
      result.boundary.insert(result.boundary.end(), block.begin(), block.end());
  }
  std::sort(result.lower.begin(), result.lower.end());
  std::sort(result.upper.begin(), result.upper.end());
  std::sort(result.boundary.begin(), result.boundary.end());
  return result;
}

std::vector<std::size_t> positive_region(const DecisionSystem& system, const AttributeSet& attrs) {
  const Partition p = partition_by(system, attrs);
  const std::size_t d = system.decision_index();
  std::vector<std::size_t> region;
  for (const auto& block : p.blocks()) {
    const auto label = system.value(block.front(), d);
    const bool pure = std::all_of(block.begin(), block.end(),
                                  [&](std::size_t x) { return system.value(x, d) == label; });
    if (pure) region.insert(region.end(), block.begin(), block.end());
  }
  std::sort(region.begin(), region.end());
  return region;
}

Fraction classical_dependency(const DecisionSystem& system, const AttributeSet& attrs) {
  const auto pos = positive_region(system, attrs);
  return Fraction(static_cast<long long>(pos.size()),
                  static_cast<long long>(system.object_count()));
}

Fraction relative_dependency(const DecisionSystem& system, const AttributeSet& attrs) {
  const auto numerator = partition_by(system, attrs).block_count();
  const auto denominator = partition_with_decision(system, attrs).block_count();
  return Fraction(static_cast<long long>(numerator), static_cast<long long>(denominator));
}

Fraction direct_dependency(const DecisionSystem& system, const AttributeSet& attrs) {
  const auto blocks = partition_with_decision(system, attrs).block_count();
  return Fraction(static_cast<long long>(blocks), static_cast<long long>(system.object_count()));
}

Fraction confidence(const ContingencyTable& table, std::size_t row, std::size_t col) {
  if (row >= table.rows() || col >= table.cols())
    throw std::invalid_argument("confidence: cell out of range");
  return Fraction(table.counts[row][col], table.row_sums[row]);
}

long long weighted_confidence_mass(const DecisionSystem& system, const AttributeSet& attrs) {
  const Partition p = partition_by(system, attrs);
  const std::size_t d = system.decision_index();
  std::vector<long long> tally(system.dictionary(d).size(), 0);
  long long mass = 0;
  for (const auto& block : p.blocks()) {
    long long best = 0;
    for (const auto x : block) best = std::max(best, ++tally[system.value(x, d)]);
    mass += best;
    for (const auto x : block) tally[system.value(x, d)] = 0;
  }
  return mass;
}

Fraction expected_confidence_dependency(const DecisionSystem& system, const AttributeSet& attrs) {
  return Fraction(weighted_confidence_mass(system, attrs),
                  static_cast<long long>(system.object_count()));
}

Fraction ecd_from_contingency(const ContingencyTable& table) {
  long long mass = 0;
  for (const auto m : table.row_max) mass += m;
  return Fraction(mass, table.total);
}

const std::string& measure_name(MeasureId id) {
  static const std::array<std::string, 4> names = {"cla", "rel", "dir", "ecd"};
  return names[static_cast<std::size_t>(id)];
}

MeasureId parse_measure(const std::string& name) {
  for (const auto id : {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd})
    if (measure_name(id) == name) return id;
  throw std::invalid_argument("unknown measure '" + name + "' (expected cla, rel, dir, or ecd)");
}

Fraction dependency(const DecisionSystem& system, const AttributeSet& attrs, MeasureId measure) {
  switch (measure) {
    case MeasureId::cla:
      return classical_dependency(system, attrs);
    case MeasureId::rel:
      return relative_dependency(system, attrs);
    case MeasureId::dir:
      return direct_dependency(system, attrs);
    case MeasureId::ecd:
      return expected_confidence_dependency(system, attrs);
  }
  throw std::invalid_argument("unknown measure id");
}

}  // namespace roughdep
