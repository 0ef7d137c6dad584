#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "roughdep/dataset.hpp"

namespace roughdep {

/// Partition of the universe into indiscernibility blocks. Kept in canonical
/// form: blocks ordered by their smallest member, members ascending, and
/// block_of consistent with that numbering. Two partitions over the same
/// universe are equal as set partitions iff their canonical forms are equal.
class Partition {
 public:
  Partition(std::vector<std::uint32_t> block_of, std::vector<std::vector<std::size_t>> blocks);

  const std::vector<std::uint32_t>& block_of() const { return block_of_; }
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::size_t universe_size() const { return block_of_.size(); }

  /// One line per block, comma-separated 1-based object indices, blocks in
  /// canonical order. Intended for debugging and fixture comparison.
  std::string debug_dump() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<std::size_t>> blocks_;
};

/// U/R: group objects by their value tuple over `attrs`. The empty set yields
/// the single-block partition.
Partition partition_by(const DecisionSystem& system, const AttributeSet& attrs);

/// U/D: partition by the decision attribute alone.
Partition decision_partition(const DecisionSystem& system);

/// U/(R ∪ D): partition by `attrs` together with the decision attribute.
Partition partition_with_decision(const DecisionSystem& system, const AttributeSet& attrs);

/// Split every block of `p` by one further attribute (conditional or
/// decision). Refining by an attribute already accounted for is the identity.
Partition refine(const Partition& p, const DecisionSystem& system, std::size_t attr);

/// True iff the two partitions describe the same grouping of the same
/// universe. Throws std::invalid_argument on universe size mismatch.
bool same_partition(const Partition& a, const Partition& b);

/// Cross-tabulation of a conditional partition against the decision classes.
/// Rows follow the canonical order of U/attrs, columns the canonical order of
/// U/D; class_ids names the decision value id behind each column.
struct ContingencyTable {
  std::vector<std::vector<long long>> counts;
  std::vector<std::uint32_t> class_ids;
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  std::vector<long long> row_max;
  long long total = 0;

  std::size_t rows() const { return counts.size(); }
  std::size_t cols() const { return class_ids.size(); }
};

ContingencyTable contingency(const DecisionSystem& system, const AttributeSet& attrs);

}  // namespace roughdep
