#include "roughdep/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace roughdep {

namespace {

// One refinement pass: split the current block assignment by one attribute.
// New block ids are handed out in order of first appearance while scanning
// objects ascending, which keeps the numbering canonical (blocks ordered by
// smallest member) at every stage.
void split_by(const DecisionSystem& system, std::size_t attr, std::vector<std::uint32_t>& block_of) {
  const std::uint64_t radix = system.dictionary(attr).size();
  std::unordered_map<std::uint64_t, std::uint32_t> next;
  next.reserve(block_of.size());
  std::uint32_t fresh = 0;
  for (std::size_t x = 0; x < block_of.size(); ++x) {
    const std::uint64_t key = block_of[x] * radix + system.value(x, attr);
    const auto [it, inserted] = next.emplace(key, fresh);
    if (inserted) ++fresh;
    block_of[x] = it->second;
  }
}

Partition from_block_of(std::vector<std::uint32_t> block_of) {
  std::uint32_t count = 0;
  for (const auto b : block_of) count = std::max(count, b + 1);
  std::vector<std::vector<std::size_t>> blocks(count);
  for (std::size_t x = 0; x < block_of.size(); ++x) blocks[block_of[x]].push_back(x);
  return Partition(std::move(block_of), std::move(blocks));
}

Partition partition_over(const DecisionSystem& system, const std::vector<std::size_t>& columns) {
  std::vector<std::uint32_t> block_of(system.object_count(), 0);
  for (const auto attr : columns) split_by(system, attr, block_of);
  return from_block_of(std::move(block_of));
}

void check_conditional(const DecisionSystem& system, const AttributeSet& attrs) {
  for (const auto a : attrs.indices()) {
    if (a >= system.attribute_count())
      throw std::invalid_argument("attribute index " + std::to_string(a) + " out of range");
    if (a == system.decision_index())
      throw std::invalid_argument("attribute set must not contain the decision attribute");
  }
}

}  // namespace

Partition::Partition(std::vector<std::uint32_t> block_of,
                     std::vector<std::vector<std::size_t>> blocks)
    : block_of_(std::move(block_of)), blocks_(std::move(blocks)) {
  if (block_of_.empty()) throw std::invalid_argument("Partition: empty universe");
  std::size_t covered = 0;
  std::size_t previous_min = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    const auto& block = blocks_[b];
    if (block.empty()) throw std::invalid_argument("Partition: empty block");
    if (b > 0 && block.front() <= previous_min)
      throw std::invalid_argument("Partition: blocks not in canonical order");
    previous_min = block.front();
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0 && block[i] <= block[i - 1])
        throw std::invalid_argument("Partition: block members not ascending");
      if (block[i] >= block_of_.size() || block_of_[block[i]] != b)
        throw std::invalid_argument("Partition: block_of inconsistent with blocks");
    }
    covered += block.size();
  }
  if (covered != block_of_.size())
    throw std::invalid_argument("Partition: blocks do not cover the universe");
}

std::string Partition::debug_dump() const {
  std::ostringstream out;
  for (const auto& block : blocks_) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out << ',';
      out << block[i] + 1;
    }
    out << '\n';
  }
  return out.str();
}

Partition partition_by(const DecisionSystem& system, const AttributeSet& attrs) {
  check_conditional(system, attrs);
  return partition_over(system, attrs.indices());
}

Partition decision_partition(const DecisionSystem& system) {
  return partition_over(system, {system.decision_index()});
}

Partition partition_with_decision(const DecisionSystem& system, const AttributeSet& attrs) {
  check_conditional(system, attrs);
  auto columns = attrs.indices();
  columns.push_back(system.decision_index());
  return partition_over(system, columns);
}

Partition refine(const Partition& p, const DecisionSystem& system, std::size_t attr) {
  if (p.universe_size() != system.object_count())
    throw std::invalid_argument("refine: partition universe does not match the system");
  if (attr >= system.attribute_count())
    throw std::invalid_argument("refine: attribute index out of range");
  auto block_of = p.block_of();
  split_by(system, attr, block_of);
  return from_block_of(std::move(block_of));
}

bool same_partition(const Partition& a, const Partition& b) {
  if (a.universe_size() != b.universe_size())
    throw std::invalid_argument("same_partition: universe size mismatch");
  return a.block_of() == b.block_of();  // canonical numbering is unique
}

ContingencyTable contingency(const DecisionSystem& system, const AttributeSet& attrs) {
  const Partition rows = partition_by(system, attrs);
  const Partition cols = decision_partition(system);

  ContingencyTable table;
  table.class_ids.reserve(cols.block_count());
  for (const auto& block : cols.blocks())
    table.class_ids.push_back(system.value(block.front(), system.decision_index()));

  table.counts.assign(rows.block_count(), std::vector<long long>(cols.block_count(), 0));
  for (std::size_t x = 0; x < system.object_count(); ++x)
    ++table.counts[rows.block_of()[x]][cols.block_of()[x]];

  table.row_sums.assign(rows.block_count(), 0);
  table.col_sums.assign(cols.block_count(), 0);
  table.row_max.assign(rows.block_count(), 0);
  for (std::size_t i = 0; i < rows.block_count(); ++i) {
    for (std::size_t j = 0; j < cols.block_count(); ++j) {
      const auto n = table.counts[i][j];
      table.row_sums[i] += n;
      table.col_sums[j] += n;
      table.row_max[i] = std::max(table.row_max[i], n);
      table.total += n;
    }
  }
  return table;
}

}  // namespace roughdep
