#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace roughdep {

/// Raised for anything that goes wrong while reading or validating an input
/// table: unreadable file, ragged rows, empty table, unknown column names in
/// the load configuration, numeric parse failures.
struct csv_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class AttributeKind { categorical, numeric };
enum class AttributeRole { conditional, decision };

struct AttributeDescriptor {
  std::string name;
  AttributeKind kind = AttributeKind::categorical;
  AttributeRole role = AttributeRole::conditional;

  friend bool operator==(const AttributeDescriptor&, const AttributeDescriptor&) = default;
};

/// Duplicate-free set of conditional attribute indices, kept in ascending
/// order. Set algebra returns new values; instances are cheap to copy.
class AttributeSet {
 public:
  AttributeSet() = default;
  explicit AttributeSet(std::vector<std::size_t> indices);

  bool contains(std::size_t attr) const;
  AttributeSet with(std::size_t attr) const;
  AttributeSet without(std::size_t attr) const;

  const std::vector<std::size_t>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }

  bool is_subset_of(const AttributeSet& other) const;

  friend bool operator==(const AttributeSet&, const AttributeSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

enum class MissingPolicy { own_category, drop_row };

/// How a CSV source is turned into a DecisionSystem. Expressible as CLI flags
/// or as a small `key=value` config file (see load_config_file).
struct LoadConfig {
  std::string decision;                 // decision column name, required
  std::string missing_token = "?";
  MissingPolicy missing_policy = MissingPolicy::own_category;
  std::vector<std::string> numeric_columns;
  std::size_t bins = 5;                 // used by callers that discretize
  char delimiter = ',';
};

LoadConfig load_config_file(const std::string& path);

/// Immutable decision table: a universe of objects described by categorical
/// or numeric attributes plus exactly one decision attribute. Cell values are
/// interned ids; dictionaries map ids back to the raw strings. All transforms
/// (discretize, encode_onehot, relabel, ...) return new systems.
class DecisionSystem {
 public:
  DecisionSystem(std::vector<AttributeDescriptor> attributes, std::size_t decision_index,
                 std::vector<std::vector<std::string>> dictionaries,
                 std::vector<std::uint32_t> values, std::size_t object_count,
                 std::string missing_token = "?");

  std::size_t object_count() const { return object_count_; }
  std::size_t attribute_count() const { return attributes_.size(); }
  const std::vector<AttributeDescriptor>& attributes() const { return attributes_; }
  const AttributeDescriptor& attribute(std::size_t attr) const { return attributes_.at(attr); }
  std::size_t decision_index() const { return decision_index_; }

  std::uint32_t value(std::size_t object, std::size_t attr) const {
    return values_[object * attributes_.size() + attr];
  }
  const std::vector<std::string>& dictionary(std::size_t attr) const {
    return dictionaries_.at(attr);
  }
  const std::string& label(std::size_t attr, std::uint32_t id) const {
    return dictionaries_.at(attr).at(id);
  }
  const std::string& missing_token() const { return missing_token_; }

  /// All conditional attribute indices, ascending.
  AttributeSet all_conditionals() const;

  /// Index of the attribute named `name`; throws std::invalid_argument if absent.
  std::size_t attribute_index(const std::string& name) const;

  friend bool operator==(const DecisionSystem&, const DecisionSystem&) = default;

 private:
  std::vector<AttributeDescriptor> attributes_;
  std::size_t decision_index_ = 0;
  std::vector<std::vector<std::string>> dictionaries_;
  std::vector<std::uint32_t> values_;  // row-major, object_count x attribute_count
  std::size_t object_count_ = 0;
  std::string missing_token_ = "?";
};

/// Parse an RFC-4180-style delimited table into a DecisionSystem. The first
/// record is the header; values are interned per column in first-appearance
/// order. Cells equal to the missing token either become their own category
/// or drop the whole row, per config. Declared numeric columns are validated
/// as numbers but keep their raw values until discretize is applied.
DecisionSystem load_csv(std::istream& in, const LoadConfig& config);
DecisionSystem load_csv_file(const std::string& path, const LoadConfig& config);

/// Replace a numeric conditional attribute by equal-frequency bin ids
/// 0..bins-1. Quantile boundaries come from the non-missing values; objects
/// sharing a raw value always share a bin (ties go to the lower bin). Missing
/// values keep their own category past the bins.
DecisionSystem discretize(const DecisionSystem& system, std::size_t attr, std::size_t bins);

/// Expand every conditional attribute with k distinct values into k binary
/// indicator attributes named "attr=value". Requires all conditionals to be
/// categorical; the decision attribute is untouched (and moves to the last
/// column of the result).
DecisionSystem encode_onehot(const DecisionSystem& system);

/// Apply a bijection on the value ids of one conditional attribute. The
/// dictionary is unchanged, so object values genuinely change; partition
/// structure over any subset containing the attribute does not.
DecisionSystem relabel(const DecisionSystem& system, std::size_t attr,
                       const std::vector<std::uint32_t>& bijection);

/// Same as relabel, for the decision attribute.
DecisionSystem permute_decision_labels(const DecisionSystem& system,
                                       const std::vector<std::uint32_t>& permutation);

/// Split the universe into (objects in `part`, the rest), both order-
/// preserving and sharing the original schema and dictionaries. Both sides
/// must be non-empty.
std::pair<DecisionSystem, DecisionSystem> split_universe(const DecisionSystem& system,
                                                         const std::vector<std::size_t>& part);

/// The 14-object hiring table used as a worked example throughout the tests:
/// conditionals Exp, Edu, Test, Comm, Reloc and decision Hire.
DecisionSystem hiring_fixture();

}  // namespace roughdep
