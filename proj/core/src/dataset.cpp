#include "roughdep/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace roughdep {

namespace {

// Per-column interner: first-appearance order defines the ids.
struct Interner {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> ids;

  std::uint32_t intern(const std::string& raw) {
    auto it = ids.find(raw);
    if (it != ids.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(labels.size());
    labels.push_back(raw);
    ids.emplace(raw, id);
    return id;
  }
};

bool parse_number(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  out = std::strtod(text.c_str(), &end);
  return end == text.c_str() + text.size();
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// RFC-4180-style record reader: quoted fields may contain the delimiter,
// doubled quotes, and line breaks. Returns false at end of input.
bool read_record(std::istream& in, char delimiter, std::vector<std::string>& fields) {
  fields.clear();
  if (in.peek() == EOF) return false;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (int ci = in.get(); ; ci = in.get()) {
    if (ci == EOF) {
      if (quoted) throw csv_error("unterminated quoted field");
      if (!any && field.empty() && fields.empty()) return false;
      fields.push_back(field);
      return true;
    }
    const char c = static_cast<char>(ci);
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == delimiter) {
      fields.push_back(field);
      field.clear();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(field);
      return true;
    } else {
      field.push_back(c);
    }
  }
}

}  // namespace

AttributeSet::AttributeSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool AttributeSet::contains(std::size_t attr) const {
  return std::binary_search(indices_.begin(), indices_.end(), attr);
}

AttributeSet AttributeSet::with(std::size_t attr) const {
  auto copy = indices_;
  copy.push_back(attr);
  return AttributeSet(std::move(copy));
}

AttributeSet AttributeSet::without(std::size_t attr) const {
  auto copy = indices_;
  copy.erase(std::remove(copy.begin(), copy.end(), attr), copy.end());
  return AttributeSet(std::move(copy));
}

bool AttributeSet::is_subset_of(const AttributeSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(), indices_.begin(),
                       indices_.end());
}

DecisionSystem::DecisionSystem(std::vector<AttributeDescriptor> attributes,
                               std::size_t decision_index,
                               std::vector<std::vector<std::string>> dictionaries,
                               std::vector<std::uint32_t> values, std::size_t object_count,
                               std::string missing_token)
    : attributes_(std::move(attributes)),
      decision_index_(decision_index),
      dictionaries_(std::move(dictionaries)),
      values_(std::move(values)),
      object_count_(object_count),
      missing_token_(std::move(missing_token)) {
  if (attributes_.empty()) throw std::invalid_argument("DecisionSystem: no attributes");
  if (object_count_ == 0) throw std::invalid_argument("DecisionSystem: empty universe");
  if (decision_index_ >= attributes_.size())
    throw std::invalid_argument("DecisionSystem: decision index out of range");
  if (dictionaries_.size() != attributes_.size())
    throw std::invalid_argument("DecisionSystem: one dictionary required per attribute");
  if (values_.size() != object_count_ * attributes_.size())
    throw std::invalid_argument("DecisionSystem: value matrix size mismatch");
  std::unordered_set<std::string> names;
  for (std::size_t a = 0; a < attributes_.size(); ++a) {
    if (attributes_[a].name.empty())
      throw std::invalid_argument("DecisionSystem: empty attribute name");
    if (!names.insert(attributes_[a].name).second)
      throw std::invalid_argument("DecisionSystem: duplicate attribute name '" +
                                  attributes_[a].name + "'");
    const auto expected =
        a == decision_index_ ? AttributeRole::decision : AttributeRole::conditional;
    if (attributes_[a].role != expected)
      throw std::invalid_argument("DecisionSystem: exactly one decision attribute required");
  }
  for (std::size_t x = 0; x < object_count_; ++x) {
    for (std::size_t a = 0; a < attributes_.size(); ++a) {
      if (value(x, a) >= dictionaries_[a].size())
        throw std::invalid_argument("DecisionSystem: value id outside dictionary at column '" +
                                    attributes_[a].name + "'");
    }
  }
}

AttributeSet DecisionSystem::all_conditionals() const {
  std::vector<std::size_t> idx;
  idx.reserve(attributes_.size() - 1);
  for (std::size_t a = 0; a < attributes_.size(); ++a)
    if (a != decision_index_) idx.push_back(a);
  return AttributeSet(std::move(idx));
}

std::size_t DecisionSystem::attribute_index(const std::string& name) const {
  for (std::size_t a = 0; a < attributes_.size(); ++a)
    if (attributes_[a].name == name) return a;
  throw std::invalid_argument("unknown attribute '" + name + "'");
}

LoadConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw csv_error("cannot open config file '" + path + "'");
  LoadConfig config;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw csv_error("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(text.substr(0, eq));
    const std::string value = trim(text.substr(eq + 1));
    if (key == "decision") {
      config.decision = value;
    } else if (key == "missing_token") {
      config.missing_token = value;
    } else if (key == "missing_policy") {
      if (value == "own") {
        config.missing_policy = MissingPolicy::own_category;
      } else if (value == "drop") {
        config.missing_policy = MissingPolicy::drop_row;
      } else {
        throw csv_error("config: missing_policy must be 'own' or 'drop', got '" + value + "'");
      }
    } else if (key == "numeric_columns") {
      config.numeric_columns = split_list(value);
    } else if (key == "bins") {
      const long v = std::strtol(value.c_str(), nullptr, 10);
      if (v < 1) throw csv_error("config: bins must be >= 1");
      config.bins = static_cast<std::size_t>(v);
    } else if (key == "delimiter") {
      if (value.size() != 1) throw csv_error("config: delimiter must be a single character");
      config.delimiter = value[0];
    } else {
      throw csv_error("config: unknown key '" + key + "'");
    }
  }
  return config;
}

DecisionSystem load_csv(std::istream& in, const LoadConfig& config) {
  std::vector<std::string> header;
  if (!read_record(in, config.delimiter, header)) throw csv_error("empty input");

  const std::size_t width = header.size();
  std::unordered_map<std::string, std::size_t> column_of;
  for (std::size_t a = 0; a < width; ++a) {
    if (header[a].empty()) throw csv_error("empty column name in header");
    if (!column_of.emplace(header[a], a).second)
      throw csv_error("duplicate column name '" + header[a] + "'");
  }

  const auto decision_it = column_of.find(config.decision);
  if (decision_it == column_of.end())
    throw csv_error("unknown decision column '" + config.decision + "'");
  const std::size_t decision = decision_it->second;
  if (width < 2) throw csv_error("table has no conditional attributes");

  std::vector<bool> numeric(width, false);
  for (const auto& name : config.numeric_columns) {
    const auto it = column_of.find(name);
    if (it == column_of.end()) throw csv_error("unknown numeric column '" + name + "'");
    numeric[it->second] = true;
  }

  std::vector<Interner> interners(width);
  std::vector<std::uint32_t> values;
  std::size_t rows = 0;
  std::vector<std::string> record;
  std::size_t lineno = 1;
  while (read_record(in, config.delimiter, record)) {
    ++lineno;
    if (record.size() != width)
      throw csv_error("row " + std::to_string(lineno) + " has " +
                      std::to_string(record.size()) + " fields, expected " +
                      std::to_string(width));
    if (config.missing_policy == MissingPolicy::drop_row) {
      bool missing = false;
      for (const auto& cell : record) missing = missing || cell == config.missing_token;
      if (missing) continue;
    }
    for (std::size_t a = 0; a < width; ++a) {
      const std::string& cell = record[a];
      double parsed;
      if (numeric[a] && cell != config.missing_token && !parse_number(cell, parsed))
        throw csv_error("row " + std::to_string(lineno) + ", column '" + header[a] +
                        "': cannot parse '" + cell + "' as a number");
      values.push_back(interners[a].intern(cell));
    }
    ++rows;
  }
  if (rows == 0) throw csv_error("no data rows");

  std::vector<AttributeDescriptor> attributes(width);
  std::vector<std::vector<std::string>> dictionaries(width);
  for (std::size_t a = 0; a < width; ++a) {
    attributes[a].name = header[a];
    attributes[a].kind = numeric[a] ? AttributeKind::numeric : AttributeKind::categorical;
    attributes[a].role = a == decision ? AttributeRole::decision : AttributeRole::conditional;
    dictionaries[a] = std::move(interners[a].labels);
  }
  return DecisionSystem(std::move(attributes), decision, std::move(dictionaries),
                        std::move(values), rows, config.missing_token);
}

DecisionSystem load_csv_file(const std::string& path, const LoadConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw csv_error("cannot open '" + path + "'");
  return load_csv(in, config);
}

DecisionSystem discretize(const DecisionSystem& system, std::size_t attr, std::size_t bins) {
  if (attr >= system.attribute_count())
    throw std::invalid_argument("discretize: attribute index out of range");
  if (attr == system.decision_index())
    throw std::invalid_argument("discretize: cannot discretize the decision attribute");
  if (system.attribute(attr).kind != AttributeKind::numeric)
    throw std::invalid_argument("discretize: attribute '" + system.attribute(attr).name +
                                "' is not numeric");
  if (bins < 1) throw std::invalid_argument("discretize: bins must be >= 1");

  const auto& dict = system.dictionary(attr);
  std::vector<bool> missing(dict.size(), false);
  std::vector<double> number(dict.size(), 0.0);
  for (std::uint32_t id = 0; id < dict.size(); ++id) {
    if (dict[id] == system.missing_token()) {
      missing[id] = true;
    } else if (!parse_number(dict[id], number[id])) {
      throw csv_error("discretize: cannot parse '" + dict[id] + "' as a number");
    }
  }

  // Rank-slice quantiles: bin(v) = (rank of v's first occurrence) * bins / m,
  // so equal raw values share a bin and ties land in the lower one.
  std::vector<double> sorted;
  sorted.reserve(system.object_count());
  for (std::size_t x = 0; x < system.object_count(); ++x) {
    const auto id = system.value(x, attr);
    if (!missing[id]) sorted.push_back(number[id]);
  }
  std::sort(sorted.begin(), sorted.end());
  const std::size_t m = sorted.size();

  const auto bin_of = [&](double v) -> std::uint32_t {
    const std::size_t first_rank =
        std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin();
    return static_cast<std::uint32_t>(first_rank * bins / m);
  };

  bool any_missing = false;
  std::vector<std::uint32_t> values;
  values.reserve(system.object_count() * system.attribute_count());
  for (std::size_t x = 0; x < system.object_count(); ++x) {
    for (std::size_t a = 0; a < system.attribute_count(); ++a) {
      auto id = system.value(x, a);
      if (a == attr) {
        if (missing[id]) {
          any_missing = true;
          id = static_cast<std::uint32_t>(bins);
        } else {
          id = bin_of(number[id]);
        }
      }
      values.push_back(id);
    }
  }

  std::vector<std::string> bin_dict;
  for (std::size_t b = 0; b < bins; ++b) bin_dict.push_back("bin" + std::to_string(b));
  if (any_missing) bin_dict.push_back(system.missing_token());

  auto attributes = system.attributes();
  attributes[attr].kind = AttributeKind::categorical;
  std::vector<std::vector<std::string>> dictionaries;
  for (std::size_t a = 0; a < system.attribute_count(); ++a)
    dictionaries.push_back(a == attr ? bin_dict : system.dictionary(a));
  return DecisionSystem(std::move(attributes), system.decision_index(), std::move(dictionaries),
                        std::move(values), system.object_count(), system.missing_token());
}

DecisionSystem encode_onehot(const DecisionSystem& system) {
  const std::size_t d = system.decision_index();
  for (std::size_t a = 0; a < system.attribute_count(); ++a) {
    if (a != d && system.attribute(a).kind != AttributeKind::categorical)
      throw std::invalid_argument("encode_onehot: attribute '" + system.attribute(a).name +
                                  "' is numeric; discretize it first");
  }

  // Indicator columns in (attribute, dictionary) order, decision last.
  // Indicator dictionaries are fixed as {"0", "1"} so id 1 means "present".
  std::vector<AttributeDescriptor> attributes;
  std::vector<std::vector<std::string>> dictionaries;
  struct Source {
    std::size_t attr;
    std::uint32_t id;
  };
  std::vector<Source> sources;
  for (std::size_t a = 0; a < system.attribute_count(); ++a) {
    if (a == d) continue;
    for (std::uint32_t v = 0; v < system.dictionary(a).size(); ++v) {
      attributes.push_back({system.attribute(a).name + "=" + system.label(a, v),
                            AttributeKind::categorical, AttributeRole::conditional});
      dictionaries.push_back({"0", "1"});
      sources.push_back({a, v});
    }
  }
  const std::size_t decision_column = attributes.size();
  attributes.push_back(system.attribute(d));
  dictionaries.push_back(system.dictionary(d));

  std::vector<std::uint32_t> values;
  values.reserve(system.object_count() * attributes.size());
  for (std::size_t x = 0; x < system.object_count(); ++x) {
    for (const auto& src : sources)
      values.push_back(system.value(x, src.attr) == src.id ? 1u : 0u);
    values.push_back(system.value(x, d));
  }
  return DecisionSystem(std::move(attributes), decision_column, std::move(dictionaries),
                        std::move(values), system.object_count(), system.missing_token());
}

namespace {

DecisionSystem remap_column(const DecisionSystem& system, std::size_t attr,
                            const std::vector<std::uint32_t>& bijection, const char* op) {
  const auto k = system.dictionary(attr).size();
  if (bijection.size() != k)
    throw std::invalid_argument(std::string(op) + ": bijection must cover all " +
                                std::to_string(k) + " value ids");
  std::vector<bool> seen(k, false);
  for (const auto id : bijection) {
    if (id >= k || seen[id])
      throw std::invalid_argument(std::string(op) + ": not a bijection on value ids");
    seen[id] = true;
  }
  std::vector<std::uint32_t> values;
  values.reserve(system.object_count() * system.attribute_count());
  for (std::size_t x = 0; x < system.object_count(); ++x) {
    for (std::size_t a = 0; a < system.attribute_count(); ++a) {
      const auto id = system.value(x, a);
      values.push_back(a == attr ? bijection[id] : id);
    }
  }
  std::vector<std::vector<std::string>> dictionaries;
  for (std::size_t a = 0; a < system.attribute_count(); ++a)
    dictionaries.push_back(system.dictionary(a));
  return DecisionSystem(system.attributes(), system.decision_index(), std::move(dictionaries),
                        std::move(values), system.object_count(), system.missing_token());
}

}  // namespace

DecisionSystem relabel(const DecisionSystem& system, std::size_t attr,
                       const std::vector<std::uint32_t>& bijection) {
  if (attr >= system.attribute_count())
    throw std::invalid_argument("relabel: attribute index out of range");
  if (attr == system.decision_index())
    throw std::invalid_argument("relabel: use permute_decision_labels for the decision");
  return remap_column(system, attr, bijection, "relabel");
}

DecisionSystem permute_decision_labels(const DecisionSystem& system,
                                       const std::vector<std::uint32_t>& permutation) {
  return remap_column(system, system.decision_index(), permutation, "permute_decision_labels");
}

std::pair<DecisionSystem, DecisionSystem> split_universe(const DecisionSystem& system,
                                                         const std::vector<std::size_t>& part) {
  std::vector<bool> in_part(system.object_count(), false);
  for (const auto x : part) {
    if (x >= system.object_count())
      throw std::invalid_argument("split_universe: object index out of range");
    if (in_part[x]) throw std::invalid_argument("split_universe: duplicate object index");
    in_part[x] = true;
  }
  if (part.empty() || part.size() == system.object_count())
    throw std::invalid_argument("split_universe: both parts must be non-empty");

  const auto build = [&](bool keep) {
    std::vector<std::uint32_t> values;
    std::size_t rows = 0;
    for (std::size_t x = 0; x < system.object_count(); ++x) {
      if (in_part[x] != keep) continue;
      for (std::size_t a = 0; a < system.attribute_count(); ++a)
        values.push_back(system.value(x, a));
      ++rows;
    }
    std::vector<std::vector<std::string>> dictionaries;
    for (std::size_t a = 0; a < system.attribute_count(); ++a)
      dictionaries.push_back(system.dictionary(a));
    return DecisionSystem(system.attributes(), system.decision_index(), std::move(dictionaries),
                          std::move(values), rows, system.missing_token());
  };
  return {build(true), build(false)};
}

DecisionSystem hiring_fixture() {
  static const char* rows[][6] = {
      {"Junior", "Bachelors", "1", "2", "Yes", "Yes"},
      {"Senior", "Masters", "2", "1", "No", "Yes"},
      {"Mid", "Bachelors", "1", "1", "Yes", "Yes"},
      {"Junior", "HighSchool", "0", "1", "Yes", "No"},
      {"Senior", "Masters", "2", "2", "No", "Yes"},
      {"Mid", "Bachelors", "1", "1", "No", "No"},
      {"Junior", "HighSchool", "0", "0", "Yes", "No"},
      {"Mid", "Masters", "2", "2", "Yes", "Yes"},
      {"Senior", "Bachelors", "1", "0", "No", "No"},
      {"Mid", "HighSchool", "0", "2", "Yes", "No"},
      {"Junior", "Masters", "1", "2", "Yes", "Yes"},
      {"Senior", "Masters", "2", "2", "No", "No"},
      {"Mid", "Bachelors", "1", "0", "Yes", "No"},
      {"Senior", "HighSchool", "1", "1", "No", "No"},
  };
  static const char* names[6] = {"Exp", "Edu", "Test", "Comm", "Reloc", "Hire"};

  std::vector<AttributeDescriptor> attributes;
  for (std::size_t a = 0; a < 6; ++a)
    attributes.push_back({names[a], AttributeKind::categorical,
                          a == 5 ? AttributeRole::decision : AttributeRole::conditional});
  std::vector<Interner> interners(6);
  std::vector<std::uint32_t> values;
  for (const auto& row : rows)
    for (std::size_t a = 0; a < 6; ++a) values.push_back(interners[a].intern(row[a]));
  std::vector<std::vector<std::string>> dictionaries;
  for (auto& interner : interners) dictionaries.push_back(std::move(interner.labels));
  return DecisionSystem(std::move(attributes), 5, std::move(dictionaries), std::move(values), 14);
}

}  // namespace roughdep
