// roughdep: rough-set dependency analysis of decision tables.
//
// Subcommands: measure (dependency values per attribute subset), select
// (greedy forward/backward feature selection), evaluate (block-majority
// classifier, resubstitution or stratified k-fold), oracle (exhaustive
// minimal reducts). Reports are JSON (default) or CSV, deterministic for a
// given command line.
//
// Exit codes: 0 success (and converged selection), 1 I/O or parse error,
// 2 non-converged selection, 3 precondition failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "roughdep/dataset.hpp"
#include "roughdep/evaluation.hpp"
#include "roughdep/measures.hpp"
#include "roughdep/partition.hpp"
#include "roughdep/selection.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace roughdep;

constexpr int kSchemaVersion = 1;

struct CommonOptions {
  std::string input;
  std::string config_path;
  std::string decision;
  std::string missing_token = "?";
  std::string missing_policy = "own";
  std::vector<std::string> numeric;
  std::size_t bins = 5;
  std::string encode = "native";
  std::string delimiter = ",";
  std::string format = "json";
  std::string output;
};

void add_common_flags(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--input", o.input, "Input CSV file")->required();
  cmd->add_option("--config", o.config_path,
                  "key=value config file (decision, missing_token, missing_policy, "
                  "numeric_columns, bins, delimiter); explicit flags win");
  cmd->add_option("--decision", o.decision, "Decision column name");
  cmd->add_option("--missing-token", o.missing_token, "Missing-value token (default '?')");
  cmd->add_option("--missing-policy", o.missing_policy,
                  "Missing-value handling: own category or drop the row")
      ->check(CLI::IsMember({"own", "drop"}));
  cmd->add_option("--numeric", o.numeric,
                  "Numeric column names (repeatable, comma-separable); discretized on load")
      ->delimiter(',');
  cmd->add_option("--bins", o.bins, "Equal-frequency bin count for numeric columns (default 5)");
  cmd->add_option("--encode", o.encode, "Attribute encoding")
      ->check(CLI::IsMember({"native", "onehot"}));
  cmd->add_option("--delimiter", o.delimiter, "CSV field delimiter (default ',')");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", o.output, "Write the report to a file instead of stdout");
}

// Merge the config file (if any) under explicitly set flags, then run the
// load -> discretize -> encode pipeline.
DecisionSystem prepare_system(const CLI::App* cmd, CommonOptions& o) {
  LoadConfig config;
  if (!o.config_path.empty()) config = load_config_file(o.config_path);
  if (cmd->count("--decision") > 0 || config.decision.empty()) config.decision = o.decision;
  if (cmd->count("--missing-token") > 0) config.missing_token = o.missing_token;
  if (cmd->count("--missing-policy") > 0)
    config.missing_policy =
        o.missing_policy == "drop" ? MissingPolicy::drop_row : MissingPolicy::own_category;
  if (cmd->count("--numeric") > 0) config.numeric_columns = o.numeric;
  if (cmd->count("--bins") > 0) config.bins = o.bins;
  if (cmd->count("--delimiter") > 0) {
    if (o.delimiter.size() != 1)
      throw std::invalid_argument("--delimiter must be a single character");
    config.delimiter = o.delimiter[0];
  }
  if (config.decision.empty())
    throw std::invalid_argument("a decision column is required (--decision or config file)");
  if (config.bins < 1) throw std::invalid_argument("--bins must be at least 1");

  // Reflect the merged values back so the emitted RunConfig is fully resolved.
  o.decision = config.decision;
  o.missing_token = config.missing_token;
  o.missing_policy = config.missing_policy == MissingPolicy::drop_row ? "drop" : "own";
  o.numeric = config.numeric_columns;
  o.bins = config.bins;
  o.delimiter = std::string(1, config.delimiter);

  DecisionSystem system = load_csv_file(o.input, config);
  for (std::size_t a = 0; a < system.attribute_count(); ++a)
    if (a != system.decision_index() && system.attribute(a).kind == AttributeKind::numeric)
      system = discretize(system, a, config.bins);
  if (o.encode == "onehot") system = encode_onehot(system);
  return system;
}

json run_config(const CommonOptions& o) {
  return json{{"input", o.input},
              {"decision", o.decision},
              {"missing_token", o.missing_token},
              {"missing_policy", o.missing_policy},
              {"numeric", o.numeric},
              {"bins", o.bins},
              {"encode", o.encode},
              {"delimiter", o.delimiter},
              {"format", o.format},
              {"output", o.output.empty() ? "-" : o.output}};
}

std::vector<std::string> subset_names(const DecisionSystem& system, const AttributeSet& attrs) {
  std::vector<std::string> names;
  names.reserve(attrs.size());
  for (const auto a : attrs.indices()) names.push_back(system.attribute(a).name);
  return names;
}

std::string subset_label(const DecisionSystem& system, const AttributeSet& attrs) {
  if (attrs.empty()) return "{}";
  std::string label;
  for (const auto a : attrs.indices()) {
    if (!label.empty()) label += '+';
    label += system.attribute(a).name;
  }
  return label;
}

AttributeSet resolve_subset(const DecisionSystem& system, const std::string& spec) {
  std::vector<std::size_t> indices;
  if (!spec.empty() && spec != "{}") {
    std::stringstream ss(spec);
    std::string name;
    while (std::getline(ss, name, ',')) {
      const auto a = system.attribute_index(name);
      if (a == system.decision_index())
        throw std::invalid_argument("'" + name + "' is the decision attribute");
      indices.push_back(a);
    }
  }
  return AttributeSet(std::move(indices));
}

json fraction_pair(const Fraction& f) { return json{{"num", f.num()}, {"den", f.den()}}; }

json fraction_full(const Fraction& f) {
  return json{{"num", f.num()}, {"den", f.den()}, {"value", f.rounded(3)}};
}

std::string format_float(const Fraction& f) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", f.to_double());
  return buffer;
}

json trace_json(const DecisionSystem& system, const SelectionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back(json{{"attr", step.attribute},
                         {"name", system.attribute(step.attribute).name},
                         {"action", step.action == StepAction::added ? "added" : "removed"},
                         {"value", fraction_pair(step.value)}});
  return json{{"measure", measure_name(trace.measure)},
              {"target", fraction_pair(trace.target)},
              {"steps", steps},
              {"result", subset_names(system, trace.result)},
              {"converged", trace.converged},
              {"warnings", trace.warnings}};
}

json metrics_json(const DecisionSystem& system, const EvaluationMetrics& metrics) {
  const auto& dict = system.dictionary(system.decision_index());
  json per_class = json::array();
  for (const auto& cm : metrics.per_class)
    per_class.push_back(json{{"label", dict.at(cm.label)},
                             {"precision", cm.precision.rounded(3)},
                             {"recall", cm.recall.rounded(3)},
                             {"f1", cm.f1.rounded(3)},
                             {"support", cm.support},
                             {"exact",
                              json{{"precision", fraction_pair(cm.precision)},
                                   {"recall", fraction_pair(cm.recall)},
                                   {"f1", fraction_pair(cm.f1)}}}});
  return json{{"accuracy", metrics.accuracy.rounded(3)},
              {"precision", metrics.precision.rounded(3)},
              {"recall", metrics.recall.rounded(3)},
              {"f1", metrics.f1.rounded(3)},
              {"exact",
               json{{"accuracy", fraction_pair(metrics.accuracy)},
                    {"precision", fraction_pair(metrics.precision)},
                    {"recall", fraction_pair(metrics.recall)},
                    {"f1", fraction_pair(metrics.f1)}}},
              {"per_class", per_class},
              {"zero_denominator_cells", metrics.zero_denominator_cells},
              {"protocol", json{{"k", metrics.k}, {"seed", metrics.seed}}}};
}

void write_report(const CommonOptions& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw csv_error("cannot open output file '" + o.output + "'");
  out << text;
  if (!out) throw csv_error("failed to write '" + o.output + "'");
}

int cmd_measure(const CLI::App* cmd, CommonOptions& o, const std::vector<std::string>& subsets) {
  const DecisionSystem system = prepare_system(cmd, o);

  std::vector<AttributeSet> resolved;
  if (subsets.empty()) {
    // Default: every single attribute, then the full conditional set.
    const AttributeSet all = system.all_conditionals();
    for (const auto a : all.indices()) resolved.push_back(AttributeSet({a}));
    resolved.push_back(all);
  } else {
    for (const auto& spec : subsets) resolved.push_back(resolve_subset(system, spec));
  }

  json config = run_config(o);
  json subset_config = json::array();
  for (const auto& attrs : resolved) subset_config.push_back(subset_names(system, attrs));
  config["subsets"] = subset_config;

  std::string text;
  if (o.format == "csv") {
    std::string csv = "subset,cla,rel,dir,ecd\n";
    for (const auto& attrs : resolved) {
      csv += subset_label(system, attrs);
      for (const auto id : {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd})
        csv += "," + format_float(dependency(system, attrs, id));
      csv += '\n';
    }
    text = csv;
  } else {
    json rows = json::array();
    for (const auto& attrs : resolved) {
      json row{{"attrs", subset_names(system, attrs)}};
      for (const auto id : {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd})
        row[measure_name(id)] = fraction_full(dependency(system, attrs, id));
      rows.push_back(row);
    }
    const json report{
        {"schema_version", kSchemaVersion}, {"command", "measure"}, {"config", config},
        {"subsets", rows}};
    text = report.dump(2) + "\n";
  }
  write_report(o, text);
  return 0;
}

int cmd_select(const CLI::App* cmd, CommonOptions& o, const std::string& measure,
               const std::string& direction) {
  const DecisionSystem system = prepare_system(cmd, o);
  const MeasureId id = parse_measure(measure);
  const SelectionTrace trace =
      direction == "forward" ? forward_select(system, id) : backward_eliminate(system, id);

  json config = run_config(o);
  config["measure"] = measure;
  config["direction"] = direction;

  std::string text;
  if (o.format == "csv") {
    std::string csv = "step,attr,name,action,num,den\n";
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const auto& step = trace.steps[i];
      csv += std::to_string(i) + "," + std::to_string(step.attribute) + "," +
             system.attribute(step.attribute).name + "," +
             (step.action == StepAction::added ? "added" : "removed") + "," +
             std::to_string(step.value.num()) + "," + std::to_string(step.value.den()) + "\n";
    }
    text = csv;
  } else {
    const json report{{"schema_version", kSchemaVersion},
                      {"command", "select"},
                      {"config", config},
                      {"trace", trace_json(system, trace)}};
    text = report.dump(2) + "\n";
  }
  write_report(o, text);
  return trace.converged ? 0 : 2;
}

int cmd_evaluate(const CLI::App* cmd, CommonOptions& o, const std::vector<std::string>& subsets,
                 const std::string& measure, const std::string& direction, std::size_t k,
                 std::uint64_t seed) {
  const DecisionSystem system = prepare_system(cmd, o);
  if (subsets.size() > 1)
    throw std::invalid_argument("evaluate accepts at most one --subset");

  AttributeSet attrs;
  std::optional<SelectionTrace> trace;
  if (subsets.empty()) {
    const MeasureId id = parse_measure(measure);
    trace = direction == "forward" ? forward_select(system, id) : backward_eliminate(system, id);
    attrs = trace->result;
  } else {
    attrs = resolve_subset(system, subsets.front());
  }

  const EvaluationMetrics metrics =
      k == 0 ? evaluate_resubstitution(system, attrs) : stratified_kfold(system, attrs, k, seed);

  json config = run_config(o);
  config["subset"] = subsets.empty() ? json() : json(subsets.front());
  if (trace) {
    config["measure"] = measure;
    config["direction"] = direction;
  }
  config["k"] = k;
  config["seed"] = seed;

  json dependency_block;
  for (const auto id : {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd})
    dependency_block[measure_name(id)] = fraction_full(dependency(system, attrs, id));

  std::string text;
  if (o.format == "csv") {
    const auto& dict = system.dictionary(system.decision_index());
    std::string csv = "metric,class,value\n";
    csv += "accuracy,," + format_float(metrics.accuracy) + "\n";
    csv += "precision,," + format_float(metrics.precision) + "\n";
    csv += "recall,," + format_float(metrics.recall) + "\n";
    csv += "f1,," + format_float(metrics.f1) + "\n";
    for (const auto& cm : metrics.per_class) {
      const std::string& label = dict.at(cm.label);
      csv += "precision," + label + "," + format_float(cm.precision) + "\n";
      csv += "recall," + label + "," + format_float(cm.recall) + "\n";
      csv += "f1," + label + "," + format_float(cm.f1) + "\n";
      csv += "support," + label + "," + std::to_string(cm.support) + "\n";
    }
    text = csv;
  } else {
    json report{{"schema_version", kSchemaVersion},
                {"command", "evaluate"},
                {"config", config},
                {"subset", subset_names(system, attrs)},
                {"subset_source", trace ? "selection" : "explicit"},
                {"dependency", dependency_block},
                {"metrics", metrics_json(system, metrics)}};
    if (trace) report["trace"] = trace_json(system, *trace);
    text = report.dump(2) + "\n";
  }
  write_report(o, text);
  return 0;
}

int cmd_oracle(const CLI::App* cmd, CommonOptions& o, const std::string& measure,
               const std::vector<std::string>& subsets, std::size_t cap) {
  const DecisionSystem system = prepare_system(cmd, o);

  std::vector<MeasureId> ids;
  if (measure.empty()) {
    ids = {MeasureId::cla, MeasureId::rel, MeasureId::dir, MeasureId::ecd};
  } else {
    ids = {parse_measure(measure)};
  }

  json config = run_config(o);
  config["measure"] = measure.empty() ? json() : json(measure);
  config["cap"] = cap;
  json subset_config = json::array();
  for (const auto& spec : subsets) subset_config.push_back(spec);
  config["subsets"] = subset_config;

  // Everything is computed before any output is written, so a cap violation
  // (or any other failure) produces no partial report.
  json measures = json::array();
  std::string csv = "measure,reduct\n";
  for (const auto id : ids) {
    const auto reducts = exhaustive_reducts(system, id, cap);
    json lists = json::array();
    for (const auto& r : reducts) {
      lists.push_back(subset_names(system, r));
      csv += measure_name(id) + "," + subset_label(system, r) + "\n";
    }
    measures.push_back(json{{"measure", measure_name(id)},
                            {"target", fraction_pair(dependency(system, system.all_conditionals(), id))},
                            {"reducts", lists}});
  }

  json checks = json::array();
  for (const auto& spec : subsets) {
    const AttributeSet attrs = resolve_subset(system, spec);
    json row = json::array();
    for (const auto id : ids) {
      const bool ok = is_reduct(system, attrs, id);
      row.push_back(json{{"measure", measure_name(id)}, {"is_reduct", ok}});
      csv += "check:" + measure_name(id) + "," + subset_label(system, attrs) + "," +
             (ok ? "true" : "false") + "\n";
    }
    checks.push_back(json{{"subset", subset_names(system, attrs)}, {"checks", row}});
  }

  std::string text;
  if (o.format == "csv") {
    text = csv;
  } else {
    const json report{{"schema_version", kSchemaVersion},
                      {"command", "oracle"},
                      {"config", config},
                      {"measures", measures},
                      {"subset_checks", checks}};
    text = report.dump(2) + "\n";
  }
  write_report(o, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rough-set dependency measures, feature selection, and evaluation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "roughdep 1.0.0");

  CommonOptions measure_opts, select_opts, evaluate_opts, oracle_opts;
  std::vector<std::string> measure_subsets, evaluate_subsets, oracle_subsets;
  std::string select_measure, select_direction;
  std::string evaluate_measure = "ecd", evaluate_direction = "forward";
  std::string oracle_measure;
  std::size_t evaluate_k = 5, oracle_cap = 20;
  std::uint64_t evaluate_seed = 0;

  CLI::App* measure = app.add_subcommand("measure", "Dependency values per attribute subset");
  add_common_flags(measure, measure_opts);
  measure->add_option("--subset", measure_subsets,
                      "Attribute subset as comma-separated names (repeatable; '' or {} = empty "
                      "set; default: each single attribute plus the full set)");

  CLI::App* select = app.add_subcommand("select", "Greedy forward/backward feature selection");
  add_common_flags(select, select_opts);
  select->add_option("--measure", select_measure, "Dependency measure")
      ->required()
      ->check(CLI::IsMember({"cla", "rel", "dir", "ecd"}));
  select->add_option("--direction", select_direction, "Search direction")
      ->required()
      ->check(CLI::IsMember({"forward", "backward"}));

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Block-majority classification metrics for a subset (or a selection result)");
  add_common_flags(evaluate, evaluate_opts);
  evaluate->add_option("--subset", evaluate_subsets,
                       "Subset to evaluate (default: run selection first)");
  evaluate->add_option("--measure", evaluate_measure, "Measure for the selection run")
      ->check(CLI::IsMember({"cla", "rel", "dir", "ecd"}));
  evaluate->add_option("--direction", evaluate_direction, "Direction for the selection run")
      ->check(CLI::IsMember({"forward", "backward"}));
  evaluate->add_option("--k", evaluate_k, "Stratified fold count; 0 = resubstitution");
  evaluate->add_option("--seed", evaluate_seed, "Shuffle seed for k-fold");

  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive minimal reducts (ground truth)");
  add_common_flags(oracle, oracle_opts);
  oracle->add_option("--measure", oracle_measure, "Restrict to one measure (default: all four)")
      ->check(CLI::IsMember({"cla", "rel", "dir", "ecd"}));
  oracle->add_option("--subset", oracle_subsets, "Subset to cross-check with is_reduct (repeatable)");
  oracle->add_option("--cap", oracle_cap, "Refuse more than this many conditional attributes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }

  try {
    if (measure->parsed()) return cmd_measure(measure, measure_opts, measure_subsets);
    if (select->parsed()) return cmd_select(select, select_opts, select_measure, select_direction);
    if (evaluate->parsed())
      return cmd_evaluate(evaluate, evaluate_opts, evaluate_subsets, evaluate_measure,
                          evaluate_direction, evaluate_k, evaluate_seed);
    if (oracle->parsed()) return cmd_oracle(oracle, oracle_opts, oracle_measure, oracle_subsets,
                                            oracle_cap);
  } catch (const csv_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
