#include "gted/dataset.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gted/opt.hpp"
#include "gted/parser.hpp"

namespace gted {

using nlohmann::json;

Dataset load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);
  Dataset ds;
  std::set<std::string> ids;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      json j = json::parse(line);
      EvalRecord rec;
      rec.id = j.at("id").get<std::string>();
      if (rec.id.empty()) throw FormatError("empty id");
      if (!ids.insert(rec.id).second)
        throw FormatError("duplicate id `" + rec.id + "`");
      if (j.contains("nl") && !j["nl"].is_null())
        rec.nl = j["nl"].get<std::string>();
      rec.label_fl = j.at("label_fl").get<std::string>();
      rec.pred_fl = j.at("pred_fl").get<std::string>();
      if (rec.label_fl.empty() || rec.pred_fl.empty())
        throw FormatError("label_fl and pred_fl must be nonempty");
      if (j.contains("human") && !j["human"].is_null())
        rec.human = j["human"].get<bool>();
      ds.records.push_back(std::move(rec));
    } catch (const std::exception& e) {
      ds.malformed.push_back({lineno, e.what()});
    }
  }
  if (ds.records.empty())
    throw FormatError("no valid records in dataset: " + path);
  return ds;
}

namespace {

AlphaMode parse_alpha(const std::string& v) {
  if (v == "off") return AlphaMode::Off;
  if (v == "rename-only") return AlphaMode::RenameOnly;
  if (v == "scoped") return AlphaMode::Scoped;
  throw ConfigError("invalid alpha mode: " + v);
}

bool parse_flag(const std::string& v) {
  if (v == "on" || v == "true" || v == "1") return true;
  if (v == "off" || v == "false" || v == "0") return false;
  throw ConfigError("invalid flag value: " + v);
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line, section;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[' && line.back() == ']') {
      section = line.substr(1, line.size() - 2);
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("malformed config line: " + line);
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    try {
      if (section == "standardize") {
        if (key == "rewrite") cfg.standardize.rewrite = parse_flag(value);
        else if (key == "expand") cfg.standardize.expand = parse_flag(value);
        else throw ConfigError("unknown key");
      } else if (section == "gted") {
        if (key == "theta") cfg.decision.theta = std::stod(value);
        else if (key == "alpha") cfg.alpha = parse_alpha(value);
        else if (key == "dumb_ops") cfg.include_dumb_ops = parse_flag(value);
        else if (key == "insert_cost") cfg.costs.insert_cost = std::stod(value);
        else if (key == "delete_cost") cfg.costs.delete_cost = std::stod(value);
        else if (key == "relabel_cost")
          cfg.costs.relabel_cost = std::stod(value);
        else if (key == "clamp_negative")
          cfg.decision.clamp_negative = parse_flag(value);
        else throw ConfigError("unknown key");
      } else if (section == "output") {
        if (key == "report") cfg.report_path = value;
        else if (key == "csv") cfg.csv_path = value;
        else throw ConfigError("unknown key");
      } else {
        throw ConfigError("unknown section");
      }
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("invalid value for " + section + "." + key + ": " +
                        value);
    }
  }
  if (cfg.decision.theta < 0.0 || cfg.decision.theta > 1.0)
    throw ConfigError("theta must be within [0,1]");
  return cfg;
}

namespace {

struct ScoredRecord {
  RecordRow row;
  bool scored = false;
};

ScoredRecord score_record(const EvalRecord& rec, const RunConfig& config,
                          const TransformationSet& ts) {
  ScoredRecord out;
  out.row.id = rec.id;
  out.row.human = rec.human.value_or(false);
  try {
    StandardizedStmt label =
        standardize(parse_theorem(rec.label_fl), config.standardize);
    StandardizedStmt pred =
        standardize(parse_theorem(rec.pred_fl), config.standardize);
    OperatorTree t1 = build_opt(label);
    OperatorTree t2 = build_opt(pred);
    out.row.distance = gted_distance(t1, t2, ts);
    out.row.similarity = similarity(t1, t2, ts, config.decision);
    out.row.decision = decide(t1, t2, ts, config.decision);
    out.scored = true;
  } catch (const SyntaxError& e) {
    // Unscorable: a statement the grammar rejects cannot be validated.
    out.row.skipped = true;
    out.row.decision = false;
    out.row.skip_reason = e.what();
  }
  return out;
}

}  // namespace

RunReport evaluate(const Dataset& dataset, const RunConfig& config,
                   const std::string& dataset_path) {
  if (config.decision.theta < 0.0 || config.decision.theta > 1.0)
    throw ConfigError("theta must be within [0,1]");
  for (const EvalRecord& rec : dataset.records)
    if (!rec.human)
      throw ConfigError("record `" + rec.id + "` has no human verdict");

  TransformationSet ts =
      default_transformation_set(config.alpha, config.include_dumb_ops);
  ts.dumb_costs = config.costs;

  RunReport report;
  report.dataset_path = dataset_path;
  report.config = config;
  std::vector<bool> decisions, truth;
  for (const EvalRecord& rec : dataset.records) {
    ScoredRecord sr = score_record(rec, config, ts);
    decisions.push_back(sr.row.decision);
    truth.push_back(sr.row.human);
    if (sr.scored) report.rows.push_back(sr.row);
    else report.skipped.push_back(sr.row);
  }
  report.confusion = confusion(decisions, truth);
  report.metrics = gted::report(report.confusion);
  return report;
}

std::vector<SweepPoint> sweep_dataset(const Dataset& dataset,
                                      const RunConfig& config,
                                      const std::vector<double>& thetas) {
  for (size_t i = 1; i < thetas.size(); ++i)
    if (thetas[i] <= thetas[i - 1])
      throw ConfigError("theta grid must be strictly increasing");
  for (double t : thetas)
    if (t < 0.0 || t > 1.0) throw ConfigError("theta grid must lie in [0,1]");
  for (const EvalRecord& rec : dataset.records)
    if (!rec.human)
      throw ConfigError("record `" + rec.id + "` has no human verdict");

  TransformationSet ts =
      default_transformation_set(config.alpha, config.include_dumb_ops);
  ts.dumb_costs = config.costs;

  std::vector<std::pair<double, bool>> pairs;
  for (const EvalRecord& rec : dataset.records) {
    ScoredRecord sr = score_record(rec, config, ts);
    // Unscorable or infinite-distance records never cross any threshold.
    double sim = sr.row.similarity.value_or(-1.0);
    pairs.emplace_back(sim, sr.row.human);
  }
  return sweep(pairs, thetas);
}

std::string report_jsonl(const RunReport& report) {
  std::ostringstream out;
  json header;
  header["dataset"] = report.dataset_path;
  header["config"] = {
      {"theta", report.config.decision.theta},
      {"alpha", report.config.alpha == AlphaMode::Off          ? "off"
                : report.config.alpha == AlphaMode::RenameOnly ? "rename-only"
                                                               : "scoped"},
      {"dumb_ops", report.config.include_dumb_ops},
      {"insert_cost", report.config.costs.insert_cost},
      {"delete_cost", report.config.costs.delete_cost},
      {"relabel_cost", report.config.costs.relabel_cost},
      {"rewrite", report.config.standardize.rewrite},
      {"expand", report.config.standardize.expand},
  };
  out << header.dump() << "\n";
  for (const RecordRow& row : report.rows) {
    json j;
    j["id"] = row.id;
    j["distance"] = row.distance;
    if (row.similarity) j["similarity"] = *row.similarity;
    else j["similarity"] = nullptr;
    j["decision"] = row.decision;
    j["human"] = row.human;
    out << j.dump() << "\n";
  }
  for (const RecordRow& row : report.skipped) {
    json j;
    j["id"] = row.id;
    j["skipped"] = true;
    j["reason"] = row.skip_reason;
    j["decision"] = row.decision;
    j["human"] = row.human;
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string report_summary_csv(const RunReport& report) {
  std::ostringstream out;
  out << "tp,tn,fp,fn,precision,recall,accuracy,kappa\n";
  out << report.confusion.tp << "," << report.confusion.tn << ","
      << report.confusion.fp << "," << report.confusion.fn << ","
      << format_percent(report.metrics.precision) << ","
      << format_percent(report.metrics.recall) << ","
      << format_percent(report.metrics.accuracy) << ","
      << format_kappa(report.metrics.kappa) << "\n";
  return out.str();
}

}  // namespace gted
