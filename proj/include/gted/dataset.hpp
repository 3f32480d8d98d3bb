#pragma once

#include "gted/evalkit.hpp"
#include "gted/gted.hpp"
#include "gted/standardize.hpp"

namespace gted {

// One dataset row, line-delimited JSON with keys id, nl, label_fl, pred_fl,
// human.
struct EvalRecord {
  std::string id;
  std::optional<std::string> nl;
  std::string label_fl;
  std::string pred_fl;
  std::optional<bool> human;
};

struct SkippedLine {
  size_t line_number;  // 1-based
  std::string reason;
};

struct Dataset {
  std::vector<EvalRecord> records;
  std::vector<SkippedLine> malformed;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fatal (FormatError) only if zero records parse; malformed lines are
// collected with their line numbers.
Dataset load_dataset(const std::string& path);

struct RunConfig {
  StandardizeConfig standardize;
  AlphaMode alpha = AlphaMode::Scoped;
  bool include_dumb_ops = true;
  UnitCostModel costs;
  DecisionConfig decision;
  std::string report_path;  // optional output paths
  std::string csv_path;
};

// Key-value config file with [standardize], [gted], [output] sections.
RunConfig load_config(const std::string& path);

struct RecordRow {
  std::string id;
  double distance = 0.0;
  std::optional<double> similarity;
  bool decision = false;
  bool human = false;
  bool skipped = false;
  std::string skip_reason;
};

struct RunReport {
  std::string dataset_path;
  RunConfig config;
  std::vector<RecordRow> rows;     // scored records, dataset order
  std::vector<RecordRow> skipped;  // unscorable records (counted negative)
  ConfusionMatrix confusion;
  MetricReport metrics;
};

// Parse -> standardize -> OPTs -> similarity -> decide, per record.
// Records that fail to parse count as negative decisions and are listed
// under skipped. Every record must carry a human verdict.
RunReport evaluate(const Dataset& dataset, const RunConfig& config,
                   const std::string& dataset_path = "");

// Similarity computed once per record, reused across all thetas.
std::vector<SweepPoint> sweep_dataset(const Dataset& dataset,
                                      const RunConfig& config,
                                      const std::vector<double>& thetas);

// Per-record structured text (one JSON object per line) plus a config echo
// header line.
std::string report_jsonl(const RunReport& report);

std::string report_summary_csv(const RunReport& report);

}  // namespace gted
