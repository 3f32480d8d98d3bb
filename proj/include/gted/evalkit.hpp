#pragma once

#include <optional>
#include <string>
#include <vector>

#include <stdexcept>

namespace gted {

struct ConfusionMatrix {
  long tp = 0, tn = 0, fp = 0, fn = 0;
  long total() const { return tp + tn + fp + fn; }
};

struct MetricReport {
  std::optional<double> precision;  // empty for the 0/0 case
  double recall = 0.0;
  double accuracy = 0.0;
  double kappa = 0.0;
};

struct SweepPoint {
  double theta;
  ConfusionMatrix confusion;
  MetricReport report;
};

class EmptyInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff the two texts are byte-identical after deleting every Unicode
// whitespace character.
bool identity_match(const std::string& label, const std::string& pred);

// BLEU over the lexer's token stream: geometric mean of clipped n-gram
// precisions for n = 1..4, no smoothing, brevity penalty exp(1 - r/c) when
// c < r. Zero if any n-gram precision is zero.
double bleu(const std::string& pred, const std::string& ref);

ConfusionMatrix confusion(const std::vector<bool>& decisions,
                          const std::vector<bool>& truth);

// precision = tp/(tp+fp) (empty on 0/0), recall = tp/(tp+fn),
// accuracy = (tp+tn)/total, kappa = (p_o - p_e)/(1 - p_e) with the
// degenerate p_e = 1 case defined as 0.
MetricReport report(const ConfusionMatrix& cm);

// One point per theta: decisions = (similarity > theta).
std::vector<SweepPoint> sweep(
    const std::vector<std::pair<double, bool>>& pairs,
    const std::vector<double>& thetas);

// Plot-ready CSV: theta, tp, tn, fp, fn, precision, recall, accuracy, kappa.
std::string sweep_csv(const std::vector<SweepPoint>& points);

// Percentages to two decimals ("88.75%", "0/0"), kappa to three ("0.438").
std::string format_percent(const std::optional<double>& value);
std::string format_kappa(double value);

}  // namespace gted
