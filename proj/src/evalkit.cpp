#include "gted/evalkit.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "gted/lexer.hpp"

namespace gted {

bool identity_match(const std::string& label, const std::string& pred) {
  auto strip = [](const std::string& s) {
    std::string out;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t start = pos;
      uint32_t cp = decode_utf8(s, pos);
      if (!is_unicode_whitespace(cp)) out.append(s, start, pos - start);
    }
    return out;
  };
  return strip(label) == strip(pred);
}

double bleu(const std::string& pred, const std::string& ref) {
  std::vector<Token> pt = tokenize(pred);
  std::vector<Token> rt = tokenize(ref);
  if (pt.empty() || rt.empty())
    throw EmptyInput("bleu requires at least one token on each side");

  auto grams = [](const std::vector<Token>& toks, size_t n) {
    std::map<std::string, long> counts;
    if (toks.size() < n) return counts;
    for (size_t i = 0; i + n <= toks.size(); ++i) {
      std::string key;
      for (size_t k = 0; k < n; ++k) {
        key += toks[i + k].text;
        key += '\x1f';
      }
      counts[key]++;
    }
    return counts;
  };

  double log_sum = 0.0;
  for (size_t n = 1; n <= 4; ++n) {
    auto pc = grams(pt, n);
    auto rc = grams(rt, n);
    long clipped = 0, total = 0;
    for (const auto& [key, count] : pc) {
      total += count;
      auto it = rc.find(key);
      if (it != rc.end()) clipped += std::min(count, it->second);
    }
    if (total == 0 || clipped == 0) return 0.0;
    log_sum += std::log(static_cast<double>(clipped) / total);
  }
  double bp = 1.0;
  double c = static_cast<double>(pt.size());
  double r = static_cast<double>(rt.size());
  if (c < r) bp = std::exp(1.0 - r / c);
  return bp * std::exp(log_sum / 4.0);
}

ConfusionMatrix confusion(const std::vector<bool>& decisions,
                          const std::vector<bool>& truth) {
  if (decisions.size() != truth.size() || decisions.empty())
    throw LengthMismatch("decision and truth vectors must have equal size >= 1");
  ConfusionMatrix cm;
  for (size_t i = 0; i < decisions.size(); ++i) {
    if (decisions[i] && truth[i]) cm.tp++;
    else if (!decisions[i] && !truth[i]) cm.tn++;
    else if (decisions[i]) cm.fp++;
    else cm.fn++;
  }
  return cm;
}

MetricReport report(const ConfusionMatrix& cm) {
  MetricReport r;
  double total = static_cast<double>(cm.total());
  if (cm.tp + cm.fp > 0)
    r.precision = static_cast<double>(cm.tp) / (cm.tp + cm.fp);
  r.recall = cm.tp + cm.fn > 0 ? static_cast<double>(cm.tp) / (cm.tp + cm.fn)
                               : 0.0;
  r.accuracy = (cm.tp + cm.tn) / total;
  double p_o = r.accuracy;
  double p_e = ((cm.tp + cm.fp) * (cm.tp + cm.fn) +
                (cm.fn + cm.tn) * (cm.fp + cm.tn)) /
               (total * total);
  r.kappa = p_e >= 1.0 ? 0.0 : (p_o - p_e) / (1.0 - p_e);
  return r;
}

std::vector<SweepPoint> sweep(
    const std::vector<std::pair<double, bool>>& pairs,
    const std::vector<double>& thetas) {
  std::vector<SweepPoint> out;
  for (double theta : thetas) {
    std::vector<bool> decisions, truth;
    decisions.reserve(pairs.size());
    truth.reserve(pairs.size());
    for (const auto& [sim, human] : pairs) {
      decisions.push_back(sim > theta);
      truth.push_back(human);
    }
    SweepPoint p;
    p.theta = theta;
    p.confusion = confusion(decisions, truth);
    p.report = report(p.confusion);
    out.push_back(p);
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string out = "theta,tp,tn,fp,fn,precision,recall,accuracy,kappa\n";
  char buf[256];
  for (const SweepPoint& p : points) {
    std::string prec = p.report.precision
                           ? std::to_string(*p.report.precision)
                           : std::string("0/0");
    if (p.report.precision) {
      std::snprintf(buf, sizeof(buf), "%.6f", *p.report.precision);
      prec = buf;
    }
    std::snprintf(buf, sizeof(buf), "%.6g,%ld,%ld,%ld,%ld,%s,%.6f,%.6f,%.6f\n",
                  p.theta, p.confusion.tp, p.confusion.tn, p.confusion.fp,
                  p.confusion.fn, prec.c_str(), p.report.recall,
                  p.report.accuracy, p.report.kappa);
    out += buf;
  }
  return out;
}

std::string format_percent(const std::optional<double>& value) {
  if (!value) return "0/0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *value * 100.0);
  return buf;
}

std::string format_kappa(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  return buf;
}

}  // namespace gted
