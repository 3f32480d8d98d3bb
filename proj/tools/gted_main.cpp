#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gted/dataset.hpp"
#include "gted/opt.hpp"
#include "gted/parser.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gted::IoError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

gted::OperatorTree load_tree(const std::string& path,
                             const gted::StandardizeConfig& cfg = {}) {
  gted::TheoremStmt stmt = gted::parse_theorem(read_file(path));
  return gted::build_opt(gted::standardize(stmt, cfg));
}

gted::AlphaMode alpha_from_string(const std::string& s) {
  if (s == "off") return gted::AlphaMode::Off;
  if (s == "rename-only") return gted::AlphaMode::RenameOnly;
  if (s == "scoped") return gted::AlphaMode::Scoped;
  throw gted::ConfigError("invalid --alpha mode: " + s);
}

std::vector<double> parse_theta_grid(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stod(item));
  }
  if (out.empty()) throw gted::ConfigError("empty theta grid");
  return out;
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw gted::IoError("cannot write file: " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semantic similarity of formal theorem statements via "
               "generalized tree edit distance"};
  app.require_subcommand(1);

  std::string file_a, file_b, dataset_path, config_path, alpha_str = "scoped";
  std::string theta_grid, metric = "identity", out_path;
  double theta = 0.6;
  bool oneline = false, no_dumb_ops = false;

  auto* cmd_parse = app.add_subcommand("parse", "parse a statement file");
  cmd_parse->add_option("file", file_a)->required();

  auto* cmd_tree = app.add_subcommand("tree", "print the operator tree");
  cmd_tree->add_option("file", file_a)->required();
  cmd_tree->add_flag("--oneline", oneline, "bracketed one-line term");

  auto* cmd_dist = app.add_subcommand("distance", "tree edit distance");
  cmd_dist->add_option("a", file_a)->required();
  cmd_dist->add_option("b", file_b)->required();

  auto* cmd_sim = app.add_subcommand("similarity", "GTED similarity score");
  cmd_sim->add_option("a", file_a)->required();
  cmd_sim->add_option("b", file_b)->required();
  cmd_sim->add_option("--alpha", alpha_str, "off | rename-only | scoped");
  cmd_sim->add_option("--theta", theta, "decision threshold");
  cmd_sim->add_flag("--no-dumb-ops", no_dumb_ops,
                    "disable insert/delete/relabel fallbacks");

  auto* cmd_eval = app.add_subcommand("evaluate", "score a dataset");
  cmd_eval->add_option("dataset", dataset_path)->required();
  cmd_eval->add_option("--config", config_path, "config file");

  auto* cmd_sweep = app.add_subcommand("sweep", "threshold sweep CSV");
  cmd_sweep->add_option("dataset", dataset_path)->required();
  cmd_sweep->add_option("--thetas", theta_grid, "comma-separated grid")
      ->required();
  cmd_sweep->add_option("--config", config_path, "config file");
  cmd_sweep->add_option("--out", out_path, "CSV output path");

  auto* cmd_base = app.add_subcommand("baselines", "identity/BLEU baselines");
  cmd_base->add_option("dataset", dataset_path)->required();
  cmd_base->add_option("--metric", metric, "identity | bleu");
  cmd_base->add_option("--theta", theta, "BLEU decision threshold");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_parse) {
      std::string src = read_file(file_a);
      gted::TheoremStmt stmt = gted::parse_theorem(src);
      std::cout << "name: " << stmt.name << "\n";
      std::cout << "binders: " << stmt.binders.size() << "\n";
      std::cout << "trailer: " << (stmt.trailer ? "present" : "absent") << "\n";
      gted::OperatorTree t = gted::build_opt(gted::standardize(stmt));
      std::cout << "standardized: " << gted::render(t).text << "\n";
    } else if (*cmd_tree) {
      gted::OperatorTree t = load_tree(file_a);
      if (oneline) std::cout << gted::to_oneline(t) << "\n";
      else std::cout << gted::to_indented(t);
    } else if (*cmd_dist) {
      gted::OperatorTree t1 = load_tree(file_a);
      gted::OperatorTree t2 = load_tree(file_b);
      std::cout << "distance: " << gted::ted_distance(t1, t2) << "\n";
      std::cout << "|T1|: " << t1.size() << "\n";
      std::cout << "|T2|: " << t2.size() << "\n";
    } else if (*cmd_sim) {
      gted::OperatorTree t1 = load_tree(file_a);
      gted::OperatorTree t2 = load_tree(file_b);
      gted::TransformationSet ts = gted::default_transformation_set(
          alpha_from_string(alpha_str), !no_dumb_ops);
      gted::DecisionConfig dc;
      dc.theta = theta;
      if (dc.theta < 0.0 || dc.theta > 1.0)
        throw gted::ConfigError("theta must be within [0,1]");
      double d = gted::gted_distance(t1, t2, ts);
      auto sim = gted::similarity(t1, t2, ts, dc);
      std::cout << "distance: " << d << "\n";
      std::cout << "|T1|: " << t1.size() << "\n";
      std::cout << "|T2|: " << t2.size() << "\n";
      std::cout << "similarity: "
                << (sim ? std::to_string(*sim) : std::string("undefined"))
                << "\n";
      std::cout << "decision: "
                << (gted::decide(t1, t2, ts, dc) ? "correct" : "incorrect")
                << "\n";
    } else if (*cmd_eval) {
      gted::RunConfig cfg;
      if (!config_path.empty()) cfg = gted::load_config(config_path);
      gted::Dataset ds = gted::load_dataset(dataset_path);
      gted::RunReport report = gted::evaluate(ds, cfg, dataset_path);
      write_or_print(cfg.report_path, gted::report_jsonl(report));
      write_or_print(cfg.csv_path, gted::report_summary_csv(report));
    } else if (*cmd_sweep) {
      gted::RunConfig cfg;
      if (!config_path.empty()) cfg = gted::load_config(config_path);
      gted::Dataset ds = gted::load_dataset(dataset_path);
      auto points = gted::sweep_dataset(ds, cfg, parse_theta_grid(theta_grid));
      write_or_print(out_path, gted::sweep_csv(points));
    } else if (*cmd_base) {
      gted::Dataset ds = gted::load_dataset(dataset_path);
      std::vector<bool> decisions, truth;
      for (const gted::EvalRecord& rec : ds.records) {
        if (!rec.human)
          throw gted::ConfigError("record `" + rec.id +
                                  "` has no human verdict");
        bool d;
        if (metric == "identity") {
          d = gted::identity_match(rec.label_fl, rec.pred_fl);
          std::cout << rec.id << " " << (d ? 1 : 0) << "\n";
        } else if (metric == "bleu") {
          double score = gted::bleu(rec.pred_fl, rec.label_fl);
          d = score > theta;
          std::cout << rec.id << " " << score << "\n";
        } else {
          throw gted::ConfigError("unknown metric: " + metric);
        }
        decisions.push_back(d);
        truth.push_back(*rec.human);
      }
      gted::ConfusionMatrix cm = gted::confusion(decisions, truth);
      gted::MetricReport mr = gted::report(cm);
      std::cout << "tp=" << cm.tp << " tn=" << cm.tn << " fp=" << cm.fp
                << " fn=" << cm.fn << " precision="
                << gted::format_percent(mr.precision)
                << " recall=" << gted::format_percent(mr.recall)
                << " accuracy=" << gted::format_percent(mr.accuracy)
                << " kappa=" << gted::format_kappa(mr.kappa) << "\n";
    }
  } catch (const gted::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
