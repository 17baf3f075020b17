// Command-line front end: model training, pipeline runs, evaluation and
// parameter sweeps.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "triage/triage.hpp"

namespace {

using triage::Error;
using triage::ErrorKind;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

triage::StopwordList stopwords_or_default(const std::string& path) {
  return path.empty() ? triage::default_stopwords() : triage::load_stopwords(path);
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || !std::isfinite(v)) throw Error(ErrorKind::Parse, "not a number in --values: " + item);
    values.push_back(v);
  }
  return values;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

nlohmann::ordered_json prf_json(const triage::PrfScore& s) {
  return {{"precision", round2(s.precision)},
          {"recall", round2(s.recall)},
          {"f_measure", round2(s.f_measure)},
          {"zero_denominator", s.zero_denominator}};
}

struct Options {
  std::string train, out, stopwords;
  double gamma = 0.01, c = 1.0, tol = 1e-3;
  int max_passes = 10;
  std::uint64_t seed = 42;
  bool l2 = false;
  std::string corpus, nb, svm, config, report = "-";
  std::string predictions, gold;
  std::string param, values;
};

int cmd_train_nb(const Options& o) {
  const auto model = triage::train_nb(triage::load_training(o.train), stopwords_or_default(o.stopwords));
  triage::save_nb(model, o.out);
  std::cerr << "trained naive bayes on " << model.n_records() << " records, vocabulary " << model.vocabulary.size()
            << "\n";
  return 0;
}

int cmd_train_svm(const Options& o, const CLI::App& sub) {
  triage::NeedsTrainingParams params;
  std::string stopword_path = o.stopwords;
  if (!o.config.empty()) {
    const auto config = triage::load_config(o.config);
    params.gamma = config.gamma;
    params.c = config.svm_c;
    params.tol = config.smo_tolerance;
    params.max_passes = config.smo_max_passes;
    params.seed = config.svm_seed;
    params.l2_normalize = config.svm_l2_normalize;
    if (stopword_path.empty()) stopword_path = config.stopword_path;
  }
  // Flags given on the command line win over the config file.
  if (o.config.empty() || sub.count("--gamma")) params.gamma = o.gamma;
  if (o.config.empty() || sub.count("--c")) params.c = o.c;
  if (o.config.empty() || sub.count("--tol")) params.tol = o.tol;
  if (o.config.empty() || sub.count("--max-passes")) params.max_passes = o.max_passes;
  if (o.config.empty() || sub.count("--seed")) params.seed = o.seed;
  if (o.l2) params.l2_normalize = true;
  if (!(params.gamma > 0.0) || !(params.c > 0.0)) throw Error(ErrorKind::Validation, "--gamma and --c must be > 0");
  const auto model = triage::train_needs(triage::load_training(o.train), stopwords_or_default(stopword_path), params);
  triage::save_svm(model, o.out);
  std::cerr << "trained " << model.pairs.size() << " pairwise svms over " << model.classes.size() << " classes\n";
  return 0;
}

int cmd_run(const Options& o) {
  const auto config = o.config.empty() ? triage::PipelineConfig{} : triage::load_config(o.config);
  std::vector<std::string> warnings;
  const auto res = triage::load_resources(config, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const auto nb = triage::load_nb(o.nb);
  const auto svm = triage::load_svm(o.svm);
  const auto report =
      triage::run_pipeline(config, triage::load_tweets(o.corpus), nb, svm, res.stopwords, res.gazetteer);
  write_output(o.report, triage::report_to_string(report));
  return 0;
}

int cmd_eval(const Options& o) {
  const auto predictions = triage::load_labels(o.predictions);
  const auto gold = triage::load_labels(o.gold);
  std::vector<std::string> pred_list;
  std::vector<std::string> gold_list;
  std::set<std::string> classes;
  for (const auto& [id, label] : gold) {
    const auto it = predictions.find(id);
    if (it == predictions.end()) throw Error(ErrorKind::Validation, "no prediction for gold id '" + id + "'");
    pred_list.push_back(it->second);
    gold_list.push_back(label);
    classes.insert(label);
    classes.insert(it->second);
  }
  nlohmann::ordered_json out;
  out["n"] = gold_list.size();
  out["accuracy"] = round2(triage::accuracy(pred_list, gold_list));
  nlohmann::ordered_json per_class = nlohmann::ordered_json::object();
  triage::PrfScore macro;
  for (const auto& cls : classes) {
    const auto s = triage::classifier_prf(pred_list, gold_list, cls);
    per_class[cls] = prf_json(s);
    macro.precision += s.precision / static_cast<double>(classes.size());
    macro.recall += s.recall / static_cast<double>(classes.size());
    macro.f_measure += s.f_measure / static_cast<double>(classes.size());
    macro.zero_denominator = macro.zero_denominator || s.zero_denominator;
  }
  out["classes"] = std::move(per_class);
  out["macro"] = prf_json(macro);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_sweep(const Options& o) {
  const auto param = triage::parse_sweep_param(o.param);
  if (!param) throw Error(ErrorKind::Validation, "unknown --param '" + o.param + "'");
  const auto values = parse_values(o.values);
  const auto config = o.config.empty() ? triage::PipelineConfig{} : triage::load_config(o.config);
  std::vector<std::string> warnings;
  const auto res = triage::load_resources(config, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  const auto tweets = triage::load_tweets(o.corpus);
  const auto gold = triage::load_labels(o.gold);

  std::string table;
  switch (*param) {
    case triage::SweepParam::TopicThreshold:
      table = triage::threshold_table_csv(
          "threshold", triage::sweep_topic_threshold(values, tweets, gold, res.stopwords));
      break;
    case triage::SweepParam::StThreshold:
      table = triage::threshold_table_csv(
          "threshold", triage::sweep_st_threshold(values, tweets, gold, res.gazetteer, config.iat_limit));
      break;
    case triage::SweepParam::Gamma: {
      triage::NeedsTrainingParams base;
      base.c = config.svm_c;
      base.tol = config.smo_tolerance;
      base.max_passes = config.smo_max_passes;
      base.seed = config.svm_seed;
      base.l2_normalize = config.svm_l2_normalize;
      table = triage::gamma_table_csv(triage::sweep_gamma(values, tweets, gold, res.stopwords, base));
      break;
    }
  }
  write_output(o.out.empty() ? "-" : o.out, table);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disaster tweet triage: relevance filtering, topic and location clustering, need classification"};
  app.require_subcommand(1);
  Options o;

  auto* train_nb = app.add_subcommand("train-nb", "Train the relevance (Naive Bayes) model");
  train_nb->add_option("--train", o.train, "JSON-Lines training records {text, label}")->required();
  train_nb->add_option("--out", o.out, "Model output file")->required();
  train_nb->add_option("--stopwords", o.stopwords, "Stopword file (default: built-in list)");

  auto* train_svm = app.add_subcommand("train-svm", "Train the need classifier (one-vs-one RBF SVM)");
  train_svm->add_option("--train", o.train, "JSON-Lines training records {text, label}")->required();
  train_svm->add_option("--gamma", o.gamma, "RBF kernel width")->capture_default_str();
  train_svm->add_option("--c", o.c, "Soft-margin penalty")->capture_default_str();
  train_svm->add_option("--out", o.out, "Model output file")->required();
  train_svm->add_option("--tol", o.tol, "SMO KKT tolerance")->capture_default_str();
  train_svm->add_option("--max-passes", o.max_passes, "Idle SMO sweeps before stopping")->capture_default_str();
  train_svm->add_option("--seed", o.seed, "Seed for SMO partner selection")->capture_default_str();
  train_svm->add_flag("--l2-normalize", o.l2, "L2-normalize TF-IDF vectors");
  train_svm->add_option("--stopwords", o.stopwords, "Stopword file (default: built-in list)");
  train_svm->add_option("--config", o.config, "Pipeline config supplying SVM defaults (JSON)");

  auto* run = app.add_subcommand("run", "Run the full pipeline over a corpus");
  run->add_option("--corpus", o.corpus, "JSON-Lines corpus {id, text, created_at}")->required();
  run->add_option("--nb", o.nb, "Relevance model file")->required();
  run->add_option("--svm", o.svm, "Need model file")->required();
  run->add_option("--config", o.config, "Pipeline config (JSON)");
  run->add_option("--report", o.report, "Report output file, '-' for stdout")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "Score predictions against gold labels");
  eval->add_option("--predictions", o.predictions, "JSON-Lines {id, label}")->required();
  eval->add_option("--gold", o.gold, "JSON-Lines {id, label}")->required();

  auto* sweep = app.add_subcommand("sweep", "Evaluate a stage over a list of parameter values");
  sweep->add_option("--param", o.param, "topic_threshold | st_threshold | gamma")
      ->required()
      ->check(CLI::IsMember({"topic_threshold", "st_threshold", "gamma", "topic-threshold", "st-threshold"}));
  sweep->add_option("--values", o.values, "Comma-separated values")->required();
  sweep->add_option("--corpus", o.corpus, "JSON-Lines corpus")->required();
  sweep->add_option("--gold", o.gold, "JSON-Lines gold labels {id, label}")->required();
  sweep->add_option("--config", o.config, "Pipeline config (JSON)");
  sweep->add_option("--out", o.out, "CSV output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*train_nb) return cmd_train_nb(o);
    if (*train_svm) return cmd_train_svm(o, *train_svm);
    if (*run) return cmd_run(o);
    if (*eval) return cmd_eval(o);
    if (*sweep) return cmd_sweep(o);
  } catch (const triage::Error& e) {
    std::cerr << "error (" << triage::to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
