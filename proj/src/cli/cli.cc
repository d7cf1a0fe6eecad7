/*
 * Copyright 2026 The lexisent Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lexisent/cli/cli.h"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>

#include "lexisent/cli/output_dir.h"
#include "lexisent/context/corpus.h"
#include "lexisent/context/model.h"
#include "lexisent/core/csv.h"
#include "lexisent/core/text.h"
#include "lexisent/io/svg.h"
#include "lexisent/lexicon/eda.h"
#include "lexisent/lexicon/lexicon.h"
#include "lexisent/metrics/metrics.h"
#include "lexisent/ml/dataset.h"
#include "lexisent/ml/model.h"
#include "lexisent/score/scorer.h"
#include "lexisent/translate/translator.h"
#include "lexisent/xai/integrated_gradients.h"

namespace lexisent::cli {
namespace {

// Bad flag values detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string in;
  std::string out;
  std::string lex;
  std::string text;
  std::string from = "afrikaans";
  std::string to = "english";
  std::string language = "english";
  std::string mode = "v2";
  std::string baseline = "builtin";
  std::uint64_t seed = 42;
  int threads = 1;

  // ml
  std::string task = "pos";
  std::string model = "all";
  std::string model_path;
  double train_fraction = 0.8;
  ml::TrainOptions train;
  bool no_bootstrap = false;
  bool no_feature_subsample = false;

  // ctx
  std::size_t n = 1000;
  double noise = 0.0;
  std::vector<double> label_weights = {1.0, 1.0, 1.0};
  int min_context = 2;
  int max_context = 5;
  std::string corpus;
  context::ContextConfig ctx;
  std::string activation = "tanh";
  context::TrainConfig ctx_train;
  std::string class_weights = "inverse";

  // explain
  std::string sentence;
  int steps = xai::kDefaultSteps;
  std::string ig_baseline = "zero";
  std::string target_class;
  std::size_t limit = 20;
};

std::string DefaultLexicon() {
  const char* env = std::getenv("LEXISENT_LEXICON");
  return env != nullptr ? env : "";
}

Lexicon LoadLexicon(const std::string& path) {
  if (path.empty()) throw UsageError("--lex is required (or set LEXISENT_LEXICON)");
  return ParseLexicon(csv::ReadFile(path));
}

Language LanguageArg(const std::string& name) {
  try {
    return ParseLanguage(NormalizeText(name));
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

template <typename Fn>
auto UsageGuard(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const DataError& e) {
    throw UsageError(e.what());
  }
}

// Rows of a `sentence,language` CSV with a header; `language` may be absent,
// in which case `fallback` applies.
std::vector<std::pair<std::string, Language>> ReadSentences(const std::string& path,
                                                            Language fallback) {
  const auto records = csv::Parse(csv::ReadFile(path));
  if (records.empty()) throw DataError("'" + path + "' is empty");
  const auto& header = records[0];
  std::optional<std::size_t> sentence_col, language_col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = Trim(header[i]);
    if (name == "sentence") sentence_col = i;
    if (name == "language") language_col = i;
  }
  if (!sentence_col) throw DataError(0, "sentence", "missing 'sentence' column");
  std::vector<std::pair<std::string, Language>> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw DataError(r, "*", "expected " + std::to_string(header.size()) + " fields");
    }
    Language language = fallback;
    if (language_col && !Trim(rec[*language_col]).empty()) {
      try {
        language = ParseLanguage(NormalizeText(Trim(rec[*language_col])));
      } catch (const DataError& e) {
        throw DataError(r, "language", e.what());
      }
    }
    rows.emplace_back(rec[*sentence_col], language);
  }
  return rows;
}

std::vector<double> HistogramDensity(const EdaReport& eda, std::size_t language) {
  std::vector<double> out;
  for (int b = 0; b < kHistogramBins; ++b) {
    out.push_back(eda.entry_count == 0
                      ? 0.0
                      : static_cast<double>(eda.language_histograms(
                            static_cast<Eigen::Index>(language), b)) /
                            static_cast<double>(eda.entry_count));
  }
  return out;
}

// ---- lexicon ---------------------------------------------------------------

int LexiconValidate(const Options& o, std::ostream& out, std::ostream& err) {
  const Lexicon lexicon = LoadLexicon(o.in.empty() ? o.lex : o.in);
  const ValidationReport report = ValidateLexicon(lexicon);
  const nlohmann::json json = ToJson(report);
  if (o.out.empty()) {
    out << json.dump(2) << "\n";
  } else {
    OutputDir dir(o.out);
    dir.WriteJson("validation.json", json);
    dir.Finish("lexicon validate", {{"in", o.in}});
  }
  if (!report.ok()) {
    err << report.issues.size() << " issue(s) in " << report.entry_count << " entries\n";
    return kExitData;
  }
  return kExitOk;
}

int LexiconClean(const Options& o, std::ostream& out, std::ostream&) {
  const Lexicon lexicon = LoadLexicon(o.in);
  const CleanResult result = Clean(lexicon);
  OutputDir dir(o.out);
  dir.Write("lexicon.csv", SerializeLexicon(result.lexicon));
  dir.WriteJson("cleaning_report.json", ToJson(result.report));
  dir.Finish("lexicon clean", {{"in", o.in}});
  out << "kept " << result.lexicon.size() << " of " << lexicon.size() << " entries, "
      << result.report.changes.size() << " form change(s)\n";
  return kExitOk;
}

int LexiconStats(const Options& o, std::ostream& out, std::ostream&) {
  const Lexicon lexicon = LoadLexicon(o.in);
  const EdaReport eda = ComputeEda(lexicon);
  OutputDir dir(o.out);
  dir.WriteJson("eda.json", ToJson(eda));

  std::vector<std::string> polarity_names;
  std::vector<double> polarity_values;
  for (Polarity p : kAllPolarities) {
    polarity_names.emplace_back(PolarityName(p));
    polarity_values.push_back(static_cast<double>(eda.polarity_counts(Index(p))));
  }
  dir.Write("polarity.svg", svg::BarChart(polarity_names, polarity_values,
                                          "Entries by polarity"));

  std::vector<std::string> pos_names;
  for (PosTag t : kAllPosTags) pos_names.emplace_back(PosTagName(t));
  dir.Write("pos_by_polarity.svg",
            svg::Heatmap(eda.pos_by_polarity.cast<double>(), pos_names, polarity_names,
                         "POS by polarity"));

  std::vector<svg::Series> densities;
  std::vector<std::string> language_names;
  for (Language l : kAllLanguages) {
    language_names.emplace_back(LanguageName(l));
    svg::Series s{std::string(LanguageName(l)), {}};
    const auto d = HistogramDensity(eda, Index(l));
    for (int b = 0; b < kHistogramBins; ++b) s.points.emplace_back(b - 9, d[static_cast<std::size_t>(b)]);
    densities.push_back(std::move(s));
  }
  dir.Write("score_distributions.svg",
            svg::LinePlot(densities, "Score distribution per language", "score",
                          "fraction of entries"));
  dir.Write("correlation.svg", svg::Heatmap(eda.correlation, language_names, language_names,
                                            "Score correlation between languages"));
  dir.Finish("lexicon stats", {{"in", o.in}});
  out << "wrote statistics for " << eda.entry_count << " entries to " << o.out << "\n";
  return kExitOk;
}

// ---- translate / score / compare -------------------------------------------

int TranslateCmd(const Options& o, std::ostream& out, std::ostream& err) {
  const Language from = LanguageArg(o.from);
  const Language to = LanguageArg(o.to);
  if (o.text.empty() == o.in.empty()) throw UsageError("give exactly one of --text or --in");
  const Lexicon lexicon = LoadLexicon(o.lex);
  if (!o.text.empty()) {
    const auto result = Translate(o.text, from, to, lexicon);
    out << result.translated_text << "\n";
    if (result.unknown_count > 0) err << result.unknown_count << " unknown word(s)\n";
    return kExitOk;
  }
  if (o.out.empty()) throw UsageError("--out is required with --in");
  std::string table = "sentence,translation,unknown_words,ambiguous_words\n";
  for (const auto& [sentence, language] : ReadSentences(o.in, from)) {
    const auto result = Translate(sentence, language, to, lexicon);
    table += csv::FormatRecord({sentence, result.translated_text,
                                std::to_string(result.unknown_count),
                                std::to_string(result.ambiguous_count)});
  }
  OutputDir dir(o.out);
  dir.Write("translations.csv", table);
  dir.Finish("translate", {{"in", o.in}, {"lex", o.lex}, {"from", o.from}, {"to", o.to}});
  return kExitOk;
}

BaselineScorer BaselineArg(const std::string& name) {
  if (name == "builtin") return BuiltinEnglishBaseline;
  if (name == "none") return [](std::string_view) { return BaselineResult{}; };
  throw UsageError("unknown baseline: " + name + " (builtin|none)");
}

int ScoreCmd(const Options& o, std::ostream& out, std::ostream&) {
  const ScoreMode mode = UsageGuard([&] { return ParseScoreMode(o.mode); });
  const Language fallback = LanguageArg(o.language);
  const BaselineScorer baseline = BaselineArg(o.baseline);
  const Lexicon lexicon = LoadLexicon(o.lex);
  const auto rows = ReadSentences(o.in, fallback);

  std::string table;
  if (o.baseline == "builtin") {
    table = ComparisonCsv(ScoreBatch(rows, lexicon, baseline, o.threads));
  } else {
    table = "sentence,language,total_score,word_scores,sentiment\n";
    for (const auto& [sentence, language] : rows) {
      const auto s = ScoreSentence(sentence, language, lexicon, mode);
      table += csv::FormatRecord({sentence, std::string(LanguageName(language)),
                                  FormatFixed(s.total_score, 6), FormatWordScores(s.word_scores),
                                  std::string(PolarityName(s.polarity))});
    }
  }
  if (o.out.empty()) {
    out << table;
    return kExitOk;
  }
  OutputDir dir(o.out);
  dir.Write("scores.csv", table);
  dir.Finish("score", {{"in", o.in},
                       {"lex", o.lex},
                       {"mode", o.mode},
                       {"baseline", o.baseline},
                       {"language", o.language}});
  return kExitOk;
}

int CompareCmd(const Options& o, std::ostream& out, std::ostream&) {
  const Language fallback = LanguageArg(o.language);
  std::vector<Language> targets;
  for (const auto& part : SplitWords(o.to)) targets.push_back(LanguageArg(part.text));
  const Lexicon lexicon = LoadLexicon(o.lex);
  const auto rows = ReadSentences(o.in, fallback);

  csv::Record header = {"sentence", "language"};
  for (Language l : targets) header.push_back("translation_" + std::string(LanguageName(l)));
  std::string translations = csv::FormatRecord(header);
  for (const auto& [sentence, language] : rows) {
    csv::Record rec = {sentence, std::string(LanguageName(language))};
    for (Language l : targets) rec.push_back(Translate(sentence, language, l, lexicon).translated_text);
    translations += csv::FormatRecord(rec);
  }
  const auto report = ScoreBatch(rows, lexicon, BaselineArg(o.baseline), o.threads);
  OutputDir dir(o.out);
  dir.Write("translations.csv", translations);
  dir.Write("sentiment.csv", ComparisonCsv(report));
  dir.WriteJson("summary.json", SummaryJson(report));
  dir.Finish("compare", {{"in", o.in},
                         {"lex", o.lex},
                         {"to", o.to},
                         {"baseline", o.baseline},
                         {"language", o.language},
                         {"threads", o.threads}});
  out << "agreement (v2 vs baseline): " << FormatFixed(report.agreement, 4) << "\n";
  return kExitOk;
}

// ---- ml --------------------------------------------------------------------

void WriteEvaluation(OutputDir& dir, const std::string& prefix, const std::vector<int>& truth,
                     const std::vector<int>& predictions, const Eigen::MatrixXd& proba,
                     const std::vector<std::string>& classes) {
  const auto cm = metrics::Confusion(truth, predictions, classes);
  const auto report = metrics::ComputeMetrics(cm);
  dir.WriteJson(prefix + "metrics.json", metrics::ToJson(report));
  dir.Write(prefix + "report.txt", metrics::FormatReport(report));
  dir.WriteJson(prefix + "confusion.json", metrics::ToJson(cm));
  dir.Write(prefix + "confusion.svg",
            svg::Heatmap(cm.counts.cast<double>(), classes, classes, "Confusion matrix"));
  const auto roc = metrics::RocOneVsRest(truth, proba, classes);
  nlohmann::json auc = nlohmann::json::object();
  std::vector<svg::Series> series;
  for (const auto& curve : roc.curves) {
    auc[curve.positive_class] = curve.auc;
    svg::Series s{curve.positive_class + " (AUC " + FormatFixed(curve.auc, 2) + ")", {}};
    for (const auto& p : curve.points) s.points.emplace_back(p.fpr, p.tpr);
    series.push_back(std::move(s));
  }
  series.push_back({"chance", {{0.0, 0.0}, {1.0, 1.0}}});
  dir.Write(prefix + "roc.csv", metrics::RocCsv(roc.curves));
  dir.Write(prefix + "roc.svg", svg::LinePlot(series, "ROC (one vs rest)",
                                              "false positive rate", "true positive rate", true));
  dir.WriteJson(prefix + "auc.json", {{"auc", auc}, {"skipped_classes", roc.skipped}});
}

std::vector<ml::ModelKind> ModelKindsArg(const std::string& name) {
  if (name == "all") return {std::begin(ml::kAllModelKinds), std::end(ml::kAllModelKinds)};
  return {UsageGuard([&] { return ml::ParseModelKind(name); })};
}

int MlTrain(const Options& o, std::ostream& out, std::ostream& err) {
  const ml::Task task = UsageGuard([&] { return ml::ParseTask(o.task); });
  const auto kinds = ModelKindsArg(o.model);
  if (!(o.train_fraction > 0.0 && o.train_fraction < 1.0)) {
    throw UsageError("--train-fraction must lie in (0, 1)");
  }
  ml::TrainOptions options = o.train;
  options.bootstrap = !o.no_bootstrap;
  options.feature_subsample = !o.no_feature_subsample;
  options.threads = o.threads;

  const Lexicon lexicon = LoadLexicon(o.lex);
  const ml::Dataset data = ml::BuildDataset(lexicon, task);
  const auto split = ml::Split(data, o.train_fraction, o.seed);
  for (int c : split.singleton_classes) {
    err << "class '" << data.class_names[static_cast<std::size_t>(c)]
        << "' has one member; kept in the training split\n";
  }
  OutputDir dir(o.out);
  dir.Write("train_features.csv", ml::FeaturesCsv(split.train));
  dir.Write("test_features.csv", ml::FeaturesCsv(split.test));
  std::string summary = "model,accuracy,macro_f1,weighted_f1,support\n";
  nlohmann::json hyper = nlohmann::json::object();
  for (ml::ModelKind kind : kinds) {
    const std::string name(ml::ModelKindName(kind));
    const auto model = UsageGuard([&] { return ml::TrainedModel::Train(kind, split.train, options, o.seed); });
    hyper[name] = model.hyperparameters();
    dir.WriteJson(name + ".model.json", model.ToJson());
    if (split.test.size() == 0) continue;
    const auto predictions = model.PredictAll(split.test.features);
    WriteEvaluation(dir, name + ".", split.test.labels, predictions,
                    model.PredictProbaAll(split.test.features), data.class_names);
    const auto report = metrics::ComputeMetrics(
        metrics::Confusion(split.test.labels, predictions, data.class_names));
    summary += csv::FormatRecord({name, FormatShortest(report.accuracy),
                                  FormatShortest(report.macro.f1),
                                  FormatShortest(report.weighted.f1),
                                  std::to_string(report.total)});
    out << name << ": accuracy " << FormatFixed(report.accuracy, 4) << "\n";
  }
  dir.Write("summary.csv", summary);
  dir.Finish("ml train", {{"lex", o.lex},
                          {"task", o.task},
                          {"models", o.model},
                          {"train_fraction", o.train_fraction},
                          {"seed", o.seed},
                          {"threads", o.threads},
                          {"train_size", split.train.size()},
                          {"test_size", split.test.size()},
                          {"hyperparameters", hyper}});
  return kExitOk;
}

int MlEval(const Options& o, std::ostream& out, std::ostream&) {
  if (o.model_path.empty()) throw UsageError("--model is required");
  const auto model = ml::TrainedModel::FromJson(nlohmann::json::parse(csv::ReadFile(o.model_path)));
  const ml::Task task = UsageGuard([&] { return ml::ParseTask(o.task); });
  const ml::Dataset data = ml::BuildDataset(LoadLexicon(o.lex), task);
  if (data.class_names != model.class_names()) {
    throw DataError("model classes do not match task '" + o.task + "'");
  }
  const auto predictions = model.PredictAll(data.features);
  OutputDir dir(o.out);
  WriteEvaluation(dir, "", data.labels, predictions, model.PredictProbaAll(data.features),
                  data.class_names);
  dir.Finish("ml eval", {{"model", o.model_path}, {"lex", o.lex}, {"task", o.task}});
  const auto report =
      metrics::ComputeMetrics(metrics::Confusion(data.labels, predictions, data.class_names));
  out << metrics::FormatReport(report);
  return kExitOk;
}

// ---- ctx -------------------------------------------------------------------

std::vector<context::TargetSentence> LoadCorpus(const std::string& path) {
  if (path.empty()) throw UsageError("--corpus is required");
  return context::ReadCorpus(csv::ReadFile(path));
}

int CtxGenerate(const Options& o, std::ostream& out, std::ostream&) {
  const Language language = LanguageArg(o.language);
  if (o.label_weights.size() != kNumPolarities) {
    throw UsageError("--label-weights takes three values (negative neutral positive)");
  }
  context::GenerateOptions options;
  std::copy(o.label_weights.begin(), o.label_weights.end(), options.label_weights.begin());
  options.noise = o.noise;
  options.min_context = o.min_context;
  options.max_context = o.max_context;
  const Lexicon lexicon = LoadLexicon(o.lex);
  const auto corpus = UsageGuard(
      [&] { return context::GenerateDataset(lexicon, language, o.n, o.seed, options); });
  OutputDir dir(o.out);
  dir.Write("corpus.tsv", context::WriteCorpus(corpus));
  dir.Finish("ctx generate", {{"lex", o.lex},
                              {"language", o.language},
                              {"n", o.n},
                              {"seed", o.seed},
                              {"noise", o.noise},
                              {"label_weights", o.label_weights},
                              {"min_context", o.min_context},
                              {"max_context", o.max_context}});
  out << "wrote " << corpus.size() << " sentences\n";
  return kExitOk;
}

void WriteContextEvaluation(OutputDir& dir, const context::Evaluation& eval,
                            std::span<const context::TargetSentence> test) {
  std::vector<int> truth;
  for (const auto& s : test) truth.push_back(static_cast<int>(Index(*s.label)));
  WriteEvaluation(dir, "", truth, eval.predictions, eval.probabilities,
                  context::PolarityClassNames());
}

int CtxTrain(const Options& o, std::ostream& out, std::ostream& err) {
  context::ContextConfig config = o.ctx;
  config.activation = UsageGuard([&] { return context::ParseActivation(o.activation); });
  const auto corpus = LoadCorpus(o.corpus);
  const auto split = UsageGuard([&] { return context::Split702010(corpus, o.seed); });
  for (Polarity p : split.absent_labels) {
    err << "label '" << PolarityName(p) << "' is absent from the corpus\n";
  }
  context::ClassWeights weights;
  if (o.class_weights == "inverse") {
    weights = context::InverseFrequencyWeights(split.train);
  } else if (o.class_weights == "uniform") {
    weights = context::kUniformWeights;
  } else {
    throw UsageError("--class-weights must be inverse or uniform");
  }
  const auto result = UsageGuard([&] {
    return context::Train(config, split.train, split.validation, weights, o.ctx_train, o.seed);
  });
  OutputDir dir(o.out);
  dir.Write("train.tsv", context::WriteCorpus(split.train));
  dir.Write("validation.tsv", context::WriteCorpus(split.validation));
  dir.Write("test.tsv", context::WriteCorpus(split.test));
  dir.WriteJson("model.json", result.model.ToJson());
  dir.Write("history.csv", context::HistoryCsv(result.history));
  svg::Series train_loss{"train", {}}, val_loss{"validation", {}};
  for (const auto& r : result.history) {
    train_loss.points.emplace_back(r.epoch, r.train_loss);
    val_loss.points.emplace_back(r.epoch, r.validation_loss);
  }
  dir.Write("loss.svg", svg::LinePlot({train_loss, val_loss}, "Loss per epoch", "epoch",
                                      "weighted cross-entropy"));
  if (!split.test.empty()) {
    WriteContextEvaluation(dir, context::Evaluate(result.model, split.test), split.test);
  }
  dir.Finish("ctx train", {{"corpus", o.corpus},
                           {"seed", o.seed},
                           {"model", config.ToJson()},
                           {"training", o.ctx_train.ToJson()},
                           {"class_weights_kind", o.class_weights},
                           {"class_weights", weights},
                           {"split", {{"train", split.train.size()},
                                      {"validation", split.validation.size()},
                                      {"test", split.test.size()}}}});
  const auto& last = result.history.back();
  out << "epoch " << last.epoch << ": train loss " << FormatFixed(last.train_loss, 4)
      << ", validation accuracy " << FormatFixed(last.validation_accuracy, 4) << "\n";
  return kExitOk;
}

context::ContextModel LoadContextModel(const std::string& path) {
  if (path.empty()) throw UsageError("--model is required");
  return context::ContextModel::FromJson(nlohmann::json::parse(csv::ReadFile(path)));
}

int CtxEval(const Options& o, std::ostream& out, std::ostream&) {
  const auto model = LoadContextModel(o.model_path);
  const auto test = LoadCorpus(o.corpus);
  for (const auto& s : test) {
    if (!s.label) throw DataError("evaluation corpus has unlabeled sentences");
  }
  const auto eval = UsageGuard([&] { return context::Evaluate(model, test); });
  OutputDir dir(o.out);
  WriteContextEvaluation(dir, eval, test);
  dir.Finish("ctx eval", {{"model", o.model_path}, {"corpus", o.corpus}});
  out << metrics::FormatReport(eval.report);
  return kExitOk;
}

// ---- explain ---------------------------------------------------------------

int ExplainCmd(const Options& o, std::ostream& out, std::ostream&) {
  const auto model = LoadContextModel(o.model_path);
  const auto baseline = UsageGuard([&] { return xai::ParseBaselineKind(o.ig_baseline); });
  if (o.steps < 1) throw UsageError("--steps must be >= 1");
  std::optional<int> target_class;
  if (!o.target_class.empty()) {
    target_class = static_cast<int>(Index(UsageGuard([&] { return ParsePolarity(o.target_class); })));
  }
  std::vector<context::TargetSentence> sentences;
  if (!o.sentence.empty() == !o.corpus.empty()) {
    throw UsageError("give exactly one of --sentence or --corpus");
  }
  if (!o.sentence.empty()) {
    sentences.push_back(UsageGuard([&] { return context::ParseMarked(o.sentence); }));
  } else {
    sentences = LoadCorpus(o.corpus);
    if (sentences.size() > o.limit) sentences.resize(o.limit);
  }
  OutputDir dir(o.out);
  std::vector<xai::AttributionMap> maps;
  std::string lines;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    maps.push_back(xai::Explain(model, sentences[i], target_class, o.steps, baseline));
    lines += xai::ToJson(maps.back()).dump() + "\n";
    const std::string stem = "heatmap_" + std::to_string(i + 1);
    dir.Write(stem + ".csv", xai::HeatmapCsv(maps.back()));
    dir.Write(stem + ".svg", xai::HeatmapSvg(maps.back()));
  }
  dir.Write("attributions.jsonl", lines);
  const std::string table = xai::SummaryTable(maps);
  dir.Write("summary.txt", table);
  dir.Finish("explain", {{"model", o.model_path},
                         {"sentence", o.sentence},
                         {"corpus", o.corpus},
                         {"limit", o.limit},
                         {"steps", o.steps},
                         {"riemann", "right"},
                         {"baseline", o.ig_baseline},
                         {"target_class", o.target_class.empty() ? "predicted" : o.target_class},
                         {"attributed_score", "pre-softmax logit"}});
  out << table;
  return kExitOk;
}

void AddSeed(CLI::App* app, Options& o) {
  app->add_option("--seed", o.seed, "random seed")->capture_default_str();
}
void AddThreads(CLI::App* app, Options& o) {
  app->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.lex = DefaultLexicon();
  CLI::App app{"lexisent: multilingual lexicon sentiment toolkit", "lexisent"};
  app.require_subcommand(1);

  auto* lexicon = app.add_subcommand("lexicon", "inspect and clean a lexicon");
  lexicon->require_subcommand(1);
  auto* validate = lexicon->add_subcommand("validate", "report duplicates and unnormalized forms");
  validate->add_option("--in", o.in, "lexicon CSV")->required();
  validate->add_option("--out", o.out, "output directory (default: JSON to stdout)");
  auto* clean = lexicon->add_subcommand("clean", "normalize forms and drop duplicates");
  clean->add_option("--in", o.in, "lexicon CSV")->required();
  clean->add_option("--out", o.out, "output directory")->required();
  auto* stats = lexicon->add_subcommand("stats", "descriptive statistics and charts");
  stats->add_option("--in", o.in, "lexicon CSV")->required();
  stats->add_option("--out", o.out, "output directory")->required();

  auto* translate = app.add_subcommand("translate", "word-for-word translation");
  translate->add_option("--lex", o.lex, "lexicon CSV");
  translate->add_option("--text", o.text, "sentence to translate");
  translate->add_option("--in", o.in, "CSV with a sentence column (optional language column)");
  translate->add_option("--out", o.out, "output directory for --in");
  translate->add_option("--from", o.from, "source language")->capture_default_str();
  translate->add_option("--to", o.to, "target language")->capture_default_str();

  auto* score = app.add_subcommand("score", "lexicon sentiment scores per sentence");
  score->add_option("--lex", o.lex, "lexicon CSV");
  score->add_option("--in", o.in, "CSV with sentence[,language] columns")->required();
  score->add_option("--out", o.out, "output directory (default: CSV to stdout)");
  score->add_option("--mode", o.mode, "avg or v2 (used without a baseline)")->capture_default_str();
  score->add_option("--baseline", o.baseline, "builtin or none")->capture_default_str();
  score->add_option("--language", o.language, "language of rows without one")->capture_default_str();
  AddThreads(score, o);

  auto* compare = app.add_subcommand("compare", "translations plus both scoring modes");
  compare->add_option("--lex", o.lex, "lexicon CSV");
  compare->add_option("--in", o.in, "CSV with sentence[,language] columns")->required();
  compare->add_option("--out", o.out, "output directory")->required();
  compare->add_option("--to", o.to, "comma-separated target languages")->capture_default_str();
  compare->add_option("--baseline", o.baseline, "builtin or none")->capture_default_str();
  compare->add_option("--language", o.language, "language of rows without one")->capture_default_str();
  AddThreads(compare, o);

  auto* ml = app.add_subcommand("ml", "classical classifiers over lexicon features");
  ml->require_subcommand(1);
  auto* ml_train = ml->add_subcommand("train", "train and evaluate on a stratified split");
  ml_train->add_option("--lex", o.lex, "lexicon CSV");
  ml_train->add_option("--out", o.out, "output directory")->required();
  ml_train->add_option("--task", o.task, "pos or polarity")->capture_default_str();
  ml_train->add_option("--model", o.model,
                       "decision_tree, random_forest, gaussian_nb, linear_svm or all")
      ->capture_default_str();
  ml_train->add_option("--train-fraction", o.train_fraction)->capture_default_str();
  ml_train->add_option("--max-depth", o.train.max_depth, "0 = unbounded")->capture_default_str();
  ml_train->add_option("--min-samples-split", o.train.min_samples_split)->capture_default_str();
  ml_train->add_option("--n-trees", o.train.n_trees)->capture_default_str();
  ml_train->add_flag("--no-bootstrap", o.no_bootstrap);
  ml_train->add_flag("--no-feature-subsample", o.no_feature_subsample);
  ml_train->add_option("--var-smoothing", o.train.var_smoothing)->capture_default_str();
  ml_train->add_option("--lambda", o.train.lambda)->capture_default_str();
  ml_train->add_option("--epochs", o.train.epochs)->capture_default_str();
  AddSeed(ml_train, o);
  AddThreads(ml_train, o);
  auto* ml_eval = ml->add_subcommand("eval", "evaluate a saved model on a lexicon");
  ml_eval->add_option("--model", o.model_path, "model JSON")->required();
  ml_eval->add_option("--lex", o.lex, "lexicon CSV");
  ml_eval->add_option("--task", o.task, "pos or polarity")->capture_default_str();
  ml_eval->add_option("--out", o.out, "output directory")->required();

  auto* ctx = app.add_subcommand("ctx", "target-word contextual classifier");
  ctx->require_subcommand(1);
  auto* generate = ctx->add_subcommand("generate", "synthesize a marked corpus");
  generate->add_option("--lex", o.lex, "lexicon CSV");
  generate->add_option("--out", o.out, "output directory")->required();
  generate->add_option("--language", o.language)->capture_default_str();
  generate->add_option("-n,--count", o.n, "number of sentences")->capture_default_str();
  generate->add_option("--noise", o.noise, "chance of an off-polarity context word")
      ->capture_default_str();
  generate->add_option("--label-weights", o.label_weights, "negative neutral positive")
      ->expected(3)
      ->capture_default_str();
  generate->add_option("--min-context", o.min_context)->capture_default_str();
  generate->add_option("--max-context", o.max_context)->capture_default_str();
  AddSeed(generate, o);
  auto* ctx_train = ctx->add_subcommand("train", "70:20:10 split, train, evaluate");
  ctx_train->add_option("--corpus", o.corpus, "TSV corpus")->required();
  ctx_train->add_option("--out", o.out, "output directory")->required();
  ctx_train->add_option("--epochs", o.ctx_train.epochs)->capture_default_str();
  ctx_train->add_option("--learning-rate", o.ctx_train.learning_rate)->capture_default_str();
  ctx_train->add_option("--batch-size", o.ctx_train.batch_size)->capture_default_str();
  ctx_train->add_option("--embedding-dim", o.ctx.embedding_dim)->capture_default_str();
  ctx_train->add_option("--window", o.ctx.window)->capture_default_str();
  ctx_train->add_option("--activation", o.activation, "tanh or identity")->capture_default_str();
  ctx_train->add_option("--class-weights", o.class_weights, "inverse or uniform")
      ->capture_default_str();
  AddSeed(ctx_train, o);
  auto* ctx_eval = ctx->add_subcommand("eval", "evaluate a saved model on a corpus");
  ctx_eval->add_option("--model", o.model_path, "model JSON")->required();
  ctx_eval->add_option("--corpus", o.corpus, "TSV corpus")->required();
  ctx_eval->add_option("--out", o.out, "output directory")->required();

  auto* explain = app.add_subcommand("explain", "integrated-gradients attributions");
  explain->add_option("--model", o.model_path, "contextual model JSON")->required();
  explain->add_option("--sentence", o.sentence, "one [TARGET]-marked sentence");
  explain->add_option("--corpus", o.corpus, "TSV corpus (first --limit lines)");
  explain->add_option("--limit", o.limit)->capture_default_str();
  explain->add_option("--out", o.out, "output directory")->required();
  explain->add_option("--steps", o.steps)->capture_default_str();
  explain->add_option("--baseline", o.ig_baseline, "zero or pad")->capture_default_str();
  explain->add_option("--class", o.target_class, "class to attribute (default: predicted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* failing = &app;
    for (CLI::App* sub = &app; sub != nullptr;) {
      auto parsed = sub->get_subcommands();
      if (parsed.empty()) break;
      sub = parsed[0];
      failing = sub;
    }
    err << failing->help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return LexiconValidate(o, out, err);
    if (clean->parsed()) return LexiconClean(o, out, err);
    if (stats->parsed()) return LexiconStats(o, out, err);
    if (translate->parsed()) return TranslateCmd(o, out, err);
    if (score->parsed()) return ScoreCmd(o, out, err);
    if (compare->parsed()) return CompareCmd(o, out, err);
    if (ml_train->parsed()) return MlTrain(o, out, err);
    if (ml_eval->parsed()) return MlEval(o, out, err);
    if (generate->parsed()) return CtxGenerate(o, out, err);
    if (ctx_train->parsed()) return CtxTrain(o, out, err);
    if (ctx_eval->parsed()) return CtxEval(o, out, err);
    if (explain->parsed()) return ExplainCmd(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace lexisent::cli
