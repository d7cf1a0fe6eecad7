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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "context_checks.h"
#include "fixtures.h"
#include "lexisent/context/corpus.h"
#include "lexisent/context/model.h"
#include "lexisent/core/csv.h"
#include "lexisent/core/math.h"
#include "lexisent/core/text.h"
#include "lexisent/lexicon/eda.h"
#include "lexisent/lexicon/lexicon.h"
#include "lexisent/metrics/metrics.h"
#include "lexisent/ml/decision_tree.h"
#include "lexisent/ml/model.h"
#include "lexisent/score/scorer.h"
#include "lexisent/translate/translator.h"
#include "lexisent/xai/integrated_gradients.h"

namespace lexisent {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

// Collects failed sub-checks and notes for one criterion.
class Criterion {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& note) { notes_.push_back(note); }
  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Num(double v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- 1

void ScoringReproduction(Criterion& c) {
  const auto start = Clock::now();
  const Lexicon lex = fixtures::MiniLexicon();
  for (const auto& row : fixtures::PublishedScores()) {
    const auto avg = ScoreSentence(row.sentence, row.language, lex, ScoreMode::kAverage);
    const auto v2 = ScoreSentence(row.sentence, row.language, lex, ScoreMode::kV2);
    const std::string where = std::string(row.sentence) + ": ";
    c.Expect(std::abs(avg.total_score - row.avg_total) <= 1e-9,
             where + "avg total " + Num(avg.total_score, 17));
    c.Expect(std::abs(v2.total_score - row.v2_total) <= 1e-9,
             where + "v2 total " + Num(v2.total_score, 17));
    c.Expect(FormatFixed(avg.total_score, 6) == row.avg_text, where + "avg text");
    c.Expect(FormatFixed(v2.total_score, 6) == row.v2_text, where + "v2 text");
    c.Expect(avg.polarity == row.avg_polarity, where + "avg polarity");
    c.Expect(v2.polarity == row.v2_polarity, where + "v2 polarity");
  }
  const double elapsed = Seconds(start);
  c.Expect(elapsed < 1.0, "runtime " + Num(elapsed) + " s");
  c.Note(std::to_string(fixtures::PublishedScores().size()) + " sentences, " +
         Num(elapsed * 1000, 3) + " ms");
}

// ---------------------------------------------------------------- 2

void TranslationReproduction(Criterion& c) {
  const Lexicon lex = fixtures::MiniLexicon();
  struct Case {
    const char* text;
    Language from;
    Language to;
    const char* expected;
  };
  const Case cases[] = {
      {"Ek vertrou haar", Language::kAfrikaans, Language::kEnglish, "i trust her"},
      {"Thank you.", Language::kEnglish, Language::kFrench, "merci"},
      {"Go tšhaba go wa.", Language::kSepedi, Language::kEnglish, "to fear to fall"},
      {"Thank you.", Language::kEnglish, Language::kCiluba, "tuasakadila"},
  };
  for (const auto& k : cases) {
    const std::string got = Translate(k.text, k.from, k.to, lex).translated_text;
    c.Expect(got == k.expected, std::string(k.text) + " -> \"" + got + "\"");
  }
  c.Note("4 translations");
}

// ---------------------------------------------------------------- 3

void MetricsConsistency(Criterion& c) {
  const auto [truth, pred] = fixtures::ContextConfusionLabels();
  const auto cm = metrics::Confusion(truth, pred, {"negative", "neutral", "positive"});
  const auto r = metrics::ComputeMetrics(cm);
  auto two = [](double v) { return FormatFixed(v, 2); };
  c.Expect(two(r.accuracy) == "0.99", "accuracy " + two(r.accuracy));
  const auto& neg = r.per_class[0];
  const std::string neg_row =
      two(neg.precision) + " " + two(neg.recall) + " " + two(neg.f1) + " " + std::to_string(neg.support);
  c.Expect(neg_row == "0.98 1.00 0.99 151", "negative row " + neg_row);
  const std::string macro = two(r.macro.precision) + " " + two(r.macro.recall) + " " + two(r.macro.f1);
  c.Expect(macro == "0.66 0.67 0.66", "macro " + macro);
  const std::string weighted =
      two(r.weighted.precision) + " " + two(r.weighted.recall) + " " + two(r.weighted.f1);
  c.Expect(weighted == "0.98 0.99 0.99", "weighted " + weighted);

  std::vector<metrics::ClassMetrics> rows;
  long long support = 0;
  for (const auto& row : fixtures::PublishedForestReport()) {
    rows.push_back({row.precision, row.recall, row.f1, row.support});
    support += row.support;
  }
  const auto w = metrics::WeightedAverage(rows);
  c.Expect(two(w.f1) == "0.56", "forest weighted f1 " + two(w.f1));
  c.Expect(support == 642, "forest support " + std::to_string(support));
  c.Note("weighted f1 " + Num(w.f1, 4) + ", support " + std::to_string(support));
}

// ---------------------------------------------------------------- 4

double LogNormal(double x, double mean, double var) {
  return -0.5 * std::log(2 * std::numbers::pi * var) - (x - mean) * (x - mean) / (2 * var);
}

ml::Dataset MakeDataset(const std::vector<std::vector<double>>& rows, const std::vector<int>& y,
                        int classes) {
  ml::Dataset d;
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto dims = static_cast<Eigen::Index>(rows[0].size());
  d.features.resize(n, dims);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index f = 0; f < dims; ++f) {
      d.features(r, f) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(f)];
    }
  }
  d.labels = y;
  for (int k = 0; k < classes; ++k) d.class_names.push_back("c" + std::to_string(k));
  for (Eigen::Index f = 0; f < dims; ++f) d.feature_names.push_back("x" + std::to_string(f));
  d.provenance.resize(rows.size());
  return d;
}

double GiniMassOracle(const std::vector<int>& labels, int classes) {
  if (labels.empty()) return 0.0;
  double sum_sq = 0;
  for (int k = 0; k < classes; ++k) {
    const double n_k = static_cast<double>(std::count(labels.begin(), labels.end(), k));
    sum_sq += n_k * n_k;
  }
  const double n = static_cast<double>(labels.size());
  return n - sum_sq / n;
}

void ClassifierOracles(Criterion& c) {
  // Gaussian naive Bayes against hand-evaluated densities.
  {
    const auto d = MakeDataset({{-1}, {0}, {1}, {9}, {10}, {11}}, {0, 0, 0, 1, 1, 1}, 2);
    const auto m = ml::TrainedModel::Train(ml::ModelKind::kGaussianNb, d, {}, 0);
    double worst = 0;
    for (double x : {5.0, 4.0, 6.0, 0.5, 9.5, -2.0}) {
      const double var = 2.0 / 3.0;
      const double la = std::log(0.5) + LogNormal(x, 0, var);
      const double lb = std::log(0.5) + LogNormal(x, 10, var);
      const double pa = 1.0 / (1.0 + std::exp(lb - la));
      const auto p = m.PredictProba(Eigen::RowVectorXd::Constant(1, x));
      worst = std::max({worst, std::abs(p(0) - pa), std::abs(p(1) - (1 - pa))});
      const int expected = pa >= 1 - pa ? 0 : 1;
      c.Expect(m.Predict(Eigen::RowVectorXd::Constant(1, x)) == expected,
               "GNB prediction at " + Num(x));
    }
    c.Expect(worst <= 1e-9, "GNB posterior error " + Num(worst));
    c.Note("GNB max error " + Num(worst, 3));
  }

  // Depth-1 tree against an exhaustive stump search.
  {
    const std::vector<std::vector<double>> rows = {{0.5, 3.0}, {1.5, 1.0}, {2.5, 2.0},
                                                   {3.5, 6.0}, {4.5, 5.0}, {5.5, 4.0}};
    const std::vector<int> y = {0, 1, 0, 1, 1, 1};
    double best = -1, best_t = 0;
    int best_f = -1;
    for (int f = 0; f < 2; ++f) {
      std::vector<double> v;
      for (const auto& r : rows) v.push_back(r[static_cast<std::size_t>(f)]);
      std::sort(v.begin(), v.end());
      for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        const double t = (v[i] + v[i + 1]) / 2;
        std::vector<int> left, right;
        for (std::size_t r = 0; r < rows.size(); ++r) {
          (rows[r][static_cast<std::size_t>(f)] <= t ? left : right).push_back(y[r]);
        }
        const double dec = GiniMassOracle(y, 2) - GiniMassOracle(left, 2) - GiniMassOracle(right, 2);
        if (dec > best + 1e-12) best = dec, best_f = f, best_t = t;
      }
    }
    ml::TrainOptions opt;
    opt.max_depth = 1;
    const auto d = MakeDataset(rows, y, 2);
    const auto tree = ml::TrainedModel::Train(ml::ModelKind::kDecisionTree, d, opt, 0);
    const auto& root = tree.get<ml::DecisionTree>().nodes().front();
    c.Expect(root.feature == best_f, "stump feature " + std::to_string(root.feature));
    // Any threshold between the same neighbouring values is the same split.
    bool same_partition = true;
    for (const auto& r : rows) {
      const double v = r[static_cast<std::size_t>(best_f)];
      same_partition &= (v <= best_t) == (v <= root.threshold);
    }
    c.Expect(same_partition, "stump threshold " + Num(root.threshold));
  }

  // Degenerate forest versus a single tree on seed-swept random datasets.
  {
    int mismatches = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      std::mt19937_64 rng(seed);
      const int n = std::uniform_int_distribution<int>(20, 150)(rng);
      const int dims = std::uniform_int_distribution<int>(1, 6)(rng);
      const int classes = std::uniform_int_distribution<int>(2, 4)(rng);
      std::normal_distribution<double> normal;
      std::vector<std::vector<double>> rows(static_cast<std::size_t>(n));
      std::vector<int> y;
      for (auto& r : rows) {
        for (int f = 0; f < dims; ++f) r.push_back(std::round(normal(rng) * 4) / 4);
        const double s = r[0] + (dims > 1 ? r[1] : 0.0) + 0.5 * normal(rng);
        y.push_back(std::clamp(static_cast<int>(std::floor(s + classes / 2.0)), 0, classes - 1));
      }
      y[0] = 0, y[1] = 1;
      const auto d = MakeDataset(rows, y, classes);
      ml::TrainOptions opt;
      opt.n_trees = 1;
      opt.bootstrap = false;
      opt.feature_subsample = false;
      opt.max_depth = static_cast<int>(seed % 8);  // includes unbounded
      const auto tree = ml::TrainedModel::Train(ml::ModelKind::kDecisionTree, d, opt, seed);
      const auto forest = ml::TrainedModel::Train(ml::ModelKind::kRandomForest, d, opt, seed);
      Eigen::MatrixXd probe = Eigen::MatrixXd::NullaryExpr(200, dims, [&] { return 2 * normal(rng); });
      if (tree.PredictAll(d.features) != forest.PredictAll(d.features) ||
          tree.PredictAll(probe) != forest.PredictAll(probe)) {
        ++mismatches;
      }
    }
    c.Expect(mismatches == 0, std::to_string(mismatches) + " forest/tree mismatches");
    c.Note("forest==tree on " + std::to_string(100 - mismatches) + "/100 datasets");
  }

  // Trapezoid AUC versus concordant-pair counting.
  {
    double worst = 0;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0, 1);
    for (int set = 0; set < 200; ++set) {
      const int n = std::uniform_int_distribution<int>(2, 120)(rng);
      std::vector<bool> positive(static_cast<std::size_t>(n));
      std::vector<double> scores(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        positive[static_cast<std::size_t>(i)] = u(rng) < 0.4;
        scores[static_cast<std::size_t>(i)] = u(rng);  // ties have probability ~0
      }
      positive[0] = true, positive[1] = false;
      auto flags = std::make_unique<bool[]>(static_cast<std::size_t>(n));
      std::copy(positive.begin(), positive.end(), flags.get());
      const double auc =
          metrics::Roc(std::span<const bool>(flags.get(), static_cast<std::size_t>(n)), scores).auc;
      worst = std::max(worst, std::abs(auc - fixtures::PairwiseAuc(positive, scores)));
    }
    c.Expect(worst <= 1e-12, "AUC error " + Num(worst));
    c.Note("AUC max error " + Num(worst, 3));
  }
}

// ---------------------------------------------------------------- 5

struct TrainedContext {
  context::CorpusSplit split;
  context::ContextModel model;
};

double MinorityRecall(const context::ContextModel& model,
                      const std::vector<context::TargetSentence>& test, Polarity minority) {
  int total = 0, hits = 0;
  for (const auto& s : test) {
    if (s.label != minority) continue;
    ++total;
    hits += model.Predict(s) == static_cast<int>(Index(minority));
  }
  return total == 0 ? 0.0 : static_cast<double>(hits) / total;
}

void ContextualModel(Criterion& c, const Lexicon& sample, TrainedContext* trained) {
  // Gradient checks on a fixed batch, for every parameter group and the input.
  {
    const auto data = context::GenerateDataset(sample, Language::kEnglish, 16, 77);
    context::ContextConfig cfg;
    cfg.embedding_dim = 8;
    cfg.init_scale = 0.5;
    const auto model =
        context::ContextModel::Initialize(context::Vocabulary::Build(data), cfg, 77);
    std::vector<context::Example> batch;
    for (const auto& s : data) batch.push_back(model.Encode(s));
    double worst = 0;
    for (const auto& w : {context::InverseFrequencyWeights(data), context::kUniformWeights}) {
      const auto check = fixtures::CheckLossGradient(model, batch, w);
      worst = std::max(worst, check.max_relative_error);
    }
    for (const auto& s : data) {
      worst = std::max(worst, fixtures::CheckInputGradient(model, s).max_relative_error);
    }
    c.Expect(worst < 1e-4, "gradient relative error " + Num(worst));
    c.Note("grad rel err " + Num(worst, 2));
  }

  // Separable 1,000-sentence corpus.
  {
    const auto start = Clock::now();
    const auto corpus = context::GenerateDataset(sample, Language::kEnglish, 1000, 1);
    trained->split = context::Split702010(corpus, 1);
    const context::TrainConfig tc;  // 30 epochs
    const auto result =
        context::Train({}, trained->split.train, trained->split.validation,
                       context::InverseFrequencyWeights(trained->split.train), tc, 1);
    const double elapsed = Seconds(start);
    trained->model = result.model;
    int first = -1;
    for (const auto& h : result.history) {
      if (h.validation_accuracy >= 0.95) {
        first = h.epoch;
        break;
      }
    }
    const double final_accuracy = result.history.back().validation_accuracy;
    c.Expect(first > 0 && first <= tc.epochs, "validation accuracy never reached 0.95");
    c.Expect(elapsed < 60.0, "training took " + Num(elapsed) + " s");
    c.Note("val acc >= 0.95 at epoch " + std::to_string(first) + " (final " +
           Num(final_accuracy, 4) + ", " + Num(elapsed, 3) + " s)");
  }

  // Inverse-frequency weights versus uniform on a 10:1:10 corpus.
  {
    const auto start = Clock::now();
    int wins = 0;
    double mean_uniform = 0, mean_weighted = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      context::GenerateOptions imbalanced;
      imbalanced.label_weights = {10.0, 1.0, 10.0};
      imbalanced.noise = 0.4;
      const auto corpus = context::GenerateDataset(sample, Language::kEnglish, 1050, s, imbalanced);
      const auto split = context::Split702010(corpus, s);
      context::GenerateOptions balanced;
      balanced.noise = 0.4;
      const auto test = context::GenerateDataset(sample, Language::kEnglish, 600, 900 + s, balanced);

      const context::TrainConfig tc;
      const auto uniform =
          context::Train({}, split.train, split.validation, context::kUniformWeights, tc, s);
      const auto weighted = context::Train({}, split.train, split.validation,
                                           context::InverseFrequencyWeights(split.train), tc, s);
      const double ru = MinorityRecall(uniform.model, test, Polarity::kNeutral);
      const double rw = MinorityRecall(weighted.model, test, Polarity::kNeutral);
      mean_uniform += ru / 10;
      mean_weighted += rw / 10;
      wins += rw > ru;
    }
    c.Expect(wins >= 8, "weighting won on " + std::to_string(wins) + "/10 seeds");
    c.Note("weighting wins " + std::to_string(wins) + "/10 (minority recall " +
           Num(mean_weighted, 3) + " vs " + Num(mean_uniform, 3) + ", " +
           Num(Seconds(start), 3) + " s)");
  }
}

// ---------------------------------------------------------------- 6

void IntegratedGradientsCriterion(Criterion& c, const TrainedContext& trained) {
  // Linear scorers are integrated exactly, even in one step.
  {
    std::mt19937_64 rng(6);
    std::normal_distribution<double> normal;
    double worst = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const Eigen::MatrixXd w = Eigen::MatrixXd::NullaryExpr(5, 4, [&] { return normal(rng); });
      const Eigen::MatrixXd x = Eigen::MatrixXd::NullaryExpr(5, 4, [&] { return normal(rng); });
      auto f = [&](const Eigen::MatrixXd& p, Eigen::MatrixXd* g) {
        *g = w;
        return w.cwiseProduct(p).sum();
      };
      const auto r = xai::IntegratedGradients(f, x, Eigen::MatrixXd::Zero(5, 4), 1);
      worst = std::max(worst, std::abs(r.delta));
      c.Expect(r.attributions == w.cwiseProduct(x), "linear attributions differ from w*x");
    }
    // The contextual model with its activation removed is linear in the input.
    auto cfg = trained.model.config();
    cfg.activation = context::Activation::kIdentity;
    const auto linear = context::ContextModel::Initialize(trained.model.vocabulary(), cfg, 3);
    for (const auto& s : trained.split.test) {
      worst = std::max(worst, std::abs(xai::Explain(linear, s, std::nullopt, 1).convergence_delta));
    }
    c.Expect(worst < 1e-12, "linear delta " + Num(worst));
    c.Note("linear |delta| <= " + Num(worst, 2));
  }

  // Convergence on the trained model.
  {
    std::vector<std::size_t> order(trained.split.test.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), std::mt19937_64(20));
    order.resize(std::min<std::size_t>(20, order.size()));
    const std::string before = trained.model.ToJson().dump();
    int passed = 0;
    double worst_ratio = 0;
    for (std::size_t i : order) {
      const auto& s = trained.split.test[i];
      const auto coarse = xai::Explain(trained.model, s, std::nullopt, 8);
      const auto fine = xai::Explain(trained.model, s, std::nullopt, 512);
      const double gap = std::abs(fine.f_input - fine.f_baseline);
      const bool ok = std::abs(fine.convergence_delta) < std::abs(coarse.convergence_delta) &&
                      std::abs(fine.convergence_delta) < 1e-3 * gap;
      passed += ok;
      if (gap > 0) worst_ratio = std::max(worst_ratio, std::abs(fine.convergence_delta) / gap);
      c.Expect(ok, "delta condition failed on \"" + s.text + "\"");
    }
    c.Expect(order.size() == 20, "only " + std::to_string(order.size()) + " test sentences");
    c.Expect(trained.model.ToJson().dump() == before, "model serialization changed");
    c.Note(std::to_string(passed) + "/" + std::to_string(order.size()) +
           " sentences, max |delta512|/|dF| " + Num(worst_ratio, 3));
  }
}

// ---------------------------------------------------------------- 7

void DataPipeline(Criterion& c) {
  const std::string text = fixtures::SyntheticLexiconCsv(500, 7);
  const Lexicon lex = ParseLexicon(text);
  c.Expect(lex.size() == 500, "parsed " + std::to_string(lex.size()) + " rows");
  c.Expect(SerializeLexicon(lex) == text, "round trip not byte-equal");

  const auto once = Clean(lex).lexicon;
  const auto twice = Clean(once).lexicon;
  c.Expect(once == twice && SerializeLexicon(once) == SerializeLexicon(twice),
           "clean is not idempotent");

  const EdaReport eda = ComputeEda(lex);
  for (Language l : kAllLanguages) {
    const auto r = eda.Correlation(l, l);
    c.Expect(r.has_value() && *r == 1.0,
             "self correlation of " + std::string(LanguageName(l)) + " = " +
                 (r ? Num(*r, 17) : std::string("undefined")));
  }

  const std::vector<double> x = {1.0, 2.0, 3.0, 5.0};
  const std::vector<double> y = {2.0, 4.5, 5.0, 4.0};
  const Eigen::Map<const Eigen::VectorXd> xv(x.data(), 4), yv(y.data(), 4);
  const auto r = Pearson(xv, yv);
  const double oracle = fixtures::BruteForcePearson(x, y);
  c.Expect(r.has_value() && std::abs(*r - oracle) <= 1e-12, "pearson " + (r ? Num(*r, 17) : ""));
  c.Note("pearson " + Num(r.value_or(NAN), 10) + " vs " + Num(oracle, 10));
}

}  // namespace
}  // namespace lexisent

int main() {
  using namespace lexisent;
  const Lexicon sample = ParseLexicon(csv::ReadFile(LEXISENT_SAMPLE_LEXICON));
  TrainedContext trained;

  struct Entry {
    const char* title;
    std::function<void(Criterion&)> run;
  };
  const std::vector<Entry> criteria = {
      {"scoring reproduction", ScoringReproduction},
      {"translation reproduction", TranslationReproduction},
      {"metrics internal consistency", MetricsConsistency},
      {"classifier oracles", ClassifierOracles},
      {"contextual model properties",
       [&](Criterion& c) { ContextualModel(c, sample, &trained); }},
      {"integrated gradients", [&](Criterion& c) { IntegratedGradientsCriterion(c, trained); }},
      {"data pipeline", DataPipeline},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Criterion c;
    const auto start = Clock::now();
    try {
      criteria[i].run(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::string notes;
    for (const auto& n : c.notes()) notes += (notes.empty() ? "" : "; ") + n;
    std::printf("%s %zu %s [%.2fs] %s\n", c.ok() ? "PASS" : "FAIL", i + 1, criteria[i].title,
                Seconds(start), notes.c_str());
    for (const auto& f : c.failures()) std::printf("    - %s\n", f.c_str());
    failed += !c.ok();
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
