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

#include "lexisent/score/scorer.h"

#include <cmath>
#include <unordered_map>

#include "lexisent/core/csv.h"
#include "lexisent/core/parallel.h"
#include "lexisent/core/text.h"
#include "lexisent/translate/translator.h"

namespace lexisent {
namespace {

// Valences on a -4..4 scale.
const std::unordered_map<std::string_view, double>& ValenceTable() {
  static const auto* table = new std::unordered_map<std::string_view, double>{
      {"happy", 2.7},     {"happiness", 2.6}, {"glad", 2.0},
      {"good", 1.9},      {"great", 3.1},     {"excellent", 3.2},
      {"love", 3.2},      {"loved", 2.9},     {"like", 1.5},
      {"nice", 1.8},      {"fun", 2.3},       {"enjoy", 2.2},
      {"thank", 1.5},     {"thanks", 1.9},    {"beautiful", 2.9},
      {"wonderful", 2.7}, {"best", 3.2},      {"better", 1.9},
      {"amazing", 2.8},   {"kind", 2.4},      {"care", 2.2},
      {"caring", 2.2},    {"friend", 2.2},    {"win", 2.8},
      {"hope", 1.9},      {"safe", 1.9},      {"smile", 1.5},
      {"trust", 2.3},     {"peace", 2.5},     {"joy", 2.8},
      {"free", 2.3},      {"important", 0.8}, {"want", 0.3},
      {"bad", -2.5},      {"worse", -2.1},    {"worst", -3.1},
      {"sad", -2.1},      {"hate", -2.7},     {"angry", -2.3},
      {"fear", -2.2},     {"afraid", -2.2},   {"fall", -0.8},
      {"pain", -2.3},     {"hurt", -2.4},     {"cry", -2.1},
      {"terrible", -2.1}, {"awful", -2.0},    {"poor", -2.1},
      {"kill", -3.7},     {"death", -2.9},    {"die", -2.9},
      {"war", -2.9},      {"accuse", -1.9},   {"blame", -1.4},
      {"punishment", -2.2}, {"wrong", -2.1},  {"lose", -1.6},
      {"lost", -1.3},     {"sick", -2.3},     {"alone", -1.0},
      {"badly", -2.1},    {"fight", -1.6},    {"danger", -2.4},
      {"ugly", -2.3},     {"cruel", -2.8},    {"stupid", -2.4},
      {"no", -1.2},       {"not", -0.5},      {"problem", -1.7},
  };
  return *table;
}

void Count(std::array<std::size_t, kNumPolarities>& counts, Polarity p) {
  ++counts[Index(p)];
}

}  // namespace

std::string_view ScoreModeName(ScoreMode mode) {
  return mode == ScoreMode::kAverage ? "avg" : "v2";
}

ScoreMode ParseScoreMode(std::string_view name) {
  if (name == "avg") return ScoreMode::kAverage;
  if (name == "v2") return ScoreMode::kV2;
  throw DataError("unknown score mode '" + std::string(name) + "'");
}

ScoredSentence ScoreSentence(std::string_view sentence, Language language,
                             const Lexicon& lexicon, ScoreMode mode) {
  ScoredSentence scored;
  scored.sentence = std::string(sentence);
  scored.language = language;
  for (const Token& token : Tokenize(sentence, language, lexicon)) {
    WordScore word{token.surface, 0.0, token.lexical()};
    if (token.lexical()) {
      const LexiconEntry& e = lexicon.entry(*token.entry_id);
      word.score = mode == ScoreMode::kAverage ? e.MeanLanguageScore()
                                               : e.EffectiveScore(language);
    }
    scored.total_score += word.score;
    scored.word_scores.push_back(std::move(word));
  }
  scored.polarity = PolarityOf(scored.total_score);
  return scored;
}

std::string FormatWordScores(const std::vector<WordScore>& word_scores) {
  std::vector<std::string> parts;
  parts.reserve(word_scores.size());
  for (const WordScore& w : word_scores) {
    parts.push_back(w.form + ":" + FormatShortest(w.known ? w.score : 0.0));
  }
  return Join(parts, "; ");
}

double BuiltinValence(std::string_view word) {
  const auto& table = ValenceTable();
  auto it = table.find(word);
  return it == table.end() ? 0.0 : it->second;
}

BaselineResult BuiltinEnglishBaseline(std::string_view sentence) {
  double sum = 0.0;
  for (const auto& word : SplitWords(NormalizeText(sentence))) {
    sum += BuiltinValence(word.text);
  }
  BaselineResult result;
  if (sum != 0.0) result.compound = sum / std::sqrt(sum * sum + 15.0);
  if (result.compound >= 0.05) {
    result.polarity = Polarity::kPositive;
  } else if (result.compound <= -0.05) {
    result.polarity = Polarity::kNegative;
  }
  return result;
}

ComparisonReport ScoreBatch(
    const std::vector<std::pair<std::string, Language>>& rows,
    const Lexicon& lexicon, const BaselineScorer& baseline, int threads) {
  ComparisonReport report;
  report.rows.resize(rows.size());
  ParallelFor(rows.size(), threads, [&](std::size_t i) {
    const auto& [sentence, language] = rows[i];
    ComparisonRow& row = report.rows[i];
    row.sentence = sentence;
    row.language = language;
    row.average = ScoreSentence(sentence, language, lexicon, ScoreMode::kAverage);
    row.v2 = ScoreSentence(sentence, language, lexicon, ScoreMode::kV2);
    row.baseline = baseline(sentence);
  });
  std::size_t agree = 0;
  for (const ComparisonRow& row : report.rows) {
    Count(report.average_counts, row.average.polarity);
    Count(report.v2_counts, row.v2.polarity);
    Count(report.baseline_counts, row.baseline.polarity);
    if (row.v2.polarity == row.baseline.polarity) ++agree;
  }
  if (!rows.empty()) {
    report.agreement = static_cast<double>(agree) / static_cast<double>(rows.size());
  }
  return report;
}

std::string ComparisonCsv(const ComparisonReport& report) {
  std::string out =
      "sentence,language,total_score_avg,word_scores_avg,sentiment_avg,"
      "total_score_v2,word_scores_v2,sentiment_v2,baseline_compound,"
      "baseline_sentiment\n";
  for (const ComparisonRow& row : report.rows) {
    out += csv::FormatRecord({
        row.sentence,
        std::string(LanguageName(row.language)),
        FormatFixed(row.average.total_score, 6),
        FormatWordScores(row.average.word_scores),
        std::string(PolarityName(row.average.polarity)),
        FormatFixed(row.v2.total_score, 6),
        FormatWordScores(row.v2.word_scores),
        std::string(PolarityName(row.v2.polarity)),
        FormatFixed(row.baseline.compound, 4),
        std::string(PolarityName(row.baseline.polarity)),
    });
  }
  return out;
}

nlohmann::json SummaryJson(const ComparisonReport& report) {
  auto counts = [](const std::array<std::size_t, kNumPolarities>& c) {
    nlohmann::json j;
    for (Polarity p : kAllPolarities) j[PolarityName(p)] = c[Index(p)];
    return j;
  };
  return {{"rows", report.rows.size()},
          {"agreement_v2_baseline", report.agreement},
          {"polarity_counts",
           {{"avg", counts(report.average_counts)},
            {"v2", counts(report.v2_counts)},
            {"baseline", counts(report.baseline_counts)}}}};
}

}  // namespace lexisent
