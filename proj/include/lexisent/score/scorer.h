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

#ifndef LEXISENT_SCORE_SCORER_H_
#define LEXISENT_SCORE_SCORER_H_

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lexisent/core/types.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent {

// kAverage scores a word by the mean of its entry's language scores; kV2 by
// the score of the sentence's own language.
enum class ScoreMode { kAverage, kV2 };
std::string_view ScoreModeName(ScoreMode mode);
ScoreMode ParseScoreMode(std::string_view name);

struct WordScore {
  std::string form;
  double score = 0.0;
  bool known = false;
};

struct ScoredSentence {
  std::string sentence;
  Language language;
  std::vector<WordScore> word_scores;
  double total_score = 0.0;  // plain sum, not a mean
  Polarity polarity = Polarity::kNeutral;
};

ScoredSentence ScoreSentence(std::string_view sentence, Language language,
                             const Lexicon& lexicon, ScoreMode mode);

// "form:score; form:score". Unknown words print as 0.
std::string FormatWordScores(const std::vector<WordScore>& word_scores);

struct BaselineResult {
  double compound = 0.0;  // in [-1, 1]
  Polarity polarity = Polarity::kNeutral;
};
using BaselineScorer = std::function<BaselineResult(std::string_view)>;

// Small English valence-list scorer: summed valences normalized by
// x / sqrt(x^2 + 15), positive at >= 0.05 and negative at <= -0.05.
BaselineResult BuiltinEnglishBaseline(std::string_view sentence);
double BuiltinValence(std::string_view word);

struct ComparisonRow {
  std::string sentence;
  Language language;
  ScoredSentence average;
  ScoredSentence v2;
  BaselineResult baseline;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;
  // Fraction of rows where the v2 polarity equals the baseline polarity.
  double agreement = 0.0;
  std::array<std::size_t, kNumPolarities> average_counts{};
  std::array<std::size_t, kNumPolarities> v2_counts{};
  std::array<std::size_t, kNumPolarities> baseline_counts{};
};

// Output rows keep input order. `threads` > 1 scores rows concurrently.
ComparisonReport ScoreBatch(
    const std::vector<std::pair<std::string, Language>>& rows,
    const Lexicon& lexicon, const BaselineScorer& baseline, int threads = 1);

// Header + one line per row: sentence,language,total_score_avg,...
std::string ComparisonCsv(const ComparisonReport& report);
nlohmann::json SummaryJson(const ComparisonReport& report);

}  // namespace lexisent

#endif  // LEXISENT_SCORE_SCORER_H_
