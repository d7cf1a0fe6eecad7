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

#ifndef LEXISENT_CONTEXT_CORPUS_H_
#define LEXISENT_CONTEXT_CORPUS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/core/types.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent::context {

inline constexpr std::string_view kTargetOpen = "[TARGET]";
inline constexpr std::string_view kTargetClose = "[/TARGET]";

// A sentence with one marked target. `tokens` holds every word in order,
// normalized and punctuation-stripped; the target phrase occupies the single
// token at `target_index` (its words joined by one space).
struct TargetSentence {
  std::string text;
  std::string target;
  std::vector<std::string> tokens;
  std::size_t target_index = 0;
  std::optional<Polarity> label;

  std::size_t context_size() const { return tokens.size() - 1; }
  bool operator==(const TargetSentence&) const = default;
};

// Markers match case-insensitively. Throws std::invalid_argument unless
// there is exactly one well-ordered, non-empty marker pair.
TargetSentence ParseMarked(std::string_view text);

// Wraps `target` in markers between the given context words.
std::string FormatMarked(const std::vector<std::string>& before, std::string_view target,
                         const std::vector<std::string>& after);

struct GenerateOptions {
  // Relative frequency of negative, neutral, positive labels.
  std::array<double, kNumPolarities> label_weights = {1.0, 1.0, 1.0};
  // Chance that a context word is drawn from a pool of another polarity.
  double noise = 0.0;
  int min_context = 2;  // words on each side of the target
  int max_context = 5;
};

// Sentences whose targets are the language's context-dependent forms and
// whose context words are lexicon forms with the label's polarity in that
// language. Labels without any context words are never drawn. Deterministic
// per seed. Throws std::invalid_argument when no form is context-dependent or
// no label can be drawn.
std::vector<TargetSentence> GenerateDataset(const Lexicon& lexicon, Language language,
                                            std::size_t n, std::uint64_t seed,
                                            const GenerateOptions& options = {});

struct CorpusSplit {
  std::vector<TargetSentence> train;
  std::vector<TargetSentence> validation;
  std::vector<TargetSentence> test;
  std::vector<Polarity> absent_labels;
};
// Stratified 70:20:10 split by label. Requires at least 10 labeled sentences.
CorpusSplit Split702010(const std::vector<TargetSentence>& data, std::uint64_t seed);

// TSV `marked_sentence<TAB>label`, no header. Labels are polarity names.
std::string WriteCorpus(const std::vector<TargetSentence>& data);
// Throws DataError (row = line number) on malformed lines.
std::vector<TargetSentence> ReadCorpus(std::string_view tsv);

}  // namespace lexisent::context

#endif  // LEXISENT_CONTEXT_CORPUS_H_
