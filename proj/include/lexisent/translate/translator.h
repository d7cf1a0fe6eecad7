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

#ifndef LEXISENT_TRANSLATE_TRANSLATOR_H_
#define LEXISENT_TRANSLATE_TRANSLATOR_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/core/types.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent {

struct Token {
  enum class Kind { kLexical, kUnknown };

  std::string surface;  // normalized words of the span, single-space joined
  Kind kind = Kind::kUnknown;
  std::optional<EntryId> entry_id;
  // Number of entries sharing the form; > 1 means the POS priority rule chose.
  std::size_t candidates = 0;
  // Byte offsets into the normalized sentence.
  std::size_t begin = 0;
  std::size_t end = 0;

  bool lexical() const { return kind == Kind::kLexical; }
  bool ambiguous() const { return candidates > 1; }
};

// Rank used to pick among entries sharing a form: mot, verbe, nombre, then
// the remaining tags alphabetically. Lower wins.
int PosPriority(PosTag tag);

// Deterministic choice among `ids` (non-empty), by POS priority then entry
// order.
EntryId ChooseEntry(const Lexicon& lexicon, std::span<const EntryId> ids);

// Greedy left-to-right longest match against the lexicon's `language` forms.
// The sentence is normalized first; punctuation separators are dropped.
std::vector<Token> Tokenize(std::string_view sentence, Language language,
                            const Lexicon& lexicon);

struct TranslationResult {
  Language source_language;
  Language target_language;
  std::string source_text;
  std::string translated_text;
  std::vector<Token> tokens;  // after downgrading untranslatable tokens
  std::size_t unknown_count = 0;
  std::size_t ambiguous_count = 0;
};

// Word-for-word translation preserving order. Lexical tokens whose entry has
// no `target` form pass through as unknown. src == dst returns the normalized
// input.
TranslationResult Translate(std::string_view sentence, Language source,
                            Language target, const Lexicon& lexicon);

}  // namespace lexisent

#endif  // LEXISENT_TRANSLATE_TRANSLATOR_H_
