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

#include "lexisent/translate/translator.h"

#include <algorithm>

#include "lexisent/core/text.h"

namespace lexisent {

int PosPriority(PosTag tag) {
  switch (tag) {
    case PosTag::kMot:
      return 0;
    case PosTag::kVerbe:
      return 1;
    case PosTag::kNombre:
      return 2;
    default:
      // PosTag enumerators are declared alphabetically.
      return 3 + static_cast<int>(tag);
  }
}

EntryId ChooseEntry(const Lexicon& lexicon, std::span<const EntryId> ids) {
  EntryId best = ids.front();
  int best_rank = PosPriority(lexicon.entry(best).pos);
  for (EntryId id : ids.subspan(1)) {
    const int rank = PosPriority(lexicon.entry(id).pos);
    if (rank < best_rank) {
      best = id;
      best_rank = rank;
    }
  }
  return best;
}

std::vector<Token> Tokenize(std::string_view sentence, Language language,
                            const Lexicon& lexicon) {
  const std::string normalized = NormalizeText(sentence);
  const auto words = SplitWords(normalized);
  const std::size_t max_len = std::max<std::size_t>(1, lexicon.max_phrase_len(language));

  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < words.size()) {
    const std::size_t longest = std::min(max_len, words.size() - i);
    bool matched = false;
    for (std::size_t len = longest; len >= 1; --len) {
      std::string key = words[i].text;
      for (std::size_t k = 1; k < len; ++k) key += " " + words[i + k].text;
      const auto ids = lexicon.Lookup(language, key);
      if (ids.empty()) continue;
      Token token;
      token.surface = std::move(key);
      token.kind = Token::Kind::kLexical;
      token.entry_id = ChooseEntry(lexicon, ids);
      token.candidates = ids.size();
      token.begin = words[i].begin;
      token.end = words[i + len - 1].end;
      tokens.push_back(std::move(token));
      i += len;
      matched = true;
      break;
    }
    if (!matched) {
      Token token;
      token.surface = words[i].text;
      token.begin = words[i].begin;
      token.end = words[i].end;
      tokens.push_back(std::move(token));
      ++i;
    }
  }
  return tokens;
}

TranslationResult Translate(std::string_view sentence, Language source,
                            Language target, const Lexicon& lexicon) {
  TranslationResult result;
  result.source_language = source;
  result.target_language = target;
  result.source_text = std::string(sentence);
  result.tokens = Tokenize(sentence, source, lexicon);

  if (source == target) {
    result.translated_text = NormalizeForm(sentence);
  } else {
    std::vector<std::string> parts;
    parts.reserve(result.tokens.size());
    for (Token& token : result.tokens) {
      if (token.lexical()) {
        const auto& form = lexicon.entry(*token.entry_id).form(target);
        if (form) {
          parts.push_back(NormalizeForm(*form));
          continue;
        }
        token.kind = Token::Kind::kUnknown;
        token.entry_id.reset();
        token.candidates = 0;
      }
      parts.push_back(token.surface);
    }
    result.translated_text = Join(parts, " ");
  }
  for (const Token& token : result.tokens) {
    if (!token.lexical()) ++result.unknown_count;
    if (token.ambiguous()) ++result.ambiguous_count;
  }
  return result;
}

}  // namespace lexisent
