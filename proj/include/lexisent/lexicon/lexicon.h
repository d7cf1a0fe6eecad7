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

#ifndef LEXISENT_LEXICON_LEXICON_H_
#define LEXISENT_LEXICON_LEXICON_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lexisent/core/types.h"

namespace lexisent {

using EntryId = std::uint32_t;

// One concept across the six languages.
struct LexiconEntry {
  EntryId id = 0;
  std::array<std::optional<std::string>, kNumLanguages> forms;
  PosTag pos = PosTag::kMot;
  double shared_score = 0.0;
  std::array<std::optional<double>, kNumLanguages> language_scores;

  const std::optional<std::string>& form(Language language) const {
    return forms[Index(language)];
  }
  // The language's own score, or the shared score when it has none.
  double EffectiveScore(Language language) const;
  // Mean over the language scores that are present; the shared score when
  // none are.
  double MeanLanguageScore() const;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

// Throws DataError when `entry` breaks an entry invariant: a missing or
// non-canonical form, or a score outside [-9, 9].
void CheckEntry(const LexiconEntry& entry);

// Immutable once built. Forms are indexed under FormKey() per language.
class Lexicon {
 public:
  Lexicon() = default;
  // Throws DataError on repeated ids.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const LexiconEntry& entry(EntryId id) const;
  const LexiconEntry* Find(EntryId id) const;

  // Entry ids whose `language` form has the given key, in entry order.
  std::span<const EntryId> Lookup(Language language, std::string_view key) const;
  // Longest form, in words, for `language`.
  std::size_t max_phrase_len(Language language) const {
    return max_phrase_len_[Index(language)];
  }
  EntryId max_id() const { return max_id_; }

  friend bool operator==(const Lexicon& a, const Lexicon& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<EntryId, std::size_t> position_;
  std::array<std::unordered_map<std::string, std::vector<EntryId>>, kNumLanguages>
      index_;
  std::array<std::size_t, kNumLanguages> max_phrase_len_{};
  EntryId max_id_ = 0;
};

// Canonical header of the lexicon CSV.
inline constexpr std::string_view kLexiconHeader =
    "french,ciluba,english,afrikaans,sepedi,zulu,pos,score,score_fr,score_cil,"
    "score_en,score_af,score_nso,score_zu";

// Parses the lexicon CSV. Entry ids are the 1-based data row numbers. Forms are
// kept as written; Clean() canonicalizes them.
Lexicon ParseLexicon(std::string_view csv_text);
std::string SerializeLexicon(const Lexicon& lexicon);

// Duplicates are judged on (normalized french form, pos, shared score).
struct DedupKey {
  std::string french;
  PosTag pos;
  double shared_score;
  friend auto operator<=>(const DedupKey&, const DedupKey&) = default;
};
DedupKey MakeDedupKey(const LexiconEntry& entry);

struct ValidationIssue {
  enum class Kind { kDuplicate, kUntrimmed, kNotNormalized };
  Kind kind;
  EntryId id;
  std::optional<EntryId> duplicate_of;
  std::optional<Language> language;
  std::string detail;
};

struct ValidationReport {
  std::size_t entry_count = 0;
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::vector<EntryId> DuplicateIds() const;
};
ValidationReport ValidateLexicon(const Lexicon& lexicon);

struct FormChange {
  EntryId id;
  Language language;
  std::string before;
  std::string after;
  bool trimmed;
  bool normalized;  // case-folded or recomposed
};

struct DuplicateRemoval {
  EntryId id;
  EntryId kept;
};

struct CleaningReport {
  std::vector<FormChange> changes;
  std::vector<DuplicateRemoval> removals;
};

struct CleanResult {
  Lexicon lexicon;
  CleaningReport report;
};
// Trims and normalizes every form, then removes exact duplicates keeping the
// first occurrence. Idempotent.
CleanResult Clean(const Lexicon& lexicon);

struct AddConflict {
  std::size_t batch_index;
  EntryId conflicts_with;  // existing entry, or an earlier entry of the batch
  std::string french;
};

struct AddResult {
  Lexicon lexicon;
  std::vector<EntryId> added;
  std::vector<AddConflict> conflicts;
};
// Appends `additions` with fresh ids. Entries whose dedup key is already
// present are rejected and reported. Throws DataError if an addition breaks an
// entry invariant.
AddResult AddEntries(const Lexicon& lexicon, std::vector<LexiconEntry> additions);

// Form keys of `language` that occur in at least two entries, one with a
// positive and one with a negative score in that language. First-seen order.
std::vector<std::string> ContextDependentForms(const Lexicon& lexicon,
                                               Language language);

nlohmann::json ToJson(const ValidationReport& report);
nlohmann::json ToJson(const CleaningReport& report);

}  // namespace lexisent

#endif  // LEXISENT_LEXICON_LEXICON_H_
