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

#include "lexisent/lexicon/lexicon.h"

#include <algorithm>
#include <map>

#include "lexisent/core/csv.h"
#include "lexisent/core/text.h"

namespace lexisent {
namespace {

constexpr std::size_t kFormColumns = kNumLanguages;
constexpr std::size_t kPosColumn = kFormColumns;
constexpr std::size_t kScoreColumn = kPosColumn + 1;
constexpr std::size_t kFirstLanguageScoreColumn = kScoreColumn + 1;
constexpr std::size_t kNumColumns = kFirstLanguageScoreColumn + kNumLanguages;

std::vector<std::string> HeaderColumns() {
  std::vector<std::string> columns;
  for (Language l : kAllLanguages) columns.emplace_back(LanguageName(l));
  columns.emplace_back("pos");
  columns.emplace_back("score");
  for (Language l : kAllLanguages) {
    columns.push_back("score_" + std::string(LanguageScoreSuffix(l)));
  }
  return columns;
}

void CheckHeader(const csv::Record& header) {
  const auto expected = HeaderColumns();
  for (std::size_t i = 0; i < header.size(); ++i) {
    const std::string name = Trim(header[i]);
    if (std::find(expected.begin(), expected.end(), name) == expected.end()) {
      throw DataError("header: unknown column '" + name + "'");
    }
  }
  if (header.size() != expected.size()) {
    throw DataError("header: expected " + std::to_string(expected.size()) +
                    " columns, got " + std::to_string(header.size()));
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (Trim(header[i]) != expected[i]) {
      throw DataError("header: column " + std::to_string(i + 1) + " is '" +
                      header[i] + "', expected '" + expected[i] + "'");
    }
  }
}

double ParseScoreField(const std::string& field, std::size_t row,
                       const std::string& column) {
  double value = 0.0;
  try {
    value = ParseDouble(Trim(field));
  } catch (const std::invalid_argument&) {
    throw DataError(row, column, "not a number: '" + field + "'");
  }
  if (!IsValidScore(value)) {
    throw DataError(row, column, "score " + field + " outside [-9, 9]");
  }
  return value;
}

LexiconEntry ParseRow(const csv::Record& record, std::size_t row,
                      const std::vector<std::string>& columns) {
  if (record.size() != kNumColumns) {
    throw DataError(row, "*",
                    "expected " + std::to_string(kNumColumns) + " fields, got " +
                        std::to_string(record.size()));
  }
  LexiconEntry entry;
  entry.id = static_cast<EntryId>(row);
  for (std::size_t i = 0; i < kFormColumns; ++i) {
    if (!record[i].empty()) entry.forms[i] = record[i];
  }
  if (!entry.forms[Index(Language::kFrench)] ||
      Trim(*entry.forms[Index(Language::kFrench)]).empty()) {
    throw DataError(row, "french", "french form is required");
  }
  try {
    entry.pos = ParsePosTag(Trim(record[kPosColumn]));
  } catch (const DataError& e) {
    throw DataError(row, "pos", e.what());
  }
  entry.shared_score = ParseScoreField(record[kScoreColumn], row, "score");
  for (std::size_t i = 0; i < kNumLanguages; ++i) {
    const auto& field = record[kFirstLanguageScoreColumn + i];
    if (Trim(field).empty()) continue;
    entry.language_scores[i] =
        ParseScoreField(field, row, columns[kFirstLanguageScoreColumn + i]);
  }
  return entry;
}

}  // namespace

double LexiconEntry::EffectiveScore(Language language) const {
  return language_scores[Index(language)].value_or(shared_score);
}

double LexiconEntry::MeanLanguageScore() const {
  double sum = 0.0;
  int count = 0;
  for (const auto& score : language_scores) {
    if (score) {
      sum += *score;
      ++count;
    }
  }
  return count == 0 ? shared_score : sum / count;
}

void CheckEntry(const LexiconEntry& entry) {
  const std::size_t row = entry.id;
  if (!entry.form(Language::kFrench)) {
    throw DataError(row, "french", "french form is required");
  }
  for (Language l : kAllLanguages) {
    const auto& form = entry.form(l);
    if (!form) continue;
    if (form->empty()) {
      throw DataError(row, std::string(LanguageName(l)),
                      "absent forms must be empty optionals, not empty strings");
    }
    if (NormalizeForm(*form) != *form) {
      throw DataError(row, std::string(LanguageName(l)),
                      "form '" + *form + "' is not trimmed and normalized");
    }
  }
  if (!IsValidScore(entry.shared_score)) {
    throw DataError(row, "score", "score outside [-9, 9]");
  }
  for (Language l : kAllLanguages) {
    const auto& score = entry.language_scores[Index(l)];
    if (score && !IsValidScore(*score)) {
      throw DataError(row, "score_" + std::string(LanguageScoreSuffix(l)),
                      "score outside [-9, 9]");
    }
  }
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries) : entries_(std::move(entries)) {
  position_.reserve(entries_.size());
  for (std::size_t pos = 0; pos < entries_.size(); ++pos) {
    const LexiconEntry& e = entries_[pos];
    if (!position_.emplace(e.id, pos).second) {
      throw DataError("duplicate entry id " + std::to_string(e.id));
    }
    max_id_ = std::max(max_id_, e.id);
    for (Language l : kAllLanguages) {
      const auto& form = e.form(l);
      if (!form) continue;
      std::string key = FormKey(*form);
      if (key.empty()) continue;
      const std::size_t words = SplitWords(key).size();
      auto& slot = max_phrase_len_[Index(l)];
      slot = std::max(slot, words);
      index_[Index(l)][std::move(key)].push_back(e.id);
    }
  }
}

const LexiconEntry* Lexicon::Find(EntryId id) const {
  auto it = position_.find(id);
  return it == position_.end() ? nullptr : &entries_[it->second];
}

const LexiconEntry& Lexicon::entry(EntryId id) const {
  const LexiconEntry* e = Find(id);
  if (e == nullptr) throw DataError("no entry with id " + std::to_string(id));
  return *e;
}

std::span<const EntryId> Lexicon::Lookup(Language language,
                                         std::string_view key) const {
  const auto& index = index_[Index(language)];
  auto it = index.find(std::string(key));
  if (it == index.end()) return {};
  return it->second;
}

Lexicon ParseLexicon(std::string_view csv_text) {
  if (!IsValidUtf8(csv_text)) throw DataError("input is not valid UTF-8");
  if (csv_text.starts_with("\xEF\xBB\xBF")) csv_text.remove_prefix(3);
  const auto records = csv::Parse(csv_text);
  if (records.empty()) throw DataError("missing header row");
  CheckHeader(records.front());
  const auto columns = HeaderColumns();
  std::vector<LexiconEntry> entries;
  entries.reserve(records.size() - 1);
  for (std::size_t i = 1; i < records.size(); ++i) {
    entries.push_back(ParseRow(records[i], i, columns));
  }
  return Lexicon(std::move(entries));
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out(kLexiconHeader);
  out += '\n';
  csv::Record record(kNumColumns);
  for (const LexiconEntry& e : lexicon.entries()) {
    for (std::size_t i = 0; i < kNumLanguages; ++i) {
      record[i] = e.forms[i].value_or("");
      record[kFirstLanguageScoreColumn + i] =
          e.language_scores[i] ? FormatShortest(*e.language_scores[i]) : "";
    }
    record[kPosColumn] = std::string(PosTagName(e.pos));
    record[kScoreColumn] = FormatShortest(e.shared_score);
    out += csv::FormatRecord(record);
  }
  return out;
}

DedupKey MakeDedupKey(const LexiconEntry& entry) {
  return {NormalizeForm(entry.form(Language::kFrench).value_or("")), entry.pos,
          entry.shared_score};
}

std::vector<EntryId> ValidationReport::DuplicateIds() const {
  std::vector<EntryId> ids;
  for (const auto& issue : issues) {
    if (issue.kind == ValidationIssue::Kind::kDuplicate) ids.push_back(issue.id);
  }
  return ids;
}

ValidationReport ValidateLexicon(const Lexicon& lexicon) {
  ValidationReport report;
  report.entry_count = lexicon.size();
  std::map<DedupKey, EntryId> first_seen;
  for (const LexiconEntry& e : lexicon.entries()) {
    for (Language l : kAllLanguages) {
      const auto& form = e.form(l);
      if (!form) continue;
      const std::string trimmed = Trim(*form);
      if (trimmed != *form) {
        report.issues.push_back({ValidationIssue::Kind::kUntrimmed, e.id,
                                 std::nullopt, l, *form});
      }
      if (NormalizeText(trimmed) != trimmed) {
        report.issues.push_back({ValidationIssue::Kind::kNotNormalized, e.id,
                                 std::nullopt, l, *form});
      }
    }
    auto [it, inserted] = first_seen.emplace(MakeDedupKey(e), e.id);
    if (!inserted) {
      report.issues.push_back({ValidationIssue::Kind::kDuplicate, e.id, it->second,
                               std::nullopt, it->first.french});
    }
  }
  return report;
}

CleanResult Clean(const Lexicon& lexicon) {
  CleanResult result;
  std::vector<LexiconEntry> kept;
  kept.reserve(lexicon.size());
  std::map<DedupKey, EntryId> first_seen;
  for (LexiconEntry e : lexicon.entries()) {
    for (Language l : kAllLanguages) {
      auto& form = e.forms[Index(l)];
      if (!form) continue;
      const std::string trimmed = Trim(*form);
      std::string normalized = NormalizeText(trimmed);
      if (normalized == *form) continue;
      result.report.changes.push_back(
          {e.id, l, *form, normalized, trimmed != *form, normalized != trimmed});
      if (normalized.empty()) {
        form.reset();
      } else {
        form = std::move(normalized);
      }
    }
    auto [it, inserted] = first_seen.emplace(MakeDedupKey(e), e.id);
    if (!inserted) {
      result.report.removals.push_back({e.id, it->second});
      continue;
    }
    kept.push_back(std::move(e));
  }
  result.lexicon = Lexicon(std::move(kept));
  return result;
}

AddResult AddEntries(const Lexicon& lexicon, std::vector<LexiconEntry> additions) {
  AddResult result;
  std::map<DedupKey, EntryId> keys;
  for (const LexiconEntry& e : lexicon.entries()) keys.emplace(MakeDedupKey(e), e.id);

  std::vector<LexiconEntry> entries = lexicon.entries();
  EntryId next_id = lexicon.max_id() + 1;
  for (std::size_t i = 0; i < additions.size(); ++i) {
    LexiconEntry& e = additions[i];
    CheckEntry(e);
    e.id = next_id;
    auto [it, inserted] = keys.emplace(MakeDedupKey(e), e.id);
    if (!inserted) {
      result.conflicts.push_back({i, it->second, it->first.french});
      continue;
    }
    result.added.push_back(e.id);
    entries.push_back(std::move(e));
    ++next_id;
  }
  result.lexicon = Lexicon(std::move(entries));
  return result;
}

std::vector<std::string> ContextDependentForms(const Lexicon& lexicon,
                                               Language language) {
  struct Seen {
    std::size_t order;
    std::size_t count = 0;
    bool positive = false;
    bool negative = false;
  };
  std::unordered_map<std::string, Seen> seen;
  for (const LexiconEntry& e : lexicon.entries()) {
    const auto& form = e.form(language);
    if (!form) continue;
    std::string key = FormKey(*form);
    if (key.empty()) continue;
    auto [it, inserted] = seen.try_emplace(std::move(key), Seen{seen.size()});
    Seen& s = it->second;
    ++s.count;
    const Polarity p = PolarityOf(e.EffectiveScore(language));
    s.positive |= p == Polarity::kPositive;
    s.negative |= p == Polarity::kNegative;
  }
  std::vector<std::pair<std::size_t, std::string>> found;
  for (const auto& [key, s] : seen) {
    if (s.count >= 2 && s.positive && s.negative) found.emplace_back(s.order, key);
  }
  std::sort(found.begin(), found.end());
  std::vector<std::string> forms;
  for (auto& [order, key] : found) forms.push_back(std::move(key));
  return forms;
}

nlohmann::json ToJson(const ValidationReport& report) {
  nlohmann::json issues = nlohmann::json::array();
  for (const auto& issue : report.issues) {
    nlohmann::json j;
    switch (issue.kind) {
      case ValidationIssue::Kind::kDuplicate:
        j["kind"] = "duplicate";
        break;
      case ValidationIssue::Kind::kUntrimmed:
        j["kind"] = "untrimmed";
        break;
      case ValidationIssue::Kind::kNotNormalized:
        j["kind"] = "not_normalized";
        break;
    }
    j["row"] = issue.id;
    if (issue.duplicate_of) j["duplicate_of"] = *issue.duplicate_of;
    if (issue.language) j["language"] = LanguageName(*issue.language);
    j["detail"] = issue.detail;
    issues.push_back(std::move(j));
  }
  return {{"entry_count", report.entry_count},
          {"ok", report.ok()},
          {"issues", std::move(issues)}};
}

nlohmann::json ToJson(const CleaningReport& report) {
  nlohmann::json changes = nlohmann::json::array();
  for (const auto& c : report.changes) {
    changes.push_back({{"row", c.id},
                       {"language", LanguageName(c.language)},
                       {"before", c.before},
                       {"after", c.after},
                       {"trimmed", c.trimmed},
                       {"normalized", c.normalized}});
  }
  nlohmann::json removals = nlohmann::json::array();
  for (const auto& r : report.removals) {
    removals.push_back({{"row", r.id}, {"duplicate_of", r.kept}});
  }
  return {{"changes", std::move(changes)}, {"removals", std::move(removals)}};
}

}  // namespace lexisent
