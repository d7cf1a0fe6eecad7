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

#include "lexisent/core/types.h"

#include <string>

namespace lexisent {
namespace {

constexpr std::array<std::string_view, kNumLanguages> kLanguageNames = {
    "french", "ciluba", "english", "afrikaans", "sepedi", "zulu"};
constexpr std::array<std::string_view, kNumLanguages> kLanguageSuffixes = {
    "fr", "cil", "en", "af", "nso", "zu"};
constexpr std::array<std::string_view, kNumPosTags> kPosNames = {
    "adjectif", "adverb", "adverbe", "article",        "conjunction",
    "mot",      "nombre", "pronompersonnel", "verbe"};
constexpr std::array<std::string_view, kNumPolarities> kPolarityNames = {
    "negative", "neutral", "positive"};

std::string Quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

DataError::DataError(std::size_t row, std::string field, const std::string& what)
    : std::runtime_error("row " + std::to_string(row) + ", field '" + field +
                         "': " + what),
      row_(row),
      field_(std::move(field)) {}

std::string_view LanguageName(Language language) {
  return kLanguageNames[Index(language)];
}

std::string_view LanguageScoreSuffix(Language language) {
  return kLanguageSuffixes[Index(language)];
}

Language ParseLanguage(std::string_view name) {
  for (std::size_t i = 0; i < kNumLanguages; ++i) {
    if (kLanguageNames[i] == name) return kAllLanguages[i];
  }
  throw DataError("unknown language " + Quoted(name));
}

std::string_view PosTagName(PosTag tag) { return kPosNames[Index(tag)]; }

PosTag ParsePosTag(std::string_view name) {
  for (std::size_t i = 0; i < kNumPosTags; ++i) {
    if (kPosNames[i] == name) return kAllPosTags[i];
  }
  throw DataError("unknown POS tag " + Quoted(name));
}

std::string_view PolarityName(Polarity polarity) {
  return kPolarityNames[Index(polarity)];
}

Polarity ParsePolarity(std::string_view name) {
  for (std::size_t i = 0; i < kNumPolarities; ++i) {
    if (kPolarityNames[i] == name) return kAllPolarities[i];
  }
  throw DataError("unknown polarity " + Quoted(name));
}

}  // namespace lexisent
