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

#ifndef LEXISENT_CORE_TYPES_H_
#define LEXISENT_CORE_TYPES_H_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lexisent {

// Input data that violates a file schema or a domain bound. `row` is the
// 1-based data row (header excluded) when the error is tied to one.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
  DataError(std::size_t row, std::string field, const std::string& what);

  std::optional<std::size_t> row() const { return row_; }
  const std::string& field() const { return field_; }

 private:
  std::optional<std::size_t> row_;
  std::string field_;
};

enum class Language { kFrench, kCiluba, kEnglish, kAfrikaans, kSepedi, kZulu };
inline constexpr std::size_t kNumLanguages = 6;
inline constexpr std::array<Language, kNumLanguages> kAllLanguages = {
    Language::kFrench,    Language::kCiluba, Language::kEnglish,
    Language::kAfrikaans, Language::kSepedi, Language::kZulu};

std::string_view LanguageName(Language language);
// Suffix used by the per-language score columns (fr, cil, en, af, nso, zu).
std::string_view LanguageScoreSuffix(Language language);
// Throws DataError for anything other than the six language names.
Language ParseLanguage(std::string_view name);
constexpr std::size_t Index(Language language) {
  return static_cast<std::size_t>(language);
}

enum class PosTag {
  kAdjectif,
  kAdverb,
  kAdverbe,
  kArticle,
  kConjunction,
  kMot,
  kNombre,
  kPronomPersonnel,
  kVerbe,
};
inline constexpr std::size_t kNumPosTags = 9;
inline constexpr std::array<PosTag, kNumPosTags> kAllPosTags = {
    PosTag::kAdjectif, PosTag::kAdverb,          PosTag::kAdverbe,
    PosTag::kArticle,  PosTag::kConjunction,     PosTag::kMot,
    PosTag::kNombre,   PosTag::kPronomPersonnel, PosTag::kVerbe};

std::string_view PosTagName(PosTag tag);
PosTag ParsePosTag(std::string_view name);
constexpr std::size_t Index(PosTag tag) { return static_cast<std::size_t>(tag); }

enum class Polarity { kNegative, kNeutral, kPositive };
inline constexpr std::size_t kNumPolarities = 3;
inline constexpr std::array<Polarity, kNumPolarities> kAllPolarities = {
    Polarity::kNegative, Polarity::kNeutral, Polarity::kPositive};

std::string_view PolarityName(Polarity polarity);
Polarity ParsePolarity(std::string_view name);
constexpr std::size_t Index(Polarity polarity) {
  return static_cast<std::size_t>(polarity);
}

// Scores within this distance of zero are neutral.
inline constexpr double kNeutralEpsilon = 1e-9;
inline constexpr double kMinScore = -9.0;
inline constexpr double kMaxScore = 9.0;

constexpr Polarity PolarityOf(double score) {
  if (score > kNeutralEpsilon) return Polarity::kPositive;
  if (score < -kNeutralEpsilon) return Polarity::kNegative;
  return Polarity::kNeutral;
}

constexpr bool IsValidScore(double score) {
  return score >= kMinScore && score <= kMaxScore;
}

}  // namespace lexisent

#endif  // LEXISENT_CORE_TYPES_H_
