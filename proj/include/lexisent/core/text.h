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

#ifndef LEXISENT_CORE_TEXT_H_
#define LEXISENT_CORE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lexisent {

bool IsValidUtf8(std::string_view text);

// NFC composition followed by default Unicode case folding. Diacritics are
// kept, so "Tšhaba" becomes "tšhaba".
std::string NormalizeText(std::string_view text);

// Strips leading and trailing Unicode white space.
std::string Trim(std::string_view text);

// Trim + NormalizeText; the canonical representation of a lexicon form.
std::string NormalizeForm(std::string_view form);

// Word separators besides white space. Apostrophes are not separators.
bool IsPunctuationSeparator(char c);

struct WordSpan {
  std::string text;
  std::size_t begin = 0;  // byte offsets into the scanned string
  std::size_t end = 0;
};

// Splits already-normalized text on white space and punctuation separators.
std::vector<WordSpan> SplitWords(std::string_view text);

// Key under which a lexicon form is indexed: normalized words joined by a
// single space.
std::string FormKey(std::string_view form);

std::size_t CodepointCount(std::string_view text);

// Shortest decimal text that parses back to the same double ("9", "2.6",
// "4.333333333333333").
std::string FormatShortest(double value);
std::string FormatFixed(double value, int decimals);

// Strict decimal parse of the whole field; throws std::invalid_argument.
double ParseDouble(std::string_view text);

std::string Join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace lexisent

#endif  // LEXISENT_CORE_TEXT_H_
