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

#ifndef LEXISENT_CORE_CSV_H_
#define LEXISENT_CORE_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace lexisent::csv {

using Record = std::vector<std::string>;

// RFC 4180 style: comma separated, double-quoted fields may contain commas,
// quotes ("") and newlines. Accepts LF or CRLF line ends. Blank lines are
// skipped. `delimiter` lets the same reader handle TSV.
std::vector<Record> Parse(std::string_view text, char delimiter = ',');

// Quotes a field only when it contains the delimiter, a quote or a line break.
std::string FormatField(std::string_view field, char delimiter = ',');
std::string FormatRecord(const Record& record, char delimiter = ',');

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

}  // namespace lexisent::csv

#endif  // LEXISENT_CORE_CSV_H_
