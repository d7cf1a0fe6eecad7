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

#ifndef LEXISENT_CLI_OUTPUT_DIR_H_
#define LEXISENT_CLI_OUTPUT_DIR_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace lexisent::cli {

// An output directory that records what was written. Finish() adds
// config.json (the effective configuration) and manifest.json (every file
// with its size and checksum). No timestamps, so reruns are byte-identical.
class OutputDir {
 public:
  explicit OutputDir(std::filesystem::path root);

  void Write(const std::string& name, std::string_view content);
  void WriteJson(const std::string& name, const nlohmann::json& value);
  void Finish(const std::string& command, const nlohmann::json& config);

  const std::filesystem::path& root() const { return root_; }

 private:
  struct Entry {
    std::string name;
    std::size_t bytes;
    std::string fnv1a64;
  };
  std::filesystem::path root_;
  std::vector<Entry> files_;
};

// Hex FNV-1a 64-bit digest.
std::string Fnv1a64(std::string_view data);

}  // namespace lexisent::cli

#endif  // LEXISENT_CLI_OUTPUT_DIR_H_
