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

#include "lexisent/cli/output_dir.h"

#include <cstdint>
#include <cstdio>
#include <system_error>

#include "lexisent/core/csv.h"
#include "lexisent/core/types.h"

namespace lexisent::cli {

std::string Fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

OutputDir::OutputDir(std::filesystem::path root) : root_(std::move(root)) {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw DataError("cannot create '" + root_.string() + "': " + ec.message());
}

void OutputDir::Write(const std::string& name, std::string_view content) {
  csv::WriteFile((root_ / name).string(), content);
  files_.push_back({name, content.size(), Fnv1a64(content)});
}

void OutputDir::WriteJson(const std::string& name, const nlohmann::json& value) {
  Write(name, value.dump(2) + "\n");
}

void OutputDir::Finish(const std::string& command, const nlohmann::json& config) {
  WriteJson("config.json", config);
  nlohmann::json files = nlohmann::json::array();
  for (const auto& f : files_) {
    files.push_back({{"path", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.fnv1a64}});
  }
  const nlohmann::json manifest = {
      {"tool", "lexisent"}, {"command", command}, {"config", config}, {"files", files}};
  csv::WriteFile((root_ / "manifest.json").string(), manifest.dump(2) + "\n");
}

}  // namespace lexisent::cli
