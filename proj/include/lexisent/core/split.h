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

#ifndef LEXISENT_CORE_SPLIT_H_
#define LEXISENT_CORE_SPLIT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lexisent {

struct Partition {
  // Ascending item indices of each part.
  std::vector<std::vector<std::size_t>> parts;
  // Labels with a single member; such members always go to the first part.
  std::vector<int> singleton_labels;
};

// Stratified shuffle partition. Items of each label are shuffled, spread
// evenly over [0, 1) by rank, merged, and cut at the cumulative fractions,
// so part sizes are exact up to rounding and every label is split in
// proportion. `fractions` must sum to 1. Deterministic per seed.
Partition StratifiedPartition(std::span<const int> labels,
                              std::span<const double> fractions,
                              std::uint64_t seed);

}  // namespace lexisent

#endif  // LEXISENT_CORE_SPLIT_H_
