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

#include "lexisent/core/split.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace lexisent {

Partition StratifiedPartition(std::span<const int> labels,
                              std::span<const double> fractions,
                              std::uint64_t seed) {
  if (fractions.empty()) throw std::invalid_argument("no partition fractions");
  double total = 0.0;
  for (double f : fractions) {
    if (!(f >= 0.0)) throw std::invalid_argument("negative partition fraction");
    total += f;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("partition fractions must sum to 1");
  }

  std::map<int, std::vector<std::size_t>> by_label;
  for (std::size_t i = 0; i < labels.size(); ++i) by_label[labels[i]].push_back(i);

  Partition partition;
  std::mt19937_64 rng(seed);
  // (position in [0,1), label, rank, item)
  std::vector<std::tuple<double, int, std::size_t, std::size_t>> order;
  order.reserve(labels.size());
  for (auto& [label, items] : by_label) {
    std::shuffle(items.begin(), items.end(), rng);
    if (items.size() == 1) {
      partition.singleton_labels.push_back(label);
      order.emplace_back(-1.0, label, 0, items.front());
      continue;
    }
    const double n = static_cast<double>(items.size());
    for (std::size_t r = 0; r < items.size(); ++r) {
      order.emplace_back((static_cast<double>(r) + 0.5) / n, label, r, items[r]);
    }
  }
  std::sort(order.begin(), order.end());

  const std::size_t n = labels.size();
  partition.parts.resize(fractions.size());
  double cumulative = 0.0;
  std::size_t begin = 0;
  for (std::size_t p = 0; p < fractions.size(); ++p) {
    cumulative += fractions[p];
    std::size_t end = p + 1 == fractions.size()
                          ? n
                          : static_cast<std::size_t>(
                                std::llround(cumulative * static_cast<double>(n)));
    end = std::clamp(end, begin, n);
    auto& part = partition.parts[p];
    for (std::size_t k = begin; k < end; ++k) part.push_back(std::get<3>(order[k]));
    std::sort(part.begin(), part.end());
    begin = end;
  }
  return partition;
}

}  // namespace lexisent
