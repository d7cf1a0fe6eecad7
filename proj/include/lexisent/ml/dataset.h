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

#ifndef LEXISENT_ML_DATASET_H_
#define LEXISENT_ML_DATASET_H_

#include <Eigen/Core>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexisent/lexicon/lexicon.h"

namespace lexisent::ml {

// kPos predicts the entry's POS tag; kPolarity the polarity of its shared
// score.
enum class Task { kPos, kPolarity };
std::string_view TaskName(Task task);
Task ParseTask(std::string_view name);

// Features per entry: shared score, the six language scores (missing ones
// filled with the shared score), English form length in code points and in
// words (0 when the entry has no English form).
inline constexpr int kNumLexiconFeatures = 9;
const std::vector<std::string>& LexiconFeatureNames();

struct Dataset {
  Eigen::MatrixXd features;  // one row per sample
  std::vector<int> labels;
  std::vector<std::string> class_names;
  std::vector<std::string> feature_names;
  std::vector<EntryId> provenance;
  Task task = Task::kPos;

  Eigen::Index size() const { return features.rows(); }
  Eigen::Index num_features() const { return features.cols(); }
  int num_classes() const { return static_cast<int>(class_names.size()); }

  Dataset Subset(std::span<const std::size_t> rows) const;
};

// Throws std::invalid_argument when shapes or labels are inconsistent.
void CheckDataset(const Dataset& data);

Dataset BuildDataset(const Lexicon& lexicon, Task task);

struct TrainTestSplit {
  Dataset train;
  Dataset test;
  std::vector<int> singleton_classes;  // kept whole in train
};
// Stratified shuffle split; 0 < train_fraction < 1.
TrainTestSplit Split(const Dataset& data, double train_fraction, std::uint64_t seed);

// Header of feature names plus "label", one row per sample.
std::string FeaturesCsv(const Dataset& data);

}  // namespace lexisent::ml

#endif  // LEXISENT_ML_DATASET_H_
