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

#include "lexisent/ml/dataset.h"

#include <stdexcept>

#include "lexisent/core/csv.h"
#include "lexisent/core/split.h"
#include "lexisent/core/text.h"

namespace lexisent::ml {

std::string_view TaskName(Task task) {
  return task == Task::kPos ? "pos" : "polarity";
}

Task ParseTask(std::string_view name) {
  if (name == "pos") return Task::kPos;
  if (name == "polarity") return Task::kPolarity;
  throw DataError("unknown task '" + std::string(name) + "'");
}

const std::vector<std::string>& LexiconFeatureNames() {
  static const auto* names = new std::vector<std::string>{
      "score",    "score_fr", "score_cil",          "score_en",
      "score_af", "score_nso", "score_zu", "english_length", "english_words"};
  return *names;
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  Dataset out;
  out.class_names = class_names;
  out.feature_names = feature_names;
  out.task = task;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
  out.labels.reserve(rows.size());
  out.provenance.reserve(rows.size());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto r = static_cast<Eigen::Index>(rows[k]);
    out.features.row(static_cast<Eigen::Index>(k)) = features.row(r);
    out.labels.push_back(labels[rows[k]]);
    if (!provenance.empty()) out.provenance.push_back(provenance[rows[k]]);
  }
  return out;
}

void CheckDataset(const Dataset& data) {
  if (static_cast<std::size_t>(data.features.rows()) != data.labels.size()) {
    throw std::invalid_argument("feature rows and labels differ in length");
  }
  for (int label : data.labels) {
    if (label < 0 || label >= data.num_classes()) {
      throw std::invalid_argument("label " + std::to_string(label) +
                                  " outside the class list");
    }
  }
}

Dataset BuildDataset(const Lexicon& lexicon, Task task) {
  Dataset data;
  data.task = task;
  data.feature_names = LexiconFeatureNames();
  if (task == Task::kPos) {
    for (PosTag t : kAllPosTags) data.class_names.emplace_back(PosTagName(t));
  } else {
    for (Polarity p : kAllPolarities) data.class_names.emplace_back(PolarityName(p));
  }
  const auto n = static_cast<Eigen::Index>(lexicon.size());
  data.features.resize(n, kNumLexiconFeatures);
  Eigen::Index r = 0;
  for (const LexiconEntry& e : lexicon.entries()) {
    auto row = data.features.row(r++);
    row(0) = e.shared_score;
    for (Language l : kAllLanguages) {
      row(1 + static_cast<Eigen::Index>(Index(l))) = e.EffectiveScore(l);
    }
    const auto& english = e.form(Language::kEnglish);
    const std::string form = english ? NormalizeForm(*english) : std::string();
    row(7) = static_cast<double>(CodepointCount(form));
    row(8) = static_cast<double>(SplitWords(form).size());
    data.labels.push_back(task == Task::kPos
                              ? static_cast<int>(Index(e.pos))
                              : static_cast<int>(Index(PolarityOf(e.shared_score))));
    data.provenance.push_back(e.id);
  }
  return data;
}

TrainTestSplit Split(const Dataset& data, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw std::invalid_argument("train fraction must lie in (0, 1)");
  }
  const double fractions[] = {train_fraction, 1.0 - train_fraction};
  const Partition partition = StratifiedPartition(data.labels, fractions, seed);
  return {data.Subset(partition.parts[0]), data.Subset(partition.parts[1]),
          partition.singleton_labels};
}

std::string FeaturesCsv(const Dataset& data) {
  csv::Record header = data.feature_names;
  header.emplace_back("label");
  std::string out = csv::FormatRecord(header);
  for (Eigen::Index r = 0; r < data.size(); ++r) {
    csv::Record record;
    for (Eigen::Index c = 0; c < data.num_features(); ++c) {
      record.push_back(FormatShortest(data.features(r, c)));
    }
    record.push_back(data.class_names[data.labels[static_cast<std::size_t>(r)]]);
    out += csv::FormatRecord(record);
  }
  return out;
}

}  // namespace lexisent::ml
