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

#ifndef LEXISENT_ML_MODEL_H_
#define LEXISENT_ML_MODEL_H_

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"
#include "lexisent/ml/dataset.h"
#include "lexisent/ml/decision_tree.h"
#include "lexisent/ml/linear_svm.h"
#include "lexisent/ml/naive_bayes.h"

namespace lexisent::ml {

enum class ModelKind { kDecisionTree, kRandomForest, kGaussianNb, kLinearSvm };
inline constexpr ModelKind kAllModelKinds[] = {
    ModelKind::kDecisionTree, ModelKind::kRandomForest, ModelKind::kGaussianNb,
    ModelKind::kLinearSvm};
std::string_view ModelKindName(ModelKind kind);
ModelKind ParseModelKind(std::string_view name);

struct TrainOptions {
  int max_depth = 12;  // <= 0 means unbounded
  int min_samples_split = 2;
  int n_trees = 100;
  bool bootstrap = true;
  bool feature_subsample = true;
  double var_smoothing = 1e-9;
  double lambda = 1e-4;
  int epochs = 50;
  int threads = 1;

  // Only the fields relevant to `kind`.
  nlohmann::json ToJson(ModelKind kind) const;
};

inline constexpr int kModelFormatVersion = 1;

class TrainedModel {
 public:
  static TrainedModel Train(ModelKind kind, const Dataset& data,
                            const TrainOptions& options, std::uint64_t seed);

  // Both throw std::invalid_argument on an arity mismatch.
  Eigen::VectorXd PredictProba(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;
  int Predict(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;

  std::vector<int> PredictAll(const Eigen::MatrixXd& x) const;
  Eigen::MatrixXd PredictProbaAll(const Eigen::MatrixXd& x) const;

  ModelKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }
  const nlohmann::json& hyperparameters() const { return hyperparameters_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  int num_features() const { return static_cast<int>(feature_names_.size()); }

  template <typename T>
  const T& get() const {
    return std::get<T>(model_);
  }

  nlohmann::json ToJson() const;
  static TrainedModel FromJson(const nlohmann::json& j);

 private:
  ModelKind kind_ = ModelKind::kDecisionTree;
  std::uint64_t seed_ = 0;
  nlohmann::json hyperparameters_;
  std::vector<std::string> class_names_;
  std::vector<std::string> feature_names_;
  Task task_ = Task::kPos;
  std::variant<DecisionTree, RandomForest, GaussianNaiveBayes, LinearSvm> model_;
};

}  // namespace lexisent::ml

#endif  // LEXISENT_ML_MODEL_H_
