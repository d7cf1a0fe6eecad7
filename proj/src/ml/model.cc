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

#include "lexisent/ml/model.h"

#include <random>
#include <stdexcept>

#include "lexisent/core/math.h"

namespace lexisent::ml {

std::string_view ModelKindName(ModelKind kind) {
  switch (kind) {
    case ModelKind::kDecisionTree: return "decision_tree";
    case ModelKind::kRandomForest: return "random_forest";
    case ModelKind::kGaussianNb: return "gaussian_nb";
    case ModelKind::kLinearSvm: return "linear_svm";
  }
  return "?";
}

ModelKind ParseModelKind(std::string_view name) {
  for (ModelKind kind : kAllModelKinds) {
    if (ModelKindName(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown model kind: " + std::string(name));
}

nlohmann::json TrainOptions::ToJson(ModelKind kind) const {
  switch (kind) {
    case ModelKind::kDecisionTree:
      return {{"max_depth", max_depth}, {"min_samples_split", min_samples_split}};
    case ModelKind::kRandomForest:
      return {{"n_trees", n_trees},
              {"max_depth", max_depth},
              {"min_samples_split", min_samples_split},
              {"bootstrap", bootstrap},
              {"feature_subsample", feature_subsample}};
    case ModelKind::kGaussianNb:
      return {{"var_smoothing", var_smoothing}};
    case ModelKind::kLinearSvm:
      return {{"lambda", lambda}, {"epochs", epochs}};
  }
  return {};
}

namespace {

TreeParams MakeTreeParams(const TrainOptions& options) {
  TreeParams params;
  if (options.max_depth > 0) {
    params.max_depth = options.max_depth;
  } else {
    params.max_depth.reset();
  }
  params.min_samples_split = options.min_samples_split;
  return params;
}

}  // namespace

TrainedModel TrainedModel::Train(ModelKind kind, const Dataset& data,
                                 const TrainOptions& options, std::uint64_t seed) {
  CheckDataset(data);
  if (data.size() == 0) throw std::invalid_argument("cannot train on an empty dataset");
  TrainedModel model;
  model.kind_ = kind;
  model.seed_ = seed;
  model.hyperparameters_ = options.ToJson(kind);
  model.class_names_ = data.class_names;
  model.feature_names_ = data.feature_names;
  model.task_ = data.task;
  const int k = data.num_classes();
  switch (kind) {
    case ModelKind::kDecisionTree: {
      std::seed_seq seq{static_cast<std::uint32_t>(seed),
                        static_cast<std::uint32_t>(seed >> 32)};
      std::mt19937_64 rng(seq);
      model.model_ = DecisionTree::Fit(data.features, data.labels, k,
                                       MakeTreeParams(options), rng);
      break;
    }
    case ModelKind::kRandomForest: {
      if (options.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
      ForestParams params;
      params.n_trees = options.n_trees;
      params.tree = MakeTreeParams(options);
      params.bootstrap = options.bootstrap;
      params.feature_subsample = options.feature_subsample;
      model.model_ = RandomForest::Fit(data.features, data.labels, k, params, seed,
                                       options.threads);
      break;
    }
    case ModelKind::kGaussianNb:
      model.model_ = GaussianNaiveBayes::Fit(data.features, data.labels, k,
                                             options.var_smoothing);
      break;
    case ModelKind::kLinearSvm: {
      SvmParams params;
      params.lambda = options.lambda;
      params.epochs = options.epochs;
      model.model_ = LinearSvm::Fit(data.features, data.labels, k, params, seed,
                                    options.threads);
      break;
    }
  }
  return model;
}

Eigen::VectorXd TrainedModel::PredictProba(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  if (sample.size() != num_features()) {
    throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                " features, model expects " +
                                std::to_string(num_features()));
  }
  return std::visit([&](const auto& m) -> Eigen::VectorXd { return m.PredictProba(sample); },
                    model_);
}

int TrainedModel::Predict(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  return ArgmaxLowest(PredictProba(sample));
}

std::vector<int> TrainedModel::PredictAll(const Eigen::MatrixXd& x) const {
  std::vector<int> out(static_cast<std::size_t>(x.rows()));
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    out[static_cast<std::size_t>(r)] = Predict(x.row(r));
  }
  return out;
}

Eigen::MatrixXd TrainedModel::PredictProbaAll(const Eigen::MatrixXd& x) const {
  Eigen::MatrixXd out(x.rows(), static_cast<Eigen::Index>(class_names_.size()));
  for (Eigen::Index r = 0; r < x.rows(); ++r) out.row(r) = PredictProba(x.row(r)).transpose();
  return out;
}

nlohmann::json TrainedModel::ToJson() const {
  return {{"format_version", kModelFormatVersion},
          {"kind", ModelKindName(kind_)},
          {"task", TaskName(task_)},
          {"seed", seed_},
          {"hyperparameters", hyperparameters_},
          {"class_names", class_names_},
          {"feature_names", feature_names_},
          {"parameters",
           std::visit([](const auto& m) { return m.ToJson(); }, model_)}};
}

TrainedModel TrainedModel::FromJson(const nlohmann::json& j) {
  const int version = j.at("format_version").get<int>();
  if (version != kModelFormatVersion) {
    throw std::invalid_argument("unsupported model format version " +
                                std::to_string(version));
  }
  TrainedModel model;
  model.kind_ = ParseModelKind(j.at("kind").get<std::string>());
  model.task_ = ParseTask(j.at("task").get<std::string>());
  model.seed_ = j.at("seed").get<std::uint64_t>();
  model.hyperparameters_ = j.at("hyperparameters");
  model.class_names_ = j.at("class_names").get<std::vector<std::string>>();
  model.feature_names_ = j.at("feature_names").get<std::vector<std::string>>();
  const auto& params = j.at("parameters");
  switch (model.kind_) {
    case ModelKind::kDecisionTree: model.model_ = DecisionTree::FromJson(params); break;
    case ModelKind::kRandomForest: model.model_ = RandomForest::FromJson(params); break;
    case ModelKind::kGaussianNb: model.model_ = GaussianNaiveBayes::FromJson(params); break;
    case ModelKind::kLinearSvm: model.model_ = LinearSvm::FromJson(params); break;
  }
  return model;
}

}  // namespace lexisent::ml
