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

#ifndef LEXISENT_ML_DECISION_TREE_H_
#define LEXISENT_ML_DECISION_TREE_H_

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "json.hpp"

namespace lexisent::ml {

struct TreeParams {
  std::optional<int> max_depth = 12;  // nullopt grows until leaves are pure
  int min_samples_split = 2;
  // Draw ceil(sqrt(d)) candidate features at every split.
  bool feature_subsample = false;
};

// Weighted Gini impurity of a node, n * gini = n - sum(c^2) / n.
double GiniMass(const Eigen::VectorXd& class_counts);

struct SplitCandidate {
  int feature = -1;
  double threshold = 0.0;
  double impurity_decrease = 0.0;  // in sample-weighted Gini mass
};

// Best (feature, threshold) over the given rows, or nullopt when every
// feature is constant there. Ties keep the lowest feature, then the lowest
// threshold. Samples with x <= threshold go left.
std::optional<SplitCandidate> BestSplit(const Eigen::MatrixXd& x,
                                        std::span<const int> y, int num_classes,
                                        std::span<const Eigen::Index> rows,
                                        std::span<const int> features);

// CART classification tree with Gini impurity. Leaves keep their normalized
// class frequencies.
class DecisionTree {
 public:
  struct Node {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    Eigen::VectorXd distribution;
    Eigen::Index samples = 0;
  };

  // `rows` selects (and may repeat) training samples; empty means all. `rng`
  // is only drawn from when feature_subsample is set.
  static DecisionTree Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                          int num_classes, const TreeParams& params,
                          std::mt19937_64& rng,
                          std::span<const Eigen::Index> rows = {});

  const Node& Leaf(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;
  Eigen::VectorXd PredictProba(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
    return Leaf(sample).distribution;
  }

  const std::vector<Node>& nodes() const { return nodes_; }
  int depth() const;
  int num_features() const { return num_features_; }

  nlohmann::json ToJson() const;
  static DecisionTree FromJson(const nlohmann::json& j);

 private:
  std::vector<Node> nodes_;
  int num_features_ = 0;
};

struct ForestParams {
  int n_trees = 100;
  TreeParams tree;
  bool bootstrap = true;
  bool feature_subsample = true;
};

// Bagged CART trees. Tree i draws from an RNG seeded by (seed, i), so the
// result does not depend on how trees are scheduled over threads.
class RandomForest {
 public:
  static RandomForest Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                          int num_classes, const ForestParams& params,
                          std::uint64_t seed, int threads = 1);

  // Mean of the trees' leaf distributions.
  Eigen::VectorXd PredictProba(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;
  // Per-class count of trees voting for each class.
  Eigen::VectorXi Votes(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;

  const std::vector<DecisionTree>& trees() const { return trees_; }

  nlohmann::json ToJson() const;
  static RandomForest FromJson(const nlohmann::json& j);

 private:
  std::vector<DecisionTree> trees_;
  int num_classes_ = 0;
};

}  // namespace lexisent::ml

#endif  // LEXISENT_ML_DECISION_TREE_H_
