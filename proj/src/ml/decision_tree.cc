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

#include "lexisent/ml/decision_tree.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "lexisent/core/math.h"
#include "lexisent/core/parallel.h"

namespace lexisent::ml {
namespace {

constexpr double kTieTolerance = 1e-12;

class TreeBuilder {
 public:
  TreeBuilder(const Eigen::MatrixXd& x, std::span<const int> y, int num_classes,
              const TreeParams& params, std::mt19937_64& rng,
              std::vector<DecisionTree::Node>& nodes)
      : x_(x), y_(y), num_classes_(num_classes), params_(params), rng_(rng),
        nodes_(nodes) {
    all_features_.resize(static_cast<std::size_t>(x.cols()));
    std::iota(all_features_.begin(), all_features_.end(), 0);
  }

  int Build(std::vector<Eigen::Index> rows, int depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_classes_);
    for (Eigen::Index r : rows) counts(y_[static_cast<std::size_t>(r)]) += 1.0;
    const auto n = static_cast<Eigen::Index>(rows.size());
    nodes_[id].samples = n;
    nodes_[id].distribution = n > 0 ? Eigen::VectorXd(counts / static_cast<double>(n))
                                    : Eigen::VectorXd::Zero(num_classes_);

    const bool pure = (counts.array() > 0.0).count() <= 1;
    const bool depth_left = !params_.max_depth || depth < *params_.max_depth;
    if (pure || !depth_left || n < params_.min_samples_split) return id;

    std::vector<int> features = all_features_;
    if (params_.feature_subsample && !features.empty()) {
      const auto k = static_cast<std::size_t>(
          std::ceil(std::sqrt(static_cast<double>(features.size()))));
      std::shuffle(features.begin(), features.end(), rng_);
      features.resize(k);
      std::sort(features.begin(), features.end());
    }
    const auto split = BestSplit(x_, y_, num_classes_, rows, features);
    if (!split) return id;

    std::vector<Eigen::Index> left;
    std::vector<Eigen::Index> right;
    for (Eigen::Index r : rows) {
      (x_(r, split->feature) <= split->threshold ? left : right).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();
    nodes_[id].feature = split->feature;
    nodes_[id].threshold = split->threshold;
    const int l = Build(std::move(left), depth + 1);
    const int r = Build(std::move(right), depth + 1);
    nodes_[id].left = l;
    nodes_[id].right = r;
    return id;
  }

 private:
  const Eigen::MatrixXd& x_;
  std::span<const int> y_;
  int num_classes_;
  const TreeParams& params_;
  std::mt19937_64& rng_;
  std::vector<DecisionTree::Node>& nodes_;
  std::vector<int> all_features_;
};

}  // namespace

double GiniMass(const Eigen::VectorXd& class_counts) {
  const double n = class_counts.sum();
  if (n <= 0.0) return 0.0;
  return n - class_counts.squaredNorm() / n;
}

std::optional<SplitCandidate> BestSplit(const Eigen::MatrixXd& x,
                                        std::span<const int> y, int num_classes,
                                        std::span<const Eigen::Index> rows,
                                        std::span<const int> features) {
  Eigen::VectorXd total = Eigen::VectorXd::Zero(num_classes);
  for (Eigen::Index r : rows) total(y[static_cast<std::size_t>(r)]) += 1.0;
  const double parent = GiniMass(total);

  std::optional<SplitCandidate> best;
  std::vector<std::pair<double, int>> column(rows.size());
  for (int f : features) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      column[k] = {x(rows[k], f), y[static_cast<std::size_t>(rows[k])]};
    }
    std::sort(column.begin(), column.end());
    Eigen::VectorXd left = Eigen::VectorXd::Zero(num_classes);
    for (std::size_t k = 0; k + 1 < column.size(); ++k) {
      left(column[k].second) += 1.0;
      const double a = column[k].first;
      const double b = column[k + 1].first;
      if (!(a < b)) continue;
      const double decrease = parent - GiniMass(left) - GiniMass(total - left);
      if (best && decrease <= best->impurity_decrease + kTieTolerance) continue;
      double threshold = a + (b - a) / 2.0;
      if (threshold >= b) threshold = a;
      best = SplitCandidate{f, threshold, decrease};
    }
  }
  return best;
}

DecisionTree DecisionTree::Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                               int num_classes, const TreeParams& params,
                               std::mt19937_64& rng,
                               std::span<const Eigen::Index> rows) {
  if (x.rows() == 0) throw std::invalid_argument("cannot fit a tree on no data");
  if (static_cast<std::size_t>(x.rows()) != y.size()) {
    throw std::invalid_argument("feature rows and labels differ in length");
  }
  std::vector<Eigen::Index> selected(rows.begin(), rows.end());
  if (selected.empty()) {
    selected.resize(static_cast<std::size_t>(x.rows()));
    std::iota(selected.begin(), selected.end(), Eigen::Index{0});
  }
  DecisionTree tree;
  tree.num_features_ = static_cast<int>(x.cols());
  TreeBuilder builder(x, y, num_classes, params, rng, tree.nodes_);
  builder.Build(std::move(selected), 0);
  return tree;
}

const DecisionTree::Node& DecisionTree::Leaf(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  if (sample.size() != num_features_) {
    throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                " features, tree expects " +
                                std::to_string(num_features_));
  }
  int id = 0;
  while (nodes_[id].feature >= 0) {
    id = sample(nodes_[id].feature) <= nodes_[id].threshold ? nodes_[id].left
                                                            : nodes_[id].right;
  }
  return nodes_[id];
}

int DecisionTree::depth() const {
  std::vector<int> depth(nodes_.size(), 0);
  int deepest = 0;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    deepest = std::max(deepest, depth[i]);
    if (nodes_[i].feature >= 0) {
      depth[nodes_[i].left] = depth[i] + 1;
      depth[nodes_[i].right] = depth[i] + 1;
    }
  }
  return deepest;
}

nlohmann::json DecisionTree::ToJson() const {
  nlohmann::json nodes = nlohmann::json::array();
  for (const Node& n : nodes_) {
    nlohmann::json j = {{"samples", n.samples},
                        {"distribution", VectorToJson(n.distribution)}};
    if (n.feature >= 0) {
      j["feature"] = n.feature;
      j["threshold"] = n.threshold;
      j["left"] = n.left;
      j["right"] = n.right;
    }
    nodes.push_back(std::move(j));
  }
  return {{"num_features", num_features_}, {"nodes", std::move(nodes)}};
}

DecisionTree DecisionTree::FromJson(const nlohmann::json& j) {
  DecisionTree tree;
  tree.num_features_ = j.at("num_features").get<int>();
  for (const auto& jn : j.at("nodes")) {
    Node n;
    n.samples = jn.at("samples").get<Eigen::Index>();
    n.distribution = VectorFromJson(jn.at("distribution"));
    if (jn.contains("feature")) {
      n.feature = jn.at("feature").get<int>();
      n.threshold = jn.at("threshold").get<double>();
      n.left = jn.at("left").get<int>();
      n.right = jn.at("right").get<int>();
    }
    tree.nodes_.push_back(std::move(n));
  }
  return tree;
}

RandomForest RandomForest::Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                               int num_classes, const ForestParams& params,
                               std::uint64_t seed, int threads) {
  if (params.n_trees < 1) throw std::invalid_argument("n_trees must be >= 1");
  RandomForest forest;
  forest.num_classes_ = num_classes;
  forest.trees_.resize(static_cast<std::size_t>(params.n_trees));
  TreeParams tree_params = params.tree;
  tree_params.feature_subsample = params.feature_subsample;
  ParallelFor(forest.trees_.size(), threads, [&](std::size_t t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::vector<Eigen::Index> rows;
    if (params.bootstrap) {
      std::uniform_int_distribution<Eigen::Index> pick(0, x.rows() - 1);
      rows.resize(static_cast<std::size_t>(x.rows()));
      for (auto& r : rows) r = pick(rng);
    }
    forest.trees_[t] = DecisionTree::Fit(x, y, num_classes, tree_params, rng, rows);
  });
  return forest;
}

Eigen::VectorXd RandomForest::PredictProba(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(num_classes_);
  for (const DecisionTree& tree : trees_) sum += tree.PredictProba(sample);
  return sum / static_cast<double>(trees_.size());
}

Eigen::VectorXi RandomForest::Votes(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  Eigen::VectorXi votes = Eigen::VectorXi::Zero(num_classes_);
  for (const DecisionTree& tree : trees_) ++votes(ArgmaxLowest(tree.PredictProba(sample)));
  return votes;
}

nlohmann::json RandomForest::ToJson() const {
  nlohmann::json trees = nlohmann::json::array();
  for (const DecisionTree& t : trees_) trees.push_back(t.ToJson());
  return {{"num_classes", num_classes_}, {"trees", std::move(trees)}};
}

RandomForest RandomForest::FromJson(const nlohmann::json& j) {
  RandomForest forest;
  forest.num_classes_ = j.at("num_classes").get<int>();
  for (const auto& t : j.at("trees")) forest.trees_.push_back(DecisionTree::FromJson(t));
  return forest;
}

}  // namespace lexisent::ml
