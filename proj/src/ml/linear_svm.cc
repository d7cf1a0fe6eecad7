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

#include "lexisent/ml/linear_svm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lexisent/core/math.h"
#include "lexisent/core/parallel.h"

namespace lexisent::ml {

LinearSvm LinearSvm::Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                         int num_classes, const SvmParams& params,
                         std::uint64_t seed, int threads) {
  if (!(params.lambda > 0.0)) throw std::invalid_argument("lambda must be > 0");
  if (params.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (x.rows() == 0) throw std::invalid_argument("cannot fit an SVM on no data");

  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd augmented(n, d + 1);
  augmented << x, Eigen::VectorXd::Constant(n, params.intercept_feature);

  LinearSvm svm;
  svm.intercept_feature_ = params.intercept_feature;
  svm.weights_ = Eigen::MatrixXd::Zero(num_classes, d + 1);
  const double radius = 1.0 / std::sqrt(params.lambda);

  ParallelFor(static_cast<std::size_t>(num_classes), threads, [&](std::size_t k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    Eigen::RowVectorXd w = Eigen::RowVectorXd::Zero(d + 1);
    long long t = 0;
    for (int epoch = 0; epoch < params.epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      for (Eigen::Index i : order) {
        ++t;
        const double eta = 1.0 / (params.lambda * static_cast<double>(t));
        const double target =
            y[static_cast<std::size_t>(i)] == static_cast<int>(k) ? 1.0 : -1.0;
        const double margin = target * w.dot(augmented.row(i));
        w *= 1.0 - eta * params.lambda;
        if (margin < 1.0) w += eta * target * augmented.row(i);
        const double norm = w.norm();
        if (norm > radius) w *= radius / norm;
      }
    }
    svm.weights_.row(static_cast<Eigen::Index>(k)) = w;
  });
  return svm;
}

Eigen::VectorXd LinearSvm::Margins(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  const Eigen::Index d = weights_.cols() - 1;
  if (sample.size() != d) {
    throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                " features, model expects " + std::to_string(d));
  }
  return weights_.leftCols(d) * sample.transpose() +
         weights_.col(d) * intercept_feature_;
}

Eigen::VectorXd LinearSvm::PredictProba(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  return Softmax(Margins(sample));
}

nlohmann::json LinearSvm::ToJson() const {
  return {{"weights", MatrixToJson(weights_)},
          {"intercept_feature", intercept_feature_}};
}

LinearSvm LinearSvm::FromJson(const nlohmann::json& j) {
  LinearSvm svm;
  svm.weights_ = MatrixFromJson(j.at("weights"));
  svm.intercept_feature_ = j.at("intercept_feature").get<double>();
  return svm;
}

}  // namespace lexisent::ml
