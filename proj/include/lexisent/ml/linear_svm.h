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

#ifndef LEXISENT_ML_LINEAR_SVM_H_
#define LEXISENT_ML_LINEAR_SVM_H_

#include <Eigen/Core>
#include <cstdint>
#include <span>

#include "json.hpp"

namespace lexisent::ml {

struct SvmParams {
  double lambda = 1e-4;
  int epochs = 50;
  // Value of the constant feature appended to every sample. It is regularized
  // like the other weights, which keeps the objective homogeneous: scaling
  // every feature including this one by c, with lambda scaled by c^2, yields
  // the same decisions.
  double intercept_feature = 1.0;
};

// One-vs-rest linear SVM trained by stochastic subgradient descent on the
// L2-regularized hinge loss with step 1 / (lambda t) and projection onto the
// ball of radius 1 / sqrt(lambda). Head k draws its sample order from an RNG
// seeded by (seed, k).
class LinearSvm {
 public:
  static LinearSvm Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                       int num_classes, const SvmParams& params, std::uint64_t seed,
                       int threads = 1);

  Eigen::VectorXd Margins(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;
  // Softmax of the margins; only meaningful for ranking (ROC curves).
  Eigen::VectorXd PredictProba(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;

  // K x (d + 1); the last column multiplies the intercept feature.
  const Eigen::MatrixXd& weights() const { return weights_; }

  nlohmann::json ToJson() const;
  static LinearSvm FromJson(const nlohmann::json& j);

 private:
  Eigen::MatrixXd weights_;
  double intercept_feature_ = 1.0;
};

}  // namespace lexisent::ml

#endif  // LEXISENT_ML_LINEAR_SVM_H_
