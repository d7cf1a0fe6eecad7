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

#ifndef LEXISENT_ML_NAIVE_BAYES_H_
#define LEXISENT_ML_NAIVE_BAYES_H_

#include <Eigen/Core>
#include <span>

#include "json.hpp"

namespace lexisent::ml {

// Gaussian naive Bayes. Per-class variances (population estimate) are floored
// at var_smoothing times the largest per-feature variance of the whole
// training set, so constant features never divide by zero.
class GaussianNaiveBayes {
 public:
  static GaussianNaiveBayes Fit(const Eigen::MatrixXd& x, std::span<const int> y,
                                int num_classes, double var_smoothing);

  // Unnormalized log posterior per class; -inf for classes without samples.
  Eigen::VectorXd JointLogLikelihood(
      const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;
  Eigen::VectorXd PredictProba(const Eigen::Ref<const Eigen::RowVectorXd>& sample) const;

  const Eigen::VectorXd& priors() const { return priors_; }
  const Eigen::MatrixXd& means() const { return means_; }          // K x d
  const Eigen::MatrixXd& variances() const { return variances_; }  // K x d
  double variance_floor() const { return variance_floor_; }

  nlohmann::json ToJson() const;
  static GaussianNaiveBayes FromJson(const nlohmann::json& j);

 private:
  Eigen::VectorXd priors_;
  Eigen::MatrixXd means_;
  Eigen::MatrixXd variances_;
  double variance_floor_ = 0.0;
};

}  // namespace lexisent::ml

#endif  // LEXISENT_ML_NAIVE_BAYES_H_
