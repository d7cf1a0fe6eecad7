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

#include "lexisent/ml/naive_bayes.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lexisent/core/math.h"

namespace lexisent::ml {

GaussianNaiveBayes GaussianNaiveBayes::Fit(const Eigen::MatrixXd& x,
                                           std::span<const int> y, int num_classes,
                                           double var_smoothing) {
  if (x.rows() == 0) throw std::invalid_argument("cannot fit naive Bayes on no data");
  if (!(var_smoothing > 0.0)) throw std::invalid_argument("var_smoothing must be > 0");
  const Eigen::Index d = x.cols();
  GaussianNaiveBayes model;
  model.means_ = Eigen::MatrixXd::Zero(num_classes, d);
  model.variances_ = Eigen::MatrixXd::Zero(num_classes, d);
  Eigen::VectorXd counts = Eigen::VectorXd::Zero(num_classes);

  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const int c = y[static_cast<std::size_t>(r)];
    counts(c) += 1.0;
    model.means_.row(c) += x.row(r);
  }
  for (int c = 0; c < num_classes; ++c) {
    if (counts(c) > 0) model.means_.row(c) /= counts(c);
  }
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    const int c = y[static_cast<std::size_t>(r)];
    model.variances_.row(c) += (x.row(r) - model.means_.row(c)).array().square().matrix();
  }
  for (int c = 0; c < num_classes; ++c) {
    if (counts(c) > 0) model.variances_.row(c) /= counts(c);
  }

  const Eigen::RowVectorXd overall_mean = x.colwise().mean();
  const double max_variance =
      ((x.rowwise() - overall_mean).array().square().colwise().sum() /
       static_cast<double>(x.rows()))
          .maxCoeff();
  model.variance_floor_ =
      max_variance > 0.0 ? var_smoothing * max_variance : var_smoothing;
  model.variances_ = model.variances_.cwiseMax(model.variance_floor_);
  model.priors_ = counts / counts.sum();
  return model;
}

Eigen::VectorXd GaussianNaiveBayes::JointLogLikelihood(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  if (sample.size() != means_.cols()) {
    throw std::invalid_argument("sample has " + std::to_string(sample.size()) +
                                " features, model expects " +
                                std::to_string(means_.cols()));
  }
  const Eigen::Index k = means_.rows();
  Eigen::VectorXd joint(k);
  for (Eigen::Index c = 0; c < k; ++c) {
    if (priors_(c) <= 0.0) {
      joint(c) = -std::numeric_limits<double>::infinity();
      continue;
    }
    const auto var = variances_.row(c).array();
    const auto diff = sample.array() - means_.row(c).array();
    joint(c) = std::log(priors_(c)) -
               0.5 * (2.0 * std::numbers::pi * var).log().sum() -
               (diff.square() / (2.0 * var)).sum();
  }
  return joint;
}

Eigen::VectorXd GaussianNaiveBayes::PredictProba(
    const Eigen::Ref<const Eigen::RowVectorXd>& sample) const {
  return Softmax(JointLogLikelihood(sample));
}

nlohmann::json GaussianNaiveBayes::ToJson() const {
  return {{"priors", VectorToJson(priors_)},
          {"means", MatrixToJson(means_)},
          {"variances", MatrixToJson(variances_)},
          {"variance_floor", variance_floor_}};
}

GaussianNaiveBayes GaussianNaiveBayes::FromJson(const nlohmann::json& j) {
  GaussianNaiveBayes model;
  model.priors_ = VectorFromJson(j.at("priors"));
  model.means_ = MatrixFromJson(j.at("means"));
  model.variances_ = MatrixFromJson(j.at("variances"));
  model.variance_floor_ = j.at("variance_floor").get<double>();
  return model;
}

}  // namespace lexisent::ml
