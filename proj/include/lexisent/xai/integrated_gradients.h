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

#ifndef LEXISENT_XAI_INTEGRATED_GRADIENTS_H_
#define LEXISENT_XAI_INTEGRATED_GRADIENTS_H_

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lexisent/context/model.h"

namespace lexisent::xai {

template <typename Scalar>
struct IgResult {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> attributions;  // shape of x
  Scalar f_input{};
  Scalar f_baseline{};
  Scalar total{};
  Scalar delta{};  // total - (f_input - f_baseline)
};

// Integrated gradients by the right-endpoint Riemann sum
//   (x - x') * (1/m) sum_{k=1..m} grad F(x' + (k/m)(x - x')).
// `f(point, &gradient)` returns F(point) and writes dF/dpoint.
template <typename F, typename DerivedX, typename DerivedB>
IgResult<typename DerivedX::Scalar> IntegratedGradients(
    const F& f, const Eigen::MatrixBase<DerivedX>& x,
    const Eigen::MatrixBase<DerivedB>& baseline, int steps) {
  using Scalar = typename DerivedX::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (x.rows() != baseline.rows() || x.cols() != baseline.cols()) {
    throw std::invalid_argument("input and baseline shapes differ");
  }
  const Matrix diff = x - baseline;
  Matrix gradient_sum = Matrix::Zero(x.rows(), x.cols());
  Matrix gradient;
  IgResult<Scalar> result;
  for (int k = 1; k <= steps; ++k) {
    const Scalar alpha = static_cast<Scalar>(k) / static_cast<Scalar>(steps);
    const Matrix point = baseline + alpha * diff;
    const Scalar value = f(point, &gradient);
    if (k == steps) result.f_input = value;
    gradient_sum += gradient;
  }
  result.f_baseline = f(Matrix(baseline), &gradient);
  result.attributions = diff.cwiseProduct(gradient_sum) / static_cast<Scalar>(steps);
  result.total = result.attributions.sum();
  result.delta = result.total - (result.f_input - result.f_baseline);
  return result;
}

enum class BaselineKind { kZero, kPad };
std::string_view BaselineKindName(BaselineKind kind);
BaselineKind ParseBaselineKind(std::string_view name);

struct TokenAttribution {
  std::string token;
  double attribution = 0.0;
};

struct AttributionMap {
  context::TargetSentence sentence;
  int target_class = 0;
  int predicted_class = 0;
  double confidence = 0.0;  // probability of the predicted class
  std::vector<TokenAttribution> per_token;
  double target_attribution = 0.0;  // the marked target token's share
  double total_attribution = 0.0;
  double convergence_delta = 0.0;
  double f_input = 0.0;
  double f_baseline = 0.0;
  int steps = 0;
  BaselineKind baseline = BaselineKind::kZero;
};

inline constexpr int kDefaultSteps = 50;

// Attributions of the class logit (the predicted class unless given) to each
// token's embedding. The model is only read.
AttributionMap Explain(const context::ContextModel& model,
                       const context::TargetSentence& sentence,
                       std::optional<int> target_class = std::nullopt,
                       int steps = kDefaultSteps,
                       BaselineKind baseline = BaselineKind::kZero);

nlohmann::json ToJson(const AttributionMap& map);

// Min-max normalized colour values in [0, 1]; constant rows map to 0.5.
std::vector<double> ColorScale(const std::vector<TokenAttribution>& per_token);
// Rows: token,attribution,color.
std::string HeatmapCsv(const AttributionMap& map);
// One cell per token, darker for larger attribution, with numeric labels.
std::string HeatmapSvg(const AttributionMap& map);

// "Positive (Confidence: 0.63)".
std::string PredictedLabel(const AttributionMap& map);
// Aligned table of sentence, predicted sentiment, target attribution, total
// attribution and convergence delta.
std::string SummaryTable(const std::vector<AttributionMap>& maps);

}  // namespace lexisent::xai

#endif  // LEXISENT_XAI_INTEGRATED_GRADIENTS_H_
