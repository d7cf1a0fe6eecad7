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

#ifndef LEXISENT_LEXICON_EDA_H_
#define LEXISENT_LEXICON_EDA_H_

#include <Eigen/Core>
#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "json.hpp"
#include "lexisent/core/types.h"
#include "lexisent/lexicon/lexicon.h"

namespace lexisent {

// Pearson correlation of two equally sized vectors. Undefined (nullopt) with
// fewer than two points or when either vector is constant.
template <typename DerivedX, typename DerivedY>
std::optional<typename DerivedX::Scalar> Pearson(
    const Eigen::MatrixBase<DerivedX>& x, const Eigen::MatrixBase<DerivedY>& y) {
  using Scalar = typename DerivedX::Scalar;
  eigen_assert(x.size() == y.size());
  if (x.size() < 2) return std::nullopt;
  const auto xc = (x.array() - x.mean()).matrix().eval();
  const auto yc = (y.array() - y.mean()).matrix().eval();
  const Scalar sxx = xc.squaredNorm();
  const Scalar syy = yc.squaredNorm();
  if (!(sxx > Scalar(0)) || !(syy > Scalar(0))) return std::nullopt;
  const Scalar r = xc.dot(yc) / std::sqrt(sxx * syy);
  return std::clamp(r, Scalar(-1), Scalar(1));
}

// Linear interpolation between order statistics at (n - 1) * p.
double Quantile(Eigen::VectorXd sorted, double p);

struct FiveNumberSummary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
};

// 19 unit-wide bins centred on the integers -9..9.
inline constexpr int kHistogramBins = 19;
int HistogramBin(double score);

struct EdaReport {
  using LanguageMatrix =
      Eigen::Matrix<double, kNumLanguages, kNumLanguages>;

  std::size_t entry_count = 0;
  // Shared-score polarity.
  Eigen::Matrix<Eigen::Index, 1, kNumPolarities> polarity_counts =
      decltype(polarity_counts)::Zero();
  Eigen::Matrix<Eigen::Index, kNumPosTags, kNumPolarities> pos_by_polarity =
      decltype(pos_by_polarity)::Zero();
  // Row per language, of effective (fallback-filled) scores.
  Eigen::Matrix<Eigen::Index, kNumLanguages, kHistogramBins> language_histograms =
      decltype(language_histograms)::Zero();
  // Over entries where both languages carry their own score; NaN = undefined.
  LanguageMatrix correlation = LanguageMatrix::Constant(NAN);
  // Shared score against each language's own scores; NaN = undefined.
  Eigen::Matrix<double, 1, kNumLanguages> shared_correlation =
      decltype(shared_correlation)::Constant(NAN);
  std::array<std::optional<FiveNumberSummary>, kNumPosTags> pos_five_number;

  std::optional<double> Correlation(Language a, Language b) const;
};

// Throws DataError on an empty lexicon.
EdaReport ComputeEda(const Lexicon& lexicon);

nlohmann::json ToJson(const EdaReport& report);

}  // namespace lexisent

#endif  // LEXISENT_LEXICON_EDA_H_
