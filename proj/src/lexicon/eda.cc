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

#include "lexisent/lexicon/eda.h"

#include <algorithm>
#include <vector>

namespace lexisent {
namespace {

nlohmann::json NullableNumber(double value) {
  return std::isnan(value) ? nlohmann::json(nullptr) : nlohmann::json(value);
}

}  // namespace

double Quantile(Eigen::VectorXd sorted, double p) {
  eigen_assert(sorted.size() > 0);
  const double position = p * static_cast<double>(sorted.size() - 1);
  const auto lower = static_cast<Eigen::Index>(std::floor(position));
  const auto upper = std::min<Eigen::Index>(lower + 1, sorted.size() - 1);
  const double fraction = position - static_cast<double>(lower);
  return sorted[lower] + fraction * (sorted[upper] - sorted[lower]);
}

int HistogramBin(double score) {
  const int bin = static_cast<int>(std::floor(score + 9.5));
  return std::clamp(bin, 0, kHistogramBins - 1);
}

std::optional<double> EdaReport::Correlation(Language a, Language b) const {
  const double r = correlation(Index(a), Index(b));
  if (std::isnan(r)) return std::nullopt;
  return r;
}

EdaReport ComputeEda(const Lexicon& lexicon) {
  if (lexicon.empty()) throw DataError("EDA needs a non-empty lexicon");
  EdaReport report;
  report.entry_count = lexicon.size();

  std::array<std::vector<double>, kNumPosTags> pos_scores;
  for (const LexiconEntry& e : lexicon.entries()) {
    const auto polarity = Index(PolarityOf(e.shared_score));
    ++report.polarity_counts(polarity);
    ++report.pos_by_polarity(Index(e.pos), polarity);
    pos_scores[Index(e.pos)].push_back(e.shared_score);
    for (Language l : kAllLanguages) {
      ++report.language_histograms(Index(l), HistogramBin(e.EffectiveScore(l)));
    }
  }

  for (std::size_t p = 0; p < kNumPosTags; ++p) {
    auto& scores = pos_scores[p];
    if (scores.empty()) continue;
    std::sort(scores.begin(), scores.end());
    const Eigen::VectorXd sorted =
        Eigen::Map<const Eigen::VectorXd>(scores.data(), scores.size());
    report.pos_five_number[p] =
        FiveNumberSummary{sorted[0], Quantile(sorted, 0.25), Quantile(sorted, 0.5),
                          Quantile(sorted, 0.75), sorted[sorted.size() - 1]};
  }

  auto paired = [&](auto first, auto second) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (const LexiconEntry& e : lexicon.entries()) {
      const auto x = first(e);
      const auto y = second(e);
      if (x && y) {
        xs.push_back(*x);
        ys.push_back(*y);
      }
    }
    const Eigen::Map<const Eigen::VectorXd> x(xs.data(), xs.size());
    const Eigen::Map<const Eigen::VectorXd> y(ys.data(), ys.size());
    return Pearson(x, y).value_or(NAN);
  };

  for (Language a : kAllLanguages) {
    auto own_a = [a](const LexiconEntry& e) { return e.language_scores[Index(a)]; };
    auto shared = [](const LexiconEntry& e) {
      return std::optional<double>(e.shared_score);
    };
    report.shared_correlation(Index(a)) = paired(shared, own_a);
    for (Language b : kAllLanguages) {
      if (Index(b) < Index(a)) continue;
      auto own_b = [b](const LexiconEntry& e) {
        return e.language_scores[Index(b)];
      };
      const double r = paired(own_a, own_b);
      report.correlation(Index(a), Index(b)) = r;
      report.correlation(Index(b), Index(a)) = r;
    }
  }
  return report;
}

nlohmann::json ToJson(const EdaReport& report) {
  nlohmann::json j;
  j["entry_count"] = report.entry_count;
  for (Polarity p : kAllPolarities) {
    j["polarity_counts"][PolarityName(p)] = report.polarity_counts(Index(p));
  }
  for (PosTag t : kAllPosTags) {
    for (Polarity p : kAllPolarities) {
      j["pos_by_polarity"][PosTagName(t)][PolarityName(p)] =
          report.pos_by_polarity(Index(t), Index(p));
    }
    if (const auto& f = report.pos_five_number[Index(t)]) {
      j["per_pos_five_number"][PosTagName(t)] = {{"min", f->min},
                                                 {"q1", f->q1},
                                                 {"median", f->median},
                                                 {"q3", f->q3},
                                                 {"max", f->max}};
    } else {
      j["per_pos_five_number"][PosTagName(t)] = nullptr;
    }
  }
  nlohmann::json bin_centres = nlohmann::json::array();
  for (int b = 0; b < kHistogramBins; ++b) bin_centres.push_back(b - 9);
  j["histogram_bin_centres"] = std::move(bin_centres);
  for (Language a : kAllLanguages) {
    auto& hist = j["per_language_histograms"][LanguageName(a)];
    hist = nlohmann::json::array();
    for (int b = 0; b < kHistogramBins; ++b) {
      hist.push_back(report.language_histograms(Index(a), b));
    }
    j["shared_score_correlation"][LanguageName(a)] =
        NullableNumber(report.shared_correlation(Index(a)));
    for (Language b : kAllLanguages) {
      j["cross_language_correlation"][LanguageName(a)][LanguageName(b)] =
          NullableNumber(report.correlation(Index(a), Index(b)));
    }
  }
  return j;
}

}  // namespace lexisent
