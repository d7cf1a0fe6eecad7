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

#ifndef LEXISENT_METRICS_METRICS_H_
#define LEXISENT_METRICS_METRICS_H_

#include <Eigen/Core>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

namespace lexisent::metrics {

using CountMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

// counts(i, j): instances of true class i predicted as class j.
struct ConfusionMatrix {
  std::vector<std::string> classes;
  CountMatrix counts;

  long long total() const { return counts.sum(); }
  int num_classes() const { return static_cast<int>(classes.size()); }
};

// Labels are indices into `classes`. Throws std::invalid_argument on a length
// mismatch or an out-of-range label.
ConfusionMatrix Confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::vector<std::string> classes);
// Same, with labels given by name.
ConfusionMatrix Confusion(std::span<const std::string> y_true,
                          std::span<const std::string> y_pred,
                          std::vector<std::string> classes);

struct ClassMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  long long support = 0;
};

struct Averages {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct MetricsReport {
  std::vector<std::string> classes;
  std::vector<ClassMetrics> per_class;
  double accuracy = 0.0;
  Averages macro;
  Averages weighted;
  long long total = 0;
};

// 2PR / (P + R), or 0 when P + R = 0.
double F1Score(double precision, double recall);

// Unweighted and support-weighted means of per-class values. The weighted
// mean is 0 when every support is 0.
Averages MacroAverage(std::span<const ClassMetrics> per_class);
Averages WeightedAverage(std::span<const ClassMetrics> per_class);

// Undefined ratios (empty row or column) are 0. Throws std::invalid_argument
// when the matrix is empty.
MetricsReport ComputeMetrics(const ConfusionMatrix& cm);

// Aligned table: class, Precision, Recall, F1-score, Support, followed by
// accuracy, macro avg and weighted avg rows; 2 decimals.
std::string FormatReport(const MetricsReport& report);
nlohmann::json ToJson(const MetricsReport& report);
nlohmann::json ToJson(const ConfusionMatrix& cm);

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;
  double threshold = 0.0;  // +inf for the (0, 0) origin
};

struct RocCurve {
  std::string positive_class;
  std::vector<RocPoint> points;
  double auc = 0.0;
};

// Sweeps thresholds over the distinct scores in descending order; tied
// scores move together. AUC by the trapezoid rule. Throws
// std::invalid_argument unless both classes are present.
RocCurve Roc(std::span<const bool> positive, std::span<const double> scores,
             std::string positive_class = "1");

struct OneVsRestRoc {
  std::vector<RocCurve> curves;
  std::vector<std::string> skipped;  // classes absent from (or filling) y_true
};
// One curve per class from column c of `proba` (rows = samples).
OneVsRestRoc RocOneVsRest(std::span<const int> y_true, const Eigen::MatrixXd& proba,
                          const std::vector<std::string>& classes);

// Rows: class,fpr,tpr,threshold.
std::string RocCsv(std::span<const RocCurve> curves);

}  // namespace lexisent::metrics

#endif  // LEXISENT_METRICS_METRICS_H_
