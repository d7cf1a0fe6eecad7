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

#include "lexisent/metrics/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "lexisent/core/csv.h"
#include "lexisent/core/math.h"
#include "lexisent/core/text.h"

namespace lexisent::metrics {

ConfusionMatrix Confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::vector<std::string> classes) {
  if (y_true.size() != y_pred.size()) {
    throw std::invalid_argument("y_true has " + std::to_string(y_true.size()) +
                                " labels but y_pred has " +
                                std::to_string(y_pred.size()));
  }
  const int k = static_cast<int>(classes.size());
  ConfusionMatrix cm{std::move(classes), CountMatrix::Zero(k, k)};
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const int t = y_true[i];
    const int p = y_pred[i];
    if (t < 0 || t >= k || p < 0 || p >= k) {
      throw std::invalid_argument("label out of range at position " + std::to_string(i));
    }
    ++cm.counts(t, p);
  }
  return cm;
}

ConfusionMatrix Confusion(std::span<const std::string> y_true,
                          std::span<const std::string> y_pred,
                          std::vector<std::string> classes) {
  auto index = [&](const std::string& label) {
    const auto it = std::find(classes.begin(), classes.end(), label);
    if (it == classes.end()) throw std::invalid_argument("unknown label: " + label);
    return static_cast<int>(it - classes.begin());
  };
  std::vector<int> t, p;
  for (const auto& s : y_true) t.push_back(index(s));
  for (const auto& s : y_pred) p.push_back(index(s));
  return Confusion(t, p, std::move(classes));
}

double F1Score(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

Averages MacroAverage(std::span<const ClassMetrics> per_class) {
  Averages avg;
  if (per_class.empty()) return avg;
  for (const auto& m : per_class) {
    avg.precision += m.precision;
    avg.recall += m.recall;
    avg.f1 += m.f1;
  }
  const double n = static_cast<double>(per_class.size());
  return {avg.precision / n, avg.recall / n, avg.f1 / n};
}

Averages WeightedAverage(std::span<const ClassMetrics> per_class) {
  Averages avg;
  double total = 0.0;
  for (const auto& m : per_class) {
    const double w = static_cast<double>(m.support);
    avg.precision += w * m.precision;
    avg.recall += w * m.recall;
    avg.f1 += w * m.f1;
    total += w;
  }
  if (total == 0.0) return {};
  return {avg.precision / total, avg.recall / total, avg.f1 / total};
}

MetricsReport ComputeMetrics(const ConfusionMatrix& cm) {
  const long long total = cm.total();
  if (total <= 0) throw std::invalid_argument("confusion matrix is empty");
  MetricsReport report;
  report.classes = cm.classes;
  report.total = total;
  const auto row_sums = cm.counts.rowwise().sum();
  const auto col_sums = cm.counts.colwise().sum();
  for (Eigen::Index i = 0; i < cm.counts.rows(); ++i) {
    const double hit = static_cast<double>(cm.counts(i, i));
    ClassMetrics m;
    m.support = row_sums(i);
    m.precision = col_sums(i) > 0 ? hit / static_cast<double>(col_sums(i)) : 0.0;
    m.recall = row_sums(i) > 0 ? hit / static_cast<double>(row_sums(i)) : 0.0;
    m.f1 = F1Score(m.precision, m.recall);
    report.per_class.push_back(m);
  }
  report.accuracy = static_cast<double>(cm.counts.trace()) / static_cast<double>(total);
  report.macro = MacroAverage(report.per_class);
  report.weighted = WeightedAverage(report.per_class);
  return report;
}

std::string FormatReport(const MetricsReport& report) {
  std::size_t width = std::string_view("weighted avg").size();
  for (const auto& c : report.classes) width = std::max(width, c.size());
  const int w = static_cast<int>(width);
  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%*s %10s %10s %10s %10s\n", w, "", "Precision",
                "Recall", "F1-score", "Support");
  out += buf;
  auto row = [&](const std::string& name, const Averages& a, long long support) {
    std::snprintf(buf, sizeof buf, "%*s %10.2f %10.2f %10.2f %10lld\n", w, name.c_str(),
                  a.precision, a.recall, a.f1, support);
    out += buf;
  };
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& m = report.per_class[i];
    row(report.classes[i], {m.precision, m.recall, m.f1}, m.support);
  }
  out += "\n";
  std::snprintf(buf, sizeof buf, "%*s %10s %10s %10.2f %10lld\n", w, "accuracy", "", "",
                report.accuracy, report.total);
  out += buf;
  row("macro avg", report.macro, report.total);
  row("weighted avg", report.weighted, report.total);
  return out;
}

namespace {

nlohmann::json AveragesJson(const Averages& a) {
  return {{"precision", a.precision}, {"recall", a.recall}, {"f1", a.f1}};
}

}  // namespace

nlohmann::json ToJson(const MetricsReport& report) {
  nlohmann::json per_class = nlohmann::json::object();
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const auto& m = report.per_class[i];
    per_class[report.classes[i]] = {{"precision", m.precision},
                                    {"recall", m.recall},
                                    {"f1", m.f1},
                                    {"support", m.support}};
  }
  return {{"classes", report.classes},
          {"per_class", per_class},
          {"accuracy", report.accuracy},
          {"macro_avg", AveragesJson(report.macro)},
          {"weighted_avg", AveragesJson(report.weighted)},
          {"total", report.total}};
}

nlohmann::json ToJson(const ConfusionMatrix& cm) {
  return {{"classes", cm.classes}, {"counts", MatrixToJson(cm.counts)}};
}

RocCurve Roc(std::span<const bool> positive, std::span<const double> scores,
             std::string positive_class) {
  if (positive.size() != scores.size()) {
    throw std::invalid_argument("labels and scores differ in length");
  }
  const auto n = static_cast<long long>(positive.size());
  const long long pos = std::count(positive.begin(), positive.end(), true);
  const long long neg = n - pos;
  if (pos == 0 || neg == 0) {
    throw std::invalid_argument("ROC needs both positive and negative instances");
  }
  std::vector<std::size_t> order(positive.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve curve;
  curve.positive_class = std::move(positive_class);
  curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  long long tp = 0, fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    const double threshold = scores[order[i]];
    for (; i < order.size() && scores[order[i]] == threshold; ++i) {
      if (positive[order[i]]) {
        ++tp;
      } else {
        ++fp;
      }
    }
    const RocPoint point{static_cast<double>(fp) / static_cast<double>(neg),
                         static_cast<double>(tp) / static_cast<double>(pos), threshold};
    const RocPoint& prev = curve.points.back();
    curve.auc += (point.fpr - prev.fpr) * (point.tpr + prev.tpr) / 2.0;
    curve.points.push_back(point);
  }
  return curve;
}

OneVsRestRoc RocOneVsRest(std::span<const int> y_true, const Eigen::MatrixXd& proba,
                          const std::vector<std::string>& classes) {
  if (static_cast<Eigen::Index>(y_true.size()) != proba.rows() ||
      proba.cols() != static_cast<Eigen::Index>(classes.size())) {
    throw std::invalid_argument("probability matrix shape does not match labels");
  }
  OneVsRestRoc result;
  std::vector<double> scores(y_true.size());
  // std::vector<bool> has no contiguous storage, so keep flags in a plain array.
  std::unique_ptr<bool[]> flags(new bool[y_true.size()]);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
      flags[i] = y_true[i] == static_cast<int>(c);
      hits += flags[i];
      scores[i] = proba(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
    }
    if (hits == 0 || hits == y_true.size()) {
      result.skipped.push_back(classes[c]);
      continue;
    }
    result.curves.push_back(
        Roc(std::span<const bool>(flags.get(), y_true.size()), scores, classes[c]));
  }
  return result;
}

std::string RocCsv(std::span<const RocCurve> curves) {
  std::string out = "class,fpr,tpr,threshold\n";
  for (const auto& curve : curves) {
    for (const auto& p : curve.points) {
      out += csv::FormatRecord({curve.positive_class, FormatShortest(p.fpr),
                                FormatShortest(p.tpr),
                                std::isinf(p.threshold) ? "inf" : FormatShortest(p.threshold)});
    }
  }
  return out;
}

}  // namespace lexisent::metrics
