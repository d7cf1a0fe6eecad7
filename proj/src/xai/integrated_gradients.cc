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

#include "lexisent/xai/integrated_gradients.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lexisent/core/csv.h"
#include "lexisent/core/math.h"
#include "lexisent/core/text.h"
#include "lexisent/io/svg.h"

namespace lexisent::xai {

std::string_view BaselineKindName(BaselineKind kind) {
  return kind == BaselineKind::kPad ? "pad" : "zero";
}

BaselineKind ParseBaselineKind(std::string_view name) {
  if (name == "zero") return BaselineKind::kZero;
  if (name == "pad") return BaselineKind::kPad;
  throw std::invalid_argument("unknown baseline: " + std::string(name));
}

AttributionMap Explain(const context::ContextModel& model,
                       const context::TargetSentence& sentence,
                       std::optional<int> target_class, int steps, BaselineKind baseline) {
  const Eigen::MatrixXd x = model.Embed(sentence);
  Eigen::MatrixXd base = Eigen::MatrixXd::Zero(x.rows(), x.cols());
  if (baseline == BaselineKind::kPad) {
    base.rowwise() = model.embeddings().row(context::Vocabulary::kPad);
  }
  const Eigen::VectorXd proba = Softmax(model.Logits(sentence));

  AttributionMap map;
  map.sentence = sentence;
  map.predicted_class = ArgmaxLowest(proba);
  map.confidence = proba(map.predicted_class);
  map.target_class = target_class.value_or(map.predicted_class);
  map.steps = steps;
  map.baseline = baseline;

  const auto ig = IntegratedGradients(
      [&](const Eigen::MatrixXd& point, Eigen::MatrixXd* gradient) {
        return model.LogitGradient(point, sentence.target_index, map.target_class, gradient);
      },
      x, base, steps);
  const Eigen::VectorXd per_token = ig.attributions.rowwise().sum();
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    map.per_token.push_back({sentence.tokens[i], per_token(static_cast<Eigen::Index>(i))});
  }
  map.target_attribution = per_token(static_cast<Eigen::Index>(sentence.target_index));
  map.total_attribution = ig.total;
  map.convergence_delta = ig.delta;
  map.f_input = ig.f_input;
  map.f_baseline = ig.f_baseline;
  return map;
}

nlohmann::json ToJson(const AttributionMap& map) {
  nlohmann::json tokens = nlohmann::json::array();
  for (const auto& t : map.per_token) {
    tokens.push_back({{"token", t.token}, {"attribution", t.attribution}});
  }
  const auto classes = context::PolarityClassNames();
  return {{"sentence", map.sentence.text},
          {"target", map.sentence.target},
          {"label", map.sentence.label ? nlohmann::json(PolarityName(*map.sentence.label))
                                       : nlohmann::json(nullptr)},
          {"target_class", classes[static_cast<std::size_t>(map.target_class)]},
          {"predicted_class", classes[static_cast<std::size_t>(map.predicted_class)]},
          {"confidence", map.confidence},
          {"per_token", tokens},
          {"target_attribution", map.target_attribution},
          {"total_attribution", map.total_attribution},
          {"convergence_delta", map.convergence_delta},
          {"f_input", map.f_input},
          {"f_baseline", map.f_baseline},
          {"steps", map.steps},
          {"riemann", "right"},
          {"baseline", BaselineKindName(map.baseline)}};
}

std::vector<double> ColorScale(const std::vector<TokenAttribution>& per_token) {
  if (per_token.empty()) return {};
  const auto [lo, hi] = std::minmax_element(
      per_token.begin(), per_token.end(),
      [](const auto& a, const auto& b) { return a.attribution < b.attribution; });
  const double span = hi->attribution - lo->attribution;
  std::vector<double> colors;
  for (const auto& t : per_token) {
    colors.push_back(span > 0.0 ? (t.attribution - lo->attribution) / span : 0.5);
  }
  return colors;
}

std::string HeatmapCsv(const AttributionMap& map) {
  const auto colors = ColorScale(map.per_token);
  std::string out = "token,attribution,color\n";
  for (std::size_t i = 0; i < map.per_token.size(); ++i) {
    out += csv::FormatRecord({map.per_token[i].token,
                              FormatShortest(map.per_token[i].attribution),
                              FormatShortest(colors[i])});
  }
  return out;
}

std::string HeatmapSvg(const AttributionMap& map) {
  const auto colors = ColorScale(map.per_token);
  constexpr double kCellH = 44, kTop = 50, kPad = 12;
  std::vector<double> widths;
  double total = kPad;
  for (const auto& t : map.per_token) {
    widths.push_back(std::max(56.0, 9.0 * static_cast<double>(CodepointCount(t.token)) + 16));
    total += widths.back() + 4;
  }
  const int width = static_cast<int>(std::max(total + kPad, 360.0));
  const int height = static_cast<int>(kTop + kCellH + 50);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
                    std::to_string(width) + "\" height=\"" + std::to_string(height) +
                    "\" font-family=\"sans-serif\" font-size=\"12\">\n"
                    "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  char buf[512];
  std::snprintf(buf, sizeof buf, "<text x=\"%d\" y=\"24\" font-size=\"14\">%s</text>\n",
                static_cast<int>(kPad), svg::Escape(PredictedLabel(map)).c_str());
  out += buf;
  double x = kPad;
  for (std::size_t i = 0; i < map.per_token.size(); ++i) {
    // White (0) to dark red (1).
    const double c = colors[i];
    const int r = static_cast<int>(std::lround(255 - 115 * c));
    const int gb = static_cast<int>(std::lround(255 * (1 - c)));
    const bool is_target = i == map.sentence.target_index;
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                  "fill=\"#%02x%02x%02x\" stroke=\"%s\" stroke-width=\"%d\"/>\n",
                  x, kTop, widths[i], kCellH, r, gb, gb, is_target ? "black" : "#999999",
                  is_target ? 2 : 1);
    out += buf;
    const char* ink = c > 0.6 ? "white" : "black";
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" fill=\"%s\">%s</text>\n",
                  x + widths[i] / 2, kTop + 18, ink, svg::Escape(map.per_token[i].token).c_str());
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%.1f\" y=\"%.1f\" text-anchor=\"middle\" fill=\"%s\" "
                  "font-size=\"10\">%.3f</text>\n",
                  x + widths[i] / 2, kTop + 34, ink, map.per_token[i].attribution);
    out += buf;
    x += widths[i] + 4;
  }
  std::snprintf(buf, sizeof buf,
                "<text x=\"%d\" y=\"%.1f\">total %.4f, delta %.4g, %d steps, %s baseline</text>\n",
                static_cast<int>(kPad), kTop + kCellH + 28, map.total_attribution,
                map.convergence_delta, map.steps,
                std::string(BaselineKindName(map.baseline)).c_str());
  out += buf;
  out += "</svg>\n";
  return out;
}

std::string PredictedLabel(const AttributionMap& map) {
  std::string name(PolarityName(kAllPolarities[static_cast<std::size_t>(map.predicted_class)]));
  name[0] = static_cast<char>(name[0] - 'a' + 'A');
  char buf[64];
  std::snprintf(buf, sizeof buf, " (Confidence: %.2f)", map.confidence);
  return name + buf;
}

std::string SummaryTable(const std::vector<AttributionMap>& maps) {
  std::size_t sentence_width = std::string_view("Sentence").size();
  for (const auto& m : maps) sentence_width = std::max(sentence_width, CodepointCount(m.sentence.text));
  auto pad = [](const std::string& s, std::size_t width) {
    const std::size_t n = CodepointCount(s);
    return s + std::string(width > n ? width - n : 0, ' ');
  };
  std::string out = pad("Sentence", sentence_width) + "  " + pad("Predicted Sentiment", 30) +
                    "  Target Attribution  Total Attribution  Convergence Delta\n";
  char buf[128];
  for (const auto& m : maps) {
    std::snprintf(buf, sizeof buf, "  %18.4f  %17.4f  %17.4f\n", m.target_attribution,
                  m.total_attribution, m.convergence_delta);
    out += pad(m.sentence.text, sentence_width) + "  " + pad(PredictedLabel(m), 30) + buf;
  }
  return out;
}

}  // namespace lexisent::xai
