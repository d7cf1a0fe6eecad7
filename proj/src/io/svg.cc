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

#include "lexisent/io/svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace lexisent::svg {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                    "#bcbd22", "#17becf"};

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string Header(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n"
         "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

std::string Text(double x, double y, const std::string& s, const char* anchor = "middle",
                 const std::string& extra = "") {
  return "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" text-anchor=\"" + anchor + "\"" +
         extra + ">" + Escape(s) + "</text>\n";
}

}  // namespace

std::string Escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string LinePlot(const std::vector<Series>& series, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     bool fixed_unit_range) {
  constexpr int kWidth = 640, kHeight = 480;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (!fixed_unit_range) {
    bool first = true;
    for (const auto& s : series) {
      for (const auto& [x, y] : s.points) {
        if (!std::isfinite(x) || !std::isfinite(y)) continue;
        if (first) {
          x0 = x1 = x;
          y0 = y1 = y;
          first = false;
        }
        x0 = std::min(x0, x), x1 = std::max(x1, x);
        y0 = std::min(y0, y), y1 = std::max(y1, y);
      }
    }
    if (x1 == x0) x0 -= 0.5, x1 += 0.5;
    if (y1 == y0) y0 -= 0.5, y1 += 0.5;
  }
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * plot_w; };
  auto py = [&](double y) { return kTop + plot_h - (y - y0) / (y1 - y0) * plot_h; };

  std::string out = Header(kWidth, kHeight);
  out += Text(kWidth / 2.0, 24, title, "middle", " font-size=\"15\"");
  out += "<rect x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop) + "\" width=\"" + Num(plot_w) +
         "\" height=\"" + Num(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = x0 + (x1 - x0) * i / 4.0;
    const double fy = y0 + (y1 - y0) * i / 4.0;
    out += Text(px(fx), kTop + plot_h + 16, Num(fx));
    out += Text(kLeft - 6, py(fy) + 4, Num(fy), "end");
  }
  out += Text(kLeft + plot_w / 2, kHeight - 16, x_label);
  out += Text(18, kTop + plot_h / 2, y_label, "middle",
              " transform=\"rotate(-90 18 " + Num(kTop + plot_h / 2) + ")\"");
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    std::string pts;
    for (const auto& [x, y] : series[i].points) {
      if (!std::isfinite(x) || !std::isfinite(y)) continue;
      pts += Num(px(x)) + "," + Num(py(y)) + " ";
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
    const double ly = kTop + 10 + 18.0 * static_cast<double>(i);
    out += "<rect x=\"" + Num(kLeft + plot_w + 12) + "\" y=\"" + Num(ly - 8) +
           "\" width=\"12\" height=\"4\" fill=\"" + color + "\"/>\n";
    out += Text(kLeft + plot_w + 30, ly - 2, series[i].name, "start");
  }
  out += "</svg>\n";
  return out;
}

std::string BarChart(const std::vector<std::string>& labels,
                     const std::vector<double>& values, const std::string& title) {
  if (labels.size() != values.size()) throw std::invalid_argument("labels/values mismatch");
  const int n = static_cast<int>(values.size());
  const int width = std::max(320, 80 + 48 * n);
  constexpr int kHeight = 360;
  constexpr double kLeft = 60, kTop = 40, kBottom = 80;
  const double plot_h = kHeight - kTop - kBottom;
  const double plot_w = width - kLeft - 20;
  double lo = 0, hi = 0;
  for (double v : values) lo = std::min(lo, v), hi = std::max(hi, v);
  if (hi == lo) hi = lo + 1;
  auto py = [&](double y) { return kTop + plot_h - (y - lo) / (hi - lo) * plot_h; };

  std::string out = Header(width, kHeight);
  out += Text(width / 2.0, 24, title, "middle", " font-size=\"15\"");
  out += "<line x1=\"" + Num(kLeft) + "\" x2=\"" + Num(kLeft + plot_w) + "\" y1=\"" +
         Num(py(0)) + "\" y2=\"" + Num(py(0)) + "\" stroke=\"black\"/>\n";
  const double slot = plot_w / std::max(n, 1);
  for (int i = 0; i < n; ++i) {
    const double v = values[static_cast<std::size_t>(i)];
    const double top = std::min(py(v), py(0));
    const double x = kLeft + slot * i + slot * 0.15;
    out += "<rect x=\"" + Num(x) + "\" y=\"" + Num(top) + "\" width=\"" + Num(slot * 0.7) +
           "\" height=\"" + Num(std::abs(py(v) - py(0))) + "\" fill=\"" + kPalette[0] +
           "\"/>\n";
    out += Text(x + slot * 0.35, top - 4, Num(v));
    const double lx = x + slot * 0.35, ly = kTop + plot_h + 14;
    out += Text(lx, ly, labels[static_cast<std::size_t>(i)], "end",
                " transform=\"rotate(-40 " + Num(lx) + " " + Num(ly) + ")\"");
  }
  out += "</svg>\n";
  return out;
}

std::string Heatmap(const Eigen::MatrixXd& values, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels, const std::string& title) {
  if (static_cast<Eigen::Index>(row_labels.size()) != values.rows() ||
      static_cast<Eigen::Index>(col_labels.size()) != values.cols()) {
    throw std::invalid_argument("heatmap labels do not match the matrix shape");
  }
  constexpr double kCell = 56, kLeft = 130, kTop = 110;
  const int width = static_cast<int>(kLeft + kCell * static_cast<double>(values.cols()) + 20);
  const int height = static_cast<int>(kTop + kCell * static_cast<double>(values.rows()) + 20);
  double scale = 0;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (std::isfinite(values.data()[i])) scale = std::max(scale, std::abs(values.data()[i]));
  }
  if (scale == 0) scale = 1;

  std::string out = Header(width, height);
  out += Text(width / 2.0, 24, title, "middle", " font-size=\"15\"");
  for (Eigen::Index c = 0; c < values.cols(); ++c) {
    const double x = kLeft + kCell * (static_cast<double>(c) + 0.5);
    out += Text(x, kTop - 8, col_labels[static_cast<std::size_t>(c)], "start",
                " transform=\"rotate(-45 " + Num(x) + " " + Num(kTop - 8) + ")\"");
  }
  for (Eigen::Index r = 0; r < values.rows(); ++r) {
    const double y = kTop + kCell * static_cast<double>(r);
    out += Text(kLeft - 6, y + kCell / 2 + 4, row_labels[static_cast<std::size_t>(r)], "end");
    for (Eigen::Index c = 0; c < values.cols(); ++c) {
      const double v = values(r, c);
      const double x = kLeft + kCell * static_cast<double>(c);
      std::string fill = "#dddddd";
      if (std::isfinite(v)) {
        const int fade = static_cast<int>(std::lround(255 * (1 - std::abs(v) / scale)));
        char buf[16];
        if (v >= 0) {
          std::snprintf(buf, sizeof buf, "#ff%02x%02x", fade, fade);
        } else {
          std::snprintf(buf, sizeof buf, "#%02x%02xff", fade, fade);
        }
        fill = buf;
      }
      out += "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" + Num(kCell) +
             "\" height=\"" + Num(kCell) + "\" fill=\"" + fill + "\" stroke=\"white\"/>\n";
      out += Text(x + kCell / 2, y + kCell / 2 + 4, std::isfinite(v) ? Num(v) : "n/a");
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace lexisent::svg
