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

#ifndef LEXISENT_IO_SVG_H_
#define LEXISENT_IO_SVG_H_

#include <Eigen/Core>
#include <string>
#include <utility>
#include <vector>

namespace lexisent::svg {

struct Series {
  std::string name;
  std::vector<std::pair<double, double>> points;
};

// Line plot of one or more series with axes and a legend. Axis ranges cover
// every point; pass `fixed_unit_range` to pin both axes to [0, 1].
std::string LinePlot(const std::vector<Series>& series, const std::string& title,
                     const std::string& x_label, const std::string& y_label,
                     bool fixed_unit_range = false);

// Vertical bars, one per label.
std::string BarChart(const std::vector<std::string>& labels,
                     const std::vector<double>& values, const std::string& title);

// Grid of cells shaded by value (blue negative, red positive, scaled by the
// largest magnitude) with the value printed in each cell.
std::string Heatmap(const Eigen::MatrixXd& values, const std::vector<std::string>& row_labels,
                    const std::vector<std::string>& col_labels, const std::string& title);

// XML escaping for text nodes and attributes.
std::string Escape(const std::string& text);

}  // namespace lexisent::svg

#endif  // LEXISENT_IO_SVG_H_
