// Copyright 2026 The fieldmon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Renderer-agnostic chart descriptions built from indicator results.
//
// A ChartSpec carries the data (x labels plus one value list per series),
// a colour per label and, for the distribution kinds, precomputed geometry:
// pie/donut slices with angles proportional to counts, a slice-and-dice
// treemap with areas proportional to counts, grid-placed bubbles with areas
// proportional to counts, and tag-cloud font sizes scaled linearly between
// kMinFontSize and kMaxFontSize.

#ifndef FIELDMON_CHART_H_
#define FIELDMON_CHART_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fieldmon/indicators.h"
#include "json.hpp"

namespace fieldmon {

enum class ChartKind { kBar, kLineSeries, kPie, kDonut, kTreemap, kBubble, kTagcloud };

inline constexpr ChartKind kAllChartKinds[] = {ChartKind::kBar,     ChartKind::kLineSeries,
                                               ChartKind::kPie,     ChartKind::kDonut,
                                               ChartKind::kTreemap, ChartKind::kBubble,
                                               ChartKind::kTagcloud};

std::string_view ChartKindId(ChartKind kind);
std::optional<ChartKind> ParseChartKind(std::string_view id);
bool IsTimeseriesKind(ChartKind kind);

inline constexpr double kChartWidth = 800;
inline constexpr double kChartHeight = 480;
inline constexpr double kMinFontSize = 12;
inline constexpr double kMaxFontSize = 48;
inline constexpr double kDonutHoleRatio = 0.5;

// Fixed 12-colour palette, assigned in label order and wrapping around.
const std::array<std::string_view, 12> &Palette();

struct Series {
  std::string label;
  std::vector<int64_t> values;
};

// Angles in degrees, clockwise from 12 o'clock.
struct Slice {
  std::string label;
  int64_t value = 0;
  double start_angle = 0;
  double end_angle = 0;
};

struct Rect {
  std::string label;
  int64_t value = 0;
  double x = 0, y = 0, width = 0, height = 0;
};

struct Circle {
  std::string label;
  int64_t value = 0;
  double cx = 0, cy = 0, r = 0;
};

struct Word {
  std::string label;
  int64_t value = 0;
  double font_size = 0;
};

using Mark = std::variant<Slice, Rect, Circle, Word>;

struct ChartSpec {
  ChartKind kind = ChartKind::kBar;
  std::string title;
  bool year_axis = false;
  // Years (ascending) or categories (count descending, then label).
  std::vector<std::string> labels;
  std::vector<Series> series;
  std::vector<std::pair<std::string, std::string>> colors;
  std::vector<Mark> marks;
  double width = kChartWidth;
  double height = kChartHeight;
  // Set when there is nothing to draw; renderers show a placeholder.
  bool empty = false;
  // Free-form context, e.g. the resolved query.
  nlohmann::json meta = nlohmann::json::object();
};

// kind must be bar or line_series (std::invalid_argument otherwise). A
// multi-series bar chart is a grouped bar chart.
ChartSpec EmitTimeseries(const YearSeries &series, ChartKind kind, std::string title);
ChartSpec EmitTimeseries(const MultiSeries &series, ChartKind kind, std::string title);
// For an empty time axis.
ChartSpec EmitEmptyChart(ChartKind kind, std::string title);

// kind must be pie, donut, treemap or bubble. All-zero input yields an
// empty chart.
ChartSpec EmitDistribution(const DistributionResult &result, ChartKind kind, std::string title);

ChartSpec EmitTagcloud(const DistributionResult &result, std::string title);

nlohmann::json ChartToJson(const ChartSpec &spec);

// Sorted keys, no whitespace.
std::string CanonicalJson(const nlohmann::json &value);

std::string RenderSvg(const ChartSpec &spec);

}  // namespace fieldmon

#endif  // FIELDMON_CHART_H_
