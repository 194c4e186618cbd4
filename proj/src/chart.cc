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

#include "fieldmon/chart.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fieldmon {

using nlohmann::json;

namespace {

// ColorBrewer "Paired".
constexpr std::array<std::string_view, 12> kPalette = {
    "#a6cee3", "#1f78b4", "#b2df8a", "#33a02c", "#fb9a99", "#e31a1c",
    "#fdbf6f", "#ff7f00", "#cab2d6", "#6a3d9a", "#ffff99", "#b15928",
};

struct Category {
  std::string label;
  int64_t count;
};

// Count descending, ties by label ascending.
std::vector<Category> OrderedCategories(const DistributionResult &result) {
  std::vector<Category> out;
  for (const auto &[label, count] : result.counts) out.push_back({label, count});
  std::stable_sort(out.begin(), out.end(), [](const Category &a, const Category &b) {
    if (a.count != b.count) return a.count > b.count;
    return a.label < b.label;
  });
  return out;
}

void AssignColors(ChartSpec &spec, const std::vector<std::string> &labels) {
  for (size_t i = 0; i < labels.size(); ++i) {
    spec.colors.emplace_back(labels[i], std::string(kPalette[i % kPalette.size()]));
  }
}

void CheckTimeseriesKind(ChartKind kind) {
  if (!IsTimeseriesKind(kind)) {
    throw std::invalid_argument("chart kind " + std::string(ChartKindId(kind)) +
                                " cannot show a time series");
  }
}

std::vector<std::string> YearLabels(const YearRange &range) {
  std::vector<std::string> labels;
  for (int year = range.from; year <= range.to; ++year) labels.push_back(std::to_string(year));
  return labels;
}

void LayoutPie(ChartSpec &spec, const std::vector<Category> &categories, int64_t sum) {
  double start = 0;
  for (const Category &c : categories) {
    if (c.count == 0) continue;
    double sweep = 360.0 * static_cast<double>(c.count) / static_cast<double>(sum);
    spec.marks.push_back(Slice{c.label, c.count, start, start + sweep});
    start += sweep;
  }
}

// Slice-and-dice: each category takes its share of the remaining rectangle,
// cutting vertically and horizontally in turn.
void LayoutTreemap(ChartSpec &spec, const std::vector<Category> &categories, int64_t sum) {
  double x = 0, y = 0, w = spec.width, h = spec.height;
  int64_t remaining = sum;
  bool vertical = true;
  std::vector<const Category *> nonzero;
  for (const Category &c : categories) {
    if (c.count > 0) nonzero.push_back(&c);
  }
  for (size_t i = 0; i < nonzero.size(); ++i) {
    const Category &c = *nonzero[i];
    if (i + 1 == nonzero.size()) {
      spec.marks.push_back(Rect{c.label, c.count, x, y, w, h});
      break;
    }
    double share = static_cast<double>(c.count) / static_cast<double>(remaining);
    double rest = static_cast<double>(remaining - c.count) / static_cast<double>(remaining);
    if (vertical) {
      spec.marks.push_back(Rect{c.label, c.count, x, y, w * share, h});
      x += w * share;
      w *= rest;
    } else {
      spec.marks.push_back(Rect{c.label, c.count, x, y, w, h * share});
      y += h * share;
      h *= rest;
    }
    remaining -= c.count;
    vertical = !vertical;
  }
}

// Row-major grid; the largest bubble fills 90% of its cell.
void LayoutBubbles(ChartSpec &spec, const std::vector<Category> &categories) {
  std::vector<const Category *> nonzero;
  int64_t max_count = 0;
  for (const Category &c : categories) {
    if (c.count == 0) continue;
    nonzero.push_back(&c);
    max_count = std::max(max_count, c.count);
  }
  size_t n = nonzero.size();
  size_t columns = static_cast<size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  size_t rows = (n + columns - 1) / columns;
  double cell_w = spec.width / static_cast<double>(columns);
  double cell_h = spec.height / static_cast<double>(rows);
  double max_radius = 0.45 * std::min(cell_w, cell_h);
  for (size_t i = 0; i < n; ++i) {
    const Category &c = *nonzero[i];
    double r = max_radius * std::sqrt(static_cast<double>(c.count) / static_cast<double>(max_count));
    double cx = (static_cast<double>(i % columns) + 0.5) * cell_w;
    double cy = (static_cast<double>(i / columns) + 0.5) * cell_h;
    spec.marks.push_back(Circle{c.label, c.count, cx, cy, r});
  }
}

json MarkToJson(const Mark &mark) {
  json j;
  if (const Slice *s = std::get_if<Slice>(&mark)) {
    j = {{"type", "slice"}, {"label", s->label}, {"value", s->value},
         {"start_angle", s->start_angle}, {"end_angle", s->end_angle}};
  } else if (const Rect *r = std::get_if<Rect>(&mark)) {
    j = {{"type", "rect"}, {"label", r->label}, {"value", r->value}, {"x", r->x},
         {"y", r->y}, {"width", r->width}, {"height", r->height}};
  } else if (const Circle *c = std::get_if<Circle>(&mark)) {
    j = {{"type", "circle"}, {"label", c->label}, {"value", c->value},
         {"cx", c->cx}, {"cy", c->cy}, {"r", c->r}};
  } else {
    const Word &w = std::get<Word>(mark);
    j = {{"type", "word"}, {"label", w.label}, {"value", w.value}, {"font_size", w.font_size}};
  }
  return j;
}

}  // namespace

std::string_view ChartKindId(ChartKind kind) {
  switch (kind) {
    case ChartKind::kBar: return "bar";
    case ChartKind::kLineSeries: return "line_series";
    case ChartKind::kPie: return "pie";
    case ChartKind::kDonut: return "donut";
    case ChartKind::kTreemap: return "treemap";
    case ChartKind::kBubble: return "bubble";
    case ChartKind::kTagcloud: return "tagcloud";
  }
  return "";
}

std::optional<ChartKind> ParseChartKind(std::string_view id) {
  for (ChartKind kind : kAllChartKinds) {
    if (ChartKindId(kind) == id) return kind;
  }
  return std::nullopt;
}

bool IsTimeseriesKind(ChartKind kind) {
  return kind == ChartKind::kBar || kind == ChartKind::kLineSeries;
}

const std::array<std::string_view, 12> &Palette() { return kPalette; }

ChartSpec EmitTimeseries(const YearSeries &series, ChartKind kind, std::string title) {
  CheckTimeseriesKind(kind);
  ChartSpec spec;
  spec.kind = kind;
  spec.title = std::move(title);
  spec.year_axis = true;
  spec.labels = YearLabels(series.range());
  spec.series.push_back(Series{"count", series.counts()});
  AssignColors(spec, {"count"});
  return spec;
}

ChartSpec EmitTimeseries(const MultiSeries &series, ChartKind kind, std::string title) {
  CheckTimeseriesKind(kind);
  ChartSpec spec;
  spec.kind = kind;
  spec.title = std::move(title);
  spec.year_axis = true;
  spec.labels = YearLabels(series.range);
  std::vector<std::string> names;
  for (const auto &[label, s] : series.series) {
    if (!(s.range() == series.range)) {
      throw std::invalid_argument("series '" + label + "' has a different year range");
    }
    spec.series.push_back(Series{label, s.counts()});
    names.push_back(label);
  }
  AssignColors(spec, names);
  return spec;
}

ChartSpec EmitEmptyChart(ChartKind kind, std::string title) {
  ChartSpec spec;
  spec.kind = kind;
  spec.title = std::move(title);
  spec.year_axis = IsTimeseriesKind(kind);
  spec.empty = true;
  return spec;
}

ChartSpec EmitDistribution(const DistributionResult &result, ChartKind kind, std::string title) {
  if (kind != ChartKind::kPie && kind != ChartKind::kDonut && kind != ChartKind::kTreemap &&
      kind != ChartKind::kBubble) {
    throw std::invalid_argument("chart kind " + std::string(ChartKindId(kind)) +
                                " cannot show a distribution");
  }
  ChartSpec spec;
  spec.kind = kind;
  spec.title = std::move(title);
  std::vector<Category> categories = OrderedCategories(result);
  int64_t sum = 0;
  Series values{"count", {}};
  for (const Category &c : categories) {
    if (c.count < 0) throw std::invalid_argument("negative count for " + c.label);
    spec.labels.push_back(c.label);
    values.values.push_back(c.count);
    sum += c.count;
  }
  spec.series.push_back(std::move(values));
  AssignColors(spec, spec.labels);
  if (sum == 0) {
    spec.empty = true;
    return spec;
  }
  switch (kind) {
    case ChartKind::kPie:
    case ChartKind::kDonut:
      LayoutPie(spec, categories, sum);
      break;
    case ChartKind::kTreemap:
      LayoutTreemap(spec, categories, sum);
      break;
    default:
      LayoutBubbles(spec, categories);
      break;
  }
  return spec;
}

ChartSpec EmitTagcloud(const DistributionResult &result, std::string title) {
  ChartSpec spec;
  spec.kind = ChartKind::kTagcloud;
  spec.title = std::move(title);
  std::vector<Category> categories;
  for (Category &c : OrderedCategories(result)) {
    if (c.count > 0) categories.push_back(std::move(c));
  }
  Series values{"count", {}};
  for (const Category &c : categories) {
    spec.labels.push_back(c.label);
    values.values.push_back(c.count);
  }
  spec.series.push_back(std::move(values));
  AssignColors(spec, spec.labels);
  if (categories.empty()) {
    spec.empty = true;
    return spec;
  }
  int64_t lo = categories.back().count;
  int64_t hi = categories.front().count;
  for (const Category &c : categories) {
    double size = (kMinFontSize + kMaxFontSize) / 2;
    if (hi > lo) {
      size = kMinFontSize + (kMaxFontSize - kMinFontSize) * static_cast<double>(c.count - lo) /
                                static_cast<double>(hi - lo);
    }
    spec.marks.push_back(Word{c.label, c.count, size});
  }
  return spec;
}

json ChartToJson(const ChartSpec &spec) {
  json j;
  j["kind"] = ChartKindId(spec.kind);
  j["title"] = spec.title;
  j["axis"] = spec.year_axis ? "year" : "category";
  json x = json::array();
  for (const std::string &label : spec.labels) {
    if (spec.year_axis) {
      x.push_back(std::stoi(label));
    } else {
      x.push_back(label);
    }
  }
  j["x"] = x;
  json series = json::array();
  for (const Series &s : spec.series) series.push_back({{"label", s.label}, {"values", s.values}});
  j["series"] = series;
  json colors = json::object();
  for (const auto &[label, color] : spec.colors) colors[label] = color;
  j["colors"] = colors;
  json marks = json::array();
  for (const Mark &mark : spec.marks) marks.push_back(MarkToJson(mark));
  j["marks"] = marks;
  j["width"] = spec.width;
  j["height"] = spec.height;
  if (spec.kind == ChartKind::kDonut) j["donut_hole"] = kDonutHoleRatio;
  j["empty"] = spec.empty;
  j["meta"] = spec.meta;
  return j;
}

std::string CanonicalJson(const json &value) {
  return value.dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace fieldmon
