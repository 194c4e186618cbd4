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

// Static SVG 1.1 export of a ChartSpec. Output depends only on the spec, and
// all coordinates are printed with two fixed decimals.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fieldmon/chart.h"
#include "fieldmon/text.h"

namespace fieldmon {

namespace {

constexpr double kTitleHeight = 32;
constexpr double kMargin = 48;

std::string Num(double v) { return FormatFixed(v, 2); }

std::string Escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

class SvgWriter {
 public:
  SvgWriter(double width, double height) {
    out_ += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + Num(width) +
            "\" height=\"" + Num(height) + "\" viewBox=\"0 0 " + Num(width) + " " +
            Num(height) + "\" font-family=\"sans-serif\">\n";
  }

  void Text(double x, double y, std::string_view text, double size,
            std::string_view anchor = "middle", std::string_view fill = "#333333") {
    out_ += "<text x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" font-size=\"" + Num(size) +
            "\" text-anchor=\"" + std::string(anchor) + "\" fill=\"" + std::string(fill) +
            "\">" + Escape(text) + "</text>\n";
  }

  void Rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view title) {
    out_ += "<rect x=\"" + Num(x) + "\" y=\"" + Num(y) + "\" width=\"" + Num(w) +
            "\" height=\"" + Num(h) + "\" fill=\"" + std::string(fill) +
            "\" stroke=\"#ffffff\"><title>" + Escape(title) + "</title></rect>\n";
  }

  void Circle(double cx, double cy, double r, std::string_view fill, std::string_view title) {
    out_ += "<circle cx=\"" + Num(cx) + "\" cy=\"" + Num(cy) + "\" r=\"" + Num(r) +
            "\" fill=\"" + std::string(fill) + "\"><title>" + Escape(title) +
            "</title></circle>\n";
  }

  void Line(double x1, double y1, double x2, double y2) {
    out_ += "<line x1=\"" + Num(x1) + "\" y1=\"" + Num(y1) + "\" x2=\"" + Num(x2) +
            "\" y2=\"" + Num(y2) + "\" stroke=\"#333333\"/>\n";
  }

  void Polyline(const std::vector<std::pair<double, double>> &points, std::string_view stroke,
                std::string_view title) {
    out_ += "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" + std::string(stroke) +
            "\" points=\"";
    for (size_t i = 0; i < points.size(); ++i) {
      if (i > 0) out_ += ' ';
      out_ += Num(points[i].first) + "," + Num(points[i].second);
    }
    out_ += "\"><title>" + Escape(title) + "</title></polyline>\n";
  }

  void Path(const std::string &d, std::string_view fill, std::string_view title) {
    out_ += "<path d=\"" + d + "\" fill=\"" + std::string(fill) +
            "\" stroke=\"#ffffff\"><title>" + Escape(title) + "</title></path>\n";
  }

  std::string Finish() {
    out_ += "</svg>\n";
    return std::move(out_);
  }

 private:
  std::string out_;
};

std::string_view ColorFor(const ChartSpec &spec, std::string_view label) {
  for (const auto &[name, color] : spec.colors) {
    if (name == label) return color;
  }
  return Palette()[0];
}

std::string Tooltip(std::string_view label, int64_t value) {
  return std::string(label) + ": " + std::to_string(value);
}

// Legend as coloured dots so that rect counts reflect data only.
void Legend(SvgWriter &svg, const ChartSpec &spec, double x, double y) {
  for (const auto &[label, color] : spec.colors) {
    svg.Circle(x, y - 4, 5, color, label);
    svg.Text(x + 10, y, label, 11, "start");
    y += 16;
  }
}

void RenderTimeseries(SvgWriter &svg, const ChartSpec &spec) {
  bool legend = spec.series.size() > 1;
  double left = kMargin;
  double right = spec.width - (legend ? 150 : kMargin / 2);
  double top = kTitleHeight + 8;
  double bottom = spec.height - kMargin;
  double plot_w = right - left;
  double plot_h = bottom - top;

  int64_t max_value = 0;
  for (const Series &s : spec.series) {
    for (int64_t v : s.values) max_value = std::max(max_value, v);
  }
  double scale = max_value > 0 ? plot_h / static_cast<double>(max_value) : 0;

  svg.Line(left, bottom, right, bottom);
  svg.Line(left, top, left, bottom);
  svg.Text(left - 6, top + 4, std::to_string(max_value), 10, "end");
  svg.Text(left - 6, bottom, "0", 10, "end");

  size_t n = spec.labels.size();
  double slot = n > 0 ? plot_w / static_cast<double>(n) : plot_w;
  size_t label_every = std::max<size_t>(1, n / 20 + (n % 20 ? 1 : 0));
  for (size_t i = 0; i < n; ++i) {
    if (i % label_every != 0) continue;
    svg.Text(left + (static_cast<double>(i) + 0.5) * slot, bottom + 16, spec.labels[i], 10);
  }

  if (spec.kind == ChartKind::kBar) {
    double group = slot * 0.8;
    double bar = group / static_cast<double>(std::max<size_t>(1, spec.series.size()));
    for (size_t i = 0; i < n; ++i) {
      double x0 = left + static_cast<double>(i) * slot + slot * 0.1;
      for (size_t k = 0; k < spec.series.size(); ++k) {
        const Series &s = spec.series[k];
        double h = static_cast<double>(s.values[i]) * scale;
        svg.Rect(x0 + static_cast<double>(k) * bar, bottom - h, bar, h, ColorFor(spec, s.label),
                 spec.labels[i] + " " + Tooltip(s.label, s.values[i]));
      }
    }
  } else {
    for (const Series &s : spec.series) {
      std::vector<std::pair<double, double>> points;
      for (size_t i = 0; i < n; ++i) {
        points.emplace_back(left + (static_cast<double>(i) + 0.5) * slot,
                            bottom - static_cast<double>(s.values[i]) * scale);
      }
      svg.Polyline(points, ColorFor(spec, s.label), s.label);
    }
  }
  if (legend) Legend(svg, spec, right + 24, top + 12);
}

void RenderPie(SvgWriter &svg, const ChartSpec &spec) {
  double cx = (spec.width - 180) / 2 + 20;
  double cy = kTitleHeight + (spec.height - kTitleHeight) / 2;
  double r = std::min(spec.width - 220, spec.height - kTitleHeight - 24) / 2;
  for (const Mark &mark : spec.marks) {
    const Slice &s = std::get<Slice>(mark);
    std::string_view color = ColorFor(spec, s.label);
    std::string tip = Tooltip(s.label, s.value);
    if (s.end_angle - s.start_angle >= 360.0 - 1e-9) {
      svg.Circle(cx, cy, r, color, tip);
      continue;
    }
    auto point = [&](double degrees) {
      double rad = degrees * std::numbers::pi / 180.0;
      return std::pair<double, double>(cx + r * std::sin(rad), cy - r * std::cos(rad));
    };
    auto [x1, y1] = point(s.start_angle);
    auto [x2, y2] = point(s.end_angle);
    int large = s.end_angle - s.start_angle > 180.0 ? 1 : 0;
    std::string d = "M " + Num(cx) + " " + Num(cy) + " L " + Num(x1) + " " + Num(y1) + " A " +
                    Num(r) + " " + Num(r) + " 0 " + std::to_string(large) + " 1 " + Num(x2) +
                    " " + Num(y2) + " Z";
    svg.Path(d, color, tip);
  }
  if (spec.kind == ChartKind::kDonut) svg.Circle(cx, cy, r * kDonutHoleRatio, "#ffffff", "");
  Legend(svg, spec, spec.width - 170, kTitleHeight + 24);
}

void RenderTreemap(SvgWriter &svg, const ChartSpec &spec) {
  // Geometry is in spec coordinates; shift it below the title.
  double sy = (spec.height - kTitleHeight) / spec.height;
  for (const Mark &mark : spec.marks) {
    const fieldmon::Rect &r = std::get<fieldmon::Rect>(mark);
    double y = kTitleHeight + r.y * sy;
    double h = r.height * sy;
    svg.Rect(r.x, y, r.width, h, ColorFor(spec, r.label), Tooltip(r.label, r.value));
    if (r.width > 40 && h > 16) svg.Text(r.x + r.width / 2, y + h / 2 + 4, r.label, 11);
  }
}

void RenderBubbles(SvgWriter &svg, const ChartSpec &spec) {
  double sy = (spec.height - kTitleHeight) / spec.height;
  for (const Mark &mark : spec.marks) {
    const fieldmon::Circle &c = std::get<fieldmon::Circle>(mark);
    double cy = kTitleHeight + c.cy * sy;
    double r = c.r * std::min(1.0, sy);
    svg.Circle(c.cx, cy, r, ColorFor(spec, c.label), Tooltip(c.label, c.value));
    svg.Text(c.cx, cy + 4, c.label, 11);
  }
}

// Greedy left-to-right flow; text width estimated at 0.6em per byte.
void RenderTagcloud(SvgWriter &svg, const ChartSpec &spec) {
  double x = kMargin / 2;
  double y = kTitleHeight + 16;
  double line_height = 0;
  for (const Mark &mark : spec.marks) {
    const Word &w = std::get<Word>(mark);
    double width = 0.6 * w.font_size * static_cast<double>(w.label.size());
    if (x + width > spec.width - kMargin / 2 && x > kMargin / 2) {
      x = kMargin / 2;
      y += line_height + 8;
      line_height = 0;
    }
    line_height = std::max(line_height, w.font_size);
    svg.Text(x, y + w.font_size, w.label, w.font_size, "start", ColorFor(spec, w.label));
    x += width + 16;
  }
}

}  // namespace

std::string RenderSvg(const ChartSpec &spec) {
  SvgWriter svg(spec.width, spec.height);
  svg.Text(spec.width / 2, 22, spec.title, 16);
  if (spec.empty) {
    svg.Text(spec.width / 2, spec.height / 2, "no data", 14, "middle", "#888888");
    return svg.Finish();
  }
  switch (spec.kind) {
    case ChartKind::kBar:
    case ChartKind::kLineSeries:
      RenderTimeseries(svg, spec);
      break;
    case ChartKind::kPie:
    case ChartKind::kDonut:
      RenderPie(svg, spec);
      break;
    case ChartKind::kTreemap:
      RenderTreemap(svg, spec);
      break;
    case ChartKind::kBubble:
      RenderBubbles(svg, spec);
      break;
    case ChartKind::kTagcloud:
      RenderTagcloud(svg, spec);
      break;
  }
  return svg.Finish();
}

}  // namespace fieldmon
