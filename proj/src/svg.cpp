// Copyright 2026 The charcom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "charcom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

namespace charcom {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;
constexpr double kPlotW = kWidth - 2.0 * kMargin;
constexpr double kPlotH = kHeight - 2.0 * kMargin;

std::string px(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

// Viridis-like gradient, 8 stops, linear interpolation.
std::string viridis(double t) {
  static constexpr int kStops[8][3] = {
      {68, 1, 84},   {70, 50, 127},  {54, 92, 141},  {39, 127, 142},
      {31, 161, 135}, {74, 194, 109}, {159, 218, 58}, {253, 231, 37},
  };
  t = std::clamp(t, 0.0, 1.0);
  const double pos = t * 7.0;
  const int lo = std::min(6, static_cast<int>(pos));
  const double frac = pos - lo;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(kStops[lo][0] + frac * (kStops[lo + 1][0] - kStops[lo][0]))),
                static_cast<int>(std::lround(kStops[lo][1] + frac * (kStops[lo + 1][1] - kStops[lo][1]))),
                static_cast<int>(std::lround(kStops[lo][2] + frac * (kStops[lo + 1][2] - kStops[lo][2]))));
  return buf;
}

void open_svg(std::ostream& out, const std::string& title) {
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
         "height=\"600\" viewBox=\"0 0 800 600\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"#ffffff\"/>\n"
      << "<text x=\"400\" y=\"32\" font-family=\"monospace\" font-size=\"16\" "
         "text-anchor=\"middle\">"
      << escape_xml(title) << "</text>\n";
}

void close_svg(std::ostream& out) { out << "</svg>\n"; }

void draw_frame(std::ostream& out) {
  out << "<rect x=\"" << px(kMargin) << "\" y=\"" << px(kMargin) << "\" width=\"" << px(kPlotW)
      << "\" height=\"" << px(kPlotH) << "\" fill=\"none\" stroke=\"#000000\"/>\n";
}

void draw_label(std::ostream& out, double x, double y, const std::string& text,
                const char* anchor = "middle", int size = 12) {
  out << "<text x=\"" << px(x) << "\" y=\"" << px(y) << "\" font-family=\"monospace\" font-size=\""
      << size << "\" text-anchor=\"" << anchor << "\">" << escape_xml(text) << "</text>\n";
}

double map_x(double value, double lo, double hi) {
  return kMargin + (value - lo) / (hi - lo) * kPlotW;
}

double map_y(double value, double lo, double hi) {
  return kHeight - kMargin - (value - lo) / (hi - lo) * kPlotH;
}

void x_ticks(std::ostream& out, double lo, double hi, int count) {
  for (int i = 0; i <= count; ++i) {
    const double value = lo + (hi - lo) * i / count;
    const double x = map_x(value, lo, hi);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(kHeight - kMargin) << "\" x2=\"" << px(x)
        << "\" y2=\"" << px(kHeight - kMargin + 5) << "\" stroke=\"#000000\"/>\n";
    draw_label(out, x, kHeight - kMargin + 20, format_double(value, 4));
  }
}

void y_ticks(std::ostream& out, double lo, double hi, int count) {
  for (int i = 0; i <= count; ++i) {
    const double value = lo + (hi - lo) * i / count;
    const double y = map_y(value, lo, hi);
    out << "<line x1=\"" << px(kMargin - 5) << "\" y1=\"" << px(y) << "\" x2=\"" << px(kMargin)
        << "\" y2=\"" << px(y) << "\" stroke=\"#000000\"/>\n";
    draw_label(out, kMargin - 10, y + 4, format_double(value, 4), "end");
  }
}

}  // namespace

void emit_svg(const HistogramData& data, std::ostream& out) {
  open_svg(out, "complexity histogram: " + data.family + " family, n=" +
                    std::to_string(data.n) + ", gates=" + std::to_string(data.gate_count) +
                    ", seed=" + std::to_string(data.seed));
  draw_frame(out);

  std::size_t max_count = 1;
  for (std::size_t c : data.counts) max_count = std::max(max_count, c);

  const std::size_t bins = data.counts.size();
  for (std::size_t b = 0; b < bins; ++b) {
    const double x0 = map_x(data.bin_edges[b], 0.0, 1.0);
    const double x1 = map_x(data.bin_edges[b + 1], 0.0, 1.0);
    const double h = kPlotH * static_cast<double>(data.counts[b]) / static_cast<double>(max_count);
    if (data.counts[b] == 0) continue;
    out << "<rect x=\"" << px(x0) << "\" y=\"" << px(kHeight - kMargin - h) << "\" width=\""
        << px(x1 - x0) << "\" height=\"" << px(h)
        << "\" fill=\"#3b6fb6\" stroke=\"#1f3d66\" stroke-width=\"0.5\"/>\n";
  }

  x_ticks(out, 0.0, 1.0, 4);
  y_ticks(out, 0.0, static_cast<double>(max_count), 4);
  draw_label(out, kWidth / 2.0, kHeight - 15, "character complexity");
  draw_label(out, 18, kHeight / 2.0, "count", "middle");
  close_svg(out);
}

void emit_svg(const HeatmapGrid& data, std::ostream& out) {
  open_svg(out, "complexity heatmap: " + data.family + " family, gate set " +
                    data.gate_set_name + ", seed=" + std::to_string(data.seed));
  const std::size_t rows = data.qubit_values.size();
  const std::size_t cols = data.gate_values.size();
  const double legend_w = 50.0;
  const double cell_w = (kPlotW - legend_w) / std::max<std::size_t>(cols, 1);
  const double cell_h = kPlotH / std::max<std::size_t>(rows, 1);

  for (std::size_t qi = 0; qi < rows; ++qi) {
    for (std::size_t gi = 0; gi < cols; ++gi) {
      const double value = data.cell(qi, gi);
      const std::string fill = std::isnan(value) ? "#cccccc" : viridis(value);
      out << "<rect x=\"" << px(kMargin + gi * cell_w) << "\" y=\"" << px(kMargin + qi * cell_h)
          << "\" width=\"" << px(cell_w) << "\" height=\"" << px(cell_h) << "\" fill=\"" << fill
          << "\" stroke=\"#ffffff\" stroke-width=\"1\"/>\n";
      draw_label(out, kMargin + gi * cell_w + cell_w / 2.0, kMargin + qi * cell_h + cell_h / 2.0 + 4,
                 std::isnan(value) ? "n/a" : format_double(value, 4), "middle", 11);
    }
  }
  for (std::size_t qi = 0; qi < rows; ++qi) {
    draw_label(out, kMargin - 10, kMargin + qi * cell_h + cell_h / 2.0 + 4,
               "n=" + std::to_string(data.qubit_values[qi]), "end");
  }
  for (std::size_t gi = 0; gi < cols; ++gi) {
    draw_label(out, kMargin + gi * cell_w + cell_w / 2.0, kHeight - kMargin + 20,
               std::to_string(data.gate_values[gi]));
  }
  draw_label(out, kWidth / 2.0, kHeight - 15, "gate count");

  // Color legend, 0 at the bottom.
  const double legend_x = kWidth - kMargin - legend_w + 15.0;
  const int steps = 64;
  for (int i = 0; i < steps; ++i) {
    const double t = (i + 0.5) / steps;
    const double y = kMargin + kPlotH * (1.0 - static_cast<double>(i + 1) / steps);
    out << "<rect x=\"" << px(legend_x) << "\" y=\"" << px(y) << "\" width=\"18\" height=\""
        << px(kPlotH / steps + 0.5) << "\" fill=\"" << viridis(t) << "\"/>\n";
  }
  draw_label(out, legend_x + 24, kMargin + 10, "1", "start");
  draw_label(out, legend_x + 24, kMargin + kPlotH, "0", "start");
  close_svg(out);
}

void emit_svg(const ScalingSeries& data, std::ostream& out) {
  open_svg(out, "complexity scaling: " + data.family + " family, n=" + std::to_string(data.n) +
                    ", seed=" + std::to_string(data.seed));
  draw_frame(out);

  const double x_lo = data.gate_counts.empty() ? 0.0 : data.gate_counts.front();
  const double x_hi = data.gate_counts.empty() ? 1.0
                                               : std::max<double>(data.gate_counts.back(),
                                                                  x_lo + 1.0);
  std::string polyline;
  for (std::size_t i = 0; i < data.gate_counts.size(); ++i) {
    const double x = map_x(data.gate_counts[i], x_lo, x_hi);
    const double y = map_y(data.mean_complexity[i], 0.0, 1.0);
    const double err = data.stderr_complexity[i];
    const double y_lo = map_y(std::max(0.0, data.mean_complexity[i] - err), 0.0, 1.0);
    const double y_hi = map_y(std::min(1.0, data.mean_complexity[i] + err), 0.0, 1.0);
    out << "<line x1=\"" << px(x) << "\" y1=\"" << px(y_lo) << "\" x2=\"" << px(x) << "\" y2=\""
        << px(y_hi) << "\" stroke=\"#b04030\" stroke-width=\"1.5\"/>\n";
    out << "<circle cx=\"" << px(x) << "\" cy=\"" << px(y)
        << "\" r=\"3.5\" fill=\"#3b6fb6\"/>\n";
    polyline += px(x) + "," + px(y) + " ";
  }
  if (!polyline.empty()) polyline.pop_back();
  out << "<polyline points=\"" << polyline
      << "\" fill=\"none\" stroke=\"#3b6fb6\" stroke-width=\"1.5\"/>\n";

  x_ticks(out, x_lo, x_hi, 4);
  y_ticks(out, 0.0, 1.0, 4);
  draw_label(out, kWidth / 2.0, kHeight - 15, "gate count");
  draw_label(out, 18, kHeight / 2.0, "mean complexity", "middle");
  close_svg(out);
}

void emit_svg(const HypersphereCloud& data, std::ostream& out) {
  open_svg(out, "hypersphere projection: n=" + std::to_string(data.n) + " qubits, " +
                    data.complexity_source + " source, seed=" +
                    std::to_string(data.projection_seed));

  const double max_radius = std::sqrt((std::exp2(data.n) - 1.0) / std::exp2(data.n));
  const double scale = (std::min(kPlotW, kPlotH) / 2.0 - 10.0) / max_radius;
  const double cx = kWidth / 2.0;
  const double cy = kHeight / 2.0;

  // Bounding circle at the maximum reachable radius.
  out << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\"" << px(max_radius * scale)
      << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";

  // Orthographic projection onto (x, y).
  for (const auto& p : data.points) {
    out << "<circle cx=\"" << px(cx + p.x * scale) << "\" cy=\"" << px(cy - p.y * scale)
        << "\" r=\"2.5\" fill=\"" << viridis(p.complexity) << "\" fill-opacity=\"0.85\"/>\n";
  }
  draw_label(out, kWidth / 2.0, kHeight - 15,
             "max radius " + format_double(max_radius, 6) + ", " +
                 std::to_string(data.points.size()) + " states");
  close_svg(out);
}

}  // namespace charcom
