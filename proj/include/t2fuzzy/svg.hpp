// Copyright 2026 The t2fuzzy Authors
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

#pragma once

// SVG plots of functions on [0,1] x [0,1].
//
// Each affine piece is one line segment between its one-sided limits. At a
// breakpoint where the function jumps, a filled circle marks the attained
// value and an open circle marks each one-sided limit that is not attained.

#include "t2fuzzy/piecewise.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace t2fuzzy {

struct PlotSeries {
  std::string label;
  PiecewiseFn f;
};

struct SvgStyle {
  int width = 480;
  int height = 360;
  int margin = 40;
  double marker_radius = 3.5;
};

namespace detail {

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* series_color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                  "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
  return palette[i % (sizeof palette / sizeof palette[0])];
}

}  // namespace detail

inline std::string render_svg(const std::vector<PlotSeries>& series, const SvgStyle& style = {}) {
  const double w = style.width - 2.0 * style.margin;
  const double h = style.height - 2.0 * style.margin;
  auto px = [&](const Rational& x) {
    return detail::fixed2(style.margin + x.convert_to<double>() * w);
  };
  auto py = [&](const Rational& y) {
    return detail::fixed2(style.height - style.margin - y.convert_to<double>() * h);
  };
  const std::string r = detail::fixed2(style.marker_radius);
  const Rational zero(0), one(1), half = make_rational(1, 2);

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(style.width) +
         "\" height=\"" + std::to_string(style.height) + "\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + std::to_string(style.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes with ticks at 0, 1/2, 1.
  out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<line x1=\"" + px(zero) + "\" y1=\"" + py(zero) + "\" x2=\"" + px(one) + "\" y2=\"" +
         py(zero) + "\"/>\n";
  out += "<line x1=\"" + px(zero) + "\" y1=\"" + py(zero) + "\" x2=\"" + px(zero) + "\" y2=\"" +
         py(one) + "\"/>\n";
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  for (const Rational* t : {&zero, &half, &one}) {
    const char* label = *t == 0 ? "0" : *t == 1 ? "1" : "0.5";
    out += "<text x=\"" + px(*t) + "\" y=\"" + detail::fixed2(style.height - style.margin + 16.0) +
           "\" text-anchor=\"middle\">" + label + "</text>\n";
    out += "<text x=\"" + detail::fixed2(style.margin - 8.0) + "\" y=\"" + py(*t) +
           "\" text-anchor=\"end\" dominant-baseline=\"middle\">" + label + "</text>\n";
  }
  out += "</g>\n";

  for (std::size_t s = 0; s < series.size(); ++s) {
    const PiecewiseFn& f = series[s].f;
    const char* color = detail::series_color(s);
    const auto& xs = f.breakpoints();
    out += "<g class=\"series\" data-label=\"" + detail::xml_escape(series[s].label) + "\">\n";
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      out += "<line x1=\"" + px(xs[i]) + "\" y1=\"" + py(f.right_limit(i)) + "\" x2=\"" +
             px(xs[i + 1]) + "\" y2=\"" + py(f.left_limit(i + 1)) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const Rational& v = f.values()[i];
      std::vector<Rational> open;
      if (i > 0 && f.left_limit(i) != v) open.push_back(f.left_limit(i));
      if (i + 1 < xs.size() && f.right_limit(i) != v &&
          (open.empty() || open.front() != f.right_limit(i)))
        open.push_back(f.right_limit(i));
      if (open.empty()) continue;
      for (const auto& y : open)
        out += "<circle cx=\"" + px(xs[i]) + "\" cy=\"" + py(y) + "\" r=\"" + r +
               "\" fill=\"white\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
      out += "<circle cx=\"" + px(xs[i]) + "\" cy=\"" + py(v) + "\" r=\"" + r + "\" fill=\"" +
             color + "\"/>\n";
    }
    out += "</g>\n";
  }

  // Legend, top right.
  out += "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const double y = style.margin + 14.0 * static_cast<double>(s);
    const double x = style.width - style.margin - 110.0;
    out += "<line x1=\"" + detail::fixed2(x) + "\" y1=\"" + detail::fixed2(y) + "\" x2=\"" +
           detail::fixed2(x + 16.0) + "\" y2=\"" + detail::fixed2(y) + "\" stroke=\"" +
           detail::series_color(s) + "\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::fixed2(x + 22.0) + "\" y=\"" + detail::fixed2(y) +
           "\" dominant-baseline=\"middle\">" + detail::xml_escape(series[s].label) +
           "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace t2fuzzy
