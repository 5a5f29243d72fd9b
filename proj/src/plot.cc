// Copyright 2026 The Choremarket Authors
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

#include "choremarket/plot.h"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace choremarket {
namespace {

constexpr double kSize = 480;
constexpr double kMargin = 48;

std::string Format(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.2f", x);
  return buffer;
}

// Profile u (both coordinates <= 0) to canvas coordinates; the origin sits at
// the top-right corner.
struct Canvas {
  double scale_x, scale_y;
  std::pair<double, double> operator()(const UtilityProfile& u) const {
    const double x = kSize - kMargin + ToDouble(u[0]) * scale_x;
    const double y = kMargin - ToDouble(u[1]) * scale_y;
    return {x, y};
  }
};

std::string Points(const Canvas& canvas,
                   const std::vector<UtilityProfile>& profiles) {
  std::string out;
  for (const auto& u : profiles) {
    auto [x, y] = canvas(u);
    if (!out.empty()) out += ' ';
    out += Format(x) + "," + Format(y);
  }
  return out;
}

}  // namespace

UtilityPolygon TwoAgentUtilityPolygon(const Instance& inst) {
  if (inst.agents() != 2) {
    throw std::invalid_argument("utility plot needs exactly 2 agents");
  }
  const int m = inst.chores();
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return inst.disutility(0, a) * inst.disutility(1, b) <
           inst.disutility(0, b) * inst.disutility(1, a);
  });
  // Agent 0 holds the chores order[0..k) (efficient) or order[m-k..m).
  auto split = [&](int k, bool efficient) {
    UtilityProfile u(2);
    for (int pos = 0; pos < m; ++pos) {
      const bool mine = efficient ? pos < k : pos >= m - k;
      const int j = order[pos];
      if (mine) {
        u[0] += inst.value(0, j);
      } else {
        u[1] += inst.value(1, j);
      }
    }
    return u;
  };
  UtilityPolygon polygon;
  for (int k = 0; k <= m; ++k) polygon.frontier.push_back(split(k, true));
  for (int k = m; k >= 0; --k) polygon.anti_chain.push_back(split(k, false));
  return polygon;
}

std::string RenderUtilitySvg(const Instance& inst,
                             const std::vector<UtilityProfile>& profiles) {
  const UtilityPolygon polygon = TwoAgentUtilityPolygon(inst);
  const double span = kSize - 2 * kMargin;
  const double width = -ToDouble(polygon.frontier.back()[0]);
  const double height = -ToDouble(polygon.frontier.front()[1]);
  const Canvas canvas{span / width, span / height};

  std::vector<UtilityProfile> outline = polygon.frontier;
  outline.insert(outline.end(), polygon.anti_chain.begin(),
                 polygon.anti_chain.end());

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize
      << "\" height=\"" << kSize << "\" viewBox=\"0 0 " << kSize << ' '
      << kSize << "\">\n";
  svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const double origin_x = kSize - kMargin;
  const double origin_y = kMargin;
  svg << "  <line x1=\"" << Format(kMargin) << "\" y1=\"" << Format(origin_y)
      << "\" x2=\"" << Format(origin_x) << "\" y2=\"" << Format(origin_y)
      << "\" stroke=\"#888\"/>\n";
  svg << "  <line x1=\"" << Format(origin_x) << "\" y1=\"" << Format(origin_y)
      << "\" x2=\"" << Format(origin_x) << "\" y2=\""
      << Format(kSize - kMargin) << "\" stroke=\"#888\"/>\n";
  svg << "  <text x=\"" << Format(kMargin) << "\" y=\"" << Format(origin_y - 8)
      << "\" font-size=\"12\">u1 = " << ToString(polygon.frontier.back()[0])
      << "</text>\n";
  svg << "  <text x=\"" << Format(origin_x - 4) << "\" y=\""
      << Format(kSize - kMargin + 16) << "\" font-size=\"12\" "
      << "text-anchor=\"end\">u2 = " << ToString(polygon.frontier.front()[1])
      << "</text>\n";
  svg << "  <polygon points=\"" << Points(canvas, outline)
      << "\" fill=\"#dde6f5\" stroke=\"#99a\"/>\n";
  svg << "  <polyline points=\"" << Points(canvas, polygon.frontier)
      << "\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"/>\n";
  for (const auto& u : profiles) {
    auto [x, y] = canvas(u);
    svg << "  <circle cx=\"" << Format(x) << "\" cy=\"" << Format(y)
        << "\" r=\"5\" fill=\"#1f4fd1\"><title>" << ToString(u)
        << "</title></circle>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace choremarket
