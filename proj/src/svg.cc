// Copyright 2026 The sirtp Authors
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


#include "sirtp/svg.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sirtp {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

constexpr Int kMargin = 1;

void DrawSide(std::ostringstream& out, const Partition& part,
              const std::vector<int>& color_of, Int offset_x, Int canvas_h,
              int scale) {
  const Int base_y = canvas_h - kMargin;  // SVG y of the parent's bottom edge
  out << "<rect class=\"frame\" x=\"" << offset_x * scale << "\" y=\""
      << (base_y - part.parent.height) * scale << "\" width=\""
      << part.parent.width * scale << "\" height=\""
      << part.parent.height * scale
      << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  for (int i = 0; i < part.size(); ++i) {
    const PlacedRect& r = part.modules[i];
    out << "<rect class=\"module\" x=\"" << (offset_x + r.x) * scale
        << "\" y=\"" << (base_y - r.Top()) * scale << "\" width=\""
        << r.dims.width * scale << "\" height=\"" << r.dims.height * scale
        << "\" fill=\"" << kPalette[color_of[i] % kPalette.size()]
        << "\" stroke=\"#222\" stroke-width=\"1\"/>\n";
  }
}

}  // namespace

std::string RenderSvg(const PartitionPair& pair, int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be at least 1");
  const Wide extent = static_cast<Wide>(pair.a.parent.width) +
                      pair.b.parent.width +
                      std::max(pair.a.parent.height, pair.b.parent.height) +
                      5 * kMargin;
  if (extent * scale > kMaxRenderPixels) {
    throw std::invalid_argument("drawing too large to render");
  }
  std::vector<int> color_a(pair.a.size());
  std::vector<int> color_b(pair.b.size());
  for (int i = 0; i < pair.a.size(); ++i) color_a[i] = i;
  for (int j = 0; j < pair.b.size(); ++j) color_b[j] = j;
  for (int i = 0; i < static_cast<int>(pair.pairing.size()); ++i) {
    const int j = pair.pairing[i];
    if (i < pair.a.size() && j >= 0 && j < pair.b.size()) color_b[j] = i;
  }

  const Int canvas_h =
      std::max(pair.a.parent.height, pair.b.parent.height) + 2 * kMargin;
  const Int b_offset = kMargin + pair.a.parent.width + 2 * kMargin;
  const Int canvas_w = b_offset + pair.b.parent.width + kMargin;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << canvas_w * scale << "\" height=\"" << canvas_h * scale
      << "\" viewBox=\"0 0 " << canvas_w * scale << ' ' << canvas_h * scale
      << "\">\n";
  out << "<g id=\"side-a\">\n";
  DrawSide(out, pair.a, color_a, kMargin, canvas_h, scale);
  out << "</g>\n<g id=\"side-b\">\n";
  DrawSide(out, pair.b, color_b, b_offset, canvas_h, scale);
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace sirtp
