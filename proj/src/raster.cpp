// Copyright 2026 The leafshape Authors
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

#include "leafshape/raster.hpp"

#include <algorithm>
#include <cmath>

#include "leafshape/error.hpp"

namespace leafshape {

BinaryMask rasterize_polygon(std::span<const Point2> polygon, int width,
                             int height) {
  if (polygon.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "polygon needs >= 3 vertices");
  }
  BinaryMask mask(width, height);
  std::vector<double> crossings;
  const std::size_t n = polygon.size();
  for (int y = 0; y < height; ++y) {
    const double sy = y;
    crossings.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2& a = polygon[i];
      const Point2& b = polygon[(i + 1) % n];
      // Half-open in y: an edge covers rows with min <= y < max.
      const bool up = a.y <= sy && sy < b.y;
      const bool down = b.y <= sy && sy < a.y;
      if (!up && !down) continue;
      const double t = (sy - a.y) / (b.y - a.y);
      crossings.push_back(a.x + t * (b.x - a.x));
    }
    std::sort(crossings.begin(), crossings.end());
    for (std::size_t i = 0; i + 1 < crossings.size(); i += 2) {
      // Pixel centers with x0 <= x < x1.
      const int x0 = std::max(0, static_cast<int>(std::ceil(crossings[i])));
      const int x1 =
          std::min(width, static_cast<int>(std::ceil(crossings[i + 1])));
      for (int x = x0; x < x1; ++x) mask.set(x, y);
    }
  }
  return mask;
}

BinaryMask rasterize_disk(double cx, double cy, double radius, int width,
                          int height) {
  BinaryMask mask(width, height);
  const double r2 = radius * radius;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const double dx = x - cx;
      const double dy = y - cy;
      if (dx * dx + dy * dy <= r2) mask.set(x, y);
    }
  }
  return mask;
}

std::vector<Point2> transform_polygon(std::span<const Point2> polygon,
                                      double angle, double scale, double cx,
                                      double cy) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  std::vector<Point2> out;
  out.reserve(polygon.size());
  for (const auto& p : polygon) {
    out.push_back({cx + scale * (c * p.x - s * p.y),
                   cy + scale * (s * p.x + c * p.y)});
  }
  return out;
}

}  // namespace leafshape
