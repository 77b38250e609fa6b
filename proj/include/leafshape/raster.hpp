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

#ifndef LEAFSHAPE_RASTER_HPP_
#define LEAFSHAPE_RASTER_HPP_

#include <span>
#include <vector>

#include "leafshape/image.hpp"

namespace leafshape {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// Marks every pixel whose center lies inside the closed polygon (even-odd
// rule, half-open edge convention so shared edges are never filled twice).
BinaryMask rasterize_polygon(std::span<const Point2> polygon, int width,
                             int height);

// Pixel centers with (x-cx)^2 + (y-cy)^2 <= r^2.
BinaryMask rasterize_disk(double cx, double cy, double radius, int width,
                          int height);

// Rotates by `angle` radians about the origin, scales uniformly, then shifts
// by (cx, cy).
std::vector<Point2> transform_polygon(std::span<const Point2> polygon,
                                      double angle, double scale, double cx,
                                      double cy);

}  // namespace leafshape

#endif  // LEAFSHAPE_RASTER_HPP_
