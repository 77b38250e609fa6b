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

#ifndef LEAFSHAPE_SILHOUETTE_HPP_
#define LEAFSHAPE_SILHOUETTE_HPP_

#include <cstdint>
#include <vector>

#include "leafshape/image.hpp"
#include "leafshape/raster.hpp"

namespace leafshape {

// Closed 8-connected boundary path. Consecutive points are 8-neighbours and
// the last point is 8-adjacent to the first. Points may repeat where the
// boundary doubles back through a one pixel wide neck.
struct Contour {
  std::vector<Pixel> points;
};

// Centroid split into an integer anchor plus a fractional offset, both derived
// from exact integer coordinate sums. Centered coordinates computed through
// the frame are bit-identical under integer translation of the mask.
struct CentroidFrame {
  std::int64_t anchor_x = 0;
  std::int64_t anchor_y = 0;
  double frac_x = 0.0;
  double frac_y = 0.0;

  double dx(int x) const { return static_cast<double>(x - anchor_x) - frac_x; }
  double dy(int y) const { return static_cast<double>(y - anchor_y) - frac_y; }
};

struct ShapeGeometry {
  std::int64_t area = 0;     // foreground pixel count
  double perimeter = 0.0;    // boundary length in pixel units
  Point2 centroid;           // (M10/M00, M01/M00)
  CentroidFrame frame;       // same centroid, translation-exact form
  double r_max = 0.0;        // farthest contour point from the centroid
  double r_min = 0.0;        // nearest contour point to the centroid
  double length_l2 = 0.0;    // extent along the major principal axis
  double width_l1 = 0.0;     // extent along the minor principal axis
};

inline constexpr double kDefaultThreshold = 0.5;

// Pixel is foreground iff intensity < threshold (dark foreground) or
// intensity >= threshold (bright foreground). Throws AllBackground when
// nothing qualifies.
BinaryMask binarize(const RasterImage& image, double threshold,
                    bool foreground_is_dark);

// Keeps only the largest 8-connected component. Ties go to the component
// whose first pixel in row-major order comes first.
BinaryMask largest_component(const BinaryMask& mask);

// Moore-neighbour trace of the outer boundary, clockwise on screen, starting
// from the first foreground pixel in row-major order. Throws DegenerateShape
// when the traced path encloses no area (single pixels, one pixel wide
// lines and trees of such lines).
Contour trace_contour(const BinaryMask& mask);

CentroidFrame centroid_frame(const BinaryMask& mask);

// Perimeter estimate used by measure(): chord-averaged length of the contour
// with a Richardson step (2 L(k) - L(2k), k <= 4) that removes the corner
// cutting of plain chords, plus pi for the half-pixel offset between the
// pixel-center path and the outer edge of the pixels.
double contour_perimeter(const Contour& contour);

ShapeGeometry measure(const BinaryMask& mask, const Contour& contour);

// binarize -> largest_component -> trace_contour -> measure.
struct Silhouette {
  BinaryMask mask;
  Contour contour;
  ShapeGeometry geometry;
};
Silhouette extract_silhouette(const RasterImage& image, double threshold,
                              bool foreground_is_dark);
Silhouette extract_silhouette(const BinaryMask& mask);

}  // namespace leafshape

#endif  // LEAFSHAPE_SILHOUETTE_HPP_
