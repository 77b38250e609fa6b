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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "leafshape/error.hpp"
#include "leafshape/geometric.hpp"
#include "leafshape/raster.hpp"
#include "leafshape/synth.hpp"
#include "shapes.hpp"

namespace leafshape {
namespace {

ShapeGeometry rect_geometry(int w, int h) {
  BinaryMask m(w + 10, h + 10);
  for (int y = 5; y < 5 + h; ++y)
    for (int x = 5; x < 5 + w; ++x) m.set(x, y);
  return extract_silhouette(m).geometry;
}

TEST(Slimness, SquareAndRectangle) {
  EXPECT_NEAR(slimness(rect_geometry(30, 30)), 1.0, 2.0 / 30);
  EXPECT_NEAR(slimness(rect_geometry(20, 60)), 1.0 / 3, 0.02);
}

TEST(Slimness, RotatedRectangle) {
  const std::vector<Point2> rect = {{-10, -30}, {10, -30}, {10, 30}, {-10, 30}};
  const auto m = shapes::render(rect, std::numbers::pi / 6, 1.0, 512, 256.3, 255.8);
  EXPECT_NEAR(slimness(extract_silhouette(m).geometry), 1.0 / 3, 0.05);
}

TEST(Roundness, DiskSquareBarOrdering) {
  const double disk =
      roundness(extract_silhouette(rasterize_disk(128.2, 127.7, 50, 256, 256)).geometry);
  const double square = roundness(rect_geometry(10, 10));
  const double bar = roundness(rect_geometry(100, 2));
  EXPECT_NEAR(disk, 1.0, 0.1);
  EXPECT_NEAR(square, std::numbers::pi / 4, 0.1);
  EXPECT_LT(bar, 0.2);
  EXPECT_GT(disk, square);
  EXPECT_GT(square, bar);
}

TEST(Dispersion, DiskSquareStar) {
  const double disk = dispersion(
      extract_silhouette(rasterize_disk(128.2, 127.7, 50, 256, 256)).geometry);
  const double square = dispersion(rect_geometry(10, 10));
  const auto star = shapes::render(star_outline(100.3, 40.2, 5), 0.2, 1.0, 256,
                                   128.4, 127.9);
  const double star_d = dispersion(extract_silhouette(star).geometry);
  EXPECT_NEAR(disk, 1.0, 0.05);
  EXPECT_NEAR(square, std::sqrt(2.0), 0.1);
  EXPECT_GT(star_d, square);
}

TEST(GeometricVector, DiskIsAllOnes) {
  const auto v = geometric_vector(
      extract_silhouette(rasterize_disk(256.2, 255.7, 100, 512, 512)).geometry);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_EQ(v.kind, DescriptorKind::kGeometric);
  for (double x : v.values) EXPECT_NEAR(x, 1.0, 0.05);
}

TEST(GeometricVector, TranslationGivesIdenticalVector) {
  const auto m =
      shapes::render(lobed_leaf_outline(40.3, 4, 0.15, 0.2, 1.5), 0.7, 1.0, 200, 100.2, 99.6);
  const auto a = geometric_vector(extract_silhouette(m).geometry);
  const auto b = geometric_vector(
      extract_silhouette(translated(m, -13, 21, 220, 230)).geometry);
  EXPECT_EQ(a.values, b.values);
}

TEST(GeometricFeatures, RangesOnFamilies) {
  for (const auto& fam : shapes::invariance_families()) {
    for (double angle : {0.0, 0.9, 2.3}) {
      const auto m = shapes::render(fam.outline, angle, 0.5, 256, 128, 128);
      const auto g = geometric_features(extract_silhouette(m).geometry);
      EXPECT_GT(g.slimness, 0.0) << fam.name;
      EXPECT_LE(g.slimness, 1.0) << fam.name;
      EXPECT_GT(g.roundness, 0.0) << fam.name;
      EXPECT_GE(g.dispersion, 1.0) << fam.name;
    }
  }
}

TEST(GeometricFeatures, DegenerateGeometryThrows) {
  ShapeGeometry g;
  EXPECT_THROW(slimness(g), Error);
  EXPECT_THROW(roundness(g), Error);
  EXPECT_THROW(dispersion(g), Error);
}

}  // namespace
}  // namespace leafshape
