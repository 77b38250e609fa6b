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
#include <deque>
#include <numbers>
#include <random>
#include <set>
#include <utility>

#include "leafshape/error.hpp"
#include "leafshape/raster.hpp"
#include "leafshape/silhouette.hpp"
#include "oracles.hpp"

namespace leafshape {
namespace {

BinaryMask filled_rect(int w, int h, int x0, int y0, int rw, int rh) {
  BinaryMask m(w, h);
  for (int y = y0; y < y0 + rh; ++y)
    for (int x = x0; x < x0 + rw; ++x) m.set(x, y);
  return m;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

// Random blob: noisy disk union, holes filled, largest component kept.
BinaryMask random_blob(std::mt19937_64& rng, int size) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  BinaryMask m(size, size);
  const int blobs = 1 + static_cast<int>(u(rng) * 4);
  for (int b = 0; b < blobs; ++b) {
    const double cx = size * (0.3 + 0.4 * u(rng));
    const double cy = size * (0.3 + 0.4 * u(rng));
    const double r = size * (0.08 + 0.2 * u(rng));
    for (int y = 0; y < size; ++y)
      for (int x = 0; x < size; ++x)
        if (std::hypot(x - cx, y - cy) <= r * (0.8 + 0.4 * u(rng))) m.set(x, y);
  }
  // Fill holes: background not 4-reachable from outside becomes foreground.
  BinaryMask outside(size, size);
  std::deque<Pixel> q;
  for (int i = 0; i < size; ++i)
    for (Pixel p : {Pixel{i, 0}, Pixel{i, size - 1}, Pixel{0, i}, Pixel{size - 1, i}})
      if (!m.at(p.x, p.y) && !outside.at(p.x, p.y)) {
        outside.set(p.x, p.y);
        q.push_back(p);
      }
  while (!q.empty()) {
    const Pixel p = q.front();
    q.pop_front();
    for (Pixel d : {Pixel{1, 0}, Pixel{-1, 0}, Pixel{0, 1}, Pixel{0, -1}}) {
      const int x = p.x + d.x, y = p.y + d.y;
      if (m.contains(x, y) && !m.at(x, y) && !outside.at(x, y)) {
        outside.set(x, y);
        q.push_back({x, y});
      }
    }
  }
  for (int y = 0; y < size; ++y)
    for (int x = 0; x < size; ++x)
      if (!outside.at(x, y)) m.set(x, y);
  return largest_component(m);
}

TEST(Binarize, PolarityAndThreshold) {
  const RasterImage white(4, 3, 1.0);
  EXPECT_EQ(binarize(white, 0.5, false).count(), 12u);
  EXPECT_EQ(code_of([&] { binarize(white, 0.5, true); }),
            ErrorCode::kAllBackground);
  EXPECT_EQ(code_of([&] { binarize(white, 0.0, true); }),
            ErrorCode::kInvalidArgument);
}

TEST(Binarize, MatchesPerPixelScan) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> level(0, 255);
  std::vector<double> px(40 * 30);
  for (double& v : px) v = level(rng) / 255.0;
  const RasterImage img(40, 30, px);
  const BinaryMask m = binarize(img, 0.5, true);
  for (int y = 0; y < 30; ++y)
    for (int x = 0; x < 40; ++x) EXPECT_EQ(m.at(x, y), img.at(x, y) < 0.5);
}

TEST(LargestComponent, KeepsBiggerBlob) {
  BinaryMask m(20, 10);
  for (int i = 0; i < 12; ++i) m.set(10 + i % 4, 2 + i / 4);  // 4x3 = 12
  for (int i = 0; i < 5; ++i) m.set(1 + i, 8);                // 5
  const BinaryMask out = largest_component(m);
  EXPECT_EQ(out.count(), 12u);
  EXPECT_TRUE(out.at(10, 2));
  EXPECT_FALSE(out.at(1, 8));
}

TEST(LargestComponent, TieGoesToFirstInRowMajorOrder) {
  BinaryMask m(20, 20);
  for (int y = 10; y < 13; ++y)
    for (int x = 2; x < 5; ++x) m.set(x, y);  // starts at row 10
  for (int y = 3; y < 6; ++y)
    for (int x = 14; x < 17; ++x) m.set(x, y);  // starts at row 3
  const BinaryMask out = largest_component(m);
  EXPECT_EQ(out.count(), 9u);
  EXPECT_TRUE(out.at(14, 3));
  EXPECT_FALSE(out.at(2, 10));
}

TEST(LargestComponent, DiagonalPixelsAreConnected) {
  BinaryMask m(5, 5);
  for (int i = 0; i < 5; ++i) m.set(i, i);
  EXPECT_EQ(largest_component(m), m);
}

TEST(LargestComponent, IdempotentOnRandomMasks) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const BinaryMask m = oracle::random_mask(rng, 30, 25, 0.45);
    const BinaryMask once = largest_component(m);
    EXPECT_EQ(largest_component(once), once);
  }
}

TEST(TraceContour, SmallSquares) {
  EXPECT_EQ(trace_contour(filled_rect(5, 5, 1, 1, 3, 3)).points.size(), 8u);
  EXPECT_EQ(trace_contour(filled_rect(14, 14, 2, 2, 10, 10)).points.size(), 36u);
}

TEST(TraceContour, StartsAtFirstPixelAndRunsClockwise) {
  const auto c = trace_contour(filled_rect(6, 6, 1, 1, 3, 3));
  EXPECT_EQ(c.points.front(), (Pixel{1, 1}));
  EXPECT_EQ(c.points[1], (Pixel{2, 1}));  // east first: clockwise on screen
}

TEST(TraceContour, DegenerateShapes) {
  BinaryMask dot(3, 3);
  dot.set(1, 1);
  EXPECT_EQ(code_of([&] { trace_contour(dot); }), ErrorCode::kDegenerateShape);
  EXPECT_EQ(code_of([&] { trace_contour(filled_rect(10, 3, 1, 1, 8, 1)); }),
            ErrorCode::kDegenerateShape);
  BinaryMask diag(6, 6);
  for (int i = 0; i < 6; ++i) diag.set(i, i);
  EXPECT_EQ(code_of([&] { trace_contour(diag); }), ErrorCode::kDegenerateShape);
}

TEST(TraceContour, TwoPixelWideBarIsFine) {
  const auto c = trace_contour(filled_rect(12, 4, 1, 1, 10, 2));
  EXPECT_EQ(c.points.size(), 20u);
}

TEST(TraceContour, ContourInvariantsOnRandomBlobs) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 40; ++t) {
    const BinaryMask m = random_blob(rng, 48);
    const Contour c = trace_contour(m);
    ASSERT_FALSE(c.points.empty());
    std::set<std::pair<int, int>> traced;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      const Pixel a = c.points[i];
      const Pixel b = c.points[(i + 1) % c.points.size()];
      EXPECT_LE(std::abs(a.x - b.x), 1);
      EXPECT_LE(std::abs(a.y - b.y), 1);
      EXPECT_FALSE(a == b);
      EXPECT_TRUE(m.at(a.x, a.y));
      traced.insert({a.x, a.y});
    }
    std::set<std::pair<int, int>> border;
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x)
        if (m.at(x, y) && (!m.at(x + 1, y) || !m.at(x - 1, y) ||
                           !m.at(x, y + 1) || !m.at(x, y - 1)))
          border.insert({x, y});
    EXPECT_EQ(traced, border) << "trial " << t;
  }
}

TEST(Measure, TenByTenSquare) {
  const auto s = extract_silhouette(filled_rect(20, 20, 5, 5, 10, 10));
  const auto& g = s.geometry;
  EXPECT_EQ(g.area, 100);
  EXPECT_DOUBLE_EQ(g.centroid.x, 9.5);
  EXPECT_DOUBLE_EQ(g.centroid.y, 9.5);
  EXPECT_NEAR(g.r_max, std::sqrt(2.0) * 4.5, 1e-12);
  EXPECT_NEAR(g.r_min, std::hypot(4.5, 0.5), 1e-12);
  EXPECT_NEAR(g.length_l2, 10.0, 1e-9);
  EXPECT_NEAR(g.width_l1, 10.0, 1e-9);
}

TEST(Measure, DiskPerimeterAndRadii) {
  const auto s = extract_silhouette(rasterize_disk(128.3, 127.6, 50, 256, 256));
  EXPECT_NEAR(s.geometry.perimeter, 2 * std::numbers::pi * 50,
              0.1 * 2 * std::numbers::pi * 50);
  EXPECT_NEAR(s.geometry.r_max / s.geometry.r_min, 1.0, 0.05);
}

TEST(Measure, CentroidMatchesMeanOfForeground) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const BinaryMask m = random_blob(rng, 40);
    const auto s = extract_silhouette(m);
    double sx = 0, sy = 0;
    std::int64_t n = 0;
    for (int y = 0; y < m.height(); ++y)
      for (int x = 0; x < m.width(); ++x)
        if (m.at(x, y)) {
          sx += x;
          sy += y;
          ++n;
        }
    EXPECT_EQ(s.geometry.centroid.x, sx / n);
    EXPECT_EQ(s.geometry.centroid.y, sy / n);
    EXPECT_EQ(s.geometry.area, n);
  }
}

TEST(Measure, IntegerTranslationOnlyMovesCentroid) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    const BinaryMask m = random_blob(rng, 40);
    const auto a = extract_silhouette(m).geometry;
    const auto b =
        extract_silhouette(translated(m, 10, 7, 60, 60)).geometry;
    EXPECT_NEAR(b.centroid.x - a.centroid.x, 10.0, 1e-9);
    EXPECT_NEAR(b.centroid.y - a.centroid.y, 7.0, 1e-9);
    EXPECT_EQ(a.area, b.area);
    EXPECT_EQ(a.perimeter, b.perimeter);
    EXPECT_EQ(a.r_max, b.r_max);
    EXPECT_EQ(a.r_min, b.r_min);
    EXPECT_EQ(a.length_l2, b.length_l2);
    EXPECT_EQ(a.width_l1, b.width_l1);
    EXPECT_EQ(b.frame.anchor_x - a.frame.anchor_x, 10);
    EXPECT_EQ(b.frame.frac_x, a.frame.frac_x);
  }
}

TEST(Measure, AxisAlignedRectangleExtents) {
  for (int w = 3; w <= 30; w += 3) {
    for (int h = w; h <= 60; h += 7) {
      const auto g =
          extract_silhouette(filled_rect(h + 10, h + 10, 4, 5, w, h)).geometry;
      EXPECT_NEAR(g.width_l1, w, 2.0) << w << "x" << h;
      EXPECT_NEAR(g.length_l2, h, 2.0) << w << "x" << h;
      EXPECT_LE(g.width_l1, g.length_l2);
    }
  }
}

TEST(Measure, GeometryInvariantsOnRandomBlobs) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 30; ++t) {
    const auto g = extract_silhouette(random_blob(rng, 50)).geometry;
    EXPECT_GT(g.perimeter, 0.0);
    EXPECT_GE(g.r_max, g.r_min);
    EXPECT_GT(g.r_min, 0.0);
    EXPECT_GE(g.length_l2, g.width_l1);
    EXPECT_GT(g.width_l1, 0.0);
  }
}

TEST(ExtractSilhouette, DropsSpecklesBeforeMeasuring) {
  BinaryMask m = filled_rect(30, 30, 5, 5, 12, 12);
  m.set(28, 28);
  m.set(0, 29);
  const auto s = extract_silhouette(m);
  EXPECT_EQ(s.geometry.area, 144);
  EXPECT_FALSE(s.mask.at(28, 28));
}

TEST(ExtractSilhouette, FromImage) {
  RasterImage img(20, 20, 1.0);
  for (int y = 4; y < 12; ++y)
    for (int x = 6; x < 15; ++x) img.set(x, y, 0.1);
  const auto s = extract_silhouette(img, kDefaultThreshold, true);
  EXPECT_EQ(s.geometry.area, 72);
}

}  // namespace
}  // namespace leafshape
