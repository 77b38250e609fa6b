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
#include <random>

#include "leafshape/error.hpp"
#include "leafshape/raster.hpp"
#include "leafshape/silhouette.hpp"
#include "leafshape/zernike.hpp"
#include "oracles.hpp"
#include "shapes.hpp"

namespace leafshape {
namespace {

TEST(RadialPolynomial, ClosedForms) {
  for (double r = 0.0; r <= 1.0; r += 0.05) {
    EXPECT_EQ(radial_polynomial(0, 0, r), 1.0);
    EXPECT_NEAR(radial_polynomial(2, 0, r), 2 * r * r - 1, 1e-12);
    EXPECT_NEAR(radial_polynomial(4, 2, r), 4 * std::pow(r, 4) - 3 * r * r, 1e-12);
  }
  EXPECT_EQ(radial_polynomial(2, 0, 1.0), 1.0);
  EXPECT_EQ(radial_polynomial(2, 0, 0.0), -1.0);
  EXPECT_EQ(radial_polynomial(3, 3, 0.5), 0.125);
  EXPECT_EQ(radial_polynomial(3, -3, 0.5), 0.125);
}

TEST(RadialPolynomial, MatchesFactorialSum) {
  for (int n = 0; n <= kMaxZernikeOrder; ++n)
    for (int m = n % 2; m <= n; m += 2)
      for (double r : {0.0, 0.13, 0.5, 0.77, 0.999, 1.0}) {
        EXPECT_NEAR(radial_polynomial(n, m, r), oracle::radial(n, m, r), 1e-9)
            << n << "," << m << " r=" << r;
      }
}

TEST(RadialPolynomial, UnitAtRimAndBounded) {
  for (int n = 0; n <= kMaxZernikeOrder; ++n)
    for (int m = n % 2; m <= n; m += 2) {
      EXPECT_NEAR(radial_polynomial(n, m, 1.0), 1.0, 1e-12);
      for (double r = 0.0; r <= 1.0; r += 1.0 / 64)
        EXPECT_LE(std::abs(radial_polynomial(n, m, r)), 1.0 + 1e-9);
    }
}

TEST(RadialPolynomial, InvalidIndices) {
  for (auto [n, m] : {std::pair{2, 1}, {1, 2}, {-1, 0}, {3, -2}, {21, 1}}) {
    try {
      radial_polynomial(n, m, 0.5);
      FAIL() << n << "," << m;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidIndex);
    }
  }
}

TEST(ZernikeIndices, Counts) {
  EXPECT_EQ(zernike_indices(0).size(), 1u);
  EXPECT_EQ(zernike_indices(7).size(), 20u);
  const auto idx = zernike_indices(3);
  const std::vector<ZernikeIndex> want = {{0, 0}, {1, 1}, {2, 0},
                                          {2, 2}, {3, 1}, {3, 3}};
  EXPECT_EQ(idx, want);
}

TEST(ZernikeMoment, DiskIsOrthogonalToHigherTerms) {
  const auto s = extract_silhouette(rasterize_disk(256, 256, 100, 512, 512));
  const auto d = zernike_descriptor(s.mask, s.geometry, 7);
  ASSERT_EQ(d.size(), 20u);
  EXPECT_NEAR(d.values[0], 1.0, 0.02);
  for (std::size_t i = 1; i < d.size(); ++i) EXPECT_LT(d.values[i], 0.02) << i;
}

TEST(ZernikeMoment, QuarterTurnKeepsMagnitudes) {
  const auto m = shapes::render(lobed_leaf_outline(50.3, 3, 0.2, 0.3, 1.4), 0.3,
                                1.0, 200, 100.2, 99.7);
  const auto a = extract_silhouette(m);
  const auto b = extract_silhouette(rotated90(m));
  const auto da = zernike_descriptor(a.mask, a.geometry, 7);
  const auto db = zernike_descriptor(b.mask, b.geometry, 7);
  for (std::size_t i = 0; i < da.size(); ++i)
    EXPECT_NEAR(da.values[i], db.values[i], 1e-6 * da.values[i] + 1e-15) << i;
}

TEST(ZernikeMoment, TranslationGivesIdenticalDescriptor) {
  const auto m = shapes::render(star_outline(70.3, 30.1, 6), 0.1, 1.0, 160, 80.4, 79.8);
  const auto a = extract_silhouette(m);
  const auto b = extract_silhouette(translated(m, 31, -12, 200, 160));
  EXPECT_EQ(zernike_descriptor(a.mask, a.geometry).values,
            zernike_descriptor(b.mask, b.geometry).values);
}

TEST(ZernikeMoment, ConjugateSymmetry) {
  const auto m = shapes::render(star_outline(70.3, 30.1, 5), 0.4, 1.0, 160, 80.4, 79.8);
  const auto s = extract_silhouette(m);
  for (auto [n, mm] : {std::pair{3, 1}, {4, 2}, {5, 5}}) {
    const auto p = zernike_moment(s.mask, s.geometry, n, mm);
    const auto q = zernike_moment(s.mask, s.geometry, n, -mm);
    EXPECT_NEAR(p.real(), q.real(), 1e-12);
    EXPECT_NEAR(p.imag(), -q.imag(), 1e-12);
  }
}

// Numeric orthogonality of the basis on a dense sampling of the unit disk.
TEST(ZernikeBasis, OrthogonalOnDenseDisk) {
  constexpr int kGrid = 512;
  std::vector<std::pair<double, double>> pts;
  for (int y = 0; y < kGrid; ++y)
    for (int x = 0; x < kGrid; ++x) {
      const double px = (x + 0.5) / kGrid * 2 - 1;
      const double py = (y + 0.5) / kGrid * 2 - 1;
      const double r = std::hypot(px, py);
      if (r <= 1.0) pts.push_back({r, std::atan2(py, px)});
    }
  const auto idx = zernike_indices(7);
  auto inner = [&](ZernikeIndex a, ZernikeIndex b) {
    std::complex<double> s{};
    for (auto [r, t] : pts)
      s += radial_polynomial(a.n, a.m, r) * radial_polynomial(b.n, b.m, r) *
           std::polar(1.0, (a.m - b.m) * t);
    return s;
  };
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const double self = std::abs(inner(idx[i], idx[i]));
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      EXPECT_LT(std::abs(inner(idx[i], idx[j])) / self, 1e-3)
          << idx[i].n << "," << idx[i].m << " vs " << idx[j].n << "," << idx[j].m;
  }
}

}  // namespace
}  // namespace leafshape
