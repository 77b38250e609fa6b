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

#include "leafshape/pft.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leafshape/error.hpp"

namespace leafshape {

PolarImage to_polar(const BinaryMask& mask, const ShapeGeometry& geom,
                    int radial, int angular) {
  if (radial < 4 || angular < 4) {
    throw Error(ErrorCode::kInvalidArgument,
                "polar grid must be at least 4x4, got " +
                    std::to_string(radial) + "x" + std::to_string(angular));
  }
  if (!(geom.r_max > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "r_max is zero");
  }
  PolarImage polar;
  polar.radial = radial;
  polar.angular = angular;
  polar.r_max = geom.r_max;
  polar.samples.assign(static_cast<std::size_t>(radial) * angular, 0.0);

  std::vector<double> cs(angular);
  std::vector<double> sn(angular);
  for (int i = 0; i < angular; ++i) {
    const double theta = 2.0 * std::numbers::pi * i / angular;
    cs[i] = std::cos(theta);
    sn[i] = std::sin(theta);
  }
  // Offsets are taken relative to the integer anchor, which keeps the lookup
  // identical under integer translation.
  const CentroidFrame& f = geom.frame;
  for (int k = 0; k < radial; ++k) {
    const double r = (k + 0.5) * geom.r_max / radial;
    for (int i = 0; i < angular; ++i) {
      const double lx = f.frac_x + r * cs[i];
      const double ly = f.frac_y + r * sn[i];
      const std::int64_t x = f.anchor_x + static_cast<std::int64_t>(
                                              std::floor(lx + 0.5));
      const std::int64_t y = f.anchor_y + static_cast<std::int64_t>(
                                              std::floor(ly + 0.5));
      if (x < 0 || y < 0 || x >= mask.width() || y >= mask.height()) continue;
      if (mask.at(static_cast<int>(x), static_cast<int>(y)))
        polar.samples[static_cast<std::size_t>(k) * angular + i] = 1.0;
    }
  }
  return polar;
}

kernels::ComplexGrid pf2_transform(const PolarImage& polar, int rows,
                                   int cols) {
  return kernels::pf2_corner(polar, rows, cols);
}

FeatureVector pft_descriptor(const PolarImage& polar, int rows, int cols) {
  const auto grid = pf2_transform(polar, rows, cols);
  const double dc = std::abs(grid.at(0, 0));
  if (!(dc > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "polar image has zero energy");
  }
  FeatureVector out;
  out.kind = DescriptorKind::kPft;
  out.values.reserve(grid.values.size());
  const double full = static_cast<double>(polar.radial) * polar.angular;
  for (int rho = 0; rho < rows; ++rho) {
    for (int phi = 0; phi < cols; ++phi) {
      const double mag = std::abs(grid.at(rho, phi));
      out.values.push_back(rho == 0 && phi == 0 ? mag / full : mag / dc);
    }
  }
  return out;
}

FeatureVector pft_descriptor(const BinaryMask& mask, const ShapeGeometry& geom,
                             const PftParams& params) {
  const auto polar = to_polar(mask, geom, params.polar_r, params.polar_t);
  return pft_descriptor(polar, params.radial_freq, params.angular_freq);
}

}  // namespace leafshape
