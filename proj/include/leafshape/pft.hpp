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

#ifndef LEAFSHAPE_PFT_HPP_
#define LEAFSHAPE_PFT_HPP_

#include <vector>

#include "leafshape/feature.hpp"
#include "leafshape/image.hpp"
#include "leafshape/kernels.hpp"
#include "leafshape/silhouette.hpp"

namespace leafshape {

// R x T polar resampling of a silhouette around its centroid. Row k sits at
// radius (k + 0.5) r_max / R, column i at angle 2 pi i / T.
struct PolarImage {
  int radial = 0;
  int angular = 0;
  double r_max = 0.0;
  std::vector<double> samples;  // row-major, values in [0, 1]

  double at(int k, int i) const {
    return samples[static_cast<std::size_t>(k) * angular + i];
  }
};

struct PftParams {
  int radial_freq = 4;
  int angular_freq = 6;
  int polar_r = 64;
  int polar_t = 128;
};

// Nearest-neighbour lookup of the mask at each polar sample point; points
// outside the image read as 0. Requires R, T >= 4.
PolarImage to_polar(const BinaryMask& mask, const ShapeGeometry& geom,
                    int radial, int angular);

// PF(rho, phi) = sum_k sum_i f(k, i) exp(-j 2 pi (k rho / R + i phi / T)) for
// rho < rows, phi < cols. Throws FrequencyOutOfRange unless
// 1 <= rows <= R and 1 <= cols <= T.
kernels::ComplexGrid pf2_transform(const PolarImage& polar, int rows,
                                   int cols);

// Row-major magnitudes of the rows x cols corner. Entry (0, 0) is |PF(0,0)|
// over the DC value of a completely filled polar grid (R T); every other
// entry is |PF(rho, phi)| / |PF(0, 0)|.
FeatureVector pft_descriptor(const PolarImage& polar, int rows, int cols);
FeatureVector pft_descriptor(const BinaryMask& mask, const ShapeGeometry& geom,
                             const PftParams& params = {});

}  // namespace leafshape

#endif  // LEAFSHAPE_PFT_HPP_
