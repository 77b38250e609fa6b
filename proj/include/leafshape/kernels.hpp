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

#ifndef LEAFSHAPE_KERNELS_HPP_
#define LEAFSHAPE_KERNELS_HPP_

// Data-parallel inner loops. Each kernel has an OpenMP implementation in
// leafshape::kernels and a plain serial implementation in
// leafshape::kernels::serial that follows the same summation order, so the
// two agree bit for bit. The serial versions exist for tests and for the
// benchmark target; library code calls the parallel ones.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "leafshape/image.hpp"
#include "leafshape/silhouette.hpp"
#include "leafshape/zernike.hpp"

namespace leafshape {
struct PolarImage;
}

namespace leafshape::kernels {

inline constexpr int kMomentOrder = 3;

// M_ij = sum x^i y^j over foreground pixels, i, j in [0, 3]. Accumulated in
// 128-bit integers, so the values are exact before the final conversion.
struct RawMoments {
  std::array<std::array<double, kMomentOrder + 1>, kMomentOrder + 1> m{};
  std::int64_t count = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;
};

// mu_ij for i + j <= 3; entries with i + j > 3 are left at zero.
using CentralMoments =
    std::array<std::array<double, kMomentOrder + 1>, kMomentOrder + 1>;

// Pixel position on the unit disk, in polar form.
struct DiskSample {
  double radius = 0.0;
  double angle = 0.0;
};

// Dense row-major complex grid.
struct ComplexGrid {
  int rows = 0;
  int cols = 0;
  std::vector<std::complex<double>> values;

  std::complex<double> at(int r, int c) const {
    return values[static_cast<std::size_t>(r) * cols + c];
  }
};

RawMoments raw_moments(const BinaryMask& mask);
CentralMoments central_moments(const BinaryMask& mask,
                               const CentroidFrame& frame);
// sum over samples of R_nm(radius) * exp(-j m angle), one sum per index.
std::vector<std::complex<double>> zernike_sums(
    std::span<const DiskSample> samples,
    std::span<const ZernikeIndex> indices);
// Low-frequency rows x cols corner of the 2-D DFT of the polar grid.
ComplexGrid pf2_corner(const PolarImage& polar, int rows, int cols);

namespace serial {
RawMoments raw_moments(const BinaryMask& mask);
CentralMoments central_moments(const BinaryMask& mask,
                               const CentroidFrame& frame);
std::vector<std::complex<double>> zernike_sums(
    std::span<const DiskSample> samples,
    std::span<const ZernikeIndex> indices);
ComplexGrid pf2_corner(const PolarImage& polar, int rows, int cols);
}  // namespace serial

}  // namespace leafshape::kernels

#endif  // LEAFSHAPE_KERNELS_HPP_
