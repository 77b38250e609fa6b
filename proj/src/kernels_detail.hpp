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

#ifndef LEAFSHAPE_SRC_KERNELS_DETAIL_HPP_
#define LEAFSHAPE_SRC_KERNELS_DETAIL_HPP_

// Work units shared by the serial and OpenMP kernels. Each unit is a
// self-contained serial computation; the two front ends differ only in how
// they schedule units, so their results match exactly.

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "leafshape/kernels.hpp"
#include "leafshape/pft.hpp"

namespace leafshape::kernels::detail {

__extension__ using Int128 = __int128;

// Exact moment sums over a band of rows [y0, y1).
struct RawAccum {
  std::array<std::array<Int128, kMomentOrder + 1>, kMomentOrder + 1> m{};
  std::int64_t count = 0;
  std::int64_t sum_x = 0;
  std::int64_t sum_y = 0;

  void merge(const RawAccum& o) {
    for (int i = 0; i <= kMomentOrder; ++i)
      for (int j = 0; j <= kMomentOrder; ++j) m[i][j] += o.m[i][j];
    count += o.count;
    sum_x += o.sum_x;
    sum_y += o.sum_y;
  }
};

void accumulate_rows(const BinaryMask& mask, int y0, int y1, RawAccum& acc);
RawMoments finish(const RawAccum& acc);

// Powers dx^p (p = 0..3) per column and dy^p per row, built by repeated
// multiplication starting from 1.
struct PowerTables {
  std::array<std::vector<double>, kMomentOrder + 1> x;
  std::array<std::vector<double>, kMomentOrder + 1> y;
};
PowerTables power_tables(const BinaryMask& mask, const CentroidFrame& frame);

// Row-major sum of x^i y^j over foreground pixels.
double central_unit(const BinaryMask& mask, const PowerTables& pw, int i,
                    int j);

// The (i, j) pairs with i + j <= 3, in a fixed order.
std::vector<std::array<int, 2>> central_pairs();

std::complex<double> zernike_unit(std::span<const DiskSample> samples,
                                  ZernikeIndex index);

// Angular DFT of polar row k for phi in [0, cols).
void angular_row(const PolarImage& polar, int k, int cols,
                 std::complex<double>* out);
// Radial DFT of the per-row angular spectra.
ComplexGrid radial_pass(const std::vector<std::complex<double>>& rows_spectrum,
                        int radial, int rows, int cols);

void check_pf2_args(const PolarImage& polar, int rows, int cols);

}  // namespace leafshape::kernels::detail

#endif  // LEAFSHAPE_SRC_KERNELS_DETAIL_HPP_
