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

#include "kernels_detail.hpp"

namespace leafshape::kernels {

RawMoments raw_moments(const BinaryMask& mask) {
  // Integer accumulation, so the merge order does not affect the result.
  detail::RawAccum total;
  const int h = mask.height();
#pragma omp parallel
  {
    detail::RawAccum local;
#pragma omp for schedule(static)
    for (int y = 0; y < h; ++y) detail::accumulate_rows(mask, y, y + 1, local);
#pragma omp critical(leafshape_raw_moments)
    total.merge(local);
  }
  return detail::finish(total);
}

CentralMoments central_moments(const BinaryMask& mask,
                               const CentroidFrame& frame) {
  const auto pw = detail::power_tables(mask, frame);
  const auto pairs = detail::central_pairs();
  std::vector<double> sums(pairs.size());
  const int n = static_cast<int>(pairs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int q = 0; q < n; ++q)
    sums[q] = detail::central_unit(mask, pw, pairs[q][0], pairs[q][1]);
  CentralMoments out{};
  for (int q = 0; q < n; ++q) out[pairs[q][0]][pairs[q][1]] = sums[q];
  return out;
}

std::vector<std::complex<double>> zernike_sums(
    std::span<const DiskSample> samples,
    std::span<const ZernikeIndex> indices) {
  std::vector<std::complex<double>> out(indices.size());
  const int n = static_cast<int>(indices.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int q = 0; q < n; ++q)
    out[q] = detail::zernike_unit(samples, indices[q]);
  return out;
}

ComplexGrid pf2_corner(const PolarImage& polar, int rows, int cols) {
  detail::check_pf2_args(polar, rows, cols);
  std::vector<std::complex<double>> spectrum(
      static_cast<std::size_t>(polar.radial) * cols);
  const int r = polar.radial;
#pragma omp parallel for schedule(static)
  for (int k = 0; k < r; ++k)
    detail::angular_row(polar, k, cols,
                        spectrum.data() + static_cast<std::size_t>(k) * cols);
  return detail::radial_pass(spectrum, polar.radial, rows, cols);
}

}  // namespace leafshape::kernels
