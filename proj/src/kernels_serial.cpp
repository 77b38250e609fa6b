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

#include <cmath>
#include <numbers>
#include <string>

#include "kernels_detail.hpp"
#include "leafshape/error.hpp"

namespace leafshape::kernels {

namespace detail {

void accumulate_rows(const BinaryMask& mask, int y0, int y1, RawAccum& acc) {
  const int w = mask.width();
  for (int y = y0; y < y1; ++y) {
    std::array<Int128, kMomentOrder + 1> row{};
    std::int64_t n = 0;
    for (int x = 0; x < w; ++x) {
      if (!mask.at(x, y)) continue;
      const Int128 xx = x;
      row[0] += 1;
      row[1] += xx;
      row[2] += xx * xx;
      row[3] += xx * xx * xx;
      ++n;
      acc.sum_x += x;
    }
    if (n == 0) continue;
    acc.count += n;
    acc.sum_y += static_cast<std::int64_t>(y) * n;
    const Int128 yy = y;
    const std::array<Int128, kMomentOrder + 1> ypow = {1, yy, yy * yy,
                                                       yy * yy * yy};
    for (int i = 0; i <= kMomentOrder; ++i)
      for (int j = 0; j <= kMomentOrder; ++j) acc.m[i][j] += row[i] * ypow[j];
  }
}

RawMoments finish(const RawAccum& acc) {
  RawMoments out;
  for (int i = 0; i <= kMomentOrder; ++i)
    for (int j = 0; j <= kMomentOrder; ++j)
      out.m[i][j] = static_cast<double>(acc.m[i][j]);
  out.count = acc.count;
  out.sum_x = acc.sum_x;
  out.sum_y = acc.sum_y;
  return out;
}

PowerTables power_tables(const BinaryMask& mask, const CentroidFrame& frame) {
  PowerTables pw;
  for (int p = 0; p <= kMomentOrder; ++p) {
    pw.x[p].resize(mask.width());
    pw.y[p].resize(mask.height());
  }
  for (int x = 0; x < mask.width(); ++x) {
    const double d = frame.dx(x);
    double v = 1.0;
    for (int p = 0; p <= kMomentOrder; ++p) {
      pw.x[p][x] = v;
      v *= d;
    }
  }
  for (int y = 0; y < mask.height(); ++y) {
    const double d = frame.dy(y);
    double v = 1.0;
    for (int p = 0; p <= kMomentOrder; ++p) {
      pw.y[p][y] = v;
      v *= d;
    }
  }
  return pw;
}

double central_unit(const BinaryMask& mask, const PowerTables& pw, int i,
                    int j) {
  double sum = 0.0;
  const auto& px = pw.x[i];
  const auto& py = pw.y[j];
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y)) sum += px[x] * py[y];
    }
  }
  return sum;
}

std::vector<std::array<int, 2>> central_pairs() {
  std::vector<std::array<int, 2>> pairs;
  for (int i = 0; i <= kMomentOrder; ++i)
    for (int j = 0; i + j <= kMomentOrder; ++j) pairs.push_back({i, j});
  return pairs;
}

std::complex<double> zernike_unit(std::span<const DiskSample> samples,
                                  ZernikeIndex index) {
  const auto coeffs = radial_coefficients(index.n, index.m);
  double re = 0.0;
  double im = 0.0;
  for (const DiskSample& s : samples) {
    // Horner over r^2, then the r^|m| factor.
    double r2 = s.radius * s.radius;
    double poly = 0.0;
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      poly = poly * r2 + static_cast<double>(coeffs[c]);
    const int am = index.m < 0 ? -index.m : index.m;
    double rm = 1.0;
    for (int p = 0; p < am; ++p) rm *= s.radius;
    const double radial = poly * rm;
    const double a = index.m * s.angle;
    re += radial * std::cos(a);
    im -= radial * std::sin(a);
  }
  return {re, im};
}

void angular_row(const PolarImage& polar, int k, int cols,
                 std::complex<double>* out) {
  const int t = polar.angular;
  const double step = 2.0 * std::numbers::pi / t;
  for (int phi = 0; phi < cols; ++phi) {
    double re = 0.0;
    double im = 0.0;
    for (int i = 0; i < t; ++i) {
      const double f = polar.at(k, i);
      if (f == 0.0) continue;
      const int e = static_cast<int>((static_cast<std::int64_t>(i) * phi) % t);
      re += f * std::cos(step * e);
      im -= f * std::sin(step * e);
    }
    out[phi] = {re, im};
  }
}

ComplexGrid radial_pass(const std::vector<std::complex<double>>& rows_spectrum,
                        int radial, int rows, int cols) {
  ComplexGrid grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.values.assign(static_cast<std::size_t>(rows) * cols, {});
  const double step = 2.0 * std::numbers::pi / radial;
  for (int rho = 0; rho < rows; ++rho) {
    for (int phi = 0; phi < cols; ++phi) {
      std::complex<double> acc{};
      for (int k = 0; k < radial; ++k) {
        const int e =
            static_cast<int>((static_cast<std::int64_t>(k) * rho) % radial);
        const std::complex<double> tw(std::cos(step * e), -std::sin(step * e));
        acc += rows_spectrum[static_cast<std::size_t>(k) * cols + phi] * tw;
      }
      grid.values[static_cast<std::size_t>(rho) * cols + phi] = acc;
    }
  }
  return grid;
}

void check_pf2_args(const PolarImage& polar, int rows, int cols) {
  if (polar.radial < 1 || polar.angular < 1 ||
      polar.samples.size() !=
          static_cast<std::size_t>(polar.radial) * polar.angular) {
    throw Error(ErrorCode::kInvalidArgument, "malformed polar image");
  }
  if (rows < 1 || cols < 1 || rows > polar.radial || cols > polar.angular) {
    throw Error(ErrorCode::kFrequencyOutOfRange,
                "frequency corner " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " exceeds polar grid " +
                    std::to_string(polar.radial) + "x" +
                    std::to_string(polar.angular));
  }
}

}  // namespace detail

namespace serial {

RawMoments raw_moments(const BinaryMask& mask) {
  detail::RawAccum acc;
  detail::accumulate_rows(mask, 0, mask.height(), acc);
  return detail::finish(acc);
}

CentralMoments central_moments(const BinaryMask& mask,
                               const CentroidFrame& frame) {
  const auto pw = detail::power_tables(mask, frame);
  CentralMoments out{};
  for (const auto& [i, j] : detail::central_pairs())
    out[i][j] = detail::central_unit(mask, pw, i, j);
  return out;
}

std::vector<std::complex<double>> zernike_sums(
    std::span<const DiskSample> samples,
    std::span<const ZernikeIndex> indices) {
  std::vector<std::complex<double>> out(indices.size());
  for (std::size_t q = 0; q < indices.size(); ++q)
    out[q] = detail::zernike_unit(samples, indices[q]);
  return out;
}

ComplexGrid pf2_corner(const PolarImage& polar, int rows, int cols) {
  detail::check_pf2_args(polar, rows, cols);
  std::vector<std::complex<double>> spectrum(
      static_cast<std::size_t>(polar.radial) * cols);
  for (int k = 0; k < polar.radial; ++k)
    detail::angular_row(polar, k, cols,
                        spectrum.data() + static_cast<std::size_t>(k) * cols);
  return detail::radial_pass(spectrum, polar.radial, rows, cols);
}

}  // namespace serial

}  // namespace leafshape::kernels
