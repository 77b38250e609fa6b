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

#include "leafshape/zernike.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "leafshape/error.hpp"
#include "leafshape/kernels.hpp"
#include "leafshape/silhouette.hpp"

namespace leafshape {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string index_text(int n, int m) {
  return "(" + std::to_string(n) + ", " + std::to_string(m) + ")";
}

void require_index(int n, int m) {
  if (!is_valid({n, m})) {
    throw Error(ErrorCode::kInvalidIndex,
                "invalid Zernike index " + index_text(n, m));
  }
  if (n > kMaxZernikeOrder) {
    throw Error(ErrorCode::kInvalidIndex,
                "Zernike order above " + std::to_string(kMaxZernikeOrder) +
                    ": " + index_text(n, m));
  }
}

}  // namespace

bool is_valid(ZernikeIndex index) {
  const int am = index.m < 0 ? -index.m : index.m;
  return index.n >= 0 && am <= index.n && (index.n - am) % 2 == 0;
}

std::vector<std::int64_t> radial_coefficients(int n, int m) {
  require_index(n, m);
  const int am = m < 0 ? -m : m;
  const int half_sum = (n + am) / 2;
  const int half_diff = (n - am) / 2;
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(half_diff + 1);
  for (int s = 0; s <= half_diff; ++s) {
    // (n-s)! / (s! ((n+|m|)/2 - s)! ((n-|m|)/2 - s)!) is an integer; divide
    // step by step so nothing overflows at n = 20.
    std::uint64_t v = factorial(n - s);
    v /= factorial(s);
    v /= factorial(half_sum - s);
    v /= factorial(half_diff - s);
    const auto sv = static_cast<std::int64_t>(v);
    coeffs.push_back(s % 2 == 0 ? sv : -sv);
  }
  return coeffs;
}

double radial_polynomial(int n, int m, double r) {
  const auto coeffs = radial_coefficients(n, m);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "radius outside [0, 1]: " + std::to_string(r));
  }
  const double r2 = r * r;
  double poly = 0.0;
  for (std::int64_t c : coeffs) poly = poly * r2 + static_cast<double>(c);
  const int am = m < 0 ? -m : m;
  double rm = 1.0;
  for (int p = 0; p < am; ++p) rm *= r;
  return poly * rm;
}

std::vector<ZernikeIndex> zernike_indices(int max_order) {
  if (max_order < 0 || max_order > kMaxZernikeOrder) {
    throw Error(ErrorCode::kInvalidArgument,
                "Zernike order must be in [0, " +
                    std::to_string(kMaxZernikeOrder) +
                    "]: " + std::to_string(max_order));
  }
  std::vector<ZernikeIndex> out;
  for (int n = 0; n <= max_order; ++n)
    for (int m = n % 2; m <= n; m += 2) out.push_back({n, m});
  return out;
}

std::vector<std::complex<double>> zernike_moments(
    const BinaryMask& mask, const ShapeGeometry& geom,
    const std::vector<ZernikeIndex>& indices) {
  for (const ZernikeIndex& idx : indices) require_index(idx.n, idx.m);
  if (!(geom.r_max > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "r_max is zero");
  }
  const double inv = 1.0 / geom.r_max;
  std::vector<kernels::DiskSample> samples;
  samples.reserve(static_cast<std::size_t>(mask.count()));
  for (int y = 0; y < mask.height(); ++y) {
    const double py = geom.frame.dy(y) * inv;
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y)) continue;
      const double px = geom.frame.dx(x) * inv;
      const double r = std::hypot(px, py);
      if (r > 1.0) continue;
      samples.push_back({r, std::atan2(py, px)});
    }
  }
  auto sums = kernels::zernike_sums(samples, indices);
  const double area_element = inv * inv;
  for (std::size_t q = 0; q < sums.size(); ++q)
    sums[q] *= (indices[q].n + 1) / std::numbers::pi * area_element;
  return sums;
}

std::complex<double> zernike_moment(const BinaryMask& mask,
                                    const ShapeGeometry& geom, int n, int m) {
  return zernike_moments(mask, geom, {ZernikeIndex{n, m}}).front();
}

FeatureVector zernike_descriptor(const BinaryMask& mask,
                                 const ShapeGeometry& geom, int max_order) {
  const auto indices = zernike_indices(max_order);
  const auto z = zernike_moments(mask, geom, indices);
  FeatureVector out;
  out.kind = DescriptorKind::kZernike;
  out.values.reserve(z.size());
  for (const auto& c : z) out.values.push_back(std::abs(c));
  return out;
}

}  // namespace leafshape
