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

#ifndef LEAFSHAPE_ZERNIKE_HPP_
#define LEAFSHAPE_ZERNIKE_HPP_

#include <complex>
#include <cstdint>
#include <vector>

#include "leafshape/feature.hpp"
#include "leafshape/image.hpp"

namespace leafshape {

struct ShapeGeometry;

// Order n, repetition m with |m| <= n and n - |m| even.
struct ZernikeIndex {
  int n = 0;
  int m = 0;

  friend bool operator==(const ZernikeIndex&, const ZernikeIndex&) = default;
};

inline constexpr int kDefaultZernikeOrder = 7;
// Factorials up to 20! fit in 64 bits, which keeps the radial coefficients
// exact integers.
inline constexpr int kMaxZernikeOrder = 20;

bool is_valid(ZernikeIndex index);

// Integer coefficients c_s of r^(n-2s), s = 0 .. (n-|m|)/2. Throws
// InvalidIndex for invalid (n, m) or n > kMaxZernikeOrder.
std::vector<std::int64_t> radial_coefficients(int n, int m);

// R_nm(r). Exact rational coefficients evaluated in double precision.
double radial_polynomial(int n, int m, double r);

// Every valid (n, m) with 0 <= m <= n <= max_order, ordered by (n, m).
std::vector<ZernikeIndex> zernike_indices(int max_order);

// Z_nm of the mask on the unit disk centred at the centroid and scaled by
// r_max. Uses the conjugate basis exp(-j m theta) and the per-pixel area
// element 1 / r_max^2, so a filled disk has Z_00 = 1.
std::complex<double> zernike_moment(const BinaryMask& mask,
                                    const ShapeGeometry& geom, int n, int m);
std::vector<std::complex<double>> zernike_moments(
    const BinaryMask& mask, const ShapeGeometry& geom,
    const std::vector<ZernikeIndex>& indices);

// |Z_nm| for zernike_indices(max_order); 20 values at order 7.
FeatureVector zernike_descriptor(const BinaryMask& mask,
                                 const ShapeGeometry& geom,
                                 int max_order = kDefaultZernikeOrder);

}  // namespace leafshape

#endif  // LEAFSHAPE_ZERNIKE_HPP_
