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

#ifndef LEAFSHAPE_MOMENTS_HPP_
#define LEAFSHAPE_MOMENTS_HPP_

#include <array>

#include "leafshape/feature.hpp"
#include "leafshape/image.hpp"

namespace leafshape {

// table[i][j] holds the (i, j) moment; unused cells stay zero.
using MomentTable = std::array<std::array<double, 4>, 4>;

struct MomentSet {
  MomentTable raw{};         // M_ij, i, j in [0, 3]
  MomentTable central{};     // mu_ij, i + j <= 3
  MomentTable normalized{};  // eta_ij, 2 <= i + j <= 3
};

MomentTable raw_moments(const BinaryMask& mask);
MomentTable central_moments(const BinaryMask& mask);
MomentTable normalized_moments(const MomentTable& central);
MomentSet moment_set(const BinaryMask& mask);

struct HuInvariants {
  std::array<double, 7> phi{};
};

// The seven standard Hu invariants of the normalized central moments.
HuInvariants hu_from_normalized(const MomentTable& eta);
// Throws DegenerateShape for masks with fewer than 4 foreground pixels.
HuInvariants hu_invariants(const BinaryMask& mask);

inline constexpr double kSignedLogEpsilon = 1e-30;

// sign(v) * log10(|v| + 1e-30), with sign(+0) = +1.
double signed_log10(double v);

// Raw invariants (HuRaw) or their signed-log transform (HuNormalized).
FeatureVector hu_vector(const HuInvariants& hu, bool normalized);
FeatureVector hu_vector(const BinaryMask& mask, bool normalized);

}  // namespace leafshape

#endif  // LEAFSHAPE_MOMENTS_HPP_
