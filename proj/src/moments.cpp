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

#include "leafshape/moments.hpp"

#include <cmath>
#include <string>

#include "leafshape/error.hpp"
#include "leafshape/kernels.hpp"
#include "leafshape/silhouette.hpp"

namespace leafshape {

namespace {

void require_nonempty(const BinaryMask& mask) {
  if (mask.empty()) {
    throw Error(ErrorCode::kAllBackground, "moments of an empty mask");
  }
}

}  // namespace

MomentTable raw_moments(const BinaryMask& mask) {
  require_nonempty(mask);
  return kernels::raw_moments(mask).m;
}

MomentTable central_moments(const BinaryMask& mask) {
  require_nonempty(mask);
  return kernels::central_moments(mask, centroid_frame(mask));
}

MomentTable normalized_moments(const MomentTable& central) {
  const double mu00 = central[0][0];
  if (!(mu00 > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "zero mass");
  }
  MomentTable eta{};
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; i + j <= 3; ++j) {
      if (i + j < 2) continue;
      const double gamma = (i + j + 2) / 2.0;
      eta[i][j] = central[i][j] / std::pow(mu00, gamma);
    }
  }
  return eta;
}

MomentSet moment_set(const BinaryMask& mask) {
  MomentSet s;
  s.raw = raw_moments(mask);
  s.central = central_moments(mask);
  s.normalized = normalized_moments(s.central);
  return s;
}

HuInvariants hu_from_normalized(const MomentTable& eta) {
  const double n20 = eta[2][0];
  const double n02 = eta[0][2];
  const double n11 = eta[1][1];
  const double n30 = eta[3][0];
  const double n03 = eta[0][3];
  const double n21 = eta[2][1];
  const double n12 = eta[1][2];

  const double a = n30 + n12;
  const double b = n21 + n03;
  const double c = n30 - 3.0 * n12;
  const double d = 3.0 * n21 - n03;

  HuInvariants hu;
  hu.phi[0] = n20 + n02;
  hu.phi[1] = (n20 - n02) * (n20 - n02) + 4.0 * n11 * n11;
  hu.phi[2] = c * c + d * d;
  hu.phi[3] = a * a + b * b;
  hu.phi[4] = c * a * (a * a - 3.0 * b * b) + d * b * (3.0 * a * a - b * b);
  hu.phi[5] = (n20 - n02) * (a * a - b * b) + 4.0 * n11 * a * b;
  hu.phi[6] = d * a * (a * a - 3.0 * b * b) - c * b * (3.0 * a * a - b * b);
  return hu;
}

HuInvariants hu_invariants(const BinaryMask& mask) {
  const std::int64_t area = mask.count();
  if (area < 4) {
    throw Error(ErrorCode::kDegenerateShape,
                "Hu invariants need at least 4 pixels, got " +
                    std::to_string(area));
  }
  return hu_from_normalized(normalized_moments(central_moments(mask)));
}

double signed_log10(double v) {
  const double sign = v < 0.0 ? -1.0 : 1.0;
  return sign * std::log10(std::abs(v) + kSignedLogEpsilon);
}

FeatureVector hu_vector(const HuInvariants& hu, bool normalized) {
  FeatureVector out;
  out.kind = normalized ? DescriptorKind::kHuNormalized : DescriptorKind::kHuRaw;
  out.values.assign(hu.phi.begin(), hu.phi.end());
  if (normalized)
    for (double& v : out.values) v = signed_log10(v);
  return out;
}

FeatureVector hu_vector(const BinaryMask& mask, bool normalized) {
  return hu_vector(hu_invariants(mask), normalized);
}

}  // namespace leafshape
