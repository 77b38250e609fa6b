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

#include "leafshape/feature.hpp"

#include <cmath>
#include <string>

#include "leafshape/error.hpp"

namespace leafshape {

std::string_view kind_name(DescriptorKind kind) {
  switch (kind) {
    case DescriptorKind::kGeometric: return "geometric";
    case DescriptorKind::kHuRaw: return "hu_raw";
    case DescriptorKind::kHuNormalized: return "hu_normalized";
    case DescriptorKind::kZernike: return "zernike";
    case DescriptorKind::kPft: return "pft";
    case DescriptorKind::kCombined: return "combined";
  }
  return "unknown";
}

std::optional<DescriptorKind> parse_kind(std::string_view name) {
  for (auto k : {DescriptorKind::kGeometric, DescriptorKind::kHuRaw,
                 DescriptorKind::kHuNormalized, DescriptorKind::kZernike,
                 DescriptorKind::kPft, DescriptorKind::kCombined}) {
    if (kind_name(k) == name) return k;
  }
  return std::nullopt;
}

void require_finite(const FeatureVector& v) {
  for (std::size_t i = 0; i < v.values.size(); ++i) {
    if (!std::isfinite(v.values[i])) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(kind_name(v.kind)) + " feature " +
                      std::to_string(i) + " is not finite");
    }
  }
}

}  // namespace leafshape
