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

#ifndef LEAFSHAPE_FEATURE_HPP_
#define LEAFSHAPE_FEATURE_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

namespace leafshape {

enum class DescriptorKind {
  kGeometric,
  kHuRaw,
  kHuNormalized,
  kZernike,
  kPft,
  kCombined,
};

// The five single-family kinds, in report order.
inline constexpr std::array<DescriptorKind, 5> kSingleKinds = {
    DescriptorKind::kGeometric, DescriptorKind::kHuRaw,
    DescriptorKind::kHuNormalized, DescriptorKind::kZernike,
    DescriptorKind::kPft};

// Stable lower-case identifiers used on the command line and in file names.
std::string_view kind_name(DescriptorKind kind);
std::optional<DescriptorKind> parse_kind(std::string_view name);

struct FeatureVector {
  DescriptorKind kind = DescriptorKind::kGeometric;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

// Throws InvalidArgument if any value is NaN or infinite.
void require_finite(const FeatureVector& v);

}  // namespace leafshape

#endif  // LEAFSHAPE_FEATURE_HPP_
