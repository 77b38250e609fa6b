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

#include "leafshape/geometric.hpp"

#include <numbers>

#include "leafshape/error.hpp"

namespace leafshape {

double slimness(const ShapeGeometry& geom) {
  if (!(geom.length_l2 > 0.0) || !(geom.width_l1 > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "zero principal extent");
  }
  return geom.width_l1 / geom.length_l2;
}

double roundness(const ShapeGeometry& geom) {
  if (!(geom.perimeter > 0.0) || geom.area <= 0) {
    throw Error(ErrorCode::kDegenerateShape, "zero perimeter or area");
  }
  return 4.0 * std::numbers::pi * static_cast<double>(geom.area) /
         (geom.perimeter * geom.perimeter);
}

double dispersion(const ShapeGeometry& geom) {
  if (!(geom.r_min > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape, "contour touches the centroid");
  }
  return geom.r_max / geom.r_min;
}

GeometricFeatures geometric_features(const ShapeGeometry& geom) {
  return {slimness(geom), roundness(geom), dispersion(geom)};
}

FeatureVector geometric_vector(const ShapeGeometry& geom) {
  const auto g = geometric_features(geom);
  return {DescriptorKind::kGeometric, {g.slimness, g.roundness, g.dispersion}};
}

}  // namespace leafshape
