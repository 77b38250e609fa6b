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

#ifndef LEAFSHAPE_GEOMETRIC_HPP_
#define LEAFSHAPE_GEOMETRIC_HPP_

#include "leafshape/feature.hpp"
#include "leafshape/silhouette.hpp"

namespace leafshape {

struct GeometricFeatures {
  double slimness = 0.0;    // width_l1 / length_l2, in (0, 1]
  double roundness = 0.0;   // 4 pi A / P^2
  double dispersion = 0.0;  // r_max / r_min, >= 1
};

double slimness(const ShapeGeometry& geom);
double roundness(const ShapeGeometry& geom);
double dispersion(const ShapeGeometry& geom);

GeometricFeatures geometric_features(const ShapeGeometry& geom);

// [slimness, roundness, dispersion].
FeatureVector geometric_vector(const ShapeGeometry& geom);

}  // namespace leafshape

#endif  // LEAFSHAPE_GEOMETRIC_HPP_
