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

#ifndef LEAFSHAPE_SYNTH_HPP_
#define LEAFSHAPE_SYNTH_HPP_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "leafshape/dataset.hpp"
#include "leafshape/image.hpp"
#include "leafshape/raster.hpp"

namespace leafshape {

// Closed outlines centred on the origin, counter-clockwise in a y-up frame.
std::vector<Point2> ellipse_outline(double a, double b, int vertices = 720);
std::vector<Point2> rounded_rect_outline(double w, double h, double radius,
                                         int arc_vertices = 24);
std::vector<Point2> star_outline(double outer, double inner, int points);
// r(t) = size (1 + depth cos(lobes t)) (1 + asymmetry cos t), with x
// stretched by `stretch`.
std::vector<Point2> lobed_leaf_outline(double size, int lobes, double depth,
                                       double asymmetry, double stretch,
                                       int vertices = 720);

enum class ShapeFamily { kEllipse, kRoundedRect, kStar, kLobedLeaf };

std::string_view family_name(ShapeFamily family);

// Class-defining parameters. Outlines built from these have a largest
// radius of roughly 1.
struct ShapeParams {
  ShapeFamily family = ShapeFamily::kEllipse;
  double aspect = 1.0;     // ellipse, rounded rect, leaf stretch
  double corner = 0.0;     // rounded rect corner radius, fraction of height
  int points = 5;          // star points, leaf lobes
  double inner = 0.5;      // star inner radius ratio
  double depth = 0.0;      // leaf lobe depth
  double asymmetry = 0.0;  // leaf tip/base asymmetry
};

std::vector<Point2> unit_outline(const ShapeParams& params);

// Uniform double in [0, 1) from the top 53 bits of one engine draw. Written
// out so results do not depend on the standard library's distributions.
double uniform01(std::mt19937_64& rng);
double uniform(std::mt19937_64& rng, double lo, double hi);

ShapeParams class_params(int class_index, std::uint64_t seed);

struct SynthConfig {
  int classes = 50;
  int db_per_class = 20;
  int query_per_class = 5;
  std::uint64_t seed = 1;
  int canvas = 256;
  double base_radius = 72.0;  // pixels at scale 1
};

// One instance of a class: random rotation, scale in [0.7, 1.3], translation
// and smooth low-order boundary noise. Dark shape on a light background.
RasterImage render_instance(const ShapeParams& params,
                            const SynthConfig& config, std::mt19937_64& rng);

// Writes <out_dir>/images/cNN_iNN.png plus <out_dir>/manifest.csv and
// returns the records in manifest order.
std::vector<ManifestRecord> synthesize_benchmark(
    const SynthConfig& config, const std::filesystem::path& out_dir);

}  // namespace leafshape

#endif  // LEAFSHAPE_SYNTH_HPP_
