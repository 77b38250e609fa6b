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

#include "leafshape/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <system_error>

#include "leafshape/error.hpp"
#include "leafshape/raster_io.hpp"

namespace leafshape {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  return std::mt19937_64(seq);
}

void normalize_radius(std::vector<Point2>& outline) {
  double r = 0.0;
  for (const auto& p : outline) r = std::max(r, std::hypot(p.x, p.y));
  for (auto& p : outline) {
    p.x /= r;
    p.y /= r;
  }
}

}  // namespace

std::vector<Point2> ellipse_outline(double a, double b, int vertices) {
  std::vector<Point2> out;
  out.reserve(vertices);
  for (int i = 0; i < vertices; ++i) {
    const double t = kTau * i / vertices;
    out.push_back({a * std::cos(t), b * std::sin(t)});
  }
  return out;
}

std::vector<Point2> rounded_rect_outline(double w, double h, double radius,
                                         int arc_vertices) {
  radius = std::clamp(radius, 0.0, std::min(w, h) / 2.0);
  const double qx = w / 2.0 - radius;
  const double qy = h / 2.0 - radius;
  const Point2 centers[4] = {{qx, qy}, {-qx, qy}, {-qx, -qy}, {qx, -qy}};
  std::vector<Point2> out;
  out.reserve(4 * (arc_vertices + 1));
  for (int q = 0; q < 4; ++q) {
    for (int i = 0; i <= arc_vertices; ++i) {
      const double t = (q + static_cast<double>(i) / arc_vertices) * kTau / 4;
      out.push_back({centers[q].x + radius * std::cos(t),
                     centers[q].y + radius * std::sin(t)});
    }
  }
  return out;
}

std::vector<Point2> star_outline(double outer, double inner, int points) {
  std::vector<Point2> out;
  out.reserve(2 * points);
  for (int i = 0; i < 2 * points; ++i) {
    const double r = i % 2 == 0 ? outer : inner;
    const double t = i * std::numbers::pi / points;
    out.push_back({r * std::cos(t), r * std::sin(t)});
  }
  return out;
}

std::vector<Point2> lobed_leaf_outline(double size, int lobes, double depth,
                                       double asymmetry, double stretch,
                                       int vertices) {
  std::vector<Point2> out;
  out.reserve(vertices);
  for (int i = 0; i < vertices; ++i) {
    const double t = kTau * i / vertices;
    const double r = size * (1.0 + depth * std::cos(lobes * t)) *
                     (1.0 + asymmetry * std::cos(t));
    out.push_back({stretch * r * std::cos(t), r * std::sin(t)});
  }
  return out;
}

std::string_view family_name(ShapeFamily family) {
  switch (family) {
    case ShapeFamily::kEllipse: return "ellipse";
    case ShapeFamily::kRoundedRect: return "rrect";
    case ShapeFamily::kStar: return "star";
    case ShapeFamily::kLobedLeaf: return "leaf";
  }
  return "?";
}

std::vector<Point2> unit_outline(const ShapeParams& p) {
  std::vector<Point2> out;
  switch (p.family) {
    case ShapeFamily::kEllipse:
      out = ellipse_outline(1.0, 1.0 / p.aspect);
      break;
    case ShapeFamily::kRoundedRect:
      out = rounded_rect_outline(p.aspect, 1.0, p.corner);
      break;
    case ShapeFamily::kStar:
      out = star_outline(1.0, p.inner, p.points);
      break;
    case ShapeFamily::kLobedLeaf:
      out = lobed_leaf_outline(1.0, p.points, p.depth, p.asymmetry, p.aspect);
      break;
  }
  normalize_radius(out);
  return out;
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

ShapeParams class_params(int class_index, std::uint64_t seed) {
  auto rng = seeded(seed, 0, static_cast<std::uint64_t>(class_index));
  ShapeParams p;
  p.family = static_cast<ShapeFamily>(class_index % 4);
  const int variant = (class_index / 4) % 5;
  switch (p.family) {
    case ShapeFamily::kEllipse:
      p.aspect = uniform(rng, 1.15, 3.0);
      break;
    case ShapeFamily::kRoundedRect:
      p.aspect = uniform(rng, 1.15, 2.6);
      p.corner = uniform(rng, 0.08, 0.45);
      break;
    case ShapeFamily::kStar:
      p.points = 5 + variant;
      p.inner = uniform(rng, 0.35, 0.7);
      break;
    case ShapeFamily::kLobedLeaf:
      p.points = 3 + variant;
      p.depth = uniform(rng, 0.06, 0.22);
      p.asymmetry = uniform(rng, 0.1, 0.35);
      p.aspect = uniform(rng, 1.2, 2.0);
      break;
  }
  return p;
}

RasterImage render_instance(const ShapeParams& params,
                            const SynthConfig& config, std::mt19937_64& rng) {
  auto outline = unit_outline(params);

  constexpr int kHarmonics = 4;
  double amp[kHarmonics];
  double phase[kHarmonics];
  for (int h = 0; h < kHarmonics; ++h) {
    amp[h] = uniform(rng, 0.0, 0.012);
    phase[h] = uniform(rng, 0.0, kTau);
  }
  double wobble_max = 1.0;
  for (auto& p : outline) {
    const double t = std::atan2(p.y, p.x);
    double f = 1.0;
    for (int h = 0; h < kHarmonics; ++h)
      f += amp[h] * std::cos((h + 2) * t + phase[h]);
    p.x *= f;
    p.y *= f;
    wobble_max = std::max(wobble_max, f);
  }

  const double angle = uniform(rng, 0.0, kTau);
  const double scale = uniform(rng, 0.7, 1.3);
  const double radius = config.base_radius * scale * wobble_max;
  const double half = config.canvas / 2.0;
  const double margin = std::max(0.0, half - radius - 4.0);
  const double cx = half + uniform(rng, -margin, margin);
  const double cy = half + uniform(rng, -margin, margin);
  const auto placed = transform_polygon(outline, angle,
                                        config.base_radius * scale, cx, cy);
  const BinaryMask mask =
      rasterize_polygon(placed, config.canvas, config.canvas);

  constexpr double kLeaf = 0.15;
  constexpr double kBackground = 0.95;
  RasterImage img(config.canvas, config.canvas, kBackground);
  for (int y = 0; y < config.canvas; ++y)
    for (int x = 0; x < config.canvas; ++x)
      if (mask.at(x, y)) img.set(x, y, kLeaf);
  return img;
}

std::vector<ManifestRecord> synthesize_benchmark(
    const SynthConfig& config, const std::filesystem::path& out_dir) {
  if (config.classes < 1 || config.db_per_class < 1 ||
      config.query_per_class < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "classes and per-class counts must be >= 1");
  }
  if (config.canvas < 64) {
    throw Error(ErrorCode::kInvalidArgument, "canvas must be >= 64 pixels");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir / "images", ec);
  if (ec) throw Error(ErrorCode::kIo, out_dir.string() + ": " + ec.message());

  const int per_class = config.db_per_class + config.query_per_class;
  const int total = config.classes * per_class;
  std::vector<ManifestRecord> records(total);
  std::vector<std::string> errors(total);

#pragma omp parallel for schedule(dynamic, 4)
  for (int idx = 0; idx < total; ++idx) {
    const int c = idx / per_class;
    const int i = idx % per_class;
    const ShapeParams params = class_params(c, config.seed);
    char name[64];
    std::snprintf(name, sizeof name, "images/c%03d_i%03d.png", c, i);
    char species[64];
    std::snprintf(species, sizeof species, "s%03d_%s", c,
                  std::string(family_name(params.family)).c_str());
    records[idx] = {name, species,
                    i < config.db_per_class ? Split::kDatabase : Split::kQuery};
    try {
      auto rng = seeded(config.seed, static_cast<std::uint64_t>(c) + 1,
                        static_cast<std::uint64_t>(i));
      write_png(out_dir / name, render_instance(params, config, rng));
    } catch (const std::exception& e) {
      errors[idx] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(ErrorCode::kIo, e);

  save_manifest(out_dir / "manifest.csv", records);
  return records;
}

}  // namespace leafshape
