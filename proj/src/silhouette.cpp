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

#include "leafshape/silhouette.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "leafshape/error.hpp"
#include "leafshape/kernels.hpp"

namespace leafshape {
namespace {

// Clockwise on screen (y grows downwards): E, SE, S, SW, W, NW, N, NE.
constexpr std::array<Pixel, 8> kRing = {{{1, 0},
                                         {1, 1},
                                         {0, 1},
                                         {-1, 1},
                                         {-1, 0},
                                         {-1, -1},
                                         {0, -1},
                                         {1, -1}}};
constexpr int kWest = 4;

int ring_index(int dx, int dy) {
  for (int d = 0; d < 8; ++d) {
    if (kRing[d].x == dx && kRing[d].y == dy) return d;
  }
  return -1;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

double chord_length(const std::vector<Pixel>& pts, std::size_t k) {
  const std::size_t n = pts.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Pixel& a = pts[i];
    const Pixel& b = pts[(i + k) % n];
    sum += std::hypot(static_cast<double>(b.x - a.x),
                      static_cast<double>(b.y - a.y));
  }
  return sum / static_cast<double>(k);
}

}  // namespace

BinaryMask binarize(const RasterImage& image, double threshold,
                    bool foreground_is_dark) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "threshold must lie in (0,1), got " + std::to_string(threshold));
  }
  BinaryMask mask(image.width(), image.height());
  bool any = false;
  for (int y = 0; y < image.height(); ++y) {
    for (int x = 0; x < image.width(); ++x) {
      const double v = image.at(x, y);
      const bool on = foreground_is_dark ? v < threshold : v >= threshold;
      if (on) {
        mask.set(x, y);
        any = true;
      }
    }
  }
  if (!any) {
    throw Error(ErrorCode::kAllBackground,
                "no pixel passes the threshold; wrong polarity?");
  }
  return mask;
}

BinaryMask largest_component(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<int> label(static_cast<std::size_t>(w) * h, 0);
  std::deque<Pixel> queue;
  int next = 0;
  int best = 0;
  std::size_t best_size = 0;
  // Row-major scan: the first pixel reached of each component is its minimal
  // row-major pixel, so keeping the earlier label on ties implements the
  // tie rule.
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t idx = static_cast<std::size_t>(y) * w + x;
      if (!mask.at(x, y) || label[idx] != 0) continue;
      ++next;
      std::size_t size = 0;
      label[idx] = next;
      queue.push_back({x, y});
      while (!queue.empty()) {
        const Pixel p = queue.front();
        queue.pop_front();
        ++size;
        for (const auto& d : kRing) {
          const int nx = p.x + d.x;
          const int ny = p.y + d.y;
          if (!mask.at(nx, ny)) continue;
          auto& l = label[static_cast<std::size_t>(ny) * w + nx];
          if (l == 0) {
            l = next;
            queue.push_back({nx, ny});
          }
        }
      }
      if (size > best_size) {
        best_size = size;
        best = next;
      }
    }
  }
  if (best == 0) {
    throw Error(ErrorCode::kAllBackground, "mask has no foreground pixel");
  }
  BinaryMask out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (label[static_cast<std::size_t>(y) * w + x] == best) out.set(x, y);
    }
  }
  return out;
}

Contour trace_contour(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  Pixel start{-1, -1};
  for (int y = 0; y < h && start.x < 0; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) {
        start = {x, y};
        break;
      }
    }
  }
  if (start.x < 0) {
    throw Error(ErrorCode::kAllBackground, "mask has no foreground pixel");
  }

  // One Moore step: sweep clockwise from the backtrack direction and return
  // the first foreground neighbour together with the new backtrack direction
  // (pointing at the background pixel examined just before it).
  struct Step {
    Pixel next;
    int back;
  };
  auto step = [&](Pixel cur, int back) -> std::optional<Step> {
    for (int k = 1; k <= 8; ++k) {
      const int d = (back + k) % 8;
      const Pixel p{cur.x + kRing[d].x, cur.y + kRing[d].y};
      if (!mask.at(p.x, p.y)) continue;
      const int prev = (d + 7) % 8;
      const Pixel b{cur.x + kRing[prev].x, cur.y + kRing[prev].y};
      return Step{p, ring_index(b.x - p.x, b.y - p.y)};
    }
    return std::nullopt;
  };

  const auto first = step(start, kWest);
  if (!first) {
    throw Error(ErrorCode::kDegenerateShape,
                "single-pixel component has no closed boundary");
  }

  Contour contour;
  contour.points.push_back(start);
  Pixel cur = first->next;
  int back = first->back;
  const std::size_t limit = 4 * static_cast<std::size_t>(w) * h + 8;
  while (true) {
    if (cur == start) {
      const auto s = step(cur, back);
      // The trace is periodic in (pixel, backtrack); re-entering the first
      // transition closes the loop.
      if (s->next == first->next && s->back == first->back) break;
    }
    contour.points.push_back(cur);
    if (contour.points.size() > limit) {
      throw Error(ErrorCode::kDegenerateShape, "contour trace did not close");
    }
    const auto s = step(cur, back);
    cur = s->next;
    back = s->back;
  }

  // Twice the signed area enclosed by the path; zero means the path only
  // walks out and back along itself.
  std::int64_t twice_area = 0;
  const auto& pts = contour.points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Pixel& a = pts[i];
    const Pixel& b = pts[(i + 1) % pts.size()];
    twice_area += static_cast<std::int64_t>(a.x) * b.y -
                  static_cast<std::int64_t>(b.x) * a.y;
  }
  if (twice_area == 0) {
    throw Error(ErrorCode::kDegenerateShape,
                "boundary encloses no area (one pixel wide line)");
  }
  return contour;
}

CentroidFrame centroid_frame(const BinaryMask& mask) {
  std::int64_t n = 0;
  std::int64_t sx = 0;
  std::int64_t sy = 0;
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (!mask.at(x, y)) continue;
      ++n;
      sx += x;
      sy += y;
    }
  }
  if (n == 0) {
    throw Error(ErrorCode::kAllBackground, "mask has no foreground pixel");
  }
  CentroidFrame f;
  f.anchor_x = floor_div(sx, n);
  f.anchor_y = floor_div(sy, n);
  f.frac_x = static_cast<double>(sx - f.anchor_x * n) / static_cast<double>(n);
  f.frac_y = static_cast<double>(sy - f.anchor_y * n) / static_cast<double>(n);
  return f;
}

double contour_perimeter(const Contour& contour) {
  const auto& pts = contour.points;
  const std::size_t k = std::max<std::size_t>(1, std::min<std::size_t>(4, pts.size() / 16));
  return 2.0 * chord_length(pts, k) - chord_length(pts, 2 * k) +
         std::numbers::pi;
}

ShapeGeometry measure(const BinaryMask& mask, const Contour& contour) {
  if (contour.points.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty contour");
  }
  const auto raw = kernels::raw_moments(mask);
  ShapeGeometry g;
  g.area = raw.count;
  g.centroid = {static_cast<double>(raw.sum_x) / static_cast<double>(raw.count),
                static_cast<double>(raw.sum_y) / static_cast<double>(raw.count)};
  g.frame = centroid_frame(mask);
  g.perimeter = contour_perimeter(contour);

  g.r_max = 0.0;
  g.r_min = std::numeric_limits<double>::infinity();
  for (const auto& p : contour.points) {
    if (!mask.at(p.x, p.y)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "contour point outside the mask foreground");
    }
    const double dx = g.frame.dx(p.x);
    const double dy = g.frame.dy(p.y);
    const double r = std::sqrt(dx * dx + dy * dy);
    g.r_max = std::max(g.r_max, r);
    g.r_min = std::min(g.r_min, r);
  }
  if (!(g.r_min > 0.0)) {
    throw Error(ErrorCode::kDegenerateShape,
                "centroid lies on the boundary (r_min = 0)");
  }

  const auto mu = kernels::central_moments(mask, g.frame);
  const double theta = 0.5 * std::atan2(2.0 * mu[1][1], mu[2][0] - mu[0][2]);
  const double ux = std::cos(theta);
  const double uy = std::sin(theta);
  double u_lo = std::numeric_limits<double>::infinity();
  double u_hi = -u_lo;
  double v_lo = u_lo;
  double v_hi = -u_lo;
  for (const auto& p : contour.points) {
    const double dx = g.frame.dx(p.x);
    const double dy = g.frame.dy(p.y);
    const double u = dx * ux + dy * uy;
    const double v = -dx * uy + dy * ux;
    u_lo = std::min(u_lo, u);
    u_hi = std::max(u_hi, u);
    v_lo = std::min(v_lo, v);
    v_hi = std::max(v_hi, v);
  }
  // Extents span pixel footprints, not just pixel centers.
  const double eu = u_hi - u_lo + 1.0;
  const double ev = v_hi - v_lo + 1.0;
  g.length_l2 = std::max(eu, ev);
  g.width_l1 = std::min(eu, ev);
  return g;
}

Silhouette extract_silhouette(const BinaryMask& mask) {
  BinaryMask cleaned = largest_component(mask);
  Contour contour = trace_contour(cleaned);
  ShapeGeometry geometry = measure(cleaned, contour);
  return {std::move(cleaned), std::move(contour), geometry};
}

Silhouette extract_silhouette(const RasterImage& image, double threshold,
                              bool foreground_is_dark) {
  return extract_silhouette(binarize(image, threshold, foreground_is_dark));
}

}  // namespace leafshape
