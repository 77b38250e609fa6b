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

#include "leafshape/image.hpp"

#include <algorithm>
#include <string>

#include "leafshape/error.hpp"

namespace leafshape {
namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "image dimensions must be positive, got " +
                    std::to_string(width) + "x" + std::to_string(height));
  }
}

}  // namespace

RasterImage::RasterImage(int width, int height, double fill)
    : width_(width), height_(height) {
  check_dims(width, height);
  if (fill < 0.0 || fill > 1.0) {
    throw Error(ErrorCode::kInvalidArgument, "intensity outside [0,1]");
  }
  pixels_.assign(static_cast<std::size_t>(width) * height, fill);
}

RasterImage::RasterImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "pixel count does not match width x height");
  }
  if (std::any_of(pixels_.begin(), pixels_.end(),
                  [](double v) { return !(v >= 0.0 && v <= 1.0); })) {
    throw Error(ErrorCode::kInvalidArgument, "intensity outside [0,1]");
  }
}

void RasterImage::set(int x, int y, double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "intensity outside [0,1]");
  }
  pixels_[static_cast<std::size_t>(y) * width_ + x] = v;
}

BinaryMask::BinaryMask(int width, int height)
    : width_(width), height_(height) {
  check_dims(width, height);
  bits_.assign(static_cast<std::size_t>(width) * height, 0);
}

BinaryMask::BinaryMask(int width, int height, std::vector<std::uint8_t> bits)
    : width_(width), height_(height), bits_(std::move(bits)) {
  check_dims(width, height);
  if (bits_.size() != static_cast<std::size_t>(width) * height) {
    throw Error(ErrorCode::kInvalidArgument,
                "bit count does not match width x height");
  }
  for (auto& b : bits_) b = b ? 1 : 0;
}

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(
      std::count_if(bits_.begin(), bits_.end(), [](auto b) { return b != 0; }));
}

BinaryMask translated(const BinaryMask& mask, int dx, int dy, int width,
                      int height) {
  BinaryMask out(width, height);
  for (int y = 0; y < mask.height(); ++y) {
    for (int x = 0; x < mask.width(); ++x) {
      if (mask.at(x, y) && out.contains(x + dx, y + dy)) {
        out.set(x + dx, y + dy);
      }
    }
  }
  return out;
}

BinaryMask rotated90(const BinaryMask& mask) {
  const int w = mask.width();
  const int h = mask.height();
  BinaryMask out(h, w);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (mask.at(x, y)) out.set(h - 1 - y, x);
    }
  }
  return out;
}

}  // namespace leafshape
