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

#ifndef LEAFSHAPE_IMAGE_HPP_
#define LEAFSHAPE_IMAGE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace leafshape {

// Integer pixel coordinate. x is the column, y the row; pixel centers sit on
// integer positions starting at 0.
struct Pixel {
  int x = 0;
  int y = 0;

  friend bool operator==(const Pixel&, const Pixel&) = default;
};

// Row-major grayscale image with intensities in [0, 1].
class RasterImage {
 public:
  RasterImage(int width, int height, double fill = 0.0);
  RasterImage(int width, int height, std::vector<double> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const double> pixels() const { return pixels_; }

  double at(int x, int y) const {
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  void set(int x, int y, double v);

 private:
  int width_;
  int height_;
  std::vector<double> pixels_;
};

// Row-major foreground flags. The canonical shape representation consumed by
// every descriptor.
class BinaryMask {
 public:
  BinaryMask(int width, int height);
  BinaryMask(int width, int height, std::vector<std::uint8_t> bits);

  int width() const { return width_; }
  int height() const { return height_; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  bool contains(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  // Out-of-bounds coordinates read as background.
  bool at(int x, int y) const {
    return contains(x, y) &&
           bits_[static_cast<std::size_t>(y) * width_ + x] != 0;
  }
  void set(int x, int y, bool on = true) {
    bits_[static_cast<std::size_t>(y) * width_ + x] = on ? 1 : 0;
  }

  std::size_t count() const;
  bool empty() const { return count() == 0; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;

 private:
  int width_;
  int height_;
  std::vector<std::uint8_t> bits_;
};

// Copy of `mask` placed at offset (dx, dy) inside a canvas of the given size.
// Pixels falling outside the canvas are dropped.
BinaryMask translated(const BinaryMask& mask, int dx, int dy, int width,
                      int height);

// Exact 90 degree clockwise rotation (in image coordinates, y down).
BinaryMask rotated90(const BinaryMask& mask);

}  // namespace leafshape

#endif  // LEAFSHAPE_IMAGE_HPP_
