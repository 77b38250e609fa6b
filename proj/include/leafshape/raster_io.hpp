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

#ifndef LEAFSHAPE_RASTER_IO_HPP_
#define LEAFSHAPE_RASTER_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "leafshape/image.hpp"

namespace leafshape {

// Loads PNG or binary/ASCII PNM (P2, P3, P5, P6), detected from the file
// contents. Colour is reduced to luminance (0.299 R + 0.587 G + 0.114 B);
// transparent PNG pixels are composited onto white. Throws Io or ParseError.
RasterImage read_image(const std::filesystem::path& path);

// 8-bit grayscale, intensities quantized as round(255 v).
void write_png(const std::filesystem::path& path, const RasterImage& image);
void write_pgm(const std::filesystem::path& path, const RasterImage& image);

std::vector<std::uint8_t> quantize8(const RasterImage& image);

}  // namespace leafshape

#endif  // LEAFSHAPE_RASTER_IO_HPP_
