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

#include "leafshape/raster_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string>

#include "leafshape/error.hpp"

namespace leafshape {

namespace {

constexpr double kLumaR = 0.299;
constexpr double kLumaG = 0.587;
constexpr double kLumaB = 0.114;

std::vector<std::uint8_t> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class PnmReader {
 public:
  PnmReader(const std::vector<std::uint8_t>& data, std::string name)
      : data_(data), name_(std::move(name)) {}

  RasterImage read() {
    if (data_.size() < 2 || data_[0] != 'P') fail("not a PNM file");
    const char kind = static_cast<char>(data_[1]);
    pos_ = 2;
    if (kind != '2' && kind != '3' && kind != '5' && kind != '6')
      fail(std::string("unsupported PNM variant P") + kind);
    const bool color = kind == '3' || kind == '6';
    const bool binary = kind == '5' || kind == '6';
    const long w = number();
    const long h = number();
    const long maxval = number();
    if (w < 1 || h < 1 || w > 1 << 20 || h > 1 << 20) fail("bad dimensions");
    if (maxval < 1 || maxval > 65535) fail("bad maxval");
    if (binary) {
      if (pos_ >= data_.size() || !std::isspace(data_[pos_]))
        fail("missing separator before raster");
      ++pos_;
    }
    const int channels = color ? 3 : 1;
    const std::size_t count = static_cast<std::size_t>(w) * h;
    std::vector<double> pixels(count);
    const double scale = 1.0 / static_cast<double>(maxval);
    for (std::size_t i = 0; i < count; ++i) {
      double c[3] = {0.0, 0.0, 0.0};
      for (int ch = 0; ch < channels; ++ch) {
        long v = binary ? sample(maxval > 255) : number();
        if (v > maxval) fail("sample exceeds maxval");
        c[ch] = static_cast<double>(v) * scale;
      }
      pixels[i] = color ? kLumaR * c[0] + kLumaG * c[1] + kLumaB * c[2] : c[0];
      if (pixels[i] > 1.0) pixels[i] = 1.0;
    }
    return RasterImage(static_cast<int>(w), static_cast<int>(h),
                       std::move(pixels));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, name_ + ": " + what);
  }

  void skip_space() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(data_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  long number() {
    skip_space();
    if (pos_ >= data_.size() || !std::isdigit(data_[pos_]))
      fail("expected a number");
    long v = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      v = v * 10 + (data_[pos_] - '0');
      if (v > 1L << 30) fail("number too large");
      ++pos_;
    }
    return v;
  }

  long sample(bool wide) {
    const std::size_t need = wide ? 2 : 1;
    if (pos_ + need > data_.size()) fail("truncated raster");
    long v = data_[pos_];
    if (wide) v = (v << 8) | data_[pos_ + 1];
    pos_ += need;
    return v;
  }

  const std::vector<std::uint8_t>& data_;
  std::string name_;
  std::size_t pos_ = 0;
};

RasterImage read_png(const std::vector<std::uint8_t>& data,
                     const std::string& name) {
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&img, data.data(), data.size())) {
    throw Error(ErrorCode::kParseError, name + ": " + img.message);
  }
  const bool color = (img.format & PNG_FORMAT_FLAG_COLOR) != 0;
  img.format = color ? PNG_FORMAT_RGBA : PNG_FORMAT_GA;
  const int channels = color ? 4 : 2;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(img));
  if (!png_image_finish_read(&img, nullptr, buf.data(), 0, nullptr)) {
    const std::string msg = img.message;
    png_image_free(&img);
    throw Error(ErrorCode::kParseError, name + ": " + msg);
  }
  const int w = static_cast<int>(img.width);
  const int h = static_cast<int>(img.height);
  std::vector<double> pixels(static_cast<std::size_t>(w) * h);
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const std::uint8_t* p = buf.data() + i * channels;
    const double luma =
        color ? (kLumaR * p[0] + kLumaG * p[1] + kLumaB * p[2]) / 255.0
              : p[0] / 255.0;
    const double alpha = p[channels - 1] / 255.0;
    pixels[i] = std::min(1.0, alpha * luma + (1.0 - alpha));
  }
  return RasterImage(w, h, std::move(pixels));
}

}  // namespace

RasterImage read_image(const std::filesystem::path& path) {
  const auto data = slurp(path);
  static constexpr std::uint8_t kPngMagic[8] = {0x89, 'P',  'N',  'G',
                                                '\r', '\n', 0x1a, '\n'};
  if (data.size() >= 8 && std::memcmp(data.data(), kPngMagic, 8) == 0)
    return read_png(data, path.string());
  return PnmReader(data, path.string()).read();
}

std::vector<std::uint8_t> quantize8(const RasterImage& image) {
  std::vector<std::uint8_t> out;
  out.reserve(image.pixels().size());
  for (double v : image.pixels())
    out.push_back(static_cast<std::uint8_t>(std::lround(v * 255.0)));
  return out;
}

void write_png(const std::filesystem::path& path, const RasterImage& image) {
  const auto bytes = quantize8(image);
  png_image img;
  std::memset(&img, 0, sizeof img);
  img.version = PNG_IMAGE_VERSION;
  img.width = static_cast<png_uint_32>(image.width());
  img.height = static_cast<png_uint_32>(image.height());
  img.format = PNG_FORMAT_GRAY;
  if (!png_image_write_to_file(&img, path.string().c_str(), 0, bytes.data(), 0,
                               nullptr)) {
    throw Error(ErrorCode::kIo, path.string() + ": " + img.message);
  }
}

void write_pgm(const std::filesystem::path& path, const RasterImage& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out << "P5\n" << image.width() << ' ' << image.height() << "\n255\n";
  const auto bytes = quantize8(image);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace leafshape
