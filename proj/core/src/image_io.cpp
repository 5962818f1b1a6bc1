// Copyright 2026 The qpca Authors.
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

#include "qpca/image_io.hpp"

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <vector>

#include "qpca/errors.hpp"

namespace qpca {

namespace fs = std::filesystem;

namespace {

QMatrix from_rgb8(const std::vector<unsigned char>& rgb, Eigen::Index rows,
                  Eigen::Index cols) {
  QMatrix image(rows, cols);
  for (Eigen::Index y = 0; y < rows; ++y) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      const size_t off = 3 * static_cast<size_t>(y * cols + x);
      image.plane(1)(y, x) = static_cast<double>(rgb[off + 0]);
      image.plane(2)(y, x) = static_cast<double>(rgb[off + 1]);
      image.plane(3)(y, x) = static_cast<double>(rgb[off + 2]);
    }
  }
  return image;
}

std::vector<unsigned char> to_rgb8(const QMatrix& image) {
  const Eigen::Index rows = image.rows();
  const Eigen::Index cols = image.cols();
  std::vector<unsigned char> rgb(3 * static_cast<size_t>(rows * cols));
  for (Eigen::Index y = 0; y < rows; ++y) {
    for (Eigen::Index x = 0; x < cols; ++x) {
      const size_t off = 3 * static_cast<size_t>(y * cols + x);
      for (int c = 0; c < 3; ++c) {
        const double value = std::round(image.plane(c + 1)(y, x));
        rgb[off + static_cast<size_t>(c)] =
            static_cast<unsigned char>(std::clamp(value, 0.0, 255.0));
      }
    }
  }
  return rgb;
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

QMatrix load_png(const fs::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) {
    throw IoError("cannot open image: " + path.string());
  }
  unsigned char header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 ||
      png_sig_cmp(header, 0, 8) != 0) {
    throw FormatError("not a PNG file: " + path.string());
  }

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw IoError("libpng initialization failed");
  }
  std::vector<unsigned char> pixels;
  std::vector<png_bytep> row_ptrs;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("corrupt PNG file: " + path.string());
  }
  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int bit_depth = png_get_bit_depth(png, info);
  const int color_type = png_get_color_type(png, info);
  if (bit_depth != 8 || color_type != PNG_COLOR_TYPE_RGB) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw FormatError("image must be 8-bit RGB: " + path.string());
  }

  pixels.resize(3 * static_cast<size_t>(width) * height);
  row_ptrs.resize(height);
  for (png_uint_32 y = 0; y < height; ++y) {
    row_ptrs[y] = pixels.data() + 3 * static_cast<size_t>(width) * y;
  }
  png_read_image(png, row_ptrs.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return from_rgb8(pixels, static_cast<Eigen::Index>(height),
                   static_cast<Eigen::Index>(width));
}

void save_png(const fs::path& path, const QMatrix& image) {
  const std::vector<unsigned char> rgb = to_rgb8(image);
  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) {
    throw IoError("cannot write image: " + path.string());
  }
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    throw IoError("libpng initialization failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw IoError("PNG write failed: " + path.string());
  }
  png_init_io(png, file.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.cols()),
               static_cast<png_uint_32>(image.rows()), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (Eigen::Index y = 0; y < image.rows(); ++y) {
    png_write_row(png, const_cast<unsigned char*>(
                           rgb.data() + 3 * static_cast<size_t>(image.cols()) *
                                            static_cast<size_t>(y)));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

// Skip PPM whitespace and `#` comments, then parse one unsigned integer.
unsigned parse_ppm_uint(std::istream& in, const fs::path& path) {
  int ch = in.get();
  while (ch != EOF) {
    if (ch == '#') {
      while (ch != EOF && ch != '\n') ch = in.get();
    } else if (!std::isspace(ch)) {
      break;
    }
    ch = in.get();
  }
  if (ch == EOF || !std::isdigit(ch)) {
    throw FormatError("malformed PPM header: " + path.string());
  }
  unsigned value = 0;
  while (ch != EOF && std::isdigit(ch)) {
    value = value * 10 + static_cast<unsigned>(ch - '0');
    ch = in.get();
  }
  if (ch != EOF) in.unget();
  return value;
}

QMatrix load_ppm(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open image: " + path.string());
  }
  char magic[2];
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '6') {
    throw FormatError("not a binary PPM (P6) file: " + path.string());
  }
  const unsigned width = parse_ppm_uint(in, path);
  const unsigned height = parse_ppm_uint(in, path);
  const unsigned maxval = parse_ppm_uint(in, path);
  if (maxval != 255) {
    throw FormatError("PPM maxval must be 255: " + path.string());
  }
  in.get();  // single whitespace byte after the header
  std::vector<unsigned char> rgb(3 * static_cast<size_t>(width) * height);
  in.read(reinterpret_cast<char*>(rgb.data()),
          static_cast<std::streamsize>(rgb.size()));
  if (static_cast<size_t>(in.gcount()) != rgb.size()) {
    throw FormatError("truncated PPM file: " + path.string());
  }
  return from_rgb8(rgb, static_cast<Eigen::Index>(height),
                   static_cast<Eigen::Index>(width));
}

void save_ppm(const fs::path& path, const QMatrix& image) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write image: " + path.string());
  }
  out << "P6\n" << image.cols() << ' ' << image.rows() << "\n255\n";
  const std::vector<unsigned char> rgb = to_rgb8(image);
  out.write(reinterpret_cast<const char*>(rgb.data()),
            static_cast<std::streamsize>(rgb.size()));
  if (!out) {
    throw IoError("short write: " + path.string());
  }
}

bool has_png_magic(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  unsigned char header[8] = {};
  in.read(reinterpret_cast<char*>(header), 8);
  return in && png_sig_cmp(header, 0, 8) == 0;
}

}  // namespace

QMatrix load_image(const fs::path& path) {
  if (!fs::exists(path)) {
    throw IoError("image does not exist: " + path.string());
  }
  // Dispatch on content, not extension; PPM fixtures often carry odd names.
  if (has_png_magic(path)) {
    return load_png(path);
  }
  return load_ppm(path);
}

void save_image(const fs::path& path, const QMatrix& image) {
  const std::string ext = path.extension().string();
  if (ext == ".png") {
    save_png(path, image);
  } else if (ext == ".ppm") {
    save_ppm(path, image);
  } else {
    throw ParamError("save_image: unsupported extension (use .png or .ppm): " +
                     path.string());
  }
}

}  // namespace qpca
