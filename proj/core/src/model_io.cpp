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

#include "qpca/model_io.hpp"

#include <zlib.h>

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "qpca/errors.hpp"

namespace qpca {

namespace {

constexpr char kMagic[4] = {'Q', 'P', 'C', 'A'};

class Writer {
 public:
  void u16(std::uint16_t v) { le_bytes(v, 2); }
  void u32(std::uint32_t v) { le_bytes(v, 4); }
  void f64(double v) { le_bytes(std::bit_cast<std::uint64_t>(v), 8); }
  void raw(const void* data, size_t n) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    buffer_.insert(buffer_.end(), bytes, bytes + n);
  }
  void plane_row_major(const Eigen::MatrixXd& m) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) {
        f64(m(i, j));
      }
    }
  }
  const std::vector<unsigned char>& buffer() const { return buffer_; }

 private:
  void le_bytes(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) {
      buffer_.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
    }
  }
  std::vector<unsigned char> buffer_;
};

class Reader {
 public:
  Reader(const unsigned char* data, size_t size) : data_(data), size_(size) {}

  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  double f64() { return std::bit_cast<double>(le(8)); }
  std::string bytes(size_t n) {
    need(n);
    std::string out(reinterpret_cast<const char*>(data_ + pos_), n);
    pos_ += n;
    return out;
  }
  Eigen::MatrixXd plane_row_major(Eigen::Index rows, Eigen::Index cols) {
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        m(i, j) = f64();
      }
    }
    return m;
  }

 private:
  void need(size_t n) const {
    if (pos_ + n > size_) {
      throw FormatError("model file truncated");
    }
  }
  std::uint64_t le(int n) {
    need(static_cast<size_t>(n));
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) {
      v |= static_cast<std::uint64_t>(data_[pos_ + static_cast<size_t>(i)])
           << (8 * i);
    }
    pos_ += static_cast<size_t>(n);
    return v;
  }
  const unsigned char* data_;
  size_t size_;
  size_t pos_ = 0;
};

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(text);
}

std::string encode_metadata(const Model& model) {
  std::string meta;
  meta += "s=" + format_double(model.config.s) + "\n";
  meta += "p=" + format_double(model.config.p) + "\n";
  meta += "r=" + std::to_string(model.config.r) + "\n";
  meta += "tol=" + format_double(model.config.tol) + "\n";
  meta += "max_iter=" + std::to_string(model.config.max_iter) + "\n";
  meta += "seed=" + std::to_string(model.config.seed) + "\n";
  meta += "eps_perturb=" + format_double(model.config.eps_perturb) + "\n";
  meta += std::string("truncated=") + (model.truncated ? "1" : "0") + "\n";
  for (const std::string& label : model.label_space) {
    meta += "label=" + label + "\n";
  }
  return meta;
}

void decode_metadata(const std::string& meta, Model& model) {
  size_t start = 0;
  while (start < meta.size()) {
    size_t end = meta.find('\n', start);
    if (end == std::string::npos) end = meta.size();
    const std::string line = meta.substr(start, end - start);
    start = end + 1;
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw FormatError("model metadata line without '=': " + line);
    }
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "s") {
        model.config.s = parse_double(value);
      } else if (key == "p") {
        model.config.p = parse_double(value);
      } else if (key == "r") {
        model.config.r = std::stoi(value);
      } else if (key == "tol") {
        model.config.tol = parse_double(value);
      } else if (key == "max_iter") {
        model.config.max_iter = std::stoi(value);
      } else if (key == "seed") {
        model.config.seed = std::stoull(value);
      } else if (key == "eps_perturb") {
        model.config.eps_perturb = parse_double(value);
      } else if (key == "truncated") {
        model.truncated = value == "1";
      } else if (key == "label") {
        model.label_space.push_back(value);
      }
      // Unknown keys are skipped so minor additions stay readable.
    } catch (const std::exception&) {
      throw FormatError("model metadata value unparsable: " + line);
    }
  }
}

}  // namespace

void save_model(const Model& model, const std::filesystem::path& path) {
  Writer writer;
  writer.raw(kMagic, 4);
  writer.u16(kModelFormatVersion);
  writer.u32(static_cast<std::uint32_t>(model.rows()));
  writer.u32(static_cast<std::uint32_t>(model.cols()));
  writer.u32(static_cast<std::uint32_t>(model.rank()));
  for (int c = 0; c < 4; ++c) writer.plane_row_major(model.psi.plane(c));
  for (int c = 0; c < 4; ++c) writer.plane_row_major(model.W.plane(c));
  for (Eigen::Index t = 0; t < model.weights_raw.size(); ++t) {
    writer.f64(model.weights_raw[t]);
  }
  const std::string meta = encode_metadata(model);
  writer.u32(static_cast<std::uint32_t>(meta.size()));
  writer.raw(meta.data(), meta.size());

  const auto& body = writer.buffer();
  const auto crc = static_cast<std::uint32_t>(
      crc32(0L, body.data(), static_cast<uInt>(body.size())));

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write model file: " + path.string());
  }
  out.write(reinterpret_cast<const char*>(body.data()),
            static_cast<std::streamsize>(body.size()));
  unsigned char crc_bytes[4];
  for (int i = 0; i < 4; ++i) {
    crc_bytes[i] = static_cast<unsigned char>((crc >> (8 * i)) & 0xFF);
  }
  out.write(reinterpret_cast<const char*>(crc_bytes), 4);
  if (!out) {
    throw IoError("short write: " + path.string());
  }
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open model file: " + path.string());
  }
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 4 + 2 + 12 + 4) {
    throw FormatError("model file truncated: " + path.string());
  }
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("bad model magic (expected QPCA): " + path.string());
  }
  // Version gates everything else: a file from a newer major version must
  // fail as such, with no partial load and no checksum guesswork.
  const std::uint16_t version =
      static_cast<std::uint16_t>(bytes[4] | (bytes[5] << 8));
  if (version > kModelFormatVersion) {
    throw FormatError("model format version " + std::to_string(version) +
                      " is newer than supported version " +
                      std::to_string(kModelFormatVersion));
  }
  // Checksum covers everything before the trailing 4 bytes.
  const size_t body_size = bytes.size() - 4;
  std::uint32_t stored_crc = 0;
  for (int i = 0; i < 4; ++i) {
    stored_crc |= static_cast<std::uint32_t>(bytes[body_size + static_cast<size_t>(i)])
                  << (8 * i);
  }
  const auto actual_crc = static_cast<std::uint32_t>(
      crc32(0L, bytes.data(), static_cast<uInt>(body_size)));
  if (stored_crc != actual_crc) {
    throw FormatError("model checksum mismatch: " + path.string());
  }

  Reader reader(bytes.data(), body_size);
  reader.bytes(4);  // magic, verified above
  reader.u16();     // version, verified above
  const Eigen::Index m = reader.u32();
  const Eigen::Index n = reader.u32();
  const Eigen::Index r = reader.u32();

  Model model;
  model.psi = QMatrix(m, n);
  for (int c = 0; c < 4; ++c) model.psi.plane(c) = reader.plane_row_major(m, n);
  model.W = QMatrix(n, r);
  for (int c = 0; c < 4; ++c) model.W.plane(c) = reader.plane_row_major(n, r);
  model.weights_raw = Eigen::VectorXd(r);
  for (Eigen::Index t = 0; t < r; ++t) model.weights_raw[t] = reader.f64();
  const std::uint32_t meta_size = reader.u32();
  decode_metadata(reader.bytes(meta_size), model);
  model.weights_norm = normalize_weights(model.weights_raw);
  return model;
}

}  // namespace qpca
