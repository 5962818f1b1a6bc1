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

#ifndef QPCA_MODEL_IO_HPP
#define QPCA_MODEL_IO_HPP

#include <filesystem>

#include "qpca/pipeline.hpp"

namespace qpca {

// Model file layout, all integers and doubles little-endian:
//   magic "QPCA" | version u16 | m u32 | n u32 | r u32
//   psi planes 0..3 (m*n doubles each, row-major)
//   W planes 0..3 (n*r doubles each, row-major)
//   weights_raw (r doubles)
//   metadata length u32 | UTF-8 "key=value\n" lines (config and labels)
//   CRC-32 (u32) of every preceding byte.

inline constexpr std::uint16_t kModelFormatVersion = 1;

/// Lossless save: every plane byte-identical after a round trip.
void save_model(const Model& model, const std::filesystem::path& path);

/// Throws FormatError on bad magic, pattern, or checksum; a version above
/// kModelFormatVersion fails before any field is read.
Model load_model(const std::filesystem::path& path);

}  // namespace qpca

#endif  // QPCA_MODEL_IO_HPP
