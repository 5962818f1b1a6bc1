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

#ifndef QPCA_IMAGE_IO_HPP
#define QPCA_IMAGE_IO_HPP

#include <filesystem>

#include "qpca/qmatrix.hpp"

namespace qpca {

/// Load an 8-bit RGB image (PNG or binary PPM "P6" with maxval 255) into a
/// pure quaternion matrix: R -> i plane, G -> j plane, B -> k plane, real
/// plane zero. Channel values stay on the integer 0..255 scale.
QMatrix load_image(const std::filesystem::path& path);

/// Write an image as PNG or PPM (chosen by extension .png / .ppm). The real
/// plane is dropped; channels are rounded and clamped to [0, 255].
void save_image(const std::filesystem::path& path, const QMatrix& image);

}  // namespace qpca

#endif  // QPCA_IMAGE_IO_HPP
