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

#ifndef QPCA_NOISE_HPP
#define QPCA_NOISE_HPP

#include <cstdint>

#include "qpca/dataset.hpp"
#include "qpca/qmatrix.hpp"

namespace qpca {

enum class NoiseKind { kBlock, kSaltPepper };

/// Occlude one rectangular block with independent black/white speckle. Side
/// lengths are uniform in [min_block, min(2*min_block, dim)], the position
/// uniform over the image, and each block pixel independently becomes
/// (0,0,0) or (255,255,255) with probability 1/2. Pure function of
/// (image, seed).
QMatrix add_block_noise(const QMatrix& image, std::uint64_t seed,
                        int min_block = 10);

/// Salt-and-pepper: each pixel independently corrupted with the given
/// density; a corrupted pixel becomes black or white on all three channels
/// with probability 1/2 each. Pure function of (image, density, seed).
QMatrix add_salt_pepper(const QMatrix& image, double density,
                        std::uint64_t seed);

/// Corrupt a seeded uniform subset of ceil(fraction * size) samples with the
/// chosen noise, marking their `noisy` flags. `density` feeds the
/// salt-and-pepper model and is ignored for block noise.
Dataset pollute_fraction(const Dataset& dataset, double fraction,
                         NoiseKind kind, std::uint64_t seed,
                         double density = 0.05);

}  // namespace qpca

#endif  // QPCA_NOISE_HPP
