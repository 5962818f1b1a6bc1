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

#include "qpca/noise.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qpca/errors.hpp"
#include "qpca/rng.hpp"

namespace qpca {

namespace {

void set_pixel(QMatrix& image, Eigen::Index y, Eigen::Index x, double value) {
  image.plane(1)(y, x) = value;
  image.plane(2)(y, x) = value;
  image.plane(3)(y, x) = value;
}

}  // namespace

QMatrix add_block_noise(const QMatrix& image, std::uint64_t seed,
                        int min_block) {
  const Eigen::Index rows = image.rows();
  const Eigen::Index cols = image.cols();
  if (min_block < 1) {
    throw ParamError("add_block_noise: min_block must be positive");
  }
  if (rows < min_block || cols < min_block) {
    throw ParamError("add_block_noise: image smaller than the minimum block");
  }
  Rng rng(seed);
  const auto side = [&](Eigen::Index dim) {
    const Eigen::Index hi = std::min<Eigen::Index>(2 * min_block, dim);
    return min_block +
           static_cast<Eigen::Index>(rng.uniform_int(
               static_cast<std::uint64_t>(hi - min_block + 1)));
  };
  const Eigen::Index height = side(rows);
  const Eigen::Index width = side(cols);
  const Eigen::Index top = static_cast<Eigen::Index>(
      rng.uniform_int(static_cast<std::uint64_t>(rows - height + 1)));
  const Eigen::Index left = static_cast<Eigen::Index>(
      rng.uniform_int(static_cast<std::uint64_t>(cols - width + 1)));

  QMatrix out = image;
  for (Eigen::Index y = top; y < top + height; ++y) {
    for (Eigen::Index x = left; x < left + width; ++x) {
      set_pixel(out, y, x, rng.bernoulli(0.5) ? 255.0 : 0.0);
    }
  }
  return out;
}

QMatrix add_salt_pepper(const QMatrix& image, double density,
                        std::uint64_t seed) {
  if (!(density >= 0.0) || !(density <= 1.0)) {
    throw ParamError("add_salt_pepper: density must lie in [0, 1]");
  }
  Rng rng(seed);
  QMatrix out = image;
  for (Eigen::Index y = 0; y < image.rows(); ++y) {
    for (Eigen::Index x = 0; x < image.cols(); ++x) {
      if (rng.bernoulli(density)) {
        set_pixel(out, y, x, rng.bernoulli(0.5) ? 255.0 : 0.0);
      }
    }
  }
  return out;
}

Dataset pollute_fraction(const Dataset& dataset, double fraction,
                         NoiseKind kind, std::uint64_t seed, double density) {
  if (!(fraction >= 0.0) || !(fraction <= 1.0)) {
    throw ParamError("pollute_fraction: fraction must lie in [0, 1]");
  }
  const size_t count = dataset.size();
  const size_t hits =
      static_cast<size_t>(std::ceil(fraction * static_cast<double>(count)));

  // Partial Fisher-Yates draws `hits` distinct indices.
  Rng rng(seed);
  std::vector<size_t> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = i;
  for (size_t i = 0; i < hits && i + 1 < count; ++i) {
    std::swap(order[i], order[i + rng.uniform_int(count - i)]);
  }
  std::vector<char> hit(count, 0);
  for (size_t i = 0; i < hits && i < count; ++i) hit[order[i]] = 1;

  Dataset out;
  for (size_t i = 0; i < count; ++i) {
    Sample sample = dataset[i];
    if (hit[i]) {
      const std::uint64_t image_seed = derive_seed(seed, i);
      sample.image = kind == NoiseKind::kBlock
                         ? add_block_noise(sample.image, image_seed)
                         : add_salt_pepper(sample.image, density, image_seed);
      sample.noisy = true;
    }
    out.add(std::move(sample));
  }
  return out;
}

}  // namespace qpca
