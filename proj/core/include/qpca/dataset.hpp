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

#ifndef QPCA_DATASET_HPP
#define QPCA_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "qpca/qmatrix.hpp"

namespace qpca {

/// One labeled color image held as a pure quaternion matrix (R, G, B in the
/// i, j, k planes; real plane zero; values in [0, 255]).
struct Sample {
  std::string label;
  QMatrix image;
  std::string source_path;
  bool noisy = false;
};

/// An ordered collection of samples sharing one image size, with a label
/// index. Order is manifest order; every label occurs at least once.
class Dataset {
 public:
  Dataset() = default;

  /// Appends a sample; the first sample fixes the dataset dimensions.
  /// Throws ShapeError on a dimension mismatch and FormatError when the
  /// image is not a pure quaternion matrix.
  void add(Sample sample);

  size_t size() const { return samples_.size(); }
  bool empty() const { return samples_.empty(); }
  Eigen::Index rows() const { return rows_; }
  Eigen::Index cols() const { return cols_; }

  const Sample& operator[](size_t i) const { return samples_[i]; }
  Sample& operator[](size_t i) { return samples_[i]; }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  /// Labels in order of first appearance.
  const std::vector<std::string>& labels() const { return labels_; }
  /// Sample indices carrying the given label (ascending).
  const std::vector<size_t>& indices_of(const std::string& label) const;

 private:
  std::vector<Sample> samples_;
  std::vector<std::string> labels_;
  std::map<std::string, std::vector<size_t>> by_label_;
  Eigen::Index rows_ = 0;
  Eigen::Index cols_ = 0;
};

/// Load a dataset from a manifest file (one `<label>\t<relative_path>` per
/// line, `#` comments) or from a directory whose immediate subdirectories
/// are class labels. Paths resolve relative to the manifest location.
Dataset load_dataset(const std::filesystem::path& manifest_or_dir);

struct SplitResult {
  Dataset train;
  Dataset test;
  /// Set when the coverage rule left the test side empty.
  bool test_empty = false;
};

/// Seeded train/test split. Every class contributes at least one training
/// sample (classes with a single sample go entirely to train); the global
/// train fraction approximates train_fraction once coverage is satisfied.
/// Order within each side is original dataset order.
SplitResult split(const Dataset& dataset, double train_fraction,
                  std::uint64_t seed);

}  // namespace qpca

#endif  // QPCA_DATASET_HPP
