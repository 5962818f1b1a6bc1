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

#include "qpca/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "qpca/errors.hpp"
#include "qpca/image_io.hpp"
#include "qpca/rng.hpp"

namespace qpca {

namespace fs = std::filesystem;

void Dataset::add(Sample sample) {
  if (!sample.image.is_pure()) {
    throw FormatError("Dataset: image is not a pure quaternion matrix");
  }
  if (samples_.empty()) {
    rows_ = sample.image.rows();
    cols_ = sample.image.cols();
  } else if (sample.image.rows() != rows_ || sample.image.cols() != cols_) {
    throw ShapeError("Dataset: image dimensions differ from " +
                     std::to_string(rows_) + "x" + std::to_string(cols_) +
                     " (offending file: " + sample.source_path + ")");
  }
  auto [it, inserted] = by_label_.try_emplace(sample.label);
  if (inserted) labels_.push_back(sample.label);
  it->second.push_back(samples_.size());
  samples_.push_back(std::move(sample));
}

const std::vector<size_t>& Dataset::indices_of(const std::string& label) const {
  static const std::vector<size_t> kEmpty;
  const auto it = by_label_.find(label);
  return it == by_label_.end() ? kEmpty : it->second;
}

namespace {

Dataset load_from_manifest(const fs::path& manifest) {
  std::ifstream in(manifest);
  if (!in) {
    throw IoError("cannot open manifest: " + manifest.string());
  }
  const fs::path base = manifest.parent_path();
  Dataset dataset;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size()) {
      throw FormatError("manifest " + manifest.string() + ":" +
                        std::to_string(lineno) +
                        ": expected <label>\\t<relative_path>");
    }
    const std::string label = line.substr(0, tab);
    const fs::path rel = line.substr(tab + 1);
    const fs::path full = rel.is_absolute() ? rel : base / rel;
    dataset.add({label, load_image(full), full.string(), false});
  }
  if (dataset.empty()) {
    throw FormatError("manifest " + manifest.string() + " lists no images");
  }
  return dataset;
}

Dataset load_from_directory(const fs::path& root) {
  // Immediate subdirectories are class labels; files inside them are the
  // class images, taken in lexicographic order for determinism.
  std::vector<fs::path> class_dirs;
  for (const auto& entry : fs::directory_iterator(root)) {
    if (entry.is_directory()) class_dirs.push_back(entry.path());
  }
  std::sort(class_dirs.begin(), class_dirs.end());
  if (class_dirs.empty()) {
    throw FormatError("dataset directory " + root.string() +
                      " has no class subdirectories");
  }
  Dataset dataset;
  for (const auto& dir : class_dirs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) {
      throw FormatError("dataset class directory " + dir.string() +
                        " is empty");
    }
    for (const auto& file : files) {
      dataset.add({dir.filename().string(), load_image(file), file.string(),
                   false});
    }
  }
  return dataset;
}

}  // namespace

Dataset load_dataset(const fs::path& manifest_or_dir) {
  if (fs::is_directory(manifest_or_dir)) {
    return load_from_directory(manifest_or_dir);
  }
  if (!fs::exists(manifest_or_dir)) {
    throw IoError("dataset path does not exist: " + manifest_or_dir.string());
  }
  return load_from_manifest(manifest_or_dir);
}

SplitResult split(const Dataset& dataset, double train_fraction,
                  std::uint64_t seed) {
  if (dataset.empty()) {
    throw ParamError("split: empty dataset");
  }
  if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
    throw ParamError("split: train_fraction must lie in (0, 1)");
  }

  const size_t count = dataset.size();
  std::vector<size_t> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = i;
  Rng rng(seed);
  // Fisher-Yates.
  for (size_t i = count; i > 1; --i) {
    std::swap(order[i - 1], order[rng.uniform_int(i)]);
  }

  // Coverage first: the earliest shuffled sample of each class trains.
  std::vector<char> to_train(count, 0);
  std::set<std::string> seen;
  size_t train_count = 0;
  for (const size_t idx : order) {
    if (seen.insert(dataset[idx].label).second) {
      to_train[idx] = 1;
      ++train_count;
    }
  }
  const size_t target = std::max<size_t>(
      train_count, static_cast<size_t>(
                       std::lround(train_fraction * static_cast<double>(count))));
  for (const size_t idx : order) {
    if (train_count >= target) break;
    if (!to_train[idx]) {
      to_train[idx] = 1;
      ++train_count;
    }
  }

  SplitResult out;
  for (size_t i = 0; i < count; ++i) {
    (to_train[i] ? out.train : out.test).add(dataset[i]);
  }
  out.test_empty = out.test.empty();
  return out;
}

}  // namespace qpca
