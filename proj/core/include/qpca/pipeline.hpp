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

#ifndef QPCA_PIPELINE_HPP
#define QPCA_PIPELINE_HPP

#include <span>
#include <string>
#include <vector>

#include "qpca/dataset.hpp"
#include "qpca/qmatrix.hpp"
#include "qpca/solver.hpp"

namespace qpca {

/// A trained projection model: training mean, orthonormal basis, raw and
/// normalized direction weights, the solver configuration it was built with,
/// and the label space of the training set. Immutable after train().
struct Model {
  QMatrix psi;                    // training mean, m x n
  QMatrix W;                      // n x k orthonormal basis, k <= config.r
  Eigen::VectorXd weights_raw;    // objective value per direction
  Eigen::VectorXd weights_norm;   // weights_raw / sum; uniform if sum == 0
  SolverConfig config;
  std::vector<std::string> label_space;
  bool truncated = false;         // solver stopped early on degeneracy
  // Per-direction solver diagnostics (not persisted by save_model).
  std::vector<int> solver_iters;
  std::vector<bool> solver_converged;

  Eigen::Index rows() const { return psi.rows(); }
  Eigen::Index cols() const { return psi.cols(); }
  Eigen::Index rank() const { return W.cols(); }
};

/// Feature matrix of one image: P = (F - psi) W, columns optionally scaled
/// by the normalized weights. Carries the owning sample's label when it has
/// one.
struct FeatureMatrix {
  QMatrix P;
  std::string label;
};

/// Mean-center the training set and extract the projection basis.
Model train(const Dataset& trainset, const SolverConfig& config);

/// Normalize raw weights: f / sum(f), or uniform 1/k when sum(f) == 0.
Eigen::VectorXd normalize_weights(const Eigen::VectorXd& raw);

/// Model restricted to its first r directions (weights renormalized).
Model truncated(const Model& model, Eigen::Index r);

/// P = (F - psi) W; weighted scales column t by weights_norm[t].
QMatrix features(const Model& model, const QMatrix& image, bool weighted);

/// Project every gallery sample once; classification reuses the result.
std::vector<FeatureMatrix> project_gallery(const Model& model,
                                           const Dataset& gallery,
                                           bool weighted);

struct Prediction {
  std::string label;
  size_t gallery_index = 0;
  double distance = 0.0;
};

/// 1-nearest-neighbor in quaternion Frobenius distance between feature
/// matrices. The gallery must have been projected with the same `weighted`
/// flag. Ties take the lowest gallery index.
Prediction classify(const Model& model,
                    std::span<const FeatureMatrix> gallery_features,
                    const QMatrix& image, bool weighted);

/// F_rec = (F - psi) W_r W_r* + psi using the first r_used directions of the
/// unweighted basis.
QMatrix reconstruct(const Model& model, const QMatrix& image,
                    Eigen::Index r_used);

/// (1/l) sum_i ||F_i (I - W_r W_r*)||_F over raw clean samples (the metric
/// applies the projector to the uncentered images).
double reconstruction_error(const Model& model,
                            std::span<const QMatrix> clean_samples,
                            Eigen::Index r_used);

/// Fraction of probes whose 1NN label matches their ground truth.
double evaluate_accuracy(const Model& model, const Dataset& gallery,
                         const Dataset& probes, bool weighted);

}  // namespace qpca

#endif  // QPCA_PIPELINE_HPP
