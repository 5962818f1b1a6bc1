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

#include "qpca/pipeline.hpp"

#include <cmath>
#include <utility>

#include "qpca/errors.hpp"

namespace qpca {

Eigen::VectorXd normalize_weights(const Eigen::VectorXd& raw) {
  const Eigen::Index k = raw.size();
  if (k == 0) return raw;
  const double sum = raw.sum();
  if (sum > 0.0) {
    return raw / sum;
  }
  // Fully degenerate training: fall back to uniform weights so weighted
  // classification degrades to the unweighted geometry instead of NaN.
  return Eigen::VectorXd::Constant(k, 1.0 / static_cast<double>(k));
}

Model train(const Dataset& trainset, const SolverConfig& config) {
  if (trainset.empty()) {
    throw ParamError("train: empty dataset");
  }
  config.validate(trainset.cols());

  QMatrix psi(trainset.rows(), trainset.cols());
  for (const Sample& sample : trainset) {
    psi += sample.image;
  }
  psi *= 1.0 / static_cast<double>(trainset.size());

  std::vector<QMatrix> centered;
  centered.reserve(trainset.size());
  for (const Sample& sample : trainset) {
    centered.push_back(sample.image - psi);
  }

  ProjectionResult projection = solve(centered, config);

  Model model;
  model.psi = std::move(psi);
  model.W = std::move(projection.W);
  model.weights_raw = std::move(projection.weights);
  model.weights_norm = normalize_weights(model.weights_raw);
  model.config = config;
  model.label_space = trainset.labels();
  model.truncated = projection.truncated;
  model.solver_iters = std::move(projection.iters);
  model.solver_converged = std::move(projection.converged);
  return model;
}

Model truncated(const Model& model, Eigen::Index r) {
  if (r < 0 || r > model.rank()) {
    throw ParamError("truncated: r out of range");
  }
  Model out = model;
  out.W = model.W.left_cols(r);
  out.weights_raw = model.weights_raw.head(r);
  out.weights_norm = normalize_weights(out.weights_raw);
  out.config.r = static_cast<int>(r);
  return out;
}

QMatrix features(const Model& model, const QMatrix& image, bool weighted) {
  if (image.rows() != model.rows() || image.cols() != model.cols()) {
    throw ShapeError("features: image dimensions do not match the model");
  }
  QMatrix p = (image - model.psi) * model.W;
  if (weighted) {
    for (Eigen::Index t = 0; t < p.cols(); ++t) {
      for (int c = 0; c < 4; ++c) {
        p.plane(c).col(t) *= model.weights_norm[t];
      }
    }
  }
  return p;
}

std::vector<FeatureMatrix> project_gallery(const Model& model,
                                           const Dataset& gallery,
                                           bool weighted) {
  std::vector<FeatureMatrix> out;
  out.reserve(gallery.size());
  for (const Sample& sample : gallery) {
    out.push_back({features(model, sample.image, weighted), sample.label});
  }
  return out;
}

Prediction classify(const Model& model,
                    std::span<const FeatureMatrix> gallery_features,
                    const QMatrix& image, bool weighted) {
  if (gallery_features.empty()) {
    throw ParamError("classify: empty gallery");
  }
  const QMatrix probe = features(model, image, weighted);
  Prediction best;
  double best_distance = -1.0;
  for (size_t i = 0; i < gallery_features.size(); ++i) {
    const double distance = frobenius_norm(gallery_features[i].P - probe);
    if (best_distance < 0.0 || distance < best_distance) {
      best_distance = distance;
      best = {gallery_features[i].label, i, distance};
    }
  }
  return best;
}

QMatrix reconstruct(const Model& model, const QMatrix& image,
                    Eigen::Index r_used) {
  if (r_used < 0 || r_used > model.rank()) {
    throw ParamError("reconstruct: r_used out of range");
  }
  if (r_used == 0) {
    return model.psi;
  }
  const QMatrix w_r = model.W.left_cols(r_used);
  const QMatrix centered = image - model.psi;
  return (centered * w_r) * w_r.conj_transpose() + model.psi;
}

double reconstruction_error(const Model& model,
                            std::span<const QMatrix> clean_samples,
                            Eigen::Index r_used) {
  if (clean_samples.empty()) {
    throw ParamError("reconstruction_error: no clean samples");
  }
  if (r_used < 0 || r_used > model.rank()) {
    throw ParamError("reconstruction_error: r_used out of range");
  }
  const QMatrix w_r = model.W.left_cols(r_used);
  const QMatrix w_r_star = w_r.conj_transpose();
  double total = 0.0;
  for (const QMatrix& clean : clean_samples) {
    if (r_used == 0) {
      total += frobenius_norm(clean);
    } else {
      total += frobenius_norm(clean - (clean * w_r) * w_r_star);
    }
  }
  return total / static_cast<double>(clean_samples.size());
}

double evaluate_accuracy(const Model& model, const Dataset& gallery,
                         const Dataset& probes, bool weighted) {
  if (probes.empty()) {
    throw ParamError("evaluate_accuracy: empty probe set");
  }
  const std::vector<FeatureMatrix> gallery_features =
      project_gallery(model, gallery, weighted);
  size_t correct = 0;
  for (const Sample& probe : probes) {
    const Prediction prediction =
        classify(model, gallery_features, probe.image, weighted);
    if (prediction.label == probe.label) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(probes.size());
}

}  // namespace qpca
