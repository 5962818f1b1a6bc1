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

#ifndef QPCA_SOLVER_HPP
#define QPCA_SOLVER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "qpca/qmatrix.hpp"
#include "qpca/qvector.hpp"
#include "qpca/rng.hpp"

namespace qpca {

// Minorization-maximization solver for the generalized two-dimensional
// quaternion PCA model
//
//   max_w  sum_i ||F_i w||_s^s   s.t.  ||w||_p = 1,
//
// extracting r directions one at a time with deflation, each direction
// orthogonalized against the previous ones. Each MM step has a closed-form
// maximizer for every p regime (0<p<1, p=1, 1<p<inf, p=inf).

struct SolverConfig {
  double s = 2.0;       // objective norm order, s >= 1
  double p = 2.0;       // constraint norm order, p > 0 or +inf
  int r = 1;            // number of projection directions
  double tol = 1e-4;    // relative objective change stopping rule
  int max_iter = 200;   // iteration cap per direction
  std::uint64_t seed = 0;
  double eps_perturb = 1e-8;  // magnitude of the zero-entry perturbation (0<p<1)

  /// Throws ParamError unless s >= 1, p > 0 or p == +inf, r in [1, n],
  /// tol > 0, max_iter >= 1. Pass n < 0 to skip the r <= n check.
  void validate(Eigen::Index n = -1) const;
};

struct SingleDirectionResult {
  QVector w;
  std::vector<double> history;  // objective values f(0), f(1), ...
  int iters = 0;                // MM iterations performed
  bool converged = false;       // false when max_iter was exhausted
};

struct ProjectionResult {
  QMatrix W;                  // n x k orthonormal columns, k <= config.r
  Eigen::VectorXd weights;    // objective value per direction, after
                              // orthogonalization, on the deflated samples
  std::vector<std::vector<double>> histories;
  std::vector<int> iters;
  std::vector<bool> converged;
  bool truncated = false;     // stopped early: repeated degenerate directions

  Eigen::Index rank() const { return W.cols(); }
};

/// sum_i ||F_i w||_s^s with the 2-absolute value inside the norm.
double objective(std::span<const QMatrix> samples, const QVector& w, double s);

/// MM gradient vector v = sum_i F_i* [ |F_i w|^(s-1) (.) sign(F_i w) ].
/// For s = 2 this is sum_i F_i* (F_i w).
QVector compute_v(std::span<const QMatrix> samples, const QVector& w, double s);

/// One closed-form MM update. w_prev is the current iterate; its entry
/// moduli drive the 0<p<1 branch (the other branches depend on v alone).
/// w_round_init is the vector the direction was started from, kept for
/// callers that track it. Throws DegenerateDirectionError when v is
/// identically zero.
QVector update_w(const QVector& v, const QVector& w_prev,
                 const QVector& w_round_init, double p);

/// Seeded initial direction: coefficients uniform in (-1, 1), Lp-normalized.
QVector random_unit_lp(Eigen::Index n, double p, Rng& rng);

/// Run the MM loop from w_init (||w_init||_p = 1) until the relative change
/// of the objective drops to tol or max_iter is hit. rng feeds the zero-entry
/// perturbation of the 0<p<1 branch.
SingleDirectionResult solve_single(std::span<const QMatrix> samples,
                                   const SolverConfig& config,
                                   const QVector& w_init, Rng& rng);
SingleDirectionResult solve_single(std::span<const QMatrix> samples,
                                   const SolverConfig& config,
                                   const QVector& w_init);

/// F_i (I - W W*) for every sample, computed from the originals.
std::vector<QMatrix> deflate(std::span<const QMatrix> samples_original,
                             const QMatrix& w_partial);

/// Full deflating solve (r directions). Directions that stay degenerate after
/// 3 restarts truncate the result; see ProjectionResult::truncated.
ProjectionResult solve(std::span<const QMatrix> samples,
                       const SolverConfig& config);

}  // namespace qpca

#endif  // QPCA_SOLVER_HPP
