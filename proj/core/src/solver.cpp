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

#include "qpca/solver.hpp"

#include <cmath>
#include <utility>

#include "qpca/errors.hpp"
#include "qpca/orthonormalize.hpp"

namespace qpca {

namespace {

void check_samples(std::span<const QMatrix> samples, const QVector& w) {
  if (samples.empty()) {
    throw ShapeError("solver: empty sample list");
  }
  for (const QMatrix& f : samples) {
    if (f.cols() != w.size()) {
      throw ShapeError("solver: sample column count does not match w");
    }
  }
}

// A* t without materializing the conjugate transpose.
QVector conj_transpose_mul(const QMatrix& a, const QVector& t) {
  const auto& a0 = a.plane(0);
  const auto& a1 = a.plane(1);
  const auto& a2 = a.plane(2);
  const auto& a3 = a.plane(3);
  const auto& t0 = t.plane(0);
  const auto& t1 = t.plane(1);
  const auto& t2 = t.plane(2);
  const auto& t3 = t.plane(3);
  return {a0.transpose() * t0 + a1.transpose() * t1 + a2.transpose() * t2 +
              a3.transpose() * t3,
          a0.transpose() * t1 - a1.transpose() * t0 - a2.transpose() * t3 +
              a3.transpose() * t2,
          a0.transpose() * t2 + a1.transpose() * t3 - a2.transpose() * t0 -
              a3.transpose() * t1,
          a0.transpose() * t3 - a1.transpose() * t2 + a2.transpose() * t1 -
              a3.transpose() * t0};
}

// Replace exactly-zero entries of w by a random quaternion of magnitude
// ~eps so the 0<p<1 surrogate stays defined (its coefficients divide by
// the entry magnitudes of the anchor iterate). Applied to the initial
// vector only: an entry that reaches exact zero during the iteration has
// converged to the sparse boundary, and re-kicking it there costs far
// more objective mass under the L_p geometry than the ascent slack allows.
void perturb_zero_entries(QVector& w, double eps, Rng& rng) {
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w.entry_abs(i) == 0.0) {
      w.set_entry(i, Quaternion(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)) *
                         eps);
    }
  }
}

}  // namespace

void SolverConfig::validate(Eigen::Index n) const {
  if (!(s >= 1.0) || std::isinf(s)) {
    throw ParamError("SolverConfig: s must satisfy s >= 1");
  }
  if (std::isnan(p) || !(p > 0.0)) {
    throw ParamError("SolverConfig: p must satisfy p > 0 or p = inf");
  }
  if (r < 1) {
    throw ParamError("SolverConfig: r must be a positive integer");
  }
  if (n >= 0 && r > n) {
    throw ParamError("SolverConfig: r exceeds the sample column count");
  }
  if (!(tol > 0.0)) {
    throw ParamError("SolverConfig: tol must be positive");
  }
  if (max_iter < 1) {
    throw ParamError("SolverConfig: max_iter must be positive");
  }
  if (!(eps_perturb > 0.0)) {
    throw ParamError("SolverConfig: eps_perturb must be positive");
  }
}

double objective(std::span<const QMatrix> samples, const QVector& w, double s) {
  check_samples(samples, w);
  double total = 0.0;
  for (const QMatrix& f : samples) {
    const QVector y = f * w;
    if (s == 2.0) {
      for (int c = 0; c < 4; ++c) total += y.plane(c).squaredNorm();
    } else if (s == 1.0) {
      total += abs(y).sum();
    } else {
      total += abs(y).array().pow(s).sum();
    }
  }
  return total;
}

QVector compute_v(std::span<const QMatrix> samples, const QVector& w, double s) {
  check_samples(samples, w);
  QVector v(w.size());
  for (const QMatrix& f : samples) {
    const QVector y = f * w;
    if (s == 2.0) {
      // |y|^1 (.) sign(y) == y.
      v += conj_transpose_mul(f, y);
    } else {
      QVector t = sign(y);
      if (s != 1.0) {
        t = entrywise_scale(t, abs(y).array().pow(s - 1.0).matrix());
      }
      v += conj_transpose_mul(f, t);
    }
  }
  return v;
}

QVector update_w(const QVector& v, const QVector& w_prev,
                 const QVector& w_round_init, double p) {
  if (v.is_zero()) {
    throw DegenerateDirectionError("update_w: zero gradient vector");
  }
  if (std::isinf(p)) {
    return sign(v);
  }
  if (p == 1.0) {
    // One-hot on the entry with the largest magnitude; ties take the
    // lowest index.
    const Eigen::VectorXd mags = abs(v);
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < mags.size(); ++i) {
      if (mags[i] > mags[best]) best = i;
    }
    QVector w(v.size());
    w.set_entry(best, sign(v.entry(best)));
    return w;
  }
  QVector u;
  if (p == 2.0) {
    // q = 2: |v| (.) sign(v) is v itself.
    u = v;
  } else if (p > 1.0) {
    const double q = p / (p - 1.0);
    u = entrywise_scale(sign(v), abs(v).array().pow(q - 1.0).matrix());
  } else {
    // 0 < p < 1: u = |w_prev|^(2-p) (.) v, entrywise. The stationary
    // condition of the surrogate contains the unknown entry moduli |w|;
    // approximating them by the current iterate keeps the iteration
    // monotone. Freezing them at the round's initial vector instead pins
    // the support to the initialization and loses monotonicity.
    if (w_prev.size() != v.size()) {
      throw ShapeError("update_w: iterate length mismatch");
    }
    (void)w_round_init;
    const Eigen::VectorXd factor = abs(w_prev).array().pow(2.0 - p).matrix();
    u = entrywise_scale(v, factor);
  }
  if (u.is_zero()) {
    throw DegenerateDirectionError("update_w: update vector vanished");
  }
  return u / lp_norm(u, p);
}

QVector random_unit_lp(Eigen::Index n, double p, Rng& rng) {
  QVector w(n);
  double norm = 0.0;
  do {
    for (int c = 0; c < 4; ++c) {
      for (Eigen::Index i = 0; i < n; ++i) {
        w.plane(c)[i] = rng.uniform(-1.0, 1.0);
      }
    }
    norm = lp_norm(w, p);
  } while (norm == 0.0);
  return w / norm;
}

SingleDirectionResult solve_single(std::span<const QMatrix> samples,
                                   const SolverConfig& config,
                                   const QVector& w_init, Rng& rng) {
  config.validate();
  check_samples(samples, w_init);

  const bool nonconvex = !std::isinf(config.p) && config.p < 1.0;
  SingleDirectionResult out;
  QVector w = w_init;
  if (nonconvex) {
    perturb_zero_entries(w, config.eps_perturb, rng);
  }
  double f_prev = objective(samples, w, config.s);
  out.history.push_back(f_prev);

  int k = 0;
  while (k < config.max_iter) {
    const QVector v = compute_v(samples, w, config.s);
    if (v.is_zero()) {
      throw DegenerateDirectionError("solve_single: direction carries no energy");
    }
    w = update_w(v, w, w_init, config.p);
    const double f = objective(samples, w, config.s);
    out.history.push_back(f);
    ++k;
    if (f_prev == 0.0) {
      // The relative-change denominator is zero; nothing left to gain.
      out.converged = true;
      break;
    }
    const double delta = std::abs(f - f_prev) / std::abs(f_prev);
    f_prev = f;
    if (delta <= config.tol) {
      out.converged = true;
      break;
    }
  }
  out.w = std::move(w);
  out.iters = k;
  return out;
}

SingleDirectionResult solve_single(std::span<const QMatrix> samples,
                                   const SolverConfig& config,
                                   const QVector& w_init) {
  Rng rng(config.seed);
  return solve_single(samples, config, w_init, rng);
}

std::vector<QMatrix> deflate(std::span<const QMatrix> samples_original,
                             const QMatrix& w_partial) {
  std::vector<QMatrix> out;
  out.reserve(samples_original.size());
  if (w_partial.cols() == 0) {
    out.assign(samples_original.begin(), samples_original.end());
    return out;
  }
  const QMatrix w_star = w_partial.conj_transpose();
  for (const QMatrix& f : samples_original) {
    if (f.cols() != w_partial.rows()) {
      throw ShapeError("deflate: sample columns do not match basis rows");
    }
    out.push_back(f - (f * w_partial) * w_star);
  }
  return out;
}

ProjectionResult solve(std::span<const QMatrix> samples,
                       const SolverConfig& config) {
  if (samples.empty()) {
    throw ShapeError("solve: empty sample list");
  }
  const Eigen::Index m = samples[0].rows();
  const Eigen::Index n = samples[0].cols();
  for (const QMatrix& f : samples) {
    if (f.rows() != m || f.cols() != n) {
      throw ShapeError("solve: samples must share dimensions");
    }
  }
  config.validate(n);

  Rng rng(config.seed);
  ProjectionResult result;
  std::vector<QVector> basis;
  std::vector<double> weights;
  std::vector<QMatrix> current(samples.begin(), samples.end());

  constexpr int kMaxRestarts = 3;
  for (int t = 0; t < config.r; ++t) {
    bool accepted = false;
    SingleDirectionResult single;
    QVector w_orth;
    for (int attempt = 0; attempt <= kMaxRestarts && !accepted; ++attempt) {
      const QVector w0 = random_unit_lp(n, config.p, rng);
      try {
        single = solve_single(current, config, w0, rng);
        w_orth = orthonormalize_against(basis, single.w);
        accepted = true;
      } catch (const DegenerateDirectionError&) {
      } catch (const RankDeficiencyError&) {
      }
    }
    if (!accepted) {
      result.truncated = true;
      break;
    }
    // Weight recomputed after orthogonalization, on the deflated samples
    // the direction was extracted from.
    weights.push_back(objective(current, w_orth, config.s));
    basis.push_back(std::move(w_orth));
    result.histories.push_back(std::move(single.history));
    result.iters.push_back(single.iters);
    result.converged.push_back(single.converged);

    if (t + 1 < config.r) {
      QMatrix w_mat(n, static_cast<Eigen::Index>(basis.size()));
      for (size_t j = 0; j < basis.size(); ++j) {
        w_mat.set_col(static_cast<Eigen::Index>(j), basis[j]);
      }
      current = deflate(samples, w_mat);
    }
  }

  result.W = QMatrix(n, static_cast<Eigen::Index>(basis.size()));
  result.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(weights.size()));
  for (size_t j = 0; j < basis.size(); ++j) {
    result.W.set_col(static_cast<Eigen::Index>(j), basis[j]);
    result.weights[static_cast<Eigen::Index>(j)] = weights[j];
  }
  return result;
}

}  // namespace qpca
