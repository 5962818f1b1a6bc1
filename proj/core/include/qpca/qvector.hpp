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

#ifndef QPCA_QVECTOR_HPP
#define QPCA_QVECTOR_HPP

#include <Eigen/Dense>
#include <array>
#include <limits>

#include "qpca/quaternion.hpp"

namespace qpca {

/// An n-dimensional quaternion vector stored as four real coefficient planes
/// (structure of planes, not array of quaternions): entry i reconstructs as
/// w0[i] + w1[i]*i + w2[i]*j + w3[i]*k. Immutable-by-convention after
/// construction; all operations are pure.
class QVector {
 public:
  QVector() = default;
  explicit QVector(Eigen::Index n) {
    for (auto& p : planes_) p = Eigen::VectorXd::Zero(n);
  }
  QVector(Eigen::VectorXd p0, Eigen::VectorXd p1, Eigen::VectorXd p2,
          Eigen::VectorXd p3)
      : planes_{std::move(p0), std::move(p1), std::move(p2), std::move(p3)} {}

  static QVector zero(Eigen::Index n) { return QVector(n); }

  Eigen::Index size() const { return planes_[0].size(); }

  const Eigen::VectorXd& plane(int c) const { return planes_[c]; }
  Eigen::VectorXd& plane(int c) { return planes_[c]; }

  Quaternion entry(Eigen::Index i) const {
    return {planes_[0][i], planes_[1][i], planes_[2][i], planes_[3][i]};
  }
  void set_entry(Eigen::Index i, const Quaternion& q) {
    planes_[0][i] = q.w0;
    planes_[1][i] = q.w1;
    planes_[2][i] = q.w2;
    planes_[3][i] = q.w3;
  }

  /// |entry i| (2-absolute value).
  double entry_abs(Eigen::Index i) const {
    return std::sqrt(planes_[0][i] * planes_[0][i] +
                     planes_[1][i] * planes_[1][i] +
                     planes_[2][i] * planes_[2][i] +
                     planes_[3][i] * planes_[3][i]);
  }

  bool is_zero() const {
    for (const auto& p : planes_) {
      if (!p.isZero(0.0)) return false;
    }
    return true;
  }

  QVector& operator+=(const QVector& b);
  QVector& operator-=(const QVector& b);
  QVector& operator*=(double c);
  QVector& operator/=(double c) { return *this *= 1.0 / c; }

  /// Right scalar multiplication by a quaternion, entry-wise w_i * q.
  /// Quaternion vectors form a right module; phases act on the right.
  QVector right_scaled(const Quaternion& q) const;

 private:
  std::array<Eigen::VectorXd, 4> planes_{};
};

QVector operator+(QVector a, const QVector& b);
QVector operator-(QVector a, const QVector& b);
QVector operator*(QVector a, double c);
QVector operator*(double c, QVector a);
QVector operator/(QVector a, double c);

/// Entry-wise 2-absolute values.
Eigen::VectorXd abs(const QVector& w);

/// Entry-wise sign; zero entries stay exactly zero.
QVector sign(const QVector& w);

/// The quaternion vector whose four planes all equal abs(w): the vector
/// counterpart of absQ on the stacked real representation.
QVector absq(const QVector& w);

/// Plane-wise elementwise product: each of the four coefficient planes of a
/// and b multiplied independently (the circled product of the update rules).
QVector coeffwise_mul(const QVector& a, const QVector& b);

/// Scale entry i of w by the real factor t[i] (all four planes alike).
QVector entrywise_scale(const QVector& w, const Eigen::VectorXd& t);

/// L_{s,p} norm (sum_i |w_i|_s^p)^(1/p); s > 0, p > 0 or p == +infinity
/// (then max_i |w_i|_s).
double lsp_norm(const QVector& w, double s, double p);

/// L_p norm with the default s = 2 absolute value.
inline double lp_norm(const QVector& w, double p) { return lsp_norm(w, 2.0, p); }

/// Quaternion inner product w*v = sum_i conj(w_i) v_i.
Quaternion inner(const QVector& w, const QVector& v);

/// L2 norm, sqrt(Real(inner(w, w))).
double norm2(const QVector& w);

constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace qpca

#endif  // QPCA_QVECTOR_HPP
