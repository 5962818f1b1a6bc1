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

#ifndef QPCA_QMATRIX_HPP
#define QPCA_QMATRIX_HPP

#include <Eigen/Dense>
#include <array>

#include "qpca/quaternion.hpp"
#include "qpca/qvector.hpp"

namespace qpca {

/// An m x n quaternion matrix stored as four real planes A0..A3. A pure
/// quaternion matrix (one color image) has plane 0 identically zero.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(Eigen::Index rows, Eigen::Index cols) {
    for (auto& p : planes_) p = Eigen::MatrixXd::Zero(rows, cols);
  }
  QMatrix(Eigen::MatrixXd p0, Eigen::MatrixXd p1, Eigen::MatrixXd p2,
          Eigen::MatrixXd p3)
      : planes_{std::move(p0), std::move(p1), std::move(p2), std::move(p3)} {}

  static QMatrix zero(Eigen::Index rows, Eigen::Index cols) {
    return QMatrix(rows, cols);
  }
  static QMatrix identity(Eigen::Index n) {
    QMatrix out(n, n);
    out.planes_[0] = Eigen::MatrixXd::Identity(n, n);
    return out;
  }
  /// Real matrix promoted to a quaternion matrix (imaginary planes zero).
  static QMatrix from_real(const Eigen::MatrixXd& real) {
    QMatrix out(real.rows(), real.cols());
    out.planes_[0] = real;
    return out;
  }

  Eigen::Index rows() const { return planes_[0].rows(); }
  Eigen::Index cols() const { return planes_[0].cols(); }

  const Eigen::MatrixXd& plane(int c) const { return planes_[c]; }
  Eigen::MatrixXd& plane(int c) { return planes_[c]; }

  Quaternion entry(Eigen::Index i, Eigen::Index j) const {
    return {planes_[0](i, j), planes_[1](i, j), planes_[2](i, j),
            planes_[3](i, j)};
  }
  void set_entry(Eigen::Index i, Eigen::Index j, const Quaternion& q) {
    planes_[0](i, j) = q.w0;
    planes_[1](i, j) = q.w1;
    planes_[2](i, j) = q.w2;
    planes_[3](i, j) = q.w3;
  }

  QVector col(Eigen::Index j) const {
    return {planes_[0].col(j), planes_[1].col(j), planes_[2].col(j),
            planes_[3].col(j)};
  }
  void set_col(Eigen::Index j, const QVector& v) {
    for (int c = 0; c < 4; ++c) planes_[c].col(j) = v.plane(c);
  }

  /// First k columns.
  QMatrix left_cols(Eigen::Index k) const {
    return {planes_[0].leftCols(k), planes_[1].leftCols(k),
            planes_[2].leftCols(k), planes_[3].leftCols(k)};
  }

  bool is_pure() const { return planes_[0].isZero(0.0); }

  QMatrix& operator+=(const QMatrix& b);
  QMatrix& operator-=(const QMatrix& b);
  QMatrix& operator*=(double c);

  QMatrix conj_transpose() const;

 private:
  std::array<Eigen::MatrixXd, 4> planes_{};
};

QMatrix operator+(QMatrix a, const QMatrix& b);
QMatrix operator-(QMatrix a, const QMatrix& b);
QMatrix operator*(QMatrix a, double c);
QMatrix operator*(double c, QMatrix a);

/// Quaternion matrix product; agrees with the real-representation
/// homomorphism (AB)^rep = A^rep B^rep.
QMatrix operator*(const QMatrix& a, const QMatrix& b);

/// Matrix-vector product A w.
QVector operator*(const QMatrix& a, const QVector& w);

inline QMatrix conj_transpose(const QMatrix& a) { return a.conj_transpose(); }

/// Frobenius norm: squared norm is the sum of all 4mn squared coefficients,
/// equal to trace(A* A).
double frobenius_norm(const QMatrix& a);

}  // namespace qpca

#endif  // QPCA_QMATRIX_HPP
