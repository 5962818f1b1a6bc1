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

#include "qpca/qmatrix.hpp"

#include <cmath>

#include "qpca/errors.hpp"

namespace qpca {

namespace {
void check_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(op) + ": shape mismatch");
  }
}
}  // namespace

QMatrix& QMatrix::operator+=(const QMatrix& b) {
  check_same_shape(*this, b, "QMatrix::operator+=");
  for (int c = 0; c < 4; ++c) planes_[c] += b.planes_[c];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& b) {
  check_same_shape(*this, b, "QMatrix::operator-=");
  for (int c = 0; c < 4; ++c) planes_[c] -= b.planes_[c];
  return *this;
}

QMatrix& QMatrix::operator*=(double c) {
  for (auto& p : planes_) p *= c;
  return *this;
}

QMatrix QMatrix::conj_transpose() const {
  return {planes_[0].transpose(), -planes_[1].transpose(),
          -planes_[2].transpose(), -planes_[3].transpose()};
}

QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
QMatrix operator*(QMatrix a, double c) { return a *= c; }
QMatrix operator*(double c, QMatrix a) { return a *= c; }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("QMatrix product: inner dimensions mismatch");
  }
  const auto& a0 = a.plane(0);
  const auto& a1 = a.plane(1);
  const auto& a2 = a.plane(2);
  const auto& a3 = a.plane(3);
  const auto& b0 = b.plane(0);
  const auto& b1 = b.plane(1);
  const auto& b2 = b.plane(2);
  const auto& b3 = b.plane(3);
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
          a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

QVector operator*(const QMatrix& a, const QVector& w) {
  if (a.cols() != w.size()) {
    throw ShapeError("QMatrix*QVector: dimension mismatch");
  }
  const auto& a0 = a.plane(0);
  const auto& a1 = a.plane(1);
  const auto& a2 = a.plane(2);
  const auto& a3 = a.plane(3);
  const auto& b0 = w.plane(0);
  const auto& b1 = w.plane(1);
  const auto& b2 = w.plane(2);
  const auto& b3 = w.plane(3);
  return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
          a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
          a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
          a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

double frobenius_norm(const QMatrix& a) {
  double sum = 0.0;
  for (int c = 0; c < 4; ++c) sum += a.plane(c).squaredNorm();
  return std::sqrt(sum);
}

}  // namespace qpca
