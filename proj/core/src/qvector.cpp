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

#include "qpca/qvector.hpp"

#include <cmath>

#include "qpca/errors.hpp"

namespace qpca {

namespace {
void check_same_size(const QVector& a, const QVector& b, const char* op) {
  if (a.size() != b.size()) {
    throw ShapeError(std::string(op) + ": length mismatch");
  }
}
}  // namespace

QVector& QVector::operator+=(const QVector& b) {
  check_same_size(*this, b, "QVector::operator+=");
  for (int c = 0; c < 4; ++c) planes_[c] += b.planes_[c];
  return *this;
}

QVector& QVector::operator-=(const QVector& b) {
  check_same_size(*this, b, "QVector::operator-=");
  for (int c = 0; c < 4; ++c) planes_[c] -= b.planes_[c];
  return *this;
}

QVector& QVector::operator*=(double c) {
  for (auto& p : planes_) p *= c;
  return *this;
}

QVector QVector::right_scaled(const Quaternion& q) const {
  // Hamilton product per entry with the scalar on the right.
  QVector out(size());
  const auto& a0 = planes_[0];
  const auto& a1 = planes_[1];
  const auto& a2 = planes_[2];
  const auto& a3 = planes_[3];
  out.plane(0) = a0 * q.w0 - a1 * q.w1 - a2 * q.w2 - a3 * q.w3;
  out.plane(1) = a0 * q.w1 + a1 * q.w0 + a2 * q.w3 - a3 * q.w2;
  out.plane(2) = a0 * q.w2 - a1 * q.w3 + a2 * q.w0 + a3 * q.w1;
  out.plane(3) = a0 * q.w3 + a1 * q.w2 - a2 * q.w1 + a3 * q.w0;
  return out;
}

QVector operator+(QVector a, const QVector& b) { return a += b; }
QVector operator-(QVector a, const QVector& b) { return a -= b; }
QVector operator*(QVector a, double c) { return a *= c; }
QVector operator*(double c, QVector a) { return a *= c; }
QVector operator/(QVector a, double c) { return a /= c; }

Eigen::VectorXd abs(const QVector& w) {
  return (w.plane(0).array().square() + w.plane(1).array().square() +
          w.plane(2).array().square() + w.plane(3).array().square())
      .sqrt()
      .matrix();
}

QVector sign(const QVector& w) {
  const Eigen::VectorXd mags = abs(w);
  // 1/|w_i| with zero entries mapped to 0 so sign(0) == 0 exactly.
  const Eigen::ArrayXd inv =
      (mags.array() > 0.0).select(mags.array().inverse(), 0.0);
  QVector out(w.size());
  for (int c = 0; c < 4; ++c) {
    out.plane(c) = (w.plane(c).array() * inv).matrix();
  }
  return out;
}

QVector absq(const QVector& w) {
  const Eigen::VectorXd mags = abs(w);
  return QVector(mags, mags, mags, mags);
}

QVector coeffwise_mul(const QVector& a, const QVector& b) {
  check_same_size(a, b, "coeffwise_mul");
  QVector out(a.size());
  for (int c = 0; c < 4; ++c) {
    out.plane(c) = a.plane(c).cwiseProduct(b.plane(c));
  }
  return out;
}

QVector entrywise_scale(const QVector& w, const Eigen::VectorXd& t) {
  if (w.size() != t.size()) {
    throw ShapeError("entrywise_scale: length mismatch");
  }
  QVector out(w.size());
  for (int c = 0; c < 4; ++c) {
    out.plane(c) = w.plane(c).cwiseProduct(t);
  }
  return out;
}

double lsp_norm(const QVector& w, double s, double p) {
  if (!(s > 0.0)) {
    throw ParamError("lsp_norm: s must be positive");
  }
  if (!(p > 0.0)) {
    throw ParamError("lsp_norm: p must be positive or +inf");
  }
  Eigen::ArrayXd mags;
  if (s == 2.0) {
    mags = abs(w).array();
  } else {
    mags = (w.plane(0).array().abs().pow(s) + w.plane(1).array().abs().pow(s) +
            w.plane(2).array().abs().pow(s) + w.plane(3).array().abs().pow(s))
               .pow(1.0 / s);
  }
  if (std::isinf(p)) {
    return mags.size() == 0 ? 0.0 : mags.maxCoeff();
  }
  if (p == 1.0) {
    return mags.sum();
  }
  if (p == 2.0) {
    return std::sqrt(mags.square().sum());
  }
  return std::pow(mags.pow(p).sum(), 1.0 / p);
}

Quaternion inner(const QVector& w, const QVector& v) {
  check_same_size(w, v, "inner");
  const auto& a0 = w.plane(0);
  const auto& a1 = w.plane(1);
  const auto& a2 = w.plane(2);
  const auto& a3 = w.plane(3);
  const auto& b0 = v.plane(0);
  const auto& b1 = v.plane(1);
  const auto& b2 = v.plane(2);
  const auto& b3 = v.plane(3);
  // conj(w_i) * v_i summed: real coefficients of (a0 - a1 i - a2 j - a3 k)(b0 + b1 i + ...).
  return {a0.dot(b0) + a1.dot(b1) + a2.dot(b2) + a3.dot(b3),
          a0.dot(b1) - a1.dot(b0) - a2.dot(b3) + a3.dot(b2),
          a0.dot(b2) + a1.dot(b3) - a2.dot(b0) - a3.dot(b1),
          a0.dot(b3) - a1.dot(b2) + a2.dot(b1) - a3.dot(b0)};
}

double norm2(const QVector& w) {
  double sum = 0.0;
  for (int c = 0; c < 4; ++c) sum += w.plane(c).squaredNorm();
  return std::sqrt(sum);
}

}  // namespace qpca
