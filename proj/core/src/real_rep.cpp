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

#include "qpca/real_rep.hpp"

#include <cmath>

#include "qpca/errors.hpp"

namespace qpca {

namespace {

// Sign of plane b inside block (r, c) of the representation: block (r, c)
// holds kBlockSign[r][c] * A_{kBlockPlane[r][c]}.
constexpr int kBlockPlane[4][4] = {
    {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr double kBlockSign[4][4] = {
    {1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};

}  // namespace

RealMatRep real_rep(const QMatrix& a) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  RealMatRep rep(4 * m, 4 * n);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      rep.block(r * m, c * n, m, n) =
          kBlockSign[r][c] * a.plane(kBlockPlane[r][c]);
    }
  }
  return rep;
}

RealVecRep real_rep(const QVector& w) {
  const Eigen::Index n = w.size();
  RealVecRep rep(4 * n);
  for (int c = 0; c < 4; ++c) rep.segment(c * n, n) = w.plane(c);
  return rep;
}

QMatrix qmatrix_from_real_rep(const RealMatRep& rep) {
  if (rep.rows() % 4 != 0 || rep.cols() % 4 != 0) {
    throw FormatError("real representation: dimensions not divisible by 4");
  }
  const Eigen::Index m = rep.rows() / 4;
  const Eigen::Index n = rep.cols() / 4;
  QMatrix out(m, n);
  for (int c = 0; c < 4; ++c) out.plane(c) = rep.block(c * m, 0, m, n);

  const double scale = rep.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * std::max(scale, 1.0);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      const Eigen::MatrixXd expected =
          kBlockSign[r][c] * out.plane(kBlockPlane[r][c]);
      if (((rep.block(r * m, c * n, m, n) - expected).cwiseAbs().maxCoeff()) >
          tol) {
        throw FormatError(
            "real representation: block pattern violated (malformed "
            "representation)");
      }
    }
  }
  return out;
}

QVector qvector_from_real_rep(const RealVecRep& rep) {
  if (rep.size() % 4 != 0) {
    throw FormatError("real representation: length not divisible by 4");
  }
  const Eigen::Index n = rep.size() / 4;
  QVector out(n);
  for (int c = 0; c < 4; ++c) out.plane(c) = rep.segment(c * n, n);
  return out;
}

RealVecRep absq_rep(const QVector& w) { return real_rep(absq(w)); }

RealVecRep signq_rep(const QVector& w) { return real_rep(sign(w)); }

}  // namespace qpca
