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

#include "qpca/orthonormalize.hpp"

#include "qpca/errors.hpp"

namespace qpca {

QVector orthonormalize_against(const std::vector<QVector>& basis, QVector w) {
  // MGS with one reorthogonalization pass. Quaternion vectors form a right
  // module, so the projection coefficient multiplies on the right:
  // w -= u * (u* w).
  for (int pass = 0; pass < 2; ++pass) {
    for (const QVector& u : basis) {
      const Quaternion coeff = inner(u, w);
      w -= u.right_scaled(coeff);
    }
  }
  const double norm = norm2(w);
  if (norm < kRankDeficiencyTol) {
    throw RankDeficiencyError(
        "orthonormalize: column lies in the span of previous columns");
  }
  return w / norm;
}

QMatrix orthonormalize(const QMatrix& w_matrix, Eigen::Index t) {
  if (t < 0 || t >= w_matrix.cols()) {
    throw ShapeError("orthonormalize: column index out of range");
  }
  std::vector<QVector> basis;
  basis.reserve(static_cast<size_t>(t));
  for (Eigen::Index j = 0; j < t; ++j) basis.push_back(w_matrix.col(j));
  QMatrix out = w_matrix;
  out.set_col(t, orthonormalize_against(basis, w_matrix.col(t)));
  return out;
}

}  // namespace qpca
