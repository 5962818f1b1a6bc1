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

#ifndef QPCA_ORTHONORMALIZE_HPP
#define QPCA_ORTHONORMALIZE_HPP

#include <vector>

#include "qpca/qmatrix.hpp"
#include "qpca/qvector.hpp"

namespace qpca {

/// Post-projection norm below which a column counts as rank deficient.
constexpr double kRankDeficiencyTol = 1e-10;

/// Orthonormalize w against an orthonormal basis under the quaternion inner
/// product (modified Gram-Schmidt, two passes) and normalize to unit L2.
/// Throws RankDeficiencyError when w lies numerically in span(basis).
QVector orthonormalize_against(const std::vector<QVector>& basis, QVector w);

/// Replace column t of W (0-based) so that columns 0..t are orthonormal,
/// W(:,0..t)* W(:,0..t) = I. Columns 0..t-1 must already be orthonormal.
QMatrix orthonormalize(const QMatrix& w_matrix, Eigen::Index t);

}  // namespace qpca

#endif  // QPCA_ORTHONORMALIZE_HPP
