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

#ifndef QPCA_REAL_REP_HPP
#define QPCA_REAL_REP_HPP

#include <Eigen/Dense>

#include "qpca/qmatrix.hpp"
#include "qpca/qvector.hpp"

namespace qpca {

// Structure-preserving real representations. A quaternion m x n matrix maps
// to the 4m x 4n real matrix
//
//   [ A0 -A1 -A2 -A3 ]
//   [ A1  A0 -A3  A2 ]
//   [ A2  A3  A0 -A1 ]
//   [ A3 -A2  A1  A0 ]
//
// and a quaternion n-vector maps to the 4n real column [w0; w1; w2; w3].
// Quaternion products become real products under these maps and L_p norms of
// quaternion vectors become group norms of the stacked columns.

using RealMatRep = Eigen::MatrixXd;
using RealVecRep = Eigen::VectorXd;

RealMatRep real_rep(const QMatrix& a);
RealVecRep real_rep(const QVector& w);

/// Inverse of real_rep(QMatrix). The input must be 4m x 4n and carry the
/// block pattern above; blocks are compared with a 1e-12 relative tolerance
/// so products of representations round-trip. Violations raise FormatError.
QMatrix qmatrix_from_real_rep(const RealMatRep& rep);

/// Inverse of real_rep(QVector); the length must be divisible by 4.
QVector qvector_from_real_rep(const RealVecRep& rep);

/// absQ of a stacked column: the entry magnitudes |w_i| replicated into all
/// four plane segments.
RealVecRep absq_rep(const QVector& w);

/// signQ of a stacked column: real_rep(sign(w)).
RealVecRep signq_rep(const QVector& w);

}  // namespace qpca

#endif  // QPCA_REAL_REP_HPP
