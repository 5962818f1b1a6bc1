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

#include "qpca/quaternion.hpp"

#include <cmath>
#include <ostream>

#include "qpca/errors.hpp"

namespace qpca {

double abs_s(const Quaternion& a, double s) {
  if (!(s > 0.0)) {
    throw ParamError("abs_s: s must be positive");
  }
  if (s == 2.0) {
    return abs(a);
  }
  const double sum = std::pow(std::abs(a.w0), s) + std::pow(std::abs(a.w1), s) +
                     std::pow(std::abs(a.w2), s) + std::pow(std::abs(a.w3), s);
  return std::pow(sum, 1.0 / s);
}

Quaternion sign(const Quaternion& a) {
  if (a.is_zero()) {
    return Quaternion::zero();
  }
  return a / abs(a);
}

std::ostream& operator<<(std::ostream& os, const Quaternion& a) {
  return os << '(' << a.w0 << ", " << a.w1 << "i, " << a.w2 << "j, " << a.w3
            << "k)";
}

}  // namespace qpca
