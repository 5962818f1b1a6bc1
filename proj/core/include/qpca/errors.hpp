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

#ifndef QPCA_ERRORS_HPP
#define QPCA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpca {

/// Base class for all qpca errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside its documented domain (s <= 0, p <= 0, bad fraction, ...).
class ParamError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not conform.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// File contents (image, manifest, model) are malformed. Also raised when a
/// real matrix does not carry the structure-preserving block pattern.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// The MM update received a zero gradient vector: the current direction
/// carries no energy. The solver reacts by restarting the direction.
class DegenerateDirectionError : public Error {
 public:
  using Error::Error;
};

/// A column to orthogonalize lies numerically in the span of the previous
/// columns. The solver reacts by restarting the direction.
class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qpca

#endif  // QPCA_ERRORS_HPP
