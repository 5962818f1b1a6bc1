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

#ifndef QPCA_QUATERNION_HPP
#define QPCA_QUATERNION_HPP

#include <cmath>
#include <iosfwd>

namespace qpca {

/// A quaternion w0 + w1*i + w2*j + w3*k over IEEE-754 doubles, with the
/// Hamilton relations i^2 = j^2 = k^2 = ijk = -1. A pure quaternion has
/// w0 == 0; color pixels are stored as r*i + g*j + b*k.
struct Quaternion {
  double w0 = 0.0;
  double w1 = 0.0;
  double w2 = 0.0;
  double w3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a0, double a1, double a2, double a3)
      : w0(a0), w1(a1), w2(a2), w3(a3) {}
  /// Real quaternion (imaginary parts zero).
  constexpr explicit Quaternion(double real) : w0(real) {}

  static constexpr Quaternion zero() { return {}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr double coeff(int c) const {
    return c == 0 ? w0 : c == 1 ? w1 : c == 2 ? w2 : w3;
  }

  constexpr bool is_zero() const {
    return w0 == 0.0 && w1 == 0.0 && w2 == 0.0 && w3 == 0.0;
  }

  constexpr Quaternion conj() const { return {w0, -w1, -w2, -w3}; }

  constexpr Quaternion operator-() const { return {-w0, -w1, -w2, -w3}; }

  constexpr Quaternion& operator+=(const Quaternion& b) {
    w0 += b.w0;
    w1 += b.w1;
    w2 += b.w2;
    w3 += b.w3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& b) {
    w0 -= b.w0;
    w1 -= b.w1;
    w2 -= b.w2;
    w3 -= b.w3;
    return *this;
  }
  constexpr Quaternion& operator*=(double c) {
    w0 *= c;
    w1 *= c;
    w2 *= c;
    w3 *= c;
    return *this;
  }
  constexpr Quaternion& operator/=(double c) { return *this *= (1.0 / c); }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double c) { return a *= c; }
constexpr Quaternion operator*(double c, Quaternion a) { return a *= c; }
constexpr Quaternion operator/(Quaternion a, double c) { return a /= c; }

/// Hamilton product; noncommutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w0 * b.w0 - a.w1 * b.w1 - a.w2 * b.w2 - a.w3 * b.w3,
          a.w0 * b.w1 + a.w1 * b.w0 + a.w2 * b.w3 - a.w3 * b.w2,
          a.w0 * b.w2 - a.w1 * b.w3 + a.w2 * b.w0 + a.w3 * b.w1,
          a.w0 * b.w3 + a.w1 * b.w2 - a.w2 * b.w1 + a.w3 * b.w0};
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.w0 == b.w0 && a.w1 == b.w1 && a.w2 == b.w2 && a.w3 == b.w3;
}

inline Quaternion conj(const Quaternion& a) { return a.conj(); }

/// 2-absolute value |a| = sqrt(w0^2 + w1^2 + w2^2 + w3^2).
inline double abs(const Quaternion& a) {
  return std::sqrt(a.w0 * a.w0 + a.w1 * a.w1 + a.w2 * a.w2 + a.w3 * a.w3);
}

/// Generalized s-absolute value (sum_c |w_c|^s)^(1/s) for s > 0.
/// Reduces to abs() at s == 2.
double abs_s(const Quaternion& a, double s);

/// sign(a) = a/|a| for a != 0, and exactly 0 for a == 0.
Quaternion sign(const Quaternion& a);

std::ostream& operator<<(std::ostream& os, const Quaternion& a);

}  // namespace qpca

#endif  // QPCA_QUATERNION_HPP
