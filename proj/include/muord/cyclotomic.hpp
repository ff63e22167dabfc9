/*
 * Copyright (C) 2026 The muord authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef MUORD_CYCLOTOMIC_HPP
#define MUORD_CYCLOTOMIC_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "muord/common.hpp"

namespace muord {

/// Monic integer coefficients of the m-th cyclotomic polynomial,
/// constant term first.
const std::vector<i64>& cyclotomic_polynomial(int m);

/// An element of Z[zeta_m] in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
class CycloInt {
 public:
  CycloInt() = default;
  explicit CycloInt(int m);

  static CycloInt from_integer(int m, const Integer& c);
  static CycloInt zeta_power(int m, i64 e);
  /// sum_e weights[e] zeta^e for a vector of length m.
  static CycloInt from_exponent_weights(int m, const std::vector<Integer>& weights);

  int m() const { return m_; }
  int degree() const { return static_cast<int>(c_.size()); }
  const std::vector<Integer>& coeffs() const { return c_; }

  CycloInt operator+(const CycloInt& o) const;
  CycloInt operator-(const CycloInt& o) const;
  CycloInt operator-() const;
  CycloInt operator*(const CycloInt& o) const;
  CycloInt operator*(const Integer& s) const;
  CycloInt& operator+=(const CycloInt& o);
  CycloInt& operator-=(const CycloInt& o);
  bool operator==(const CycloInt& o) const { return m_ == o.m_ && c_ == o.c_; }
  bool operator!=(const CycloInt& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_integer() const;
  Integer to_integer() const;  // throws unless is_integer()

  /// The automorphism zeta -> zeta^c, gcd(c, m) = 1.
  CycloInt galois(i64 c) const;
  CycloInt conj() const { return galois(-1); }
  Integer norm() const;

  /// Exact quotient in Z[zeta_m], or nullopt when the quotient is not integral.
  std::optional<CycloInt> divide(const CycloInt& y) const;
  /// Exact division by an integer; throws ConsistencyError if inexact.
  CycloInt divide_exact(const Integer& d) const;

  /// Image under zeta -> exp(2 pi i k / m).
  std::complex<long double> embed(int k) const;

  std::string to_string() const;

 private:
  int m_ = 0;
  std::vector<Integer> c_;
};

}  // namespace muord

#endif  // MUORD_CYCLOTOMIC_HPP
