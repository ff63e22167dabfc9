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

/*
 * Finite fields F_p and F_{p^k} with power-residue counting.  Character
 * values are stored as exponents of one fixed primitive m-th root of unity.
 */
#ifndef MUORD_FFIELD_HPP
#define MUORD_FFIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "muord/common.hpp"

namespace muord {

class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 p() const { return p_; }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p_ ? s - p_ : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const { return nt::mulmod(a, b, p_); }
  u64 inv(u64 a) const;
  u64 pow(u64 a, u64 e) const { return nt::powmod(a, e, p_); }
  u64 reduce(i64 a) const { return static_cast<u64>(nt::mod(a, static_cast<i64>(p_))); }

 private:
  u64 p_;
};

/// F_{p^k} = F_p[X]/(modulus).  Elements are coefficient vectors of
/// length k, constant term first.  The integer index of an element is
/// sum c_i p^i, which gives a canonical enumeration order.
class ExtField {
 public:
  using Elem = std::vector<u32>;

  /// `modulus` is monic of degree k, listed constant term first (k+1 entries).
  ExtField(u64 p, std::vector<u32> modulus);

  u64 p() const { return base_.p(); }
  int k() const { return k_; }
  u128 order() const { return q_; }
  /// Field size as u64; throws BudgetExceeded if it does not fit.
  u64 size() const;
  const PrimeField& base() const { return base_; }
  const std::vector<u32>& modulus() const { return mod_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const { return constant(1); }
  Elem constant(u64 c) const;
  Elem generator_x() const;  // the class of X (or of 0 for k = 1, see .cpp)
  Elem from_index(u64 idx) const;
  u64 index(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Elem& a, u64 c) const;
  Elem pow(const Elem& a, u128 e) const;
  Elem inv(const Elem& a) const;
  Elem frobenius(const Elem& a) const { return pow(a, p()); }

  bool is_zero(const Elem& a) const;
  bool is_one(const Elem& a) const;
  bool is_constant(const Elem& a) const;

  /// Norm to the prime field, returned as an element of F_p.
  u64 norm_to_prime(const Elem& a) const;

  /// Evaluates a polynomial over F_p (constant term first) at a.
  Elem eval_prime_poly(const std::vector<u32>& poly, const Elem& a) const;

  /// Least element (in index order) of exact multiplicative order n.
  /// Requires n | q - 1.
  Elem element_of_order(u64 n) const;
  /// True iff a has exact multiplicative order n (a != 0).
  bool has_order(const Elem& a, u64 n) const;

 private:
  PrimeField base_;
  int k_;
  std::vector<u32> mod_;
  u128 q_;
};

/// Irreducibility over F_p by the gcd(X^{p^i} - X, h) = 1 test, i <= deg/2.
bool is_irreducible(const std::vector<u32>& monic, u64 p);

/// The field with p^k elements whose modulus is the least monic
/// irreducible polynomial in the index order of its lower coefficients.
ExtField build_ext_field(u64 p, int k, int max_degree = 24);

/// #{y in field : y^m = c}.
u64 count_mth_roots(const ExtField& field, const ExtField::Elem& c, u64 m);

/// Fixes the residue root of unity that every character and every
/// p-adic context for the pair (p, m) is normalised against.  The root
/// lives in F_{p^F} with F the order of p mod m; it is the least element
/// of exact order m in index order.
class RootReference {
 public:
  RootReference(u64 p, int m);

  u64 p() const { return field_.p(); }
  int m() const { return m_; }
  int residue_degree() const { return field_.k(); }
  const ExtField& field() const { return field_; }
  const ExtField::Elem& omega_bar() const { return omega_; }

  /// Minimal polynomial over F_p of omega_bar^e, monic, constant term first.
  std::vector<u32> minimal_polynomial(int e) const;

 private:
  int m_;
  ExtField field_;
  ExtField::Elem omega_;
};

/// Multiplicative character data of one finite field.  With
/// delta = gcd(m, q - 1), the table stores for every nonzero t the
/// residue e(t) in Z/delta defined by t^{(q-1)/delta} = rho^{e(t)}, where
/// rho is a root in this field of the minimal polynomial of
/// omega_bar^{m/delta}.  The character of index j, defined when
/// m | j*delta, is chi_j(t) = zeta_m^{j e(t)}.
class CharacterTable {
 public:
  /// Builds the exponent table by walking the powers of the least
  /// generator.  Throws BudgetExceeded when q > budget.
  CharacterTable(const ExtField& field, int m, const RootReference& ref, u64 budget);

  const ExtField& field() const { return field_; }
  int m() const { return m_; }
  int delta() const { return delta_; }
  const ExtField::Elem& generator() const { return generator_; }
  const ExtField::Elem& rho() const { return rho_; }
  /// e(g) for the stored generator g.
  int unit_exponent() const { return unit_exponent_; }

  bool character_defined(int j) const;
  int exponent(const ExtField::Elem& t) const;
  int exponent_at(u64 index) const { return table_[index]; }
  int character_exponent(const ExtField::Elem& t, int j) const;

  /// Raw table indexed by element index; entry 0 is set to 0 and has
  /// no meaning.
  const std::uint8_t* data() const { return table_.get(); }
  u64 size() const { return size_; }

 private:
  ExtField field_;
  int m_;
  int delta_;
  ExtField::Elem generator_;
  ExtField::Elem rho_;
  int unit_exponent_;
  u64 size_;
  std::unique_ptr<std::uint8_t[]> table_;
};

/// Exponent e(t) without a table: t^{(q-1)/delta} matched against
/// powers of rho.  Used for fields too large to tabulate and as a
/// cross-check of the table walk.
int direct_exponent(const ExtField& field, const ExtField::Elem& rho, int delta,
                    const ExtField::Elem& t);

/// The root rho of the minimal polynomial of omega_bar^{m/delta} chosen in
/// `field` (least index among the primitive delta-th roots that qualify).
ExtField::Elem character_root(const ExtField& field, int m, const RootReference& ref);

}  // namespace muord

#endif  // MUORD_FFIELD_HPP
