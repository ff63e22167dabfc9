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
 * Combinatorics of Q(zeta_m).  A cyclic cover gives a signature and a
 * CM type; a prime gives its splitting data.  The rank criterion on the
 * Galois translates of a signature also lives here.
 *
 * Labeling: index k stands for the embedding zeta -> exp(2 pi i k / m).
 * All signature values are stored in this labeling; relabel() gives the
 * values in any other labeling k -> c*k.
 */
#ifndef MUORD_CYCLO_CM_HPP
#define MUORD_CYCLO_CM_HPP

#include <optional>
#include <string>
#include <vector>

#include "muord/common.hpp"

namespace muord {

struct MonodromyDatum {
  int m = 0;
  int N = 0;
  std::vector<int> a;  // N inertia exponents; the last one sits at infinity

  /// Throws InvalidInput unless m >= 3, N >= 4, a_i nonzero mod m,
  /// sum a_i = 0 mod m and gcd(m, a_1, ..., a_N) = 1.
  void validate() const;
  /// Riemann-Hurwitz: 2g - 2 = -2m + sum (m - gcd(a_i, m)).
  int genus() const;
  std::string to_string() const;
};

struct Signature {
  int m = 0;
  /// values[k] for k in [0, m): holomorphic eigenspace dimensions.  Entry 0
  /// is unused.  Non-unit k carry the dimensions of the imprimitive
  /// eigenspaces, which belong to quotient curves.
  std::vector<int> values;
  int n = 0;        // f(k) + f(-k) for units k
  int d = 0;        // phi(m) / 2
  int genus = 0;    // sum over all k != 0

  int at(int k) const { return values[nt::mod(k, m)]; }
  /// Values on the units in ascending order.
  std::vector<int> on_units() const;
  int primitive_genus() const { return n * d; }
};

/// f(k) = -1 + sum_i frac(-k a_i / m), k = 1 .. m-1.
Signature signature_of(const MonodromyDatum& datum);

/// Builds a signature from its values on the units (ascending order),
/// e.g. the fixtures (1,0,0,2,2,1) for m = 7.  Checks f(k) + f(-k) = n.
Signature signature_from_units(int m, const std::vector<int>& unit_values);

/// Values on the units read in the labeling k -> multiplier * k.
std::vector<int> relabel(const Signature& sig, int multiplier);

struct SimpleSignature {
  int m = 0;
  std::vector<int> phi;  // CM type: one unit from each pair {k, -k}, ascending
  int sigma1 = 0;
  std::vector<int> phi_star() const;
};

/// A CM type with f(sigma1) = 1 and f = 0 on the rest of it; the least
/// admissible sigma1 is chosen.  nullopt when none exists.
std::optional<SimpleSignature> simple_signature_check(const Signature& sig);

struct SplittingDatum {
  int m = 0;
  u64 p = 0;
  std::vector<int> D;                  // powers of p mod m, ascending
  int f = 0;
  int r = 0;
  int d = 0;
  bool K_in_F0 = false;
  std::vector<std::vector<int>> cosets;  // ascending by least element
  std::vector<int> aP;                 // |Phi* cap T_P|
  int P1 = -1;                         // coset containing sigma1
  int P1_star = -1;                    // coset containing -sigma1

  int coset_of(int k) const;
  /// Index of the coset -T_P.
  int dual_coset(int P) const;
};

SplittingDatum splitting_datum(int m, u64 p, const SimpleSignature& cm);
/// Coset data only (no CM type): aP, P1 and P1_star stay empty/-1.
SplittingDatum splitting_datum(int m, u64 p);

/// Rank of the Galois translates of the signature together with the
/// all-ones vector equals d + 1.
bool check_assumption_c(const Signature& sig);

struct ExceptionalDims {
  std::vector<Integer> det_poly;  // det B(n), constant term first
  Integer det_at_zero;
  std::vector<int> roots;         // positive integer roots
};

/// det B(n) for the simple signatures with CM type phi and distinguished
/// sigma1, interpolated from d + 1 integer evaluations.
ExceptionalDims assumption_c_exceptional_dims(int m, const SimpleSignature& cm);

/// The simple signature with relative dimension n attached to (phi, sigma1).
Signature simple_signature_with(int m, const SimpleSignature& cm, int n);

struct Family {
  std::string key;
  MonodromyDatum datum;
  std::vector<i64> default_branch;  // finite branch points b_1 .. b_{N-1}
  std::string note;
};

const std::vector<Family>& builtin_families();
const Family& family_by_key(const std::string& key);

}  // namespace muord

#endif  // MUORD_CYCLO_CM_HPP
