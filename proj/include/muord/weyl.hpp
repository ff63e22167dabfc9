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
 * Symbolic traces of signed-permutation-twisted torus elements.
 *
 * Coordinates.  V has 2g = 2nd basis vectors in d blocks of 2n.  Block i
 * (0-based) holds indices 2n*i + l; the first n span the eigenspace of
 * one embedding s_i of Q(zeta_m) and the last n the eigenspace of -s_i.
 * The block symplectic form pairs v_l with v_{l+n}.  A torus element acts
 * by x_{i,l} on index 2n*i + l and by x_{i,l}^{-1} on 2n*i + n + l; an
 * optional central twist multiplies the first half of block i by t_i and
 * the second half by t_i^{-1}.
 *
 * Variables are numbered x_{i,l} -> i*n + l, then t_i -> d*n + i.
 */
#ifndef MUORD_WEYL_HPP
#define MUORD_WEYL_HPP

#include <map>
#include <string>
#include <vector>

#include "muord/common.hpp"
#include "muord/cyclo_cm.hpp"

namespace muord::weyl {

class LaurentPoly {
 public:
  using Exponents = std::vector<int>;

  LaurentPoly() = default;
  explicit LaurentPoly(int nvars) : nvars_(nvars) {}
  static LaurentPoly constant(int nvars, i64 c);
  static LaurentPoly monomial(const Exponents& e, i64 c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponents, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Replaces variable `var` by the monomial with exponents `image`.
  LaurentPoly substitute(int var, const Exponents& image) const;
  /// Sets the listed variables to 1.
  LaurentPoly specialize_to_one(const std::vector<int>& vars) const;

  /// Terms in descending exponent order, e.g. "a_1*b_1^-1 + 2".
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void add_term(const Exponents& e, i64 c);
  int nvars_ = 0;
  std::map<Exponents, i64> terms_;
};

/// (epsilon, gamma) in (S_2)^d x| S_d.  eps[i] in {+1, -1}; gamma is a
/// permutation of {0, ..., d-1} (gamma[i] = image of i).
struct ComponentElement {
  std::vector<int> eps;
  std::vector<int> gamma;

  static ComponentElement identity(int d);
  /// (e, g)(e', g') = ((e o g') * e', g g'), so that B(x) B(y) and B(xy)
  /// agree up to a sign on each block (delta squares to -1 on a block).
  ComponentElement operator*(const ComponentElement& o) const;
  ComponentElement inverse() const;
  bool operator==(const ComponentElement& o) const { return eps == o.eps && gamma == o.gamma; }
  bool operator<(const ComponentElement& o) const;
  /// "eps=(+1,-1) gamma=[1,0]" style label.
  std::string to_string() const;
};

/// All 2^d d! elements: gammas in lexicographic order, then sign vectors
/// with +1 before -1 in each slot.
std::vector<ComponentElement> component_group(int d);

/// Square matrix with one entry +-1 per row and column, stored by
/// columns: column k has `sign[k]` in row `row[k]`.
struct SignedPermMatrix {
  std::vector<int> row;
  std::vector<int> sign;

  int size() const { return static_cast<int>(row.size()); }
  static SignedPermMatrix identity(int size);
  SignedPermMatrix operator*(const SignedPermMatrix& o) const;
  std::vector<std::vector<int>> dense() const;
  /// B^T J B = J for the block symplectic form.
  bool preserves_form(int n, int d) const;
};

/// The block symplectic Gram matrix J (J[l][l+n] = 1, J[l+n][l] = -1).
std::vector<std::vector<int>> symplectic_form(int n, int d);

/// B = E_gamma * delta_eps, with delta on a flipped block sending
/// v_k -> -v_{2n+1-k} (k <= n) and v_k -> v_{2n+1-k} (k > n), 1-based.
SignedPermMatrix b_matrix(const ComponentElement& elem, int n, int d);

/// Eigenspace bookkeeping for one Frobenius class sigma mod m.
struct ClassStructure {
  int m = 0;
  int sigma = 0;
  int n = 0;
  int d = 0;
  int f = 0;
  bool K_in_F0 = false;
  /// Embedding carried by the first half of each block.
  std::vector<int> block_embedding;
  /// For each coset T of <sigma> (ordered by least element): the basis
  /// indices spanning the sum of the eigenspaces of the elements of T.
  std::vector<std::vector<int>> cosets;
  std::vector<std::vector<int>> subspaces;
};

ClassStructure class_structure(int m, int sigma, int n);

/// True when B preserves every K-eigenspace of the class.
bool consistent(const ComponentElement& elem, const ClassStructure& cls);
std::vector<ComponentElement> consistent_elements(const ClassStructure& cls);

/// Variable names: a_i, b_i for n = 2 (1-based i), x_i_l otherwise; t_i.
std::vector<std::string> variable_names(int n, int d);

/// prod over K-eigenspaces W of tr(B t M | wedge^f W), as a Laurent
/// polynomial in the torus and twist variables.  With with_twist false
/// the twist variables are set to 1.
LaurentPoly trace_function(const ClassStructure& cls, const ComponentElement& elem, bool with_twist = true);

/// tr(B t M | wedge^f W) for a single K-eigenspace (index into subspaces).
LaurentPoly trace_on_subspace(const ClassStructure& cls, const ComponentElement& elem, int subspace,
                              bool with_twist = true);

/// Restriction to T': x_{i,n-1} = prod_{l < n-1} x_{i,l}^{-1}.
LaurentPoly restrict_to_Tprime(const LaurentPoly& poly, int n, int d);

/// Some monomial of the restriction has a nonzero torus exponent
/// (twist variables, if present, count as coefficients).
bool nonconstant_on_Tprime(const LaurentPoly& poly, int n, int d);

/// Nonconstant in the torus for every value of the twist: some nonzero
/// torus exponent class of the restriction carries a single twist
/// monomial, whose coefficient cannot vanish.
bool nonconstant_uniformly_in_t(const LaurentPoly& poly, int n, int d);

/// For m = 5, n = 2: (a_1+b_1)(a_2+b_2)(a_1^-1+b_1^-1) + (a_2^-1+b_2^-1).
/// This adds the last factor where the identity-class trace multiplies
/// it; kept so tests can show the two functions differ.
LaurentPoly identity_class_variant();

}  // namespace muord::weyl

#endif  // MUORD_WEYL_HPP
