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
 * Point counts of y^m = prod (x - b_i)^{a_i} over F_{p^k}.  Twisted
 * character sums give the Frobenius traces on the eigenspaces of H^1;
 * L-polynomials and eigenspace characteristic polynomials are built
 * from those traces.
 *
 * Trace formula.  For a character index j defined over F_q,
 *   T_j = sum_{x in F_q} prod_{i : m does not divide j a_i} chi_j(x - b_i)^{a_i}
 * and tr(Frob_q | V_j) = -T_j - [m divides j a_inf].  Frobenius maps V_j
 * to V_{pj}, so traces of single powers only exist once the orbit of j
 * under multiplication by p has closed.
 */
#ifndef MUORD_COUNTING_HPP
#define MUORD_COUNTING_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "muord/cyclo_cm.hpp"
#include "muord/cyclotomic.hpp"
#include "muord/ffield.hpp"
#include "muord/newton.hpp"

namespace muord {

/// Default cap on the number of elements of one enumerated field.
inline constexpr u64 kDefaultBudget = 2'000'000'000ULL;

struct CurveInstance {
  int m = 0;
  std::vector<i64> branch;  // finite branch points (integers, reduced mod p on use)
  std::vector<int> a;       // exponents of the finite branch points
  int a_inf = 0;            // exponent at infinity
  u64 p = 0;

  /// b_1 .. b_{N-1} from `branch`, exponents from the datum, a_inf = a_N.
  static CurveInstance from_datum(const MonodromyDatum& datum, const std::vector<i64>& branch, u64 p);

  std::vector<u32> branch_mod_p() const;
  /// Riemann-Hurwitz genus of the smooth model.
  int genus() const;
  /// Dimension of the eigenspace V_j of H^1 (j != 0 mod m).
  int eigenspace_dim(int j) const;
  /// Empty when p is a good prime for this model; otherwise the reason.
  std::string bad_reason() const;
};

u64 count_affine_smooth(const CurveInstance& curve, int k, u64 budget = kDefaultBudget);
/// Fiber of the smooth model above finite branch point `index`, or above
/// infinity when index < 0.
u64 count_fiber_above_branch(const CurveInstance& curve, int index, int k);
u64 count_projective(const CurveInstance& curve, int k, u64 budget = kDefaultBudget);

/// Output of one histogram pass over a field.
struct FieldSums {
  int k = 0;
  int delta = 1;
  u64 q = 0;
  /// hist[s] = #{x not a branch point : sum_i a_i e(x - b_i) = s mod delta}.
  std::vector<u64> hist;
  /// For branch point i: the residue sum over the other branch points at x = b_i.
  std::vector<int> at_branch;
  double seconds = 0.0;
};

/// Per-curve cache of character-sum data over F_{p^k}.  Tables are built
/// on demand and released right after the histogram pass; only the
/// histograms are kept.
class FrobeniusSums {
 public:
  FrobeniusSums(CurveInstance curve, u64 budget = kDefaultBudget);

  const CurveInstance& curve() const { return curve_; }
  const RootReference& reference() const { return *ref_; }
  u64 budget() const { return budget_; }

  bool affordable(int k) const;
  const FieldSums& sums(int k);

  /// True when chi_j is defined over F_{p^k}.
  bool defined(int j, int k) const;
  /// T_j over F_{p^k}.
  CycloInt character_sum(int j, int k);
  /// tr(Frob_{p^k} | V_j) = -T_j - [m | j a_inf].
  CycloInt trace(int j, int k);
  /// q + 1 - sum over defined j != 0 of trace(j, k).
  u64 count_from_sums(int k);

 private:
  CurveInstance curve_;
  u64 budget_;
  std::unique_ptr<RootReference> ref_;
  std::map<int, FieldSums> cache_;
  std::mutex mu_;
};

/// Characteristic polynomial of phi^f on V_j, where f is the orbit size
/// of j under multiplication by p.  Coefficients e_0 = 1, e_1, ..., e_n
/// (charpoly = sum (-1)^i e_i X^{n-i}).  Entries that the affordable power
/// sums do not determine are left empty.
struct EigenspaceCharPoly {
  int m = 0;
  u64 p = 0;
  int j = 0;
  int n = 0;
  int f = 0;
  int power_sums = 0;  // number of power sums computed
  std::vector<std::optional<CycloInt>> e;
  /// v(e_n) when it is known from outside (the Hodge endpoint).
  std::optional<i64> det_valuation_hint;
  std::string marker;  // describes what is missing, empty when complete

  bool complete() const;
  Integer q_power(int i) const;  // (p^f)^i
  /// Data of V_{-j}: complex conjugate coefficients.
  EigenspaceCharPoly conjugate() const;
};

/// `power_sums` < 0 means ceil(n/2) (enough with the duality relation).
/// With require_complete, extra power sums are computed while affordable
/// until every coefficient is exact.
EigenspaceCharPoly eigenspace_charpoly(FrobeniusSums& sums, int j, int power_sums = -1,
                                       bool require_complete = false);

/// Orbit of j under multiplication by p mod m, ascending.
std::vector<int> frobenius_orbit(int m, u64 p, int j);

struct LPolynomial {
  u64 p = 0;
  int g = 0;
  std::vector<Integer> c;  // c_0 .. c_{2g}

  bool functional_equation_holds() const;
  /// Exact check that every reciprocal root has absolute value sqrt(p)
  /// (real Weil polynomial, Sturm count on [-2 sqrt p, 2 sqrt p]).
  bool weil_bound_holds() const;
  /// Throws ConsistencyError unless both checks pass.
  void check() const;
  NewtonPolygon newton_polygon() const;
  std::string to_string() const;
};

LPolynomial lpolynomial_from_counts(const CurveInstance& curve, u64 budget = kDefaultBudget);
LPolynomial lpolynomial_from_characters(FrobeniusSums& sums);

/// Elementary symmetric functions from power sums over a commutative
/// ring (Newton's identities); exact division asserted.
std::vector<Integer> elementary_from_power_sums(const std::vector<Integer>& power_sums);
std::vector<CycloInt> elementary_from_power_sums(int m, const std::vector<CycloInt>& power_sums);

}  // namespace muord

#endif  // MUORD_COUNTING_HPP
