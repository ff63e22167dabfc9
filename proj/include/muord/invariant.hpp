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
 * The integer a_p attached to a prime: the norm down from the decomposition
 * field K of the trace of Frobenius on the f-th exterior power of the
 * primitive part of H^1, taken K-linearly.
 *
 * Along one coset T of D the linear Frobenius on the nf-dimensional
 * K-component has characteristic polynomial prod (X^f - beta) over the
 * eigenvalues beta of phi^f on a single eigenspace V_j, j in T.  Its
 * degree-f elementary symmetric function is therefore
 * (-1)^{f+1} tr(phi^f | V_j), so only the traces over F_{p^f} enter.
 */
#ifndef MUORD_INVARIANT_HPP
#define MUORD_INVARIANT_HPP

#include <optional>
#include <string>
#include <vector>

#include "muord/counting.hpp"
#include "muord/cyclo_cm.hpp"

namespace muord {

struct ApDiagnostics {
  Integer a_p = 0;
  std::optional<int> v;  // v_p(a_p); empty when a_p = 0
  Integer C = 0;         // binom(nf, f)^r
  int d = 0;
  bool div_ok = false;       // p^{d-1} | a_p
  bool bound_ok = false;     // |a_p / p^{d-1}| <= C p
  bool mu_certified = false; // p^d does not divide a_p
};

/// Product over the cosets of (-1)^{f+1} tr(phi^f | V_{j_T}), given one
/// trace per coset (same order as split.cosets).  Throws ConsistencyError
/// when the product is not a rational integer.
Integer compute_ap(const std::vector<CycloInt>& coset_traces, const SplittingDatum& split);

/// Same from eigenspace data (uses e_1 of each piece).
Integer compute_ap(const std::vector<EigenspaceCharPoly>& pieces, const SplittingDatum& split);

/// Reads the traces from the sums, with the least (or the largest)
/// element of each coset as representative.
Integer compute_ap(FrobeniusSums& sums, const SplittingDatum& split, bool largest_representatives = false);

Integer binomial(int n, int k);

ApDiagnostics diagnostics(const Integer& a_p, u64 p, const SplittingDatum& split, int n);

}  // namespace muord

#endif  // MUORD_INVARIANT_HPP
