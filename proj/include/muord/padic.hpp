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
 * p-adic valuations on Z[zeta_m].  The place is fixed by sending zeta to
 * the Teichmuller lift of the residue root chosen in RootReference, inside
 * the unramified ring (Z/p^prec)[X]/(h) with h the lifted modulus of the
 * residue field.
 */
#ifndef MUORD_PADIC_HPP
#define MUORD_PADIC_HPP

#include <optional>
#include <vector>

#include "muord/counting.hpp"
#include "muord/cyclotomic.hpp"
#include "muord/ffield.hpp"
#include "muord/newton.hpp"

namespace muord {

class PadicContext {
 public:
  PadicContext(const RootReference& ref, int precision);

  u64 p() const { return p_; }
  int m() const { return m_; }
  int precision() const { return prec_; }

  /// v_p of the image of x; nullopt when the image vanishes to the
  /// working precision (always the case for x = 0).
  std::optional<i64> valuation(const CycloInt& x) const;
  /// Image of zeta (coordinates in the power basis of the residue modulus).
  const std::vector<Integer>& zeta_image() const { return powers_.at(1); }

 private:
  using Elem = std::vector<Integer>;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem reduce(Elem a) const;

  u64 p_;
  int m_;
  int prec_;
  Integer pk_;               // p^prec
  std::vector<Integer> h_;   // monic lifted modulus, constant term first
  std::vector<Elem> powers_; // zeta^0 .. zeta^{m-1}
};

/// Newton polygon of the orbit subspace attached to an eigenspace, with
/// slopes of phi (so divided by f, multiplicities times f).  Coefficients
/// beyond the computed power sums are completed with the duality relation,
/// using `det_valuation` for v(e_n) when e_n itself is unknown.  nullopt
/// when the data do not determine the polygon.
std::optional<NewtonPolygon> piece_polygon(const EigenspaceCharPoly& cp, const PadicContext& ctx,
                                           std::optional<i64> det_valuation = std::nullopt);

}  // namespace muord

#endif  // MUORD_PADIC_HPP
