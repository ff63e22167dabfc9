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
#ifndef MUORD_NEWTON_HPP
#define MUORD_NEWTON_HPP

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "muord/common.hpp"
#include "muord/cyclo_cm.hpp"

namespace muord {

using Rational = boost::rational<i64>;

/// "3/4", or "2" for integers.
std::string rational_text(const Rational& r);

struct Slope {
  Rational value;
  int mult = 0;
  bool operator==(const Slope& o) const { return value == o.value && mult == o.mult; }
};

/// A multiset of slopes, kept sorted and merged.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;
  explicit NewtonPolygon(std::vector<Slope> slopes);

  const std::vector<Slope>& slopes() const { return slopes_; }
  int total_multiplicity() const;
  Rational total_rise() const;
  int multiplicity_of(const Rational& s) const;
  int p_rank() const { return multiplicity_of(0); }
  Rational smallest_slope() const;

  bool is_symmetric() const;
  bool is_ordinary() const;

  /// Height of the polygon at integer abscissa x, 0 <= x <= total.
  Rational height_at(int x) const;

  NewtonPolygon operator+(const NewtonPolygon& o) const;
  bool operator==(const NewtonPolygon& o) const { return slopes_ == o.slopes_; }
  bool operator!=(const NewtonPolygon& o) const { return !(*this == o); }

  /// "0^2 ⊕ 1/2^4 ⊕ 1^2"
  std::string to_string() const;
  static NewtonPolygon from_string(const std::string& text);
  /// [[num, den, mult], ...]
  std::string to_json() const;

 private:
  std::vector<Slope> slopes_;
};

/// Slopes a_j = #{sigma in T_P : f(sigma) > n - j} / f, each with multiplicity f.
NewtonPolygon mu_ordinary_piece(const Signature& sig, const SplittingDatum& split, int P);
NewtonPolygon mu_ordinary_polygon(const Signature& sig, const SplittingDatum& split);

struct ValuationPoint {
  enum class Kind { Finite, AtLeast, Infinite };
  int i = 0;
  Kind kind = Kind::Finite;
  i64 v = 0;  // exact value, or lower bound for AtLeast

  static ValuationPoint finite(int i, i64 v) { return {i, Kind::Finite, v}; }
  static ValuationPoint at_least(int i, i64 v) { return {i, Kind::AtLeast, v}; }
  static ValuationPoint infinite(int i) { return {i, Kind::Infinite, 0}; }
};

/// Lower convex hull of the points, slopes divided by `f` and run
/// lengths multiplied by `f`.  AtLeast points must lie strictly above the
/// hull (else PrecisionInsufficient); Infinite points are exact zeros.
/// Slopes outside [0, 1] raise Error.
NewtonPolygon polygon_from_valuations(const std::vector<ValuationPoint>& points, int f = 1);

enum class Comparison { Equal, Above, Below, Incomparable };
std::string to_string(Comparison c);

/// Lattice comparison of nu against mu (same endpoints required).
Comparison compare(const NewtonPolygon& nu, const NewtonPolygon& mu);

/// The smallest slope the coset P_1^* must have for the reduction to be
/// mu-ordinary: 1/2 - 1/f when K lies in F_0, (a_{P_1^*} - 1)/f otherwise.
Rational smallest_slope_target(const SplittingDatum& split);
bool smallest_slope_test(const NewtonPolygon& piece_at_P1_star, const SplittingDatum& split);

/// The basic polygon of the degree-5 family (5, 4, (1,3,3,3)): ord^2 + ss^2 for
/// p = 1 mod 5 and ss^4 otherwise.
NewtonPolygon basic_polygon_degree5(u64 p);

}  // namespace muord

#endif  // MUORD_NEWTON_HPP
