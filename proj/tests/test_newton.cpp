#include <doctest.h>

#include "muord/cyclo_cm.hpp"
#include "muord/newton.hpp"

using namespace muord;

namespace {

NewtonPolygon poly(const char* text) { return NewtonPolygon::from_string(text); }

NewtonPolygon mu_for(const MonodromyDatum& datum, u64 p) {
  const Signature sig = signature_of(datum);
  return mu_ordinary_polygon(sig, splitting_datum(sig.m, p, *simple_signature_check(sig)));
}

const MonodromyDatum kM11{5, 4, {1, 3, 3, 3}};
const MonodromyDatum kM10{3, 6, {1, 1, 1, 1, 1, 1}};

}  // namespace

TEST_SUITE("newton") {

TEST_CASE("polygons are kept sorted and merged") {
  const NewtonPolygon a({{Rational(1), 2}, {Rational(0), 1}, {Rational(0), 1}, {Rational(1, 2), 4}});
  CHECK(a.to_string() == "0^2 ⊕ 1/2^4 ⊕ 1^2");
  CHECK(a.total_multiplicity() == 8);
  CHECK(a.total_rise() == Rational(4));
  CHECK(a.p_rank() == 2);
  CHECK(a.smallest_slope() == Rational(0));
  CHECK(a.is_symmetric());
  CHECK_FALSE(a.is_ordinary());
  CHECK(a.height_at(2) == Rational(0));
  CHECK(a.height_at(4) == Rational(1));
  CHECK(a.height_at(8) == Rational(4));
  CHECK(poly("0^4 ⊕ 1^4").is_ordinary());
  CHECK_FALSE(poly("1/3^3 ⊕ 2/3^3 ⊕ 1^1").is_symmetric());
}

TEST_CASE("text and JSON forms round-trip") {
  for (const char* t : {"0^4 ⊕ 1^4", "1/4^4 ⊕ 3/4^4", "0^2 ⊕ 1/2^4 ⊕ 1^2", "1/2^8"}) {
    CHECK(poly(t).to_string() == t);
  }
  CHECK(poly("1/4^4 ⊕ 3/4^4").to_json() == "[[1,4,4],[3,4,4]]");
  CHECK(poly("0^1 ⊕ 1^1") + poly("1/2^2") == poly("0^1 ⊕ 1/2^2 ⊕ 1^1"));
}

TEST_CASE("mu-ordinary polygons of the degree-5 family") {
  for (u64 p : {11, 31, 41, 61}) CHECK(mu_for(kM11, p) == poly("0^4 ⊕ 1^4"));
  for (u64 p : {19, 29, 59}) CHECK(mu_for(kM11, p) == poly("0^2 ⊕ 1/2^4 ⊕ 1^2"));
  for (u64 p : {2, 3, 7, 13, 17, 23}) CHECK(mu_for(kM11, p) == poly("1/4^4 ⊕ 3/4^4"));
}

TEST_CASE("mu-ordinary polygons of the degree-3 genus-4 family") {
  for (u64 p : {7, 13, 19}) CHECK(mu_for(kM10, p) == poly("0^4 ⊕ 1^4"));
  for (u64 p : {5, 11, 17}) {
    const NewtonPolygon mu = mu_for(kM10, p);
    CHECK(mu == poly("0^2 ⊕ 1/2^4 ⊕ 1^2"));
    CHECK(mu.p_rank() == 2);
  }
}

TEST_CASE("pieces carry slopes a_P / f") {
  const Signature sig = signature_of(kM11);
  const auto cm = *simple_signature_check(sig);
  const SplittingDatum split = splitting_datum(5, 19, cm);
  CHECK(mu_ordinary_piece(sig, split, 0) == poly("0^2 ⊕ 1^2"));
  CHECK(mu_ordinary_piece(sig, split, 1) == poly("1/2^4"));
  const SplittingDatum split1 = splitting_datum(5, 11, cm);
  CHECK(mu_ordinary_piece(sig, split1, 1) == poly("1^2"));
  CHECK(mu_ordinary_piece(sig, split1, 2) == poly("0^2"));
}

TEST_CASE("lower convex hull of valuation points") {
  using VP = ValuationPoint;
  // x^2 - a x + p with v(a) = 0: slopes 0 and 1.
  CHECK(polygon_from_valuations({VP::finite(0, 0), VP::finite(1, 0), VP::finite(2, 1)}) == poly("0^1 ⊕ 1^1"));
  // v(a) >= 1 gives the supersingular segment.
  CHECK(polygon_from_valuations({VP::finite(0, 0), VP::infinite(1), VP::finite(2, 1)}) == poly("1/2^2"));
  // Slopes of phi^f are divided by f, runs multiplied by f.
  CHECK(polygon_from_valuations({VP::finite(0, 0), VP::finite(1, 1), VP::finite(2, 4)}, 4) ==
        poly("1/4^4 ⊕ 3/4^4"));
  // A lower bound that might still touch the hull cannot be decided.
  CHECK_THROWS_AS(polygon_from_valuations({VP::finite(0, 0), VP::at_least(1, 0), VP::finite(2, 1)}),
                  PrecisionInsufficient);
  CHECK_NOTHROW(polygon_from_valuations({VP::finite(0, 0), VP::at_least(1, 1), VP::finite(2, 1)}));
  CHECK_THROWS_AS(polygon_from_valuations({VP::finite(0, 0), VP::finite(1, 3)}), Error);
}

TEST_CASE("lattice comparison") {
  const NewtonPolygon mu = poly("0^2 ⊕ 1/2^4 ⊕ 1^2");
  CHECK(compare(mu, mu) == Comparison::Equal);
  CHECK(compare(poly("1/2^8"), mu) == Comparison::Above);
  CHECK(compare(poly("0^4 ⊕ 1^4"), mu) == Comparison::Below);
  CHECK(compare(poly("1/4^4 ⊕ 3/4^4"), poly("0^1 ⊕ 1/2^6 ⊕ 1^1")) == Comparison::Incomparable);
  CHECK(to_string(Comparison::Above) == "above");
  CHECK_THROWS(compare(poly("0^1 ⊕ 1^1"), mu));
}

TEST_CASE("smallest-slope targets") {
  const auto cm = *simple_signature_check(signature_of(kM11));
  CHECK(smallest_slope_target(splitting_datum(5, 7, cm)) == Rational(1, 4));
  CHECK(smallest_slope_target(splitting_datum(5, 19, cm)) == Rational(0));
  CHECK(smallest_slope_target(splitting_datum(5, 11, cm)) == Rational(0));
  CHECK(smallest_slope_test(poly("1/4^4 ⊕ 3/4^4"), splitting_datum(5, 7, cm)));
  CHECK_FALSE(smallest_slope_test(poly("1/2^8"), splitting_datum(5, 7, cm)));
}

TEST_CASE("basic polygons of the degree-5 family") {
  CHECK(basic_polygon_degree5(11) == poly("0^2 ⊕ 1/2^4 ⊕ 1^2"));
  CHECK(basic_polygon_degree5(19) == poly("1/2^8"));
  CHECK(basic_polygon_degree5(7) == poly("1/2^8"));
  for (u64 p : {7, 11, 19, 23}) CHECK(compare(basic_polygon_degree5(p), mu_for(kM11, p)) == Comparison::Above);
}

}  // TEST_SUITE
