#include <doctest.h>

#include "muord/invariant.hpp"

using namespace muord;

namespace {

SplittingDatum m11_split(u64 p) {
  const Signature sig = signature_of(MonodromyDatum{5, 4, {1, 3, 3, 3}});
  return splitting_datum(5, p, *simple_signature_check(sig));
}

}  // namespace

TEST_SUITE("invariant") {

TEST_CASE("binomials") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 4) == 70);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("bound constants per residue class") {
  CHECK(diagnostics(Integer(11), 11, m11_split(11), 2).C == 16);
  CHECK(diagnostics(Integer(19), 19, m11_split(19), 2).C == 36);
  CHECK(diagnostics(Integer(7), 7, m11_split(7), 2).C == 70);
}

TEST_CASE("divisibility, bound and certificate flags") {
  const SplittingDatum s = m11_split(7);  // d = 2
  ApDiagnostics dg = diagnostics(Integer(-77), 7, s, 2);
  CHECK(dg.d == 2);
  CHECK(dg.v == 1);
  CHECK(dg.div_ok);
  CHECK(dg.bound_ok);
  CHECK(dg.mu_certified);

  dg = diagnostics(Integer(2 * 49), 7, s, 2);
  CHECK(dg.div_ok);
  CHECK_FALSE(dg.mu_certified);

  dg = diagnostics(Integer(5), 7, s, 2);
  CHECK_FALSE(dg.div_ok);

  // |a_p / p| <= 70 * 7 fails just above the edge.
  CHECK(diagnostics(Integer(7 * 490), 7, s, 2).bound_ok);
  CHECK_FALSE(diagnostics(Integer(7 * 491), 7, s, 2).bound_ok);

  dg = diagnostics(Integer(0), 7, s, 2);
  CHECK_FALSE(dg.v.has_value());
  CHECK(dg.div_ok);
  CHECK_FALSE(dg.mu_certified);
}

TEST_CASE("a_p from integer traces") {
  const SplittingDatum s1 = m11_split(11);  // four cosets, f = 1
  const auto t = [](i64 v) { return CycloInt::from_integer(5, v); };
  CHECK(compute_ap({t(2), t(3), t(5), t(7)}, s1) == 210);
  const SplittingDatum s4 = m11_split(19);  // two cosets, f = 2: sign (-1)^{f+1} each
  CHECK(compute_ap({t(2), t(3)}, s4) == 6);
  const SplittingDatum s2 = m11_split(7);  // one coset, f = 4
  CHECK(compute_ap({t(5)}, s2) == -5);
  CHECK_THROWS_AS(compute_ap({CycloInt::zeta_power(5, 1)}, s2), ConsistencyError);
}

TEST_CASE("a_p does not depend on the coset representatives") {
  for (u64 p : {7, 11, 13, 19, 29, 31}) {
    const CurveInstance c = CurveInstance::from_datum(MonodromyDatum{5, 4, {1, 3, 3, 3}}, {0, 1, 3}, p);
    FrobeniusSums sums(c);
    CAPTURE(p);
    CHECK(compute_ap(sums, m11_split(p)) == compute_ap(sums, m11_split(p), true));
  }
}

}  // TEST_SUITE
