#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "muord/cyclo_cm.hpp"
#include "muord/cyclotomic.hpp"

using namespace muord;

TEST_SUITE("cyclo_cm") {

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(5) == std::vector<i64>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(9) == std::vector<i64>{1, 0, 0, 1, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<i64>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(10) == std::vector<i64>{1, -1, 1, -1, 1});
}

TEST_CASE("arithmetic in Z[zeta_m]") {
  const CycloInt z = CycloInt::zeta_power(5, 1);
  CHECK(CycloInt::zeta_power(5, 5) == CycloInt::from_integer(5, 1));
  CHECK(CycloInt::zeta_power(5, -1) == CycloInt::zeta_power(5, 4));
  CycloInt sum(5);
  for (int e = 0; e < 5; ++e) sum += CycloInt::zeta_power(5, e);
  CHECK(sum.is_zero());

  const CycloInt one = CycloInt::from_integer(5, 1);
  CHECK((one - z).norm() == 5);
  CHECK((CycloInt::from_integer(5, 2) - z).norm() == 31);
  CHECK(z.conj() * z == one);
  CHECK(z.galois(2).galois(3) == z.galois(6));

  const CycloInt x = CycloInt::from_exponent_weights(5, {3, -1, 4, 1, -5});
  const CycloInt y = one + z * z * Integer(2);
  const auto q = (x * y).divide(y);
  REQUIRE(q.has_value());
  CHECK(*q == x);
  CHECK((x * Integer(6)).divide_exact(6) == x);
  CHECK_THROWS_AS(x.divide_exact(7), ConsistencyError);
  CHECK_THROWS(x.to_integer());
  CHECK((x * x.conj()).is_integer() == false);
  CHECK((x * x.conj()).galois(-1) == x * x.conj());

  // The complex embedding respects products.
  const auto ex = x.embed(2), ey = y.embed(2), exy = (x * y).embed(2);
  CHECK(std::abs(ex * ey - exy) < 1e-12L);
}

TEST_CASE("monodromy data validation and genus") {
  const MonodromyDatum m11{5, 4, {1, 3, 3, 3}};
  CHECK_NOTHROW(m11.validate());
  CHECK(m11.genus() == 4);
  CHECK(MonodromyDatum{3, 6, {1, 1, 1, 1, 1, 1}}.genus() == 4);
  CHECK(MonodromyDatum{9, 4, {3, 5, 5, 5}}.genus() == 7);
  CHECK_THROWS_AS((MonodromyDatum{5, 4, {1, 3, 3, 2}}.validate()), InvalidInput);
  CHECK_THROWS_AS((MonodromyDatum{4, 4, {2, 2, 2, 2}}.validate()), InvalidInput);
  CHECK_THROWS_AS((MonodromyDatum{5, 3, {1, 2, 2}}.validate()), InvalidInput);
  CHECK_THROWS_AS((MonodromyDatum{5, 4, {5, 1, 2, 2}}.validate()), InvalidInput);
}

TEST_CASE("signatures of cyclic covers") {
  const Signature s11 = signature_of(MonodromyDatum{5, 4, {1, 3, 3, 3}});
  CHECK(s11.on_units() == std::vector<int>{1, 2, 0, 1});
  CHECK(s11.n == 2);
  CHECK(s11.d == 2);
  CHECK(s11.genus == 4);
  CHECK(relabel(s11, 2) == std::vector<int>{2, 1, 1, 0});

  const Signature s10 = signature_of(MonodromyDatum{3, 6, {1, 1, 1, 1, 1, 1}});
  CHECK(s10.on_units() == std::vector<int>{3, 1});
  CHECK(s10.n == 4);

  // Composite degree: the imprimitive eigenspaces still count toward the genus.
  const Signature s19 = signature_of(MonodromyDatum{9, 4, {3, 5, 5, 5}});
  CHECK(s19.genus == 7);
  CHECK(s19.primitive_genus() == 6);

  // Every signature satisfies f(k) + f(-k) = n on the units.
  for (const auto& fam : builtin_families()) {
    const Signature s = signature_of(fam.datum);
    for (int k : nt::units_mod(s.m)) CHECK(s.at(k) + s.at(-k) == s.n);
  }
}

TEST_CASE("signatures given on the units") {
  const Signature s = signature_from_units(7, {1, 0, 0, 2, 2, 1});
  CHECK(s.n == 2);
  CHECK(s.d == 3);
  CHECK_THROWS_AS(signature_from_units(7, {1, 0, 0, 2, 2, 2}), InvalidInput);
  CHECK_THROWS_AS(signature_from_units(7, {1, 0, 0}), InvalidInput);
}

TEST_CASE("simple signatures and CM types") {
  const auto cm = simple_signature_check(signature_of(MonodromyDatum{5, 4, {1, 3, 3, 3}}));
  REQUIRE(cm.has_value());
  CHECK(cm->phi == std::vector<int>{1, 3});
  CHECK(cm->sigma1 == 1);
  CHECK(cm->phi_star() == std::vector<int>{2, 4});
  // Two embeddings of a CM type carrying dimension one is not simple.
  CHECK_FALSE(simple_signature_check(signature_from_units(5, {1, 1, 1, 1})).has_value());
}

TEST_CASE("splitting of p in Q(zeta_5)") {
  const auto cm = *simple_signature_check(signature_of(MonodromyDatum{5, 4, {1, 3, 3, 3}}));
  const SplittingDatum split1 = splitting_datum(5, 11, cm);
  CHECK(split1.f == 1);
  CHECK(split1.r == 4);
  CHECK_FALSE(split1.K_in_F0);

  const SplittingDatum split4 = splitting_datum(5, 19, cm);
  CHECK(split4.D == std::vector<int>{1, 4});
  CHECK(split4.f == 2);
  CHECK(split4.r == 2);
  CHECK(split4.K_in_F0);
  CHECK(split4.cosets == std::vector<std::vector<int>>{{1, 4}, {2, 3}});
  CHECK(split4.aP == std::vector<int>{1, 1});
  CHECK(split4.P1 == 0);
  CHECK(split4.P1_star == 0);
  CHECK(split4.coset_of(3) == 1);
  CHECK(split4.dual_coset(1) == 1);

  for (u64 p : {2, 3, 7, 13}) {
    const SplittingDatum s = splitting_datum(5, p, cm);
    CHECK(s.f == 4);
    CHECK(s.cosets.size() == 1);
    CHECK(s.aP == std::vector<int>{2});
  }
  const SplittingDatum split7 = splitting_datum(7, 2);
  CHECK(split7.f == 3);
  CHECK_FALSE(split7.K_in_F0);
  CHECK(split7.dual_coset(0) == 1);
}

TEST_CASE("rank condition on Galois translates") {
  CHECK_FALSE(check_assumption_c(signature_from_units(7, {1, 0, 0, 2, 2, 1})));
  CHECK(check_assumption_c(signature_from_units(7, {1, 0, 0, 3, 3, 2})));
  CHECK(check_assumption_c(signature_of(MonodromyDatum{5, 4, {1, 3, 3, 3}})));
  CHECK_FALSE(check_assumption_c(signature_of(family_by_key("M19").datum)));
}

TEST_CASE("exceptional relative dimensions") {
  const auto s19 = signature_of(family_by_key("M19").datum);
  const auto cm19 = *simple_signature_check(s19);
  const ExceptionalDims ex = assumption_c_exceptional_dims(9, cm19);
  CHECK(ex.roots == std::vector<int>{2});
  CHECK_FALSE(check_assumption_c(simple_signature_with(9, cm19, 2)));
  CHECK(check_assumption_c(simple_signature_with(9, cm19, 3)));

  // The m = 7 pair from the rank-condition test above differ only in n.
  const auto cm7 = *simple_signature_check(signature_from_units(7, {1, 0, 0, 2, 2, 1}));
  const ExceptionalDims ex7 = assumption_c_exceptional_dims(7, cm7);
  CHECK(std::find(ex7.roots.begin(), ex7.roots.end(), 2) != ex7.roots.end());
  CHECK(simple_signature_with(7, cm7, 3).on_units() == std::vector<int>{1, 0, 0, 3, 3, 2});
}

TEST_CASE("built-in families") {
  CHECK(builtin_families().size() == 11);
  CHECK(family_by_key("M11").datum.a == std::vector<int>{1, 3, 3, 3});
  CHECK(family_by_key("M10").default_branch.size() == 5);
  CHECK_THROWS_AS(family_by_key("M99"), InvalidInput);
  for (const auto& fam : builtin_families()) {
    CHECK_NOTHROW(fam.datum.validate());
    CHECK(static_cast<int>(fam.default_branch.size()) == fam.datum.N - 1);
  }
}

}  // TEST_SUITE
