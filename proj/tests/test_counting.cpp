#include <doctest.h>

#include "muord/counting.hpp"

using namespace muord;

namespace {

CurveInstance curve_of(const char* key, u64 p) {
  const Family& fam = family_by_key(key);
  return CurveInstance::from_datum(fam.datum, fam.default_branch, p);
}

CurveInstance m11_t3(u64 p) { return CurveInstance::from_datum(MonodromyDatum{5, 4, {1, 3, 3, 3}}, {0, 1, 3}, p); }

}  // namespace

TEST_SUITE("counting") {

TEST_CASE("curve instances") {
  const CurveInstance c = m11_t3(31);
  CHECK(c.genus() == 4);
  CHECK(c.a_inf == 3);
  CHECK(c.branch_mod_p() == std::vector<u32>{0, 1, 3});
  int total = 0;
  for (int j = 1; j < 5; ++j) {
    CHECK(c.eigenspace_dim(j) == 2);
    total += c.eigenspace_dim(j);
  }
  CHECK(total == 2 * c.genus());
  CHECK(c.bad_reason().empty());
  CHECK(m11_t3(5).bad_reason() == "p divides m");
  CHECK_FALSE(CurveInstance::from_datum(MonodromyDatum{5, 4, {1, 3, 3, 3}}, {0, 1, 12}, 11).bad_reason().empty());

  // Composite degree: eigenspaces of non-units belong to quotients.
  const CurveInstance c19 = curve_of("M19", 19);
  int dims = 0;
  for (int j = 1; j < 9; ++j) dims += c19.eigenspace_dim(j);
  CHECK(dims == 2 * c19.genus());
  CHECK(c19.eigenspace_dim(3) + c19.eigenspace_dim(6) == 2);
}

TEST_CASE("fibres above branch points") {
  // Exponent 3 at infinity is prime to 5: a single point.
  CHECK(count_fiber_above_branch(m11_t3(11), -1, 1) == 1);
  // Exponent 3 on y^9: gcd 3, so three points when the fibre is rational.
  const CurveInstance c19 = curve_of("M19", 19);
  const u64 above = count_fiber_above_branch(c19, 0, 1);
  CHECK((above == 0 || above == 3));
}

TEST_CASE("character sums reproduce the point counts") {
  for (const char* key : {"M6", "M8", "M10", "M11", "M14", "M16"}) {
    for (u64 p : {13, 17, 31}) {
      const CurveInstance c = curve_of(key, p);
      if (!c.bad_reason().empty()) continue;
      FrobeniusSums sums(c);
      for (int k = 1; k <= 2; ++k) {
        CAPTURE(key);
        CAPTURE(p);
        CAPTURE(k);
        CHECK(sums.count_from_sums(k) == count_projective(c, k));
      }
    }
  }
}

TEST_CASE("traces only exist once the Frobenius orbit closes") {
  FrobeniusSums sums(m11_t3(19));
  CHECK(frobenius_orbit(5, 19, 2) == std::vector<int>{2, 3});
  CHECK_FALSE(sums.defined(1, 1));
  CHECK(sums.defined(1, 2));
  // Galois conjugate indices give conjugate traces.
  CHECK(sums.trace(4, 2) == sums.trace(1, 2).conj());
}

TEST_CASE("Newton identities") {
  // Roots 1, 2, 3.
  const auto e = elementary_from_power_sums({Integer(6), Integer(14), Integer(36)});
  CHECK(e == std::vector<Integer>{1, 6, 11, 6});
  CHECK_THROWS_AS(elementary_from_power_sums({Integer(1), Integer(2)}), ConsistencyError);
}

TEST_CASE("L-polynomial checks detect corruption") {
  LPolynomial L = lpolynomial_from_counts(m11_t3(31));
  CHECK(L.g == 4);
  CHECK(L.functional_equation_holds());
  CHECK(L.weil_bound_holds());
  CHECK_NOTHROW(L.check());
  CHECK(L.newton_polygon().to_string() == "0^4 ⊕ 1^4");

  LPolynomial broken_fe = L;
  broken_fe.c[7] += 31;
  CHECK_FALSE(broken_fe.functional_equation_holds());
  CHECK_THROWS_AS(broken_fe.check(), ConsistencyError);

  // Symmetric but with a real root far outside the circle.
  LPolynomial broken_weil = L;
  broken_weil.c[4] += 400000;
  CHECK(broken_weil.functional_equation_holds());
  CHECK_FALSE(broken_weil.weil_bound_holds());

  // 1 + p T^2 is supersingular and lies exactly on the circle.
  LPolynomial ss{7, 1, {1, 0, 7}};
  CHECK(ss.weil_bound_holds());
  CHECK(ss.newton_polygon().to_string() == "1/2^2");
}

TEST_CASE("character-sum and counting L-polynomials agree") {
  for (u64 p : {7, 11, 13, 19}) {
    const CurveInstance c = m11_t3(p);
    FrobeniusSums sums(c);
    CAPTURE(p);
    CHECK(lpolynomial_from_characters(sums).c == lpolynomial_from_counts(c).c);
  }
}

TEST_CASE("eigenspace characteristic polynomials") {
  FrobeniusSums sums(m11_t3(31));
  const EigenspaceCharPoly cp = eigenspace_charpoly(sums, 1, -1, true);
  CHECK(cp.n == 2);
  CHECK(cp.f == 1);
  CHECK(cp.complete());
  CHECK(cp.marker.empty());
  // e_n is a unit times q^{n/2}: its norm is q^{n * phi(m) / 2}.
  CHECK(cp.e[2]->norm() == boost::multiprecision::pow(Integer(31), 4));
  const EigenspaceCharPoly dual = cp.conjugate();
  CHECK(*dual.e[1] == cp.e[1]->conj());
  CHECK(cp.q_power(2) == 961);
}

TEST_CASE("the budget caps field enumeration") {
  const CurveInstance c = m11_t3(31);
  CHECK_THROWS_AS(count_affine_smooth(c, 2, 500), BudgetExceeded);
  FrobeniusSums sums(c, 1000);
  CHECK(sums.affordable(1));
  CHECK_FALSE(sums.affordable(3));
}

}  // TEST_SUITE
