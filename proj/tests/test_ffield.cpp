#include <doctest.h>

#include <set>

#include "muord/common.hpp"
#include "muord/ffield.hpp"

using namespace muord;

TEST_SUITE("ffield") {

TEST_CASE("elementary number theory helpers") {
  CHECK(nt::is_prime(2));
  CHECK(nt::is_prime(1999));
  CHECK_FALSE(nt::is_prime(1));
  CHECK_FALSE(nt::is_prime(2001));
  CHECK(nt::is_prime(1'000'000'007ULL));
  CHECK(nt::primes_upto(2000).size() == 303);
  CHECK(nt::euler_phi(12) == 4);
  CHECK(nt::euler_phi(9) == 6);
  CHECK(nt::units_mod(10) == std::vector<int>{1, 3, 7, 9});
  CHECK(nt::multiplicative_order(2, 5) == 4);
  CHECK(nt::multiplicative_order(4, 5) == 2);
  CHECK(nt::multiplicative_order(11, 5) == 1);
  CHECK(nt::mod(-7, 5) == 3);
  CHECK(nt::inverse_mod(3, 7) == 5);
  CHECK(nt::powmod(3, 200, 1000003) == nt::powmod(9, 100, 1000003));
  CHECK(nt::valuation(Integer(7 * 7 * 7 * 10), 7) == 3);
  CHECK(nt::to_string(nt::ipow128(31, 8)) == "852891037441");
  CHECK_THROWS_AS(nt::ipow128(1'000'003, 8), Error);
}

TEST_CASE("prime field arithmetic") {
  PrimeField F(101);
  for (u64 a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK(F.sub(3, 5) == 99);
  CHECK(F.neg(0) == 0);
  CHECK(F.reduce(-1) == 100);
}

TEST_CASE("extension fields have the right multiplicative group") {
  for (auto [p, k] : {std::pair<u64, int>{3, 3}, {5, 2}, {3, 4}, {7, 2}}) {
    ExtField F = build_ext_field(p, k);
    CHECK(is_irreducible(F.modulus(), p));
    const u64 q = F.size();
    std::set<u64> seen;
    for (u64 i = 1; i < q; ++i) {
      const auto a = F.from_index(i);
      CHECK(F.index(a) == i);
      CHECK(F.is_one(F.pow(a, q - 1)));
      CHECK(F.is_one(F.mul(a, F.inv(a))));
      seen.insert(F.index(F.frobenius(a)));
    }
    // Frobenius permutes the nonzero elements.
    CHECK(seen.size() == q - 1);
  }
}

TEST_CASE("frobenius is additive and fixes the prime field") {
  ExtField F = build_ext_field(5, 3);
  for (u64 i = 0; i < F.size(); i += 7) {
    for (u64 j = 0; j < F.size(); j += 11) {
      const auto a = F.from_index(i), b = F.from_index(j);
      CHECK(F.index(F.frobenius(F.add(a, b))) == F.index(F.add(F.frobenius(a), F.frobenius(b))));
    }
  }
  for (u64 c = 0; c < 5; ++c) CHECK(F.index(F.frobenius(F.constant(c))) == c);
}

TEST_CASE("norms land in the prime field and are multiplicative") {
  ExtField F = build_ext_field(7, 2);
  for (u64 i = 1; i < F.size(); i += 3) {
    const auto a = F.from_index(i), b = F.from_index((i * 5) % (F.size() - 1) + 1);
    CHECK(F.norm_to_prime(F.mul(a, b)) == F.base().mul(F.norm_to_prime(a), F.norm_to_prime(b)));
  }
}

TEST_CASE("counting m-th roots agrees with enumeration") {
  ExtField F = build_ext_field(13, 2);
  for (u64 m : {2, 3, 4, 5, 7}) {
    for (u64 ci : {0, 1, 2, 57, 100}) {
      const auto c = F.from_index(ci);
      u64 brute = 0;
      for (u64 y = 0; y < F.size(); ++y) {
        const auto yy = F.from_index(y);
        if (F.index(F.pow(yy, m)) == ci) ++brute;
      }
      CHECK(count_mth_roots(F, c, m) == brute);
    }
  }
}

TEST_CASE("element orders") {
  ExtField F = build_ext_field(11, 2);
  const auto w = F.element_of_order(5);
  CHECK(F.has_order(w, 5));
  CHECK_FALSE(F.has_order(w, 10));
  CHECK(F.has_order(F.element_of_order(120), 120));
}

TEST_CASE("character tables agree with direct exponentiation") {
  struct Case { u64 p; int k; int m; };
  for (const Case& c : {Case{7, 2, 3}, Case{11, 1, 5}, Case{13, 1, 4}, Case{3, 4, 5}, Case{19, 2, 9}}) {
    RootReference ref(c.p, c.m);
    ExtField F = build_ext_field(c.p, c.k);
    CharacterTable table(F, c.m, ref, 1'000'000);
    CHECK(table.delta() == nt::gcd(c.m, static_cast<i64>(F.size() - 1)));
    for (u64 i = 1; i < F.size(); ++i) {
      const auto t = F.from_index(i);
      CHECK(table.exponent_at(i) == direct_exponent(F, table.rho(), table.delta(), t));
    }
    // The exponent is a homomorphism to Z/delta.
    for (u64 i = 1; i < F.size(); i += 5) {
      for (u64 j = 1; j < F.size(); j += 7) {
        const auto prod = F.mul(F.from_index(i), F.from_index(j));
        CHECK(table.exponent(prod) == (table.exponent_at(i) + table.exponent_at(j)) % table.delta());
      }
    }
  }
}

TEST_CASE("the residue root is primitive and its minimal polynomials have the right degree") {
  RootReference ref(3, 5);
  CHECK(ref.residue_degree() == 4);
  CHECK(ref.field().has_order(ref.omega_bar(), 5));
  CHECK(ref.minimal_polynomial(1).size() == 5);
  RootReference split(31, 5);
  CHECK(split.residue_degree() == 1);
  CHECK(split.minimal_polynomial(2).size() == 2);
}

TEST_CASE("budget is enforced") {
  RootReference ref(31, 5);
  ExtField F = build_ext_field(31, 2);
  CHECK_THROWS_AS(CharacterTable(F, 5, ref, 100), BudgetExceeded);
}

}  // TEST_SUITE
