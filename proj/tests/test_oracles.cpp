// Comparisons against values computed by an independent Python implementation
// (oracles/generate.py) and frozen as JSON.
#include <doctest.h>

#include "fixtures.hpp"
#include "muord/counting.hpp"
#include "muord/harness.hpp"
#include "muord/invariant.hpp"
#include "muord/weyl.hpp"

using namespace muord;

namespace {

MonodromyDatum datum_of(const nlohmann::json& e) {
  MonodromyDatum d;
  d.m = e["m"].get<int>();
  d.a = e["a"].get<std::vector<int>>();
  d.N = static_cast<int>(d.a.size());
  return d;
}

}  // namespace

TEST_SUITE("oracles") {

TEST_CASE("point counts and L-polynomials") {
  const auto entries = fixtures::load("lpolys.json");
  REQUIRE(entries.size() >= 20);
  for (const auto& e : entries) {
    const MonodromyDatum d = datum_of(e);
    const auto branch = e["branch"].get<std::vector<i64>>();
    const u64 p = e["p"].get<u64>();
    const CurveInstance c = CurveInstance::from_datum(d, branch, p);
    CAPTURE(d.to_string());
    CAPTURE(p);
    REQUIRE(c.bad_reason().empty());
    CHECK(c.genus() == e["g"].get<int>());

    const auto counts = e["counts"].get<std::vector<u64>>();
    for (size_t k = 1; k <= counts.size(); ++k) CHECK(count_projective(c, static_cast<int>(k)) == counts[k - 1]);

    const auto expected = fixtures::integers(e["L"]);
    const LPolynomial brute = lpolynomial_from_counts(c);
    FrobeniusSums sums(c);
    const LPolynomial chars = lpolynomial_from_characters(sums);
    CHECK(brute.c == expected);
    CHECK(chars.c == expected);
    CHECK(chars.newton_polygon() == fixtures::polygon(e["polygon"]));
  }
}

TEST_CASE("directly computed polygons at prime degree") {
  // For prime m the whole of H^1 is primitive, so the polygon assembled
  // from eigenspace pieces must be the polygon of the L-polynomial.
  for (const auto& e : fixtures::load("lpolys.json")) {
    const MonodromyDatum d = datum_of(e);
    if (!nt::is_prime(static_cast<u64>(d.m))) continue;
    ScanConfig config;
    config.datum = d;
    config.branch = e["branch"].get<std::vector<i64>>();
    config.p_max = 1000;
    const u64 p = e["p"].get<u64>();
    const ScanRecord r = classify_prime(config, p);
    CAPTURE(d.to_string());
    CAPTURE(p);
    REQUIRE(r.classified());
    REQUIRE(r.nu.has_value());
    CHECK(*r.nu == fixtures::polygon(e["polygon"]));
  }
}

TEST_CASE("a_p from complex character sums") {
  const auto entries = fixtures::load("ap.json");
  REQUIRE(entries.size() >= 10);
  for (const auto& e : entries) {
    const MonodromyDatum d = datum_of(e);
    const u64 p = e["p"].get<u64>();
    ScanConfig config;
    config.datum = d;
    config.branch = e["branch"].get<std::vector<i64>>();
    config.p_max = 1000;
    const ScanRecord r = classify_prime(config, p);
    CAPTURE(d.to_string());
    CAPTURE(p);
    REQUIRE(r.a_p.has_value());
    CHECK(*r.a_p == Integer(e["a_p"].get<std::string>()));
  }
}

TEST_CASE("trace functions as sums of principal minors") {
  int compared = 0;
  for (const auto& e : fixtures::load("weyl.json")) {
    const int m = e["m"].get<int>(), n = e["n"].get<int>(), sigma = e["sigma"].get<int>();
    const weyl::ClassStructure cls = weyl::class_structure(m, sigma, n);
    const auto consistent = weyl::consistent_elements(cls);
    CAPTURE(m);
    CAPTURE(sigma);
    CHECK(static_cast<int>(consistent.size()) == e["consistent"].get<int>());
    for (const auto& comp : e["components"]) {
      weyl::ComponentElement g{comp["eps"].get<std::vector<int>>(), comp["gamma"].get<std::vector<int>>()};
      CAPTURE(g.to_string());
      REQUIRE(weyl::consistent(g, cls));
      weyl::LaurentPoly expected(cls.n * cls.d + cls.d);
      for (const auto& term : comp["terms"]) {
        expected += weyl::LaurentPoly::monomial(term[0].get<std::vector<int>>(), term[1].get<i64>());
      }
      CHECK(weyl::trace_function(cls, g, true) == expected);
      ++compared;
    }
  }
  CHECK(compared >= 30);
}

}  // TEST_SUITE
