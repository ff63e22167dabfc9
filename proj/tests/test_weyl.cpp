#include <doctest.h>

#include <algorithm>
#include <set>

#include "muord/cyclo_cm.hpp"
#include "muord/weyl.hpp"

using namespace muord;
using namespace muord::weyl;

namespace {

// Variables for n = 2, d = 2: a_1, b_1, a_2, b_2, t_1, t_2.
LaurentPoly mono(std::initializer_list<int> e, i64 c = 1) { return LaurentPoly::monomial(std::vector<int>(e), c); }
LaurentPoly num(i64 c) { return LaurentPoly::constant(6, c); }

const LaurentPoly a1 = mono({1, 0, 0, 0, 0, 0}), b1 = mono({0, 1, 0, 0, 0, 0});
const LaurentPoly a2 = mono({0, 0, 1, 0, 0, 0}), b2 = mono({0, 0, 0, 1, 0, 0});
const LaurentPoly a1i = mono({-1, 0, 0, 0, 0, 0}), b1i = mono({0, -1, 0, 0, 0, 0});
const LaurentPoly a2i = mono({0, 0, -1, 0, 0, 0}), b2i = mono({0, 0, 0, -1, 0, 0});

ComponentElement elem(std::vector<int> eps, std::vector<int> gamma) { return {std::move(eps), std::move(gamma)}; }

// One-based cycle notation of the unsigned permutation underlying B.
std::vector<std::vector<int>> cycles(const SignedPermMatrix& B) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(B.size(), false);
  for (int s = 0; s < B.size(); ++s) {
    if (seen[s] || B.row[s] == s) continue;
    std::vector<int> cyc;
    for (int k = s; !seen[k]; k = B.row[k]) {
      seen[k] = true;
      cyc.push_back(k + 1);
    }
    out.push_back(cyc);
  }
  return out;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("Laurent polynomial arithmetic") {
  const LaurentPoly x = a1 + b1i;
  CHECK((x * x).terms().size() == 3);
  CHECK((x - x).is_zero());
  CHECK((a1 * a1i) == num(1));
  CHECK(num(4).is_constant());
  CHECK_FALSE(x.is_constant());
  // b_1 -> a_1^-1 turns a_1 b_1 into 1.
  CHECK((a1 * b1).substitute(1, {-1, 0, 0, 0, 0, 0}) == num(1));
  CHECK(mono({1, 0, 0, 0, 2, 0}).specialize_to_one({4}) == a1);
  CHECK((a1 * b1i + num(2)).to_string(variable_names(2, 2)) == "a_1*b_1^-1 + 2");
  CHECK(variable_names(3, 1) == std::vector<std::string>{"x1_1", "x1_2", "x1_3", "t_1"});
}

TEST_CASE("component group sizes are 2^d d!") {
  int expected[] = {0, 2, 8, 48, 384};
  for (int d = 1; d <= 4; ++d) {
    const auto group = component_group(d);
    CHECK(static_cast<int>(group.size()) == expected[d]);
    CHECK(std::set<ComponentElement>(group.begin(), group.end()).size() == group.size());
  }
}

TEST_CASE("group law, inverses and the B representation") {
  for (int d = 1; d <= 3; ++d) {
    const auto group = component_group(d);
    const ComponentElement e = ComponentElement::identity(d);
    for (int n : {1, 2}) {
      for (const auto& g : group) {
        CHECK(g * g.inverse() == e);
        CHECK(g.inverse() * g == e);
        const SignedPermMatrix Bg = b_matrix(g, n, d);
        CHECK(Bg.preserves_form(n, d));
        for (const auto& h : group) {
          // B(g) B(h) and B(gh) differ by a diagonal +-1 that is constant
          // on each block, i.e. by an element of the torus.
          const SignedPermMatrix Bgh = b_matrix(g * h, n, d);
          const SignedPermMatrix prod = Bg * b_matrix(h, n, d);
          CHECK(Bgh.row == prod.row);
          for (int k = 0; k < Bgh.size(); ++k) {
            const int block = Bgh.row[k] / (2 * n);
            const int ref = 2 * n * block;
            const int ref_col = static_cast<int>(std::find(Bgh.row.begin(), Bgh.row.end(), ref) - Bgh.row.begin());
            CHECK(Bgh.sign[k] * prod.sign[k] == Bgh.sign[ref_col] * prod.sign[ref_col]);
          }
        }
      }
    }
  }
}

TEST_CASE("block flip as an explicit 4x4 matrix") {
  const SignedPermMatrix B = b_matrix(elem({-1}, {0}), 2, 1);
  const std::vector<std::vector<int>> expected{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}};
  CHECK(B.dense() == expected);
  CHECK(symplectic_form(2, 1)[0][2] == 1);
  CHECK(symplectic_form(2, 1)[3][1] == -1);
}

TEST_CASE("class structures of Q(zeta_5)") {
  const ClassStructure c4 = class_structure(5, 4, 2);
  CHECK(c4.f == 2);
  CHECK(c4.K_in_F0);
  CHECK(c4.block_embedding == std::vector<int>{1, 2});
  CHECK(c4.subspaces == std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5, 6, 7}});
  CHECK(consistent_elements(c4).size() == 4);
  CHECK(consistent_elements(class_structure(5, 1, 2)).size() == 1);
  CHECK(consistent_elements(class_structure(5, 2, 2)).size() == 8);
  CHECK(consistent_elements(class_structure(5, 3, 2)).size() == 8);
  CHECK_FALSE(consistent(elem({1, 1}, {1, 0}), c4));
}

TEST_CASE("identity class: product of the four eigenspace traces") {
  const ClassStructure c1 = class_structure(5, 1, 2);
  const LaurentPoly tf = trace_function(c1, ComponentElement::identity(2), false);
  CHECK(tf == (a1 + b1) * (a2 + b2) * (a1i + b1i) * (a2i + b2i));
  CHECK(nonconstant_on_Tprime(tf, 2, 2));
  // Adding the last factor instead of multiplying gives another function.
  CHECK(identity_class_variant() == (a1 + b1) * (a2 + b2) * (a1i + b1i) + (a2i + b2i));
  CHECK(identity_class_variant() != tf);
  CHECK(nonconstant_on_Tprime(identity_class_variant(), 2, 2));
}

TEST_CASE("order-2 class: the two per-factor formulas") {
  const ClassStructure c4 = class_structure(5, 4, 2);
  const LaurentPoly unflipped = a1 * b1 + a1 * b1i + a1i * b1 + a1i * b1i + num(2);
  const LaurentPoly flipped = a1 * b1i + a1i * b1;
  CHECK(trace_on_subspace(c4, elem({1, 1}, {0, 1}), 0, false) == unflipped);
  CHECK(trace_on_subspace(c4, elem({-1, 1}, {0, 1}), 0, false) == flipped);

  // The second factor is the same expression in a_2, b_2.
  const LaurentPoly unflipped2 = a2 * b2 + a2 * b2i + a2i * b2 + a2i * b2i + num(2);
  const LaurentPoly flipped2 = a2 * b2i + a2i * b2;
  CHECK(trace_function(c4, elem({1, 1}, {0, 1}), false) == unflipped * unflipped2);
  CHECK(trace_function(c4, elem({1, -1}, {0, 1}), false) == unflipped * flipped2);
  CHECK(trace_function(c4, elem({-1, -1}, {0, 1}), false) == flipped * flipped2);
}

TEST_CASE("order-4 class: the (1548)(3726) component") {
  const ClassStructure c2 = class_structure(5, 2, 2);
  const ComponentElement g = elem({1, -1}, {1, 0});
  CHECK(consistent(g, c2));
  // Its unsigned permutation is (1548)(3726).
  CHECK(cycles(b_matrix(g, 2, 2)) == std::vector<std::vector<int>>{{1, 5, 4, 8}, {2, 6, 3, 7}});
  CHECK(trace_function(c2, g, false) == a1 * b1i * a2 * b2i + a1i * b1 * a2i * b2);
}

TEST_CASE("T' restriction") {
  // On T' we have b_i = a_i^-1.
  const LaurentPoly r = restrict_to_Tprime(a1 * b1 + a2 * b2i, 2, 2);
  CHECK(r == num(1) + a2 * a2);
  CHECK(nonconstant_on_Tprime(a2 * b2i, 2, 2));
  CHECK_FALSE(nonconstant_on_Tprime(a1 * b1 + num(3), 2, 2));
  // A twist monomial alone in its torus class survives every twist value.
  CHECK(nonconstant_uniformly_in_t(a1 * b1i * mono({0, 0, 0, 0, 2, 0}), 2, 2));
  // Two twist monomials in one class can cancel at some twist.
  CHECK_FALSE(nonconstant_uniformly_in_t(a1 * b1i * (mono({0, 0, 0, 0, 1, 0}) - mono({0, 0, 0, 0, 0, 1})), 2, 2));
}

TEST_CASE("nonconstancy on every component of every built-in family") {
  int checked = 0;
  for (const auto& fam : builtin_families()) {
    const Signature sig = signature_of(fam.datum);
    if (!simple_signature_check(sig) || sig.n < 2) continue;
    for (int s : nt::units_mod(sig.m)) {
      const ClassStructure cls = class_structure(sig.m, s, sig.n);
      for (const auto& e : consistent_elements(cls)) {
        CAPTURE(fam.key);
        CAPTURE(s);
        CAPTURE(e.to_string());
        CHECK(nonconstant_on_Tprime(trace_function(cls, e, false), sig.n, sig.d));
        CHECK(nonconstant_uniformly_in_t(trace_function(cls, e, true), sig.n, sig.d));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}

}  // TEST_SUITE
