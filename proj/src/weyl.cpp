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
#include "muord/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace muord::weyl {

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly LaurentPoly::constant(int nvars, i64 c) {
  LaurentPoly out(nvars);
  out.add_term(Exponents(nvars, 0), c);
  return out;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, i64 c) {
  LaurentPoly out(static_cast<int>(e.size()));
  out.add_term(e, c);
  return out;
}

void LaurentPoly::add_term(const Exponents& e, i64 c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  out += o;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (nvars_ != o.nvars_) throw InvalidInput("LaurentPoly: variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("LaurentPoly: variable count mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_) throw InvalidInput("LaurentPoly: variable count mismatch");
  LaurentPoly out(nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int k = 0; k < nvars_; ++k) e[k] = e1[k] + e2[k];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::substitute(int var, const Exponents& image) const {
  if (static_cast<int>(image.size()) != nvars_) throw InvalidInput("LaurentPoly::substitute: bad image length");
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    const int power = ne[var];
    ne[var] = 0;
    for (int k = 0; k < nvars_; ++k) ne[k] += power * image[k];
    out.add_term(ne, c);
  }
  return out;
}

LaurentPoly LaurentPoly::specialize_to_one(const std::vector<int>& vars) const {
  LaurentPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    for (int v : vars) ne[v] = 0;
    out.add_term(ne, c);
  }
  return out;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono;
    for (int k = 0; k < nvars_; ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (e[k] != 1) mono += "^" + std::to_string(e[k]);
    }
    i64 mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mono.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------- component group

ComponentElement ComponentElement::identity(int d) {
  ComponentElement out;
  out.eps.assign(d, 1);
  out.gamma.resize(d);
  std::iota(out.gamma.begin(), out.gamma.end(), 0);
  return out;
}

ComponentElement ComponentElement::operator*(const ComponentElement& o) const {
  const int d = static_cast<int>(eps.size());
  ComponentElement out;
  out.eps.resize(d);
  out.gamma.resize(d);
  // Matches B = E_gamma delta_eps: moving delta_eps past E_gamma' reads
  // the signs through gamma'.
  for (int i = 0; i < d; ++i) out.eps[i] = eps[o.gamma[i]] * o.eps[i];
  for (int i = 0; i < d; ++i) out.gamma[i] = gamma[o.gamma[i]];
  return out;
}

ComponentElement ComponentElement::inverse() const {
  const int d = static_cast<int>(eps.size());
  ComponentElement out;
  out.gamma.resize(d);
  out.eps.resize(d);
  for (int i = 0; i < d; ++i) out.gamma[gamma[i]] = i;
  // (e, g)^{-1} = (e o g^{-1}, g^{-1}); signs are their own inverses.
  for (int i = 0; i < d; ++i) out.eps[i] = eps[out.gamma[i]];
  return out;
}

bool ComponentElement::operator<(const ComponentElement& o) const {
  if (gamma != o.gamma) return gamma < o.gamma;
  // +1 sorts before -1.
  return std::lexicographical_compare(eps.begin(), eps.end(), o.eps.begin(), o.eps.end(),
                                      [](int x, int y) { return x > y; });
}

std::string ComponentElement::to_string() const {
  std::string out = "eps=(";
  for (size_t i = 0; i < eps.size(); ++i) out += (i ? "," : "") + std::string(eps[i] > 0 ? "+1" : "-1");
  out += ") gamma=[";
  for (size_t i = 0; i < gamma.size(); ++i) out += (i ? "," : "") + std::to_string(gamma[i]);
  return out + "]";
}

std::vector<ComponentElement> component_group(int d) {
  if (d < 1) throw InvalidInput("component_group: d must be positive");
  std::vector<ComponentElement> out;
  std::vector<int> gamma(d);
  std::iota(gamma.begin(), gamma.end(), 0);
  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      ComponentElement e;
      e.gamma = gamma;
      e.eps.resize(d);
      for (int i = 0; i < d; ++i) e.eps[i] = (mask >> (d - 1 - i)) & 1 ? -1 : 1;
      out.push_back(std::move(e));
    }
  } while (std::next_permutation(gamma.begin(), gamma.end()));
  return out;
}

// ------------------------------------------------------------ signed matrices

SignedPermMatrix SignedPermMatrix::identity(int size) {
  SignedPermMatrix out;
  out.row.resize(size);
  std::iota(out.row.begin(), out.row.end(), 0);
  out.sign.assign(size, 1);
  return out;
}

SignedPermMatrix SignedPermMatrix::operator*(const SignedPermMatrix& o) const {
  SignedPermMatrix out;
  out.row.resize(o.size());
  out.sign.resize(o.size());
  for (int k = 0; k < o.size(); ++k) {
    out.row[k] = row[o.row[k]];
    out.sign[k] = sign[o.row[k]] * o.sign[k];
  }
  return out;
}

std::vector<std::vector<int>> SignedPermMatrix::dense() const {
  std::vector<std::vector<int>> out(size(), std::vector<int>(size(), 0));
  for (int k = 0; k < size(); ++k) out[row[k]][k] = sign[k];
  return out;
}

std::vector<std::vector<int>> symplectic_form(int n, int d) {
  const int dim = 2 * n * d;
  std::vector<std::vector<int>> J(dim, std::vector<int>(dim, 0));
  for (int i = 0; i < d; ++i) {
    for (int l = 0; l < n; ++l) {
      J[2 * n * i + l][2 * n * i + n + l] = 1;
      J[2 * n * i + n + l][2 * n * i + l] = -1;
    }
  }
  return J;
}

bool SignedPermMatrix::preserves_form(int n, int d) const {
  if (size() != 2 * n * d) return false;
  const auto J = symplectic_form(n, d);
  // (B^T J B)[a][b] = sign[a] sign[b] J[row[a]][row[b]].
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (sign[a] * sign[b] * J[row[a]][row[b]] != J[a][b]) return false;
    }
  }
  return true;
}

SignedPermMatrix b_matrix(const ComponentElement& elem, int n, int d) {
  if (static_cast<int>(elem.eps.size()) != d || static_cast<int>(elem.gamma.size()) != d) {
    throw InvalidInput("b_matrix: element does not match d");
  }
  const int dim = 2 * n * d;
  SignedPermMatrix delta = SignedPermMatrix::identity(dim);
  for (int i = 0; i < d; ++i) {
    if (elem.eps[i] > 0) continue;
    for (int k = 0; k < 2 * n; ++k) {
      delta.row[2 * n * i + k] = 2 * n * i + (2 * n - 1 - k);
      delta.sign[2 * n * i + k] = k < n ? -1 : 1;
    }
  }
  SignedPermMatrix E = SignedPermMatrix::identity(dim);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < 2 * n; ++k) E.row[2 * n * i + k] = 2 * n * elem.gamma[i] + k;
  }
  SignedPermMatrix B = E * delta;
  if (!B.preserves_form(n, d)) throw ConsistencyError("b_matrix: result is not symplectic");
  return B;
}

// ----------------------------------------------------------- class structure

ClassStructure class_structure(int m, int sigma, int n) {
  if (nt::gcd(sigma, m) != 1) throw InvalidInput("class_structure: sigma must be a unit mod m");
  const SplittingDatum split = splitting_datum(m, static_cast<u64>(nt::mod(sigma, m)));
  ClassStructure cls;
  cls.m = m;
  cls.sigma = nt::mod(sigma, m);
  cls.n = n;
  cls.d = split.d;
  cls.f = split.f;
  cls.K_in_F0 = split.K_in_F0;
  cls.cosets = split.cosets;

  // Blocks in coset order, so that blocks sharing a K-embedding are adjacent.
  std::vector<int> half_of(m, -1);  // embedding -> index of its half-block (2*block + {0,1})
  for (const auto& T : split.cosets) {
    for (int s : T) {
      if (half_of[s] >= 0) continue;
      const int block = static_cast<int>(cls.block_embedding.size());
      cls.block_embedding.push_back(s);
      half_of[s] = 2 * block;
      half_of[m - s] = 2 * block + 1;
    }
  }
  for (const auto& T : split.cosets) {
    std::vector<int> basis;
    for (int s : T) {
      const int block = half_of[s] / 2, half = half_of[s] % 2;
      for (int l = 0; l < n; ++l) basis.push_back(2 * n * block + half * n + l);
    }
    std::sort(basis.begin(), basis.end());
    cls.subspaces.push_back(std::move(basis));
  }
  return cls;
}

bool consistent(const ComponentElement& elem, const ClassStructure& cls) {
  const SignedPermMatrix B = b_matrix(elem, cls.n, cls.d);
  for (const auto& W : cls.subspaces) {
    const std::set<int> members(W.begin(), W.end());
    for (int k : W) {
      if (!members.count(B.row[k])) return false;
    }
  }
  return true;
}

std::vector<ComponentElement> consistent_elements(const ClassStructure& cls) {
  std::vector<ComponentElement> out;
  for (auto& e : component_group(cls.d)) {
    if (consistent(e, cls)) out.push_back(std::move(e));
  }
  return out;
}

// ------------------------------------------------------------------ traces

std::vector<std::string> variable_names(int n, int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) {
    for (int l = 0; l < n; ++l) {
      if (n == 2) names.push_back(std::string(l == 0 ? "a_" : "b_") + std::to_string(i + 1));
      else names.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(l + 1));
    }
  }
  for (int i = 0; i < d; ++i) names.push_back("t_" + std::to_string(i + 1));
  return names;
}

namespace {

/// Exponent vector of the weight of B t M's diagonal factor at basis index k.
LaurentPoly::Exponents weight_at(int k, int n, int d, bool with_twist) {
  LaurentPoly::Exponents e(n * d + d, 0);
  const int block = k / (2 * n), pos = k % (2 * n);
  const int sgn = pos < n ? 1 : -1;
  e[block * n + pos % n] = sgn;
  if (with_twist) e[n * d + block] = sgn;
  return e;
}

}  // namespace

LaurentPoly trace_on_subspace(const ClassStructure& cls, const ComponentElement& elem, int subspace,
                              bool with_twist) {
  if (!consistent(elem, cls)) throw InvalidInput("trace_function: element " + elem.to_string() +
                                                 " does not preserve the eigenspaces of class " +
                                                 std::to_string(cls.sigma));
  const int n = cls.n, d = cls.d, nv = n * d + d;
  const SignedPermMatrix B = b_matrix(elem, n, d);
  const auto& W = cls.subspaces.at(subspace);

  // g = B t M is monomial: g e_k = sign_k w_k e_{pi(k)}.  An f-subset S of
  // the basis contributes to the wedge trace only when pi(S) = S, i.e. when
  // S is a union of pi-cycles.
  std::vector<std::vector<int>> cycles;
  std::set<int> seen;
  for (int k : W) {
    if (seen.count(k)) continue;
    std::vector<int> cyc;
    for (int x = k; !seen.count(x); x = B.row[x]) {
      seen.insert(x);
      cyc.push_back(x);
    }
    cycles.push_back(std::move(cyc));
  }

  LaurentPoly total(nv);
  const int nc = static_cast<int>(cycles.size());
  const int f = cls.f;
  // Subsets of cycles; the cycle count is at most n f, small for every family here.
  if (nc > 24) throw InvalidInput("trace_function: too many cycles");
  for (u64 mask = 0; mask < (1ULL << nc); ++mask) {
    int size = 0;
    for (int c = 0; c < nc; ++c) {
      if (mask >> c & 1) size += static_cast<int>(cycles[c].size());
    }
    if (size != f) continue;
    LaurentPoly::Exponents e(nv, 0);
    i64 coeff = 1;
    for (int c = 0; c < nc; ++c) {
      if (!(mask >> c & 1)) continue;
      // A cycle of length L has permutation sign (-1)^{L-1}.
      if (cycles[c].size() % 2 == 0) coeff = -coeff;
      for (int k : cycles[c]) {
        coeff *= B.sign[k];
        const auto w = weight_at(k, n, d, with_twist);
        for (int v = 0; v < nv; ++v) e[v] += w[v];
      }
    }
    total += LaurentPoly::monomial(e, coeff);
  }
  return total;
}

LaurentPoly trace_function(const ClassStructure& cls, const ComponentElement& elem, bool with_twist) {
  LaurentPoly out = LaurentPoly::constant(cls.n * cls.d + cls.d, 1);
  for (int k = 0; k < static_cast<int>(cls.subspaces.size()); ++k) {
    out = out * trace_on_subspace(cls, elem, k, with_twist);
  }
  return out;
}

LaurentPoly restrict_to_Tprime(const LaurentPoly& poly, int n, int d) {
  LaurentPoly out = poly;
  for (int i = 0; i < d; ++i) {
    LaurentPoly::Exponents image(poly.nvars(), 0);
    for (int l = 0; l + 1 < n; ++l) image[i * n + l] = -1;
    out = out.substitute(i * n + n - 1, image);
  }
  return out;
}

bool nonconstant_on_Tprime(const LaurentPoly& poly, int n, int d) {
  const LaurentPoly r = restrict_to_Tprime(poly, n, d);
  for (const auto& [e, c] : r.terms()) {
    for (int v = 0; v < n * d; ++v) {
      if (e[v] != 0) return true;
    }
  }
  return false;
}

bool nonconstant_uniformly_in_t(const LaurentPoly& poly, int n, int d) {
  const LaurentPoly r = restrict_to_Tprime(poly, n, d);
  std::map<LaurentPoly::Exponents, int> twist_terms;
  for (const auto& [e, c] : r.terms()) {
    LaurentPoly::Exponents torus(e.begin(), e.begin() + n * d);
    if (std::any_of(torus.begin(), torus.end(), [](int x) { return x != 0; })) ++twist_terms[torus];
  }
  for (const auto& [torus, count] : twist_terms) {
    if (count == 1) return true;
  }
  return false;
}

LaurentPoly identity_class_variant() {
  const int nv = 2 * 2 + 2;
  auto var = [nv](int k, int power) {
    LaurentPoly::Exponents e(nv, 0);
    e[k] = power;
    return LaurentPoly::monomial(e);
  };
  const LaurentPoly a1 = var(0, 1), b1 = var(1, 1), a2 = var(2, 1), b2 = var(3, 1);
  const LaurentPoly a1i = var(0, -1), b1i = var(1, -1), a2i = var(2, -1), b2i = var(3, -1);
  return (a1 + b1) * (a2 + b2) * (a1i + b1i) + (a2i + b2i);
}

}  // namespace muord::weyl
