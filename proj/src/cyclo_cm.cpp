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
#include "muord/cyclo_cm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace muord {

void MonodromyDatum::validate() const {
  if (m < 3) throw InvalidInput("MonodromyDatum: m must be at least 3");
  if (N < 4) throw InvalidInput("MonodromyDatum: N must be at least 4");
  if (static_cast<int>(a.size()) != N) throw InvalidInput("MonodromyDatum: need N exponents");
  i64 sum = 0;
  i64 g = m;
  for (int ai : a) {
    if (nt::mod(ai, m) == 0) throw InvalidInput("MonodromyDatum: exponents must be nonzero mod m");
    sum += ai;
    g = nt::gcd(g, ai);
  }
  if (nt::mod(sum, m) != 0) throw InvalidInput("MonodromyDatum: exponents must sum to 0 mod m");
  if (g != 1) throw InvalidInput("MonodromyDatum: cover is disconnected (common factor with m)");
}

int MonodromyDatum::genus() const {
  int twice = -2 * m;
  for (int ai : a) twice += m - static_cast<int>(nt::gcd(ai, m));
  return (twice + 2) / 2;
}

std::string MonodromyDatum::to_string() const {
  std::ostringstream os;
  os << "(" << m << ", " << N << ", (";
  for (size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << "))";
  return os.str();
}

std::vector<int> Signature::on_units() const {
  std::vector<int> out;
  for (int k : nt::units_mod(m)) out.push_back(values[k]);
  return out;
}

Signature signature_of(const MonodromyDatum& datum) {
  datum.validate();
  Signature sig;
  sig.m = datum.m;
  sig.values.assign(datum.m, 0);
  for (int k = 1; k < datum.m; ++k) {
    i64 residues = 0;
    for (int ai : datum.a) residues += nt::mod(-static_cast<i64>(k) * ai, datum.m);
    if (residues % datum.m != 0) throw ConsistencyError("signature_of: fractional parts do not sum to an integer");
    sig.values[k] = static_cast<int>(residues / datum.m) - 1;
    sig.genus += sig.values[k];
  }
  sig.d = nt::euler_phi(datum.m) / 2;
  sig.n = sig.values[1] + sig.values[datum.m - 1];
  for (int k : nt::units_mod(datum.m)) {
    if (sig.values[k] + sig.values[datum.m - k] != sig.n) throw ConsistencyError("signature_of: relative dimension varies");
  }
  return sig;
}

Signature signature_from_units(int m, const std::vector<int>& unit_values) {
  const std::vector<int> units = nt::units_mod(m);
  if (unit_values.size() != units.size()) throw InvalidInput("signature_from_units: need one value per unit");
  Signature sig;
  sig.m = m;
  sig.values.assign(m, 0);
  for (size_t i = 0; i < units.size(); ++i) {
    if (unit_values[i] < 0) throw InvalidInput("signature_from_units: negative value");
    sig.values[units[i]] = unit_values[i];
    sig.genus += unit_values[i];
  }
  sig.d = static_cast<int>(units.size()) / 2;
  sig.n = sig.values[1] + sig.values[m - 1];
  for (int k : units) {
    if (sig.values[k] + sig.values[m - k] != sig.n) throw InvalidInput("signature_from_units: f(k) + f(-k) is not constant");
  }
  return sig;
}

std::vector<int> relabel(const Signature& sig, int multiplier) {
  if (nt::gcd(multiplier, sig.m) != 1) throw InvalidInput("relabel: multiplier must be a unit");
  std::vector<int> out;
  for (int k : nt::units_mod(sig.m)) out.push_back(sig.at(multiplier * k));
  return out;
}

std::vector<int> SimpleSignature::phi_star() const {
  std::vector<int> out;
  for (int k : phi) out.push_back(m - k);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SimpleSignature> simple_signature_check(const Signature& sig) {
  const int m = sig.m;
  const std::vector<int> units = nt::units_mod(m);
  for (int s1 : units) {
    if (sig.at(s1) != 1) continue;
    SimpleSignature cm;
    cm.m = m;
    cm.sigma1 = s1;
    bool ok = true;
    for (int k : units) {
      const int partner = m - k;
      if (k > partner) continue;  // visit each pair once via its smaller member
      if (k == s1 || partner == s1) {
        cm.phi.push_back(s1);
        continue;
      }
      if (sig.at(k) == 0) cm.phi.push_back(k);
      else if (sig.at(partner) == 0) cm.phi.push_back(partner);
      else {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::sort(cm.phi.begin(), cm.phi.end());
    return cm;
  }
  return std::nullopt;
}

SplittingDatum splitting_datum(int m, u64 p) {
  if (nt::gcd(static_cast<i64>(p % m), m) != 1) throw InvalidInput("splitting_datum: p divides m");
  SplittingDatum s;
  s.m = m;
  s.p = p;
  const int pm = static_cast<int>(p % m);
  int x = 1;
  do {
    s.D.push_back(x);
    x = x * pm % m;
  } while (x != 1);
  std::sort(s.D.begin(), s.D.end());
  s.f = static_cast<int>(s.D.size());
  const std::vector<int> units = nt::units_mod(m);
  s.r = static_cast<int>(units.size()) / s.f;
  s.d = static_cast<int>(units.size()) / 2;
  s.K_in_F0 = std::find(s.D.begin(), s.D.end(), m - 1) != s.D.end();
  std::vector<bool> seen(m, false);
  for (int k : units) {
    if (seen[k]) continue;
    std::vector<int> coset;
    for (int t : s.D) {
      const int e = static_cast<int>(static_cast<i64>(k) * t % m);
      coset.push_back(e);
      seen[e] = true;
    }
    std::sort(coset.begin(), coset.end());
    s.cosets.push_back(coset);
  }
  return s;
}

SplittingDatum splitting_datum(int m, u64 p, const SimpleSignature& cm) {
  SplittingDatum s = splitting_datum(m, p);
  const std::vector<int> star = cm.phi_star();
  for (const auto& coset : s.cosets) {
    int count = 0;
    for (int k : coset) count += std::binary_search(star.begin(), star.end(), k) ? 1 : 0;
    s.aP.push_back(count);
  }
  s.P1 = s.coset_of(cm.sigma1);
  s.P1_star = s.coset_of(m - cm.sigma1);
  return s;
}

int SplittingDatum::coset_of(int k) const {
  k = static_cast<int>(nt::mod(k, m));
  for (size_t i = 0; i < cosets.size(); ++i) {
    if (std::binary_search(cosets[i].begin(), cosets[i].end(), k)) return static_cast<int>(i);
  }
  throw InvalidInput("coset_of: index is not a unit");
}

int SplittingDatum::dual_coset(int P) const { return coset_of(m - cosets.at(P).front()); }

namespace {

// Rank over Q by fraction-free elimination.
int rank_of(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows.front().size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rows.size();
    for (size_t r = rank; r < rows.size(); ++r) {
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][c] == 0) continue;
      const Integer a = rows[rank][c], b = rows[r][c];
      Integer g = 0;
      for (size_t j = 0; j < cols; ++j) {
        rows[r][j] = rows[r][j] * a - rows[rank][j] * b;
        g = boost::multiprecision::gcd(g, rows[r][j]);
      }
      if (g > 1) {
        for (auto& v : rows[r]) v /= g;
      }
    }
    ++rank;
  }
  return rank;
}

Integer determinant(std::vector<std::vector<Integer>> a) {
  // Bareiss elimination.
  const size_t n = a.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = n;
      for (size_t r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

bool check_assumption_c(const Signature& sig) {
  const int m = sig.m;
  const std::vector<int> units = nt::units_mod(m);
  std::vector<std::vector<Integer>> rows;
  for (int tau : units) {
    const int tau_inv = static_cast<int>(nt::inverse_mod(tau, m));
    std::vector<Integer> row;
    for (int sigma : units) row.emplace_back(sig.at(static_cast<int>(static_cast<i64>(tau_inv) * sigma % m)));
    rows.push_back(std::move(row));
  }
  rows.emplace_back(units.size(), Integer(1));
  return rank_of(rows) == sig.d + 1;
}

Signature simple_signature_with(int m, const SimpleSignature& cm, int n) {
  std::vector<int> values;
  for (int k : nt::units_mod(m)) {
    const bool in_phi = std::binary_search(cm.phi.begin(), cm.phi.end(), k);
    const int base = in_phi ? k : m - k;
    const int at_phi = base == cm.sigma1 ? 1 : 0;
    values.push_back(in_phi ? at_phi : n - at_phi);
  }
  return signature_from_units(m, values);
}

ExceptionalDims assumption_c_exceptional_dims(int m, const SimpleSignature& cm) {
  const int d = static_cast<int>(cm.phi.size());
  auto det_at = [&](int n) {
    // cf_n extended to all units; B(n)_{tau,sigma} = 2 cf_n(tau^{-1} sigma) - n.
    std::vector<int> cf(m, 0);
    for (int k : nt::units_mod(m)) {
      const bool in_phi = std::binary_search(cm.phi.begin(), cm.phi.end(), k);
      const int base = in_phi ? k : m - k;
      const int at_phi = base == cm.sigma1 ? 1 : 0;
      cf[k] = in_phi ? at_phi : n - at_phi;
    }
    std::vector<std::vector<Integer>> B;
    for (int tau : cm.phi) {
      const i64 tau_inv = static_cast<i64>(nt::inverse_mod(tau, m));
      std::vector<Integer> row;
      for (int sigma : cm.phi) row.emplace_back(2 * cf[nt::mod(tau_inv * sigma, m)] - n);
      B.push_back(std::move(row));
    }
    return determinant(B);
  };
  // Newton divided differences on nodes 0..d, then expand to monomials.
  std::vector<Integer> values;
  for (int n = 0; n <= d; ++n) values.push_back(det_at(n));
  // With unit-spaced nodes the k-th divided difference is Delta^k / k!.
  std::vector<Integer> diffs = values;
  std::vector<Integer> newton_coeffs;
  Integer factorial = 1;
  for (int k = 0; k <= d; ++k) {
    if (k > 0) factorial *= k;
    if (diffs[0] % factorial != 0) throw ConsistencyError("exceptional dims: determinant is not an integer polynomial");
    newton_coeffs.push_back(diffs[0] / factorial);
    for (size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  // sum_k c_k * n(n-1)...(n-k+1)
  std::vector<Integer> poly(d + 1, 0);
  std::vector<Integer> falling{1};
  for (int k = 0; k <= d; ++k) {
    for (size_t i = 0; i < falling.size(); ++i) poly[i] += newton_coeffs[k] * falling[i];
    std::vector<Integer> next(falling.size() + 1, 0);
    for (size_t i = 0; i < falling.size(); ++i) {
      next[i + 1] += falling[i];
      next[i] -= falling[i] * k;
    }
    falling = std::move(next);
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  ExceptionalDims out;
  out.det_poly = poly;
  out.det_at_zero = poly[0];
  // Positive integer roots divide the constant term (det B(0) != 0).
  if (out.det_at_zero == 0) throw ConsistencyError("exceptional dims: det B(0) vanished");
  const Integer c0 = out.det_at_zero < 0 ? Integer(-out.det_at_zero) : out.det_at_zero;
  for (Integer cand = 1; cand <= c0; ++cand) {
    if (c0 % cand != 0) continue;
    Integer value = 0;
    for (size_t i = poly.size(); i-- > 0;) value = value * cand + poly[i];
    if (value == 0) out.roots.push_back(static_cast<int>(cand));
  }
  return out;
}

const std::vector<Family>& builtin_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> v;
    auto add = [&v](const char* key, int m, std::vector<int> a, std::vector<i64> branch, const char* note) {
      Family fam;
      fam.key = key;
      fam.datum.m = m;
      fam.datum.N = static_cast<int>(a.size());
      fam.datum.a = std::move(a);
      fam.default_branch = std::move(branch);
      fam.note = note;
      v.push_back(std::move(fam));
    };
    add("M6", 3, {1, 1, 1, 1, 2}, {0, 1, 3, 7}, "");
    add("M8", 4, {1, 1, 2, 2, 2}, {0, 1, 3, 7}, "");
    add("M10", 3, {1, 1, 1, 1, 1, 1}, {0, 1, 3, 7, 12}, "");
    add("M11", 5, {1, 3, 3, 3}, {0, 1, 3}, "");
    add("M14", 6, {2, 2, 2, 3, 3}, {0, 1, 3, 7}, "");
    add("M15", 8, {2, 4, 5, 5}, {0, 1, 3}, "");
    add("M16", 5, {2, 2, 2, 2, 2}, {0, 1, 3, 7}, "");
    add("M17", 7, {2, 4, 4, 4}, {0, 1, 3}, "");
    add("M18", 10, {3, 5, 6, 6}, {0, 1, 3}, "");
    add("M19", 9, {3, 5, 5, 5}, {0, 1, 3}, "the Galois-translate rank condition (assumption C) fails; no density prediction");
    add("M20", 12, {4, 6, 7, 7}, {0, 1, 3}, "");
    return v;
  }();
  return families;
}

const Family& family_by_key(const std::string& key) {
  for (const auto& fam : builtin_families()) {
    if (fam.key == key) return fam;
  }
  throw InvalidInput("unknown family key: " + key);
}

}  // namespace muord
