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
#include "muord/counting.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "muord/kernels.hpp"

namespace muord {

namespace {

int reduced_exponent(int a, int m) { return static_cast<int>(nt::mod(a, m)); }

int ramification_gcd(int a, int m) {
  const int r = reduced_exponent(a, m);
  return r == 0 ? m : static_cast<int>(nt::gcd(r, m));
}

ExtField field_within_budget(u64 p, int k, u64 budget) {
  if (nt::ipow128(p, k) > budget) throw BudgetExceeded("field of size " + std::to_string(p) + "^" + std::to_string(k) +
                                                       " exceeds the budget");
  return build_ext_field(p, k);
}

// Residue sum of the other branch points at x = b_i, for the unit part
// of the local equation: prod_{l != i} (b_i - b_l)^{a_l}.
ExtField::Elem unit_at_branch(const ExtField& F, const CurveInstance& curve, int i) {
  const auto b = curve.branch_mod_p();
  ExtField::Elem u = F.one();
  for (size_t l = 0; l < b.size(); ++l) {
    if (static_cast<int>(l) == i) continue;
    const ExtField::Elem diff = F.constant(F.base().sub(b[i], b[l]));
    u = F.mul(u, F.pow(diff, static_cast<u128>(reduced_exponent(curve.a[l], curve.m))));
  }
  return u;
}

}  // namespace

CurveInstance CurveInstance::from_datum(const MonodromyDatum& datum, const std::vector<i64>& branch, u64 p) {
  datum.validate();
  if (static_cast<int>(branch.size()) != datum.N - 1) {
    throw InvalidInput("CurveInstance: expected " + std::to_string(datum.N - 1) + " finite branch points, got " +
                       std::to_string(branch.size()));
  }
  CurveInstance c;
  c.m = datum.m;
  c.branch = branch;
  c.a.assign(datum.a.begin(), datum.a.end() - 1);
  c.a_inf = datum.a.back();
  c.p = p;
  return c;
}

std::vector<u32> CurveInstance::branch_mod_p() const {
  std::vector<u32> out;
  out.reserve(branch.size());
  for (i64 b : branch) out.push_back(static_cast<u32>(nt::mod(b, static_cast<i64>(p))));
  return out;
}

int CurveInstance::genus() const {
  int total = -2 * m;
  for (int ai : a) total += m - ramification_gcd(ai, m);
  total += m - ramification_gcd(a_inf, m);
  return (total + 2) / 2;
}

int CurveInstance::eigenspace_dim(int j) const {
  int count = 0;
  for (int ai : a) count += (static_cast<i64>(j) * ai) % m != 0 ? 1 : 0;
  count += (static_cast<i64>(j) * a_inf) % m != 0 ? 1 : 0;
  return std::max(count - 2, 0);
}

std::string CurveInstance::bad_reason() const {
  if (p < 3 || !nt::is_prime(p)) return "p is not an odd prime";
  if (m % static_cast<i64>(p) == 0) return "p divides m";
  if (p > 0xFFFFFFFFULL) return "p does not fit the 32-bit field arithmetic";
  const auto b = branch_mod_p();
  std::set<u32> seen(b.begin(), b.end());
  if (seen.size() != b.size()) return "branch points collide mod p";
  return {};
}

u64 count_affine_smooth(const CurveInstance& curve, int k, u64 budget) {
  const ExtField F = field_within_budget(curve.p, k, budget);
  const u64 q = F.size();
  const auto b = curve.branch_mod_p();
  const std::set<u32> branch_set(b.begin(), b.end());

  // Number of m-th roots of every element: one pass over y.
  std::vector<u32> roots(q, 0);
  for (u64 idx = 0; idx < q; ++idx) {
    ++roots[F.index(F.pow(F.from_index(idx), static_cast<u128>(curve.m)))];
  }
  u64 total = 0;
  for (u64 idx = 0; idx < q; ++idx) {
    const ExtField::Elem x = F.from_index(idx);
    if (F.is_constant(x) && branch_set.count(x[0])) continue;
    ExtField::Elem fx = F.one();
    for (size_t i = 0; i < b.size(); ++i) {
      const ExtField::Elem diff = F.sub(x, F.constant(b[i]));
      fx = F.mul(fx, F.pow(diff, static_cast<u128>(reduced_exponent(curve.a[i], curve.m))));
    }
    total += roots[F.index(fx)];
  }
  return total;
}

u64 count_fiber_above_branch(const CurveInstance& curve, int index, int k) {
  const ExtField F = build_ext_field(curve.p, k);
  if (index < 0) return count_mth_roots(F, F.one(), static_cast<u64>(ramification_gcd(curve.a_inf, curve.m)));
  const int delta = ramification_gcd(curve.a.at(index), curve.m);
  return count_mth_roots(F, unit_at_branch(F, curve, index), static_cast<u64>(delta));
}

u64 count_projective(const CurveInstance& curve, int k, u64 budget) {
  u64 total = count_affine_smooth(curve, k, budget);
  for (int i = 0; i < static_cast<int>(curve.a.size()); ++i) total += count_fiber_above_branch(curve, i, k);
  return total + count_fiber_above_branch(curve, -1, k);
}

// ---------------------------------------------------------------------------

FrobeniusSums::FrobeniusSums(CurveInstance curve, u64 budget)
    : curve_(std::move(curve)), budget_(budget), ref_() {
  const std::string bad = curve_.bad_reason();
  if (!bad.empty()) throw InvalidInput("FrobeniusSums: " + bad);
  if (curve_.a.size() > static_cast<size_t>(kernels::kMaxTerms)) {
    throw InvalidInput("FrobeniusSums: too many branch points for one histogram pass");
  }
  ref_ = std::make_unique<RootReference>(curve_.p, curve_.m);
}

bool FrobeniusSums::affordable(int k) const { return nt::ipow128(curve_.p, k) <= budget_; }

bool FrobeniusSums::defined(int j, int k) const {
  const u128 q = nt::ipow128(curve_.p, k);
  const i64 delta = nt::gcd(static_cast<i64>((q - 1) % static_cast<u128>(curve_.m)), curve_.m);
  return (static_cast<i64>(j) * delta) % curve_.m == 0;
}

const FieldSums& FrobeniusSums::sums(int k) {
  std::lock_guard<std::mutex> lock(mu_);
  if (auto it = cache_.find(k); it != cache_.end()) return it->second;

  const auto start = std::chrono::steady_clock::now();
  const ExtField F = field_within_budget(curve_.p, k, budget_);
  CharacterTable table(F, curve_.m, *ref_, budget_);
  const int delta = table.delta();
  const u64 p = curve_.p;
  const u64 q = F.size();
  const auto b = curve_.branch_mod_p();

  FieldSums out;
  out.k = k;
  out.delta = delta;
  out.q = q;
  out.hist.assign(delta, 0);
  out.at_branch.assign(b.size(), 0);

  std::vector<int> weight(b.size());
  for (size_t i = 0; i < b.size(); ++i) weight[i] = reduced_exponent(curve_.a[i], delta);

  // Elements outside F_p: only the constant coordinate moves under x - b_i.
  if (q > p) {
    kernels::HistogramJob job;
    job.table = table.data();
    job.p = static_cast<std::uint32_t>(p);
    job.row_begin = 1;
    job.row_end = q / p;
    job.nterms = static_cast<int>(b.size());
    job.delta = delta;
    for (size_t i = 0; i < b.size(); ++i) {
      job.shift[i] = b[i];
      job.weight[i] = static_cast<std::uint8_t>(weight[i]);
    }
    kernels::exponent_histogram()(job, out.hist.data());
  }

  // The prime field, with the branch points themselves set apart.
  std::vector<int> branch_at(p, -1);
  for (size_t i = 0; i < b.size(); ++i) branch_at[b[i]] = static_cast<int>(i);
  for (u64 c0 = 0; c0 < p; ++c0) {
    int s = 0;
    for (size_t i = 0; i < b.size(); ++i) {
      if (branch_at[c0] == static_cast<int>(i)) continue;
      const u64 diff = c0 >= b[i] ? c0 - b[i] : c0 + p - b[i];
      s += weight[i] * table.exponent_at(diff);
    }
    s %= delta;
    if (branch_at[c0] >= 0) out.at_branch[branch_at[c0]] = s;
    else ++out.hist[s];
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cache_.emplace(k, std::move(out)).first->second;
}

CycloInt FrobeniusSums::character_sum(int j, int k) {
  const int m = curve_.m;
  if (!defined(j, k)) throw InvalidInput("character_sum: the character is not defined over this field");
  const FieldSums& fs = sums(k);
  std::vector<Integer> weights(m, 0);
  for (int s = 0; s < fs.delta; ++s) weights[nt::mod(static_cast<i64>(j) * s, m)] += fs.hist[s];
  for (size_t i = 0; i < curve_.a.size(); ++i) {
    if ((static_cast<i64>(j) * curve_.a[i]) % m != 0) continue;
    weights[nt::mod(static_cast<i64>(j) * fs.at_branch[i], m)] += 1;
  }
  return CycloInt::from_exponent_weights(m, weights);
}

CycloInt FrobeniusSums::trace(int j, int k) {
  CycloInt t = -character_sum(j, k);
  if ((static_cast<i64>(j) * curve_.a_inf) % curve_.m == 0) t -= CycloInt::from_integer(curve_.m, 1);
  return t;
}

u64 FrobeniusSums::count_from_sums(int k) {
  CycloInt total = CycloInt::from_integer(curve_.m, Integer(nt::ipow128(curve_.p, k)) + 1);
  for (int j = 1; j < curve_.m; ++j) {
    if (defined(j, k)) total -= trace(j, k);
  }
  return static_cast<u64>(total.to_integer());
}

// ---------------------------------------------------------------------------

std::vector<int> frobenius_orbit(int m, u64 p, int j) {
  std::vector<int> orbit;
  int x = static_cast<int>(nt::mod(j, m));
  do {
    orbit.push_back(x);
    x = static_cast<int>((static_cast<u64>(x) * (p % m)) % m);
  } while (x != orbit.front());
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::vector<Integer> elementary_from_power_sums(const std::vector<Integer>& ps) {
  std::vector<Integer> e{1};
  for (size_t k = 1; k <= ps.size(); ++k) {
    Integer acc = 0;
    for (size_t i = 1; i <= k; ++i) acc += (i % 2 ? 1 : -1) * e[k - i] * ps[i - 1];
    if (acc % static_cast<int>(k) != 0) throw ConsistencyError("Newton identities: inexact division");
    e.push_back(acc / static_cast<int>(k));
  }
  return e;
}

std::vector<CycloInt> elementary_from_power_sums(int m, const std::vector<CycloInt>& ps) {
  std::vector<CycloInt> e{CycloInt::from_integer(m, 1)};
  for (size_t k = 1; k <= ps.size(); ++k) {
    CycloInt acc(m);
    for (size_t i = 1; i <= k; ++i) {
      const CycloInt term = e[k - i] * ps[i - 1];
      if (i % 2) acc += term;
      else acc -= term;
    }
    e.push_back(acc.divide_exact(Integer(static_cast<int>(k))));
  }
  return e;
}

bool EigenspaceCharPoly::complete() const {
  return std::all_of(e.begin(), e.end(), [](const auto& x) { return x.has_value(); });
}

Integer EigenspaceCharPoly::q_power(int i) const {
  Integer r = 1;
  const Integer Q = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(f));
  for (int t = 0; t < i; ++t) r *= Q;
  return r;
}

EigenspaceCharPoly EigenspaceCharPoly::conjugate() const {
  EigenspaceCharPoly out = *this;
  out.j = static_cast<int>(nt::mod(-j, m));
  for (auto& x : out.e) {
    if (x) x = x->conj();
  }
  return out;
}

EigenspaceCharPoly eigenspace_charpoly(FrobeniusSums& sums, int j, int power_sums, bool require_complete) {
  const CurveInstance& curve = sums.curve();
  EigenspaceCharPoly cp;
  cp.m = curve.m;
  cp.p = curve.p;
  cp.j = static_cast<int>(nt::mod(j, curve.m));
  cp.n = curve.eigenspace_dim(cp.j);
  cp.f = static_cast<int>(frobenius_orbit(curve.m, curve.p, cp.j).size());
  cp.e.assign(cp.n + 1, std::nullopt);
  cp.e[0] = CycloInt::from_integer(curve.m, 1);
  if (cp.n == 0) return cp;

  int want = power_sums < 0 ? (cp.n + 1) / 2 : std::min(power_sums, cp.n);
  std::vector<CycloInt> ps;
  auto extend_to = [&](int h) {
    while (static_cast<int>(ps.size()) < h) {
      const int k = cp.f * (static_cast<int>(ps.size()) + 1);
      if (!sums.affordable(k)) return false;
      ps.push_back(sums.trace(cp.j, k));
    }
    return true;
  };

  for (;;) {
    extend_to(want);
    const int h = static_cast<int>(ps.size());
    const auto el = elementary_from_power_sums(curve.m, ps);
    for (int i = 1; i <= h; ++i) cp.e[i] = el[i];
    cp.power_sums = h;
    if (h == cp.n) break;

    // conj(e_i) e_n = Q^i e_{n-i} for any i with both sides known.
    std::optional<CycloInt> det;
    for (int i = std::max(1, cp.n - h); i <= h && !det; ++i) {
      const CycloInt ci = cp.e[i]->conj();
      if (ci.is_zero()) continue;
      const CycloInt num = *cp.e[cp.n - i] * cp.q_power(i);
      det = num.divide(ci);
      if (!det) throw ConsistencyError("eigenspace_charpoly: determinant quotient is not integral");
    }
    if (det) {
      cp.e[cp.n] = *det;
      for (int k = h + 1; k < cp.n; ++k) {
        cp.e[k] = (cp.e[cp.n - k]->conj() * *det).divide_exact(cp.q_power(cp.n - k));
      }
      break;
    }
    if (!require_complete || h < want || want >= cp.n) break;
    ++want;
  }
  if (!cp.complete()) {
    int first_missing = 0;
    while (cp.e[first_missing]) ++first_missing;
    cp.marker = "coefficients from e_" + std::to_string(first_missing) + " on undetermined (" +
                std::to_string(cp.power_sums) + " power sums within budget)";
    if (require_complete) throw BudgetExceeded("eigenspace_charpoly: V_" + std::to_string(cp.j) + " " + cp.marker);
  }
  return cp;
}

// ---------------------------------------------------------------------------

namespace {

using boost::multiprecision::cpp_rational;
using QPoly = std::vector<cpp_rational>;  // constant term first

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qrem(QPoly a, const QPoly& b) {
  qtrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const cpp_rational c = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return a;
}

QPoly qquot(QPoly a, const QPoly& b) {
  qtrim(a);
  if (a.size() < b.size()) return {};
  QPoly q(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const cpp_rational c = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    qtrim(a);
  }
  return q;
}

QPoly qderiv(const QPoly& a) {
  QPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<int>(i));
  return d;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qrem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Sign of poly(eps * 2 sqrt(p)) computed exactly as A + eps B sqrt(p).
int sign_at_endpoint(const QPoly& poly, u64 p, int eps) {
  cpp_rational A = 0, B = 0;
  cpp_rational even_power = 1;  // (2 sqrt p)^{2t} = 4^t p^t
  for (size_t k = 0; k < poly.size(); ++k) {
    if (k % 2 == 0) {
      A += poly[k] * even_power;
    } else {
      B += poly[k] * even_power * 2 * eps;  // (2 sqrt p)^{2t+1} = 2 * 4^t p^t * sqrt p
      even_power *= 4 * cpp_rational(p);
    }
  }
  auto sgn = [](const cpp_rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); };
  const int sa = sgn(A), sb = sgn(B);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const cpp_rational lhs = A * A, rhs = B * B * cpp_rational(p);
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

int sign_changes(const std::vector<QPoly>& chain, u64 p, int eps) {
  int changes = 0, last = 0;
  for (const auto& s : chain) {
    const int sg = sign_at_endpoint(s, p, eps);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++changes;
    last = sg;
  }
  return changes;
}

}  // namespace

bool LPolynomial::functional_equation_holds() const {
  if (static_cast<int>(c.size()) != 2 * g + 1 || c[0] != 1) return false;
  Integer pk = 1;
  for (int k = g; k >= 0; --k) {
    // c_{2g-k} = p^{g-k} c_k
    if (c[2 * g - k] != pk * c[k]) return false;
    pk *= p;
  }
  return true;
}

bool LPolynomial::weil_bound_holds() const {
  if (g == 0) return true;
  // Real Weil polynomial h(y) with P(X) = X^g h(X + p/X), where P is the
  // reversed L-polynomial.  D_k(y) = X^k + (p/X)^k.
  std::vector<QPoly> D{QPoly{2}, QPoly{0, 1}};
  for (int k = 2; k <= g; ++k) {
    QPoly next(k + 1, 0);
    for (size_t i = 0; i < D[k - 1].size(); ++i) next[i + 1] += D[k - 1][i];
    for (size_t i = 0; i < D[k - 2].size(); ++i) next[i] -= cpp_rational(p) * D[k - 2][i];
    D.push_back(std::move(next));
  }
  QPoly h(g + 1, 0);
  h[0] += cpp_rational(c[g]);
  for (int k = 1; k <= g; ++k) {
    for (size_t i = 0; i < D[k].size(); ++i) h[i] += cpp_rational(c[g - k]) * D[k][i];
  }
  qtrim(h);
  const QPoly sq = qquot(h, qgcd(h, qderiv(h)));
  const int distinct = static_cast<int>(sq.size()) - 1;

  std::vector<QPoly> chain{sq, qderiv(sq)};
  while (chain.back().size() > 1) {
    QPoly r = qrem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& x : r) x = -x;
    chain.push_back(std::move(r));
  }
  const int in_interval = sign_changes(chain, p, -1) - sign_changes(chain, p, +1) +
                          (sign_at_endpoint(sq, p, -1) == 0 ? 1 : 0);
  return in_interval == distinct;
}

void LPolynomial::check() const {
  if (!functional_equation_holds()) throw ConsistencyError("L-polynomial violates the functional equation: " + to_string());
  if (!weil_bound_holds()) throw ConsistencyError("L-polynomial violates the Weil bound: " + to_string());
}

NewtonPolygon LPolynomial::newton_polygon() const {
  std::vector<ValuationPoint> pts;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) pts.push_back(ValuationPoint::infinite(static_cast<int>(i)));
    else pts.push_back(ValuationPoint::finite(static_cast<int>(i), nt::valuation(c[i], p)));
  }
  return polygon_from_valuations(pts, 1);
}

std::string LPolynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << c[i];
  os << "]";
  return os.str();
}

LPolynomial lpolynomial_from_counts(const CurveInstance& curve, u64 budget) {
  LPolynomial L;
  L.p = curve.p;
  L.g = curve.genus();
  std::vector<Integer> ps;
  for (int k = 1; k <= L.g; ++k) {
    const Integer qk = Integer(nt::ipow128(curve.p, k));
    ps.push_back(qk + 1 - Integer(count_projective(curve, k, budget)));
  }
  const auto e = elementary_from_power_sums(ps);
  L.c.assign(2 * L.g + 1, 0);
  for (int k = 0; k <= L.g; ++k) L.c[k] = (k % 2 ? -1 : 1) * e[k];
  Integer pk = 1;
  for (int k = L.g - 1; k >= 0; --k) {
    pk *= curve.p;
    L.c[2 * L.g - k] = pk * L.c[k];
  }
  return L;
}

LPolynomial lpolynomial_from_characters(FrobeniusSums& sums) {
  const CurveInstance& curve = sums.curve();
  const int m = curve.m;
  std::vector<CycloInt> poly{CycloInt::from_integer(m, 1)};
  std::vector<bool> seen(m, false);
  for (int j = 1; j < m; ++j) {
    if (seen[j]) continue;
    const auto orbit = frobenius_orbit(m, curve.p, j);
    for (int x : orbit) seen[x] = true;
    const EigenspaceCharPoly cp = eigenspace_charpoly(sums, j, -1, true);
    if (cp.n == 0) continue;
    // prod over beta of (1 - beta T^f) = sum (-1)^i e_i T^{i f}
    std::vector<CycloInt> piece(cp.n * cp.f + 1, CycloInt(m));
    for (int i = 0; i <= cp.n; ++i) piece[i * cp.f] = (i % 2 ? -*cp.e[i] : *cp.e[i]);
    std::vector<CycloInt> next(poly.size() + piece.size() - 1, CycloInt(m));
    for (size_t a = 0; a < poly.size(); ++a) {
      if (poly[a].is_zero()) continue;
      for (size_t b = 0; b < piece.size(); ++b) {
        if (!piece[b].is_zero()) next[a + b] += poly[a] * piece[b];
      }
    }
    poly = std::move(next);
  }
  LPolynomial L;
  L.p = curve.p;
  L.g = curve.genus();
  if (static_cast<int>(poly.size()) != 2 * L.g + 1) {
    throw ConsistencyError("lpolynomial_from_characters: degree " + std::to_string(poly.size() - 1) +
                           " does not match 2g = " + std::to_string(2 * L.g));
  }
  for (const auto& x : poly) {
    if (!x.is_integer()) throw ConsistencyError("lpolynomial_from_characters: non-rational coefficient " + x.to_string());
    L.c.push_back(x.to_integer());
  }
  return L;
}

}  // namespace muord
