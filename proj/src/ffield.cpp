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
#include "muord/ffield.hpp"

#include <algorithm>
#include <array>

namespace muord {

namespace {

// Dense polynomials over F_p, constant term first, kept trimmed.
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& h, u64 p) {
  trim(a);
  const size_t dh = h.size() - 1;
  const u64 lead_inv = nt::inverse_mod(h.back(), p);
  while (a.size() > dh) {
    const size_t shift = a.size() - 1 - dh;
    const u64 c = nt::mulmod(a.back(), lead_inv, p);
    for (size_t i = 0; i <= dh; ++i) {
      a[shift + i] = (a[shift + i] + p - nt::mulmod(c, h[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& h, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + nt::mulmod(a[i], b[j], p)) % p;
  }
  return poly_mod(std::move(r), h, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& h, u64 p) {
  Poly result{1};
  base = poly_mod(std::move(base), h, p);
  while (e) {
    if (e & 1) result = poly_mulmod(result, base, h, p);
    base = poly_mulmod(base, base, h, p);
    e >>= 1;
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Division by a runtime constant below 2^32 via a precomputed reciprocal.
struct FastMod {
  u64 magic;
  u32 d;
  explicit FastMod(u32 divisor) : magic(~0ULL / divisor + 1), d(divisor) {}
  u32 operator()(u32 a) const {
    const u64 low = magic * a;
    return static_cast<u32>((static_cast<u128>(low) * d) >> 64);
  }
};

// Walks t = g^L for L = 0 .. q-2 and writes the running exponent into
// table[index(t)].  Specialised on the extension degree so the inner
// loop keeps t in registers.
template <int K>
void walk_powers_fixed(const ExtField& F, const ExtField::Elem& g, int step, int delta,
                       std::uint8_t* table) {
  const u32 p = static_cast<u32>(F.p());
  const FastMod fm(p);
  const u64 q = F.size();
  std::array<u32, K> negmod{};
  for (int i = 0; i < K; ++i) negmod[i] = (p - F.modulus()[i]) % p;
  std::array<u32, K> t{};
  t[0] = 1;
  std::array<u64, K> pw{};
  pw[0] = 1;
  for (int i = 1; i < K; ++i) pw[i] = pw[i - 1] * p;

  bool linear = true;
  for (int i = 2; i < K; ++i) linear = linear && g[i] == 0;
  linear = linear && (K == 1 || g[1] == 1);
  int e = 0;
  if (linear) {
    // g = X + c: t*g = t*X + c*t, with X^K folded back through the modulus.
    const u32 c = g[0];
    for (u64 L = 0; L + 1 < q; ++L) {
      u64 idx = 0;
      for (int i = 0; i < K; ++i) idx += t[i] * pw[i];
      table[idx] = static_cast<std::uint8_t>(e);
      e += step;
      if (e >= delta) e -= delta;
      if constexpr (K == 1) {
        t[0] = fm(c * t[0]);
      } else {
        const u32 top = t[K - 1];
        std::array<u32, K> nt_{};
        nt_[0] = fm(c * t[0] + top * negmod[0]);
        for (int i = 1; i < K; ++i) nt_[i] = fm(t[i - 1] + c * t[i] + top * negmod[i]);
        t = nt_;
      }
    }
    return;
  }
  std::array<u32, K> gg{};
  for (int i = 0; i < K; ++i) gg[i] = g[i];
  for (u64 L = 0; L + 1 < q; ++L) {
    u64 idx = 0;
    for (int i = 0; i < K; ++i) idx += t[i] * pw[i];
    table[idx] = static_cast<std::uint8_t>(e);
    e += step;
    if (e >= delta) e -= delta;
    std::array<u64, 2 * K - 1> acc{};
    for (int i = 0; i < K; ++i) {
      for (int j = 0; j < K; ++j) acc[i + j] += static_cast<u64>(t[i]) * gg[j];
    }
    for (int i = 2 * K - 2; i >= K; --i) {
      const u64 c = acc[i] % p;
      for (int j = 0; j < K; ++j) acc[i - K + j] += c * negmod[j];
    }
    for (int i = 0; i < K; ++i) t[i] = static_cast<u32>(acc[i] % p);
  }
}

void walk_powers_generic(const ExtField& F, const ExtField::Elem& g, int step, int delta,
                         std::uint8_t* table) {
  const u64 q = F.size();
  ExtField::Elem t = F.one();
  int e = 0;
  for (u64 L = 0; L + 1 < q; ++L) {
    table[F.index(t)] = static_cast<std::uint8_t>(e);
    e += step;
    if (e >= delta) e -= delta;
    t = F.mul(t, g);
  }
}

void walk_powers(const ExtField& F, const ExtField::Elem& g, int step, int delta,
                 std::uint8_t* table) {
  // The fixed-width paths need 2p^2 + p < 2^32 for K >= 2.
  const bool small = F.p() < 40000;
  if (F.k() == 1 && F.p() < (1ULL << 31)) {
    // Constant generator: reuse the linear path with c = g.
    if (F.p() < 65536) return walk_powers_fixed<1>(F, g, step, delta, table);
    return walk_powers_generic(F, g, step, delta, table);
  }
  if (!small) return walk_powers_generic(F, g, step, delta, table);
  switch (F.k()) {
    case 2: return walk_powers_fixed<2>(F, g, step, delta, table);
    case 3: return walk_powers_fixed<3>(F, g, step, delta, table);
    case 4: return walk_powers_fixed<4>(F, g, step, delta, table);
    case 5: return walk_powers_fixed<5>(F, g, step, delta, table);
    case 6: return walk_powers_fixed<6>(F, g, step, delta, table);
    case 7: return walk_powers_fixed<7>(F, g, step, delta, table);
    case 8: return walk_powers_fixed<8>(F, g, step, delta, table);
    default: return walk_powers_generic(F, g, step, delta, table);
  }
}

u64 gcd_with_order_minus_one(u128 q, u64 m) {
  return static_cast<u64>(nt::gcd(static_cast<i64>(m), static_cast<i64>((q - 1) % m)));
}

}  // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
  if (!nt::is_prime(p)) throw InvalidInput("PrimeField: modulus " + std::to_string(p) + " is not prime");
}

u64 PrimeField::inv(u64 a) const {
  if (a % p_ == 0) throw InvalidInput("PrimeField: inverse of zero");
  return nt::inverse_mod(a, p_);
}

ExtField::ExtField(u64 p, std::vector<u32> modulus)
    : base_(p), k_(static_cast<int>(modulus.size()) - 1), mod_(std::move(modulus)), q_(0) {
  if (p == 2) throw InvalidInput("ExtField: characteristic 2 is not supported");
  if (k_ < 1 || mod_.back() != 1) throw InvalidInput("ExtField: modulus must be monic of degree >= 1");
  for (u32 c : mod_) {
    if (c >= p) throw InvalidInput("ExtField: modulus coefficient out of range");
  }
  if (!is_irreducible(std::vector<u32>(mod_), p)) throw InvalidInput("ExtField: modulus is reducible");
  q_ = nt::ipow128(p, k_);
}

u64 ExtField::size() const {
  if (q_ > static_cast<u128>(1) << 62) throw BudgetExceeded("ExtField: field too large to enumerate");
  return static_cast<u64>(q_);
}

ExtField::Elem ExtField::constant(u64 c) const {
  Elem a(k_, 0);
  a[0] = static_cast<u32>(c % p());
  return a;
}

ExtField::Elem ExtField::generator_x() const {
  Elem a(k_, 0);
  if (k_ == 1) {
    a[0] = static_cast<u32>((p() - mod_[0]) % p());
  } else {
    a[1] = 1;
  }
  return a;
}

ExtField::Elem ExtField::from_index(u64 idx) const {
  Elem a(k_, 0);
  for (int i = 0; i < k_; ++i) {
    a[i] = static_cast<u32>(idx % p());
    idx /= p();
  }
  return a;
}

u64 ExtField::index(const Elem& a) const {
  u64 idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p() + a[i];
  return idx;
}

ExtField::Elem ExtField::add(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<u32>(base_.add(a[i], b[i]));
  return r;
}

ExtField::Elem ExtField::sub(const Elem& a, const Elem& b) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<u32>(base_.sub(a[i], b[i]));
  return r;
}

ExtField::Elem ExtField::neg(const Elem& a) const {
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<u32>(base_.neg(a[i]));
  return r;
}

ExtField::Elem ExtField::scale(const Elem& a, u64 c) const {
  Elem r(k_);
  c %= p();
  for (int i = 0; i < k_; ++i) r[i] = static_cast<u32>(base_.mul(a[i], c));
  return r;
}

ExtField::Elem ExtField::mul(const Elem& a, const Elem& b) const {
  const u64 P = p();
  if (k_ == 1) return Elem{static_cast<u32>(nt::mulmod(a[0], b[0], P))};
  std::vector<u64> acc(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i + j] = (acc[i + j] + nt::mulmod(a[i], b[j], P)) % P;
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const u64 c = acc[i];
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) acc[i - k_ + j] = (acc[i - k_ + j] + P - nt::mulmod(c, mod_[j], P)) % P;
  }
  Elem r(k_);
  for (int i = 0; i < k_; ++i) r[i] = static_cast<u32>(acc[i]);
  return r;
}

ExtField::Elem ExtField::pow(const Elem& a, u128 e) const {
  Elem result = one();
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

ExtField::Elem ExtField::inv(const Elem& a) const {
  if (is_zero(a)) throw InvalidInput("ExtField: inverse of zero");
  return pow(a, q_ - 2);
}

bool ExtField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](u32 c) { return c == 0; });
}

bool ExtField::is_one(const Elem& a) const {
  if (a[0] != 1) return false;
  return std::all_of(a.begin() + 1, a.end(), [](u32 c) { return c == 0; });
}

bool ExtField::is_constant(const Elem& a) const {
  return std::all_of(a.begin() + 1, a.end(), [](u32 c) { return c == 0; });
}

u64 ExtField::norm_to_prime(const Elem& a) const {
  const Elem n = pow(a, (q_ - 1) / (p() - 1));
  if (!is_constant(n)) throw ConsistencyError("ExtField: norm did not land in the prime field");
  return n[0];
}

ExtField::Elem ExtField::eval_prime_poly(const std::vector<u32>& poly, const Elem& a) const {
  Elem r = zero();
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = add(mul(r, a), constant(*it));
  return r;
}

bool ExtField::has_order(const Elem& a, u64 n) const {
  if (is_zero(a)) return false;
  if (!is_one(pow(a, n))) return false;
  for (u64 l : nt::prime_divisors(n)) {
    if (is_one(pow(a, n / l))) return false;
  }
  return true;
}

ExtField::Elem ExtField::element_of_order(u64 n) const {
  if ((q_ - 1) % n != 0) throw InvalidInput("element_of_order: order does not divide q - 1");
  const u128 cofactor = (q_ - 1) / n;
  Elem z;
  for (u64 idx = 1;; ++idx) {
    Elem y = pow(from_index(idx), cofactor);
    if (has_order(y, n)) {
      z = std::move(y);
      break;
    }
  }
  // Every element of order n is a power z^c with gcd(c, n) = 1; return the least.
  Elem best = z;
  u64 best_idx = index(z);
  Elem w = z;
  for (u64 c = 2; c <= n; ++c) {
    w = mul(w, z);
    if (nt::gcd(static_cast<i64>(c), static_cast<i64>(n)) != 1) continue;
    const u64 idx = index(w);
    if (idx < best_idx) {
      best_idx = idx;
      best = w;
    }
  }
  return best;
}

bool is_irreducible(const std::vector<u32>& monic, u64 p) {
  Poly h(monic.begin(), monic.end());
  trim(h);
  const int k = static_cast<int>(h.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  Poly xp{0, 1};
  for (int i = 1; i <= k / 2; ++i) {
    xp = poly_powmod(xp, p, h, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;  // X^{p^i} = X means a factor of degree dividing i
    if (poly_gcd(diff, h, p).size() > 1) return false;
  }
  return true;
}

ExtField build_ext_field(u64 p, int k, int max_degree) {
  if (k < 1) throw InvalidInput("build_ext_field: degree must be positive");
  if (k > max_degree) throw BudgetExceeded("build_ext_field: degree " + std::to_string(k) + " exceeds budget");
  if (p == 2 || !nt::is_prime(p)) throw InvalidInput("build_ext_field: p must be an odd prime");
  if (k == 1) return ExtField(p, {0, 1});
  std::vector<u32> poly(k + 1, 0);
  poly[k] = 1;
  for (u64 idx = 0;; ++idx) {
    u64 rest = idx;
    for (int i = 0; i < k; ++i) {
      poly[i] = static_cast<u32>(rest % p);
      rest /= p;
    }
    if (rest) throw ConsistencyError("build_ext_field: no irreducible polynomial found");
    if (poly[0] == 0) continue;  // divisible by X
    if (is_irreducible(poly, p)) return ExtField(p, poly);
  }
}

u64 count_mth_roots(const ExtField& field, const ExtField::Elem& c, u64 m) {
  if (field.is_zero(c)) return 1;
  const u64 delta = gcd_with_order_minus_one(field.order(), m);
  return field.is_one(field.pow(c, (field.order() - 1) / delta)) ? delta : 0;
}

RootReference::RootReference(u64 p, int m)
    : m_(m), field_(build_ext_field(p, nt::multiplicative_order(p, m))), omega_() {
  if (m < 1) throw InvalidInput("RootReference: m must be positive");
  omega_ = field_.element_of_order(static_cast<u64>(m));
}

std::vector<u32> RootReference::minimal_polynomial(int e) const {
  const ExtField& F = field_;
  const ExtField::Elem w = F.pow(omega_, static_cast<u128>(nt::mod(e, m_)));
  std::vector<ExtField::Elem> conj{w};
  for (ExtField::Elem c = F.frobenius(w); c != w; c = F.frobenius(c)) conj.push_back(c);
  // Expand prod (X - c) with coefficients in F, constant term first.
  std::vector<ExtField::Elem> poly{F.one()};
  for (const auto& c : conj) {
    std::vector<ExtField::Elem> next(poly.size() + 1, F.zero());
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] = F.add(next[i + 1], poly[i]);
      next[i] = F.sub(next[i], F.mul(poly[i], c));
    }
    poly = std::move(next);
  }
  std::vector<u32> out;
  for (const auto& coeff : poly) {
    if (!F.is_constant(coeff)) throw ConsistencyError("minimal_polynomial: coefficient outside F_p");
    out.push_back(coeff[0]);
  }
  return out;
}

ExtField::Elem character_root(const ExtField& field, int m, const RootReference& ref) {
  if (ref.p() != field.p() || ref.m() != m) throw InvalidInput("character_root: reference mismatch");
  const u64 delta = gcd_with_order_minus_one(field.order(), static_cast<u64>(m));
  const std::vector<u32> h = ref.minimal_polynomial(m / static_cast<int>(delta));
  const ExtField::Elem z = field.element_of_order(delta);
  ExtField::Elem best;
  u64 best_idx = ~0ULL;
  ExtField::Elem w = field.one();
  for (u64 c = 1; c <= delta; ++c) {
    w = field.mul(w, z);
    if (nt::gcd(static_cast<i64>(c), static_cast<i64>(delta)) != 1) continue;
    if (!field.is_zero(field.eval_prime_poly(h, w))) continue;
    const u64 idx = field.index(w);
    if (idx < best_idx) {
      best_idx = idx;
      best = w;
    }
  }
  if (best.empty()) throw ConsistencyError("character_root: no root of the reference polynomial");
  return best;
}

int direct_exponent(const ExtField& field, const ExtField::Elem& rho, int delta, const ExtField::Elem& t) {
  if (field.is_zero(t)) throw InvalidInput("direct_exponent: zero has no exponent");
  const ExtField::Elem target = field.pow(t, (field.order() - 1) / static_cast<u64>(delta));
  ExtField::Elem w = field.one();
  for (int e = 0; e < delta; ++e) {
    if (w == target) return e;
    w = field.mul(w, rho);
  }
  throw ConsistencyError("direct_exponent: power not found among the roots");
}

CharacterTable::CharacterTable(const ExtField& field, int m, const RootReference& ref, u64 budget)
    : field_(field), m_(m), delta_(0), unit_exponent_(0), size_(0) {
  if (field.order() > budget) throw BudgetExceeded("CharacterTable: field exceeds the element budget");
  size_ = field.size();
  delta_ = static_cast<int>(gcd_with_order_minus_one(field.order(), static_cast<u64>(m)));
  if (delta_ > 255) throw InvalidInput("CharacterTable: character order too large for byte tables");

  // Least generator in index order.  For k >= 2 the constants cannot
  // generate, so the search starts at X.
  const u64 group = size_ - 1;
  const std::vector<u64> primes = nt::prime_divisors(group);
  for (u64 idx = field.k() == 1 ? 1 : field.p();; ++idx) {
    ExtField::Elem g = field.from_index(idx);
    bool primitive = true;
    for (u64 l : primes) {
      if (field.is_one(field.pow(g, group / l))) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = std::move(g);
      break;
    }
  }
  rho_ = character_root(field, m, ref);
  unit_exponent_ = direct_exponent(field, rho_, delta_, generator_);

  table_.reset(new std::uint8_t[size_]);
  table_[0] = 0;
  walk_powers(field, generator_, unit_exponent_, delta_, table_.get());
}

bool CharacterTable::character_defined(int j) const {
  return static_cast<i64>(j) * delta_ % m_ == 0;
}

int CharacterTable::exponent(const ExtField::Elem& t) const {
  if (field_.is_zero(t)) throw InvalidInput("CharacterTable: zero has no exponent");
  return table_[field_.index(t)];
}

int CharacterTable::character_exponent(const ExtField::Elem& t, int j) const {
  if (!character_defined(j)) throw InvalidInput("CharacterTable: character order does not divide gcd(m, q-1)");
  return static_cast<int>(nt::mod(static_cast<i64>(j) * exponent(t), m_));
}

}  // namespace muord
