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
#include "muord/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace muord {

namespace {

Integer positive_mod(const Integer& a, const Integer& n) {
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

}  // namespace

PadicContext::PadicContext(const RootReference& ref, int precision)
    : p_(ref.p()), m_(ref.m()), prec_(precision) {
  if (precision < 1) throw InvalidInput("PadicContext: precision must be positive");
  pk_ = boost::multiprecision::pow(Integer(p_), static_cast<unsigned>(prec_));
  for (u32 c : ref.field().modulus()) h_.push_back(Integer(c));
  const int F = ref.field().k();

  Elem omega(F, 0);
  for (int i = 0; i < F; ++i) omega[i] = Integer(ref.omega_bar()[i]);

  // Hensel on X^m - 1: omega <- omega (1 - (omega^m - 1) / m).  Each step
  // squares the error, so log2(prec) + 1 rounds suffice.
  const Integer m_inv = [&] {
    Integer inv = 1, base = m_, e = pk_ / p_ * (p_ - 1) - 1;  // m^{phi(p^prec) - 1}
    base = positive_mod(base, pk_);
    while (e > 0) {
      if ((e & 1) != 0) inv = inv * base % pk_;
      base = base * base % pk_;
      e >>= 1;
    }
    return inv;
  }();
  Elem one(F, 0);
  one[0] = 1;
  for (int round = 0; round < 64; ++round) {
    Elem power = one;
    for (int t = 0; t < m_; ++t) power = mul(power, omega);
    Elem err = power;
    err[0] -= 1;
    bool done = true;
    for (auto& c : err) {
      c = positive_mod(c, pk_);
      if (c != 0) done = false;
    }
    if (done) break;
    for (auto& c : err) c = c * m_inv % pk_;
    omega = reduce([&] {
      Elem t = mul(omega, err);
      Elem out(F);
      for (int i = 0; i < F; ++i) out[i] = omega[i] - t[i];
      return out;
    }());
  }
  powers_.push_back(one);
  for (int e = 1; e < m_; ++e) powers_.push_back(mul(powers_.back(), omega));
  Elem check = mul(powers_.back(), omega);
  if (check != one) throw ConsistencyError("PadicContext: Teichmuller lift did not converge");
}

PadicContext::Elem PadicContext::reduce(Elem a) const {
  const size_t F = h_.size() - 1;
  for (size_t i = a.size(); i-- > F;) {
    const Integer c = a[i];
    if (c == 0) continue;
    for (size_t t = 0; t <= F; ++t) a[i - F + t] -= c * h_[t];
  }
  a.resize(F);
  for (auto& c : a) c = positive_mod(c, pk_);
  return a;
}

PadicContext::Elem PadicContext::mul(const Elem& a, const Elem& b) const {
  Elem r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return reduce(std::move(r));
}

std::optional<i64> PadicContext::valuation(const CycloInt& x) const {
  if (x.m() != m_) throw InvalidInput("PadicContext::valuation: cyclotomic level mismatch");
  const size_t F = h_.size() - 1;
  Elem image(F, 0);
  const auto& c = x.coeffs();
  for (size_t e = 0; e < c.size(); ++e) {
    if (c[e] == 0) continue;
    for (size_t i = 0; i < F; ++i) image[i] += c[e] * powers_[e][i];
  }
  std::optional<i64> best;
  for (auto& v : image) {
    v = positive_mod(v, pk_);
    if (v == 0) continue;
    const i64 val = nt::valuation(v, p_);
    if (!best || val < *best) best = val;
  }
  return best;
}

std::optional<NewtonPolygon> piece_polygon(const EigenspaceCharPoly& cp, const PadicContext& ctx,
                                           std::optional<i64> det_valuation) {
  if (cp.n == 0) return NewtonPolygon();
  const int n = cp.n;
  auto point_for = [&](int i, const CycloInt& x) {
    if (x.is_zero()) return ValuationPoint::infinite(i);
    const auto v = ctx.valuation(x);
    return v ? ValuationPoint::finite(i, *v) : ValuationPoint::at_least(i, ctx.precision());
  };

  std::optional<i64> E = det_valuation;
  if (cp.e[n]) {
    const auto v = ctx.valuation(*cp.e[n]);
    if (!v) throw PrecisionInsufficient("piece_polygon: determinant vanishes to working precision");
    E = *v;
  }
  std::vector<ValuationPoint> pts;
  for (int i = 0; i <= n; ++i) {
    if (cp.e[i]) {
      pts.push_back(point_for(i, *cp.e[i]));
      continue;
    }
    if (i == n) {
      if (!E) return std::nullopt;
      pts.push_back(ValuationPoint::finite(n, *E));
      continue;
    }
    // conj(e_{n-i}) e_n = Q^{n-i} e_i
    const auto& dual = cp.e[n - i];
    if (!dual || !E) return std::nullopt;
    if (dual->is_zero()) {
      pts.push_back(ValuationPoint::infinite(i));
      continue;
    }
    const auto v = ctx.valuation(dual->conj());
    if (!v) {
      pts.push_back(ValuationPoint::at_least(i, ctx.precision() + *E - static_cast<i64>(cp.f) * (n - i)));
      continue;
    }
    pts.push_back(ValuationPoint::finite(i, *v + *E - static_cast<i64>(cp.f) * (n - i)));
  }
  return polygon_from_valuations(pts, cp.f);
}

}  // namespace muord
