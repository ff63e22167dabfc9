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
#include "muord/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace muord {

namespace {

struct Ring {
  int m = 0;
  int phi = 0;
  std::vector<i64> poly;                  // Phi_m, monic
  std::vector<std::vector<i64>> powers;   // zeta^e in the power basis, e < m
};

std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
  // Both monic; returns num / den assuming exact division.
  const size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<i64> q(dn - dd + 1, 0);
  for (size_t i = dn + 1; i-- > dd;) {
    const i64 c = num[i];
    q[i - dd] = c;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

std::shared_ptr<const Ring> build_ring(int m) {
  auto ring = std::make_shared<Ring>();
  ring->m = m;
  ring->phi = nt::euler_phi(m);
  // X^m - 1 divided by Phi_d for every proper divisor d.
  std::vector<i64> poly(m + 1, 0);
  poly[0] = -1;
  poly[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = poly_div_exact(poly, cyclotomic_polynomial(d));
  }
  ring->poly = poly;
  const int phi = ring->phi;
  std::vector<i64> cur(phi, 0);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    ring->powers.push_back(cur);
    // multiply by zeta
    const i64 top = cur[phi - 1];
    for (int i = phi - 1; i > 0; --i) cur[i] = cur[i - 1] - top * poly[i];
    cur[0] = -top * poly[0];
  }
  return ring;
}

std::shared_ptr<const Ring> ring_for(int m) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Ring>> cache;
  if (m < 1) throw InvalidInput("cyclotomic ring: m must be positive");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
  }
  auto ring = build_ring(m);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(m, ring).first->second;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(int m) {
  if (m == 1) {
    static const std::vector<i64> one{-1, 1};
    return one;
  }
  return ring_for(m)->poly;
}

CycloInt::CycloInt(int m) : m_(m), c_(ring_for(m)->phi, 0) {}

CycloInt CycloInt::from_integer(int m, const Integer& c) {
  CycloInt x(m);
  x.c_[0] = c;
  return x;
}

CycloInt CycloInt::zeta_power(int m, i64 e) {
  CycloInt x(m);
  const auto ring = ring_for(m);
  const auto& v = ring->powers[nt::mod(e, m)];
  for (int i = 0; i < ring->phi; ++i) x.c_[i] = v[i];
  return x;
}

CycloInt CycloInt::from_exponent_weights(int m, const std::vector<Integer>& weights) {
  const auto ring = ring_for(m);
  if (static_cast<int>(weights.size()) != m) throw InvalidInput("from_exponent_weights: need m weights");
  CycloInt x(m);
  for (int e = 0; e < m; ++e) {
    if (weights[e] == 0) continue;
    const auto& v = ring->powers[e];
    for (int i = 0; i < ring->phi; ++i) {
      if (v[i]) x.c_[i] += weights[e] * v[i];
    }
  }
  return x;
}

CycloInt CycloInt::operator+(const CycloInt& o) const {
  CycloInt r = *this;
  r += o;
  return r;
}

CycloInt CycloInt::operator-(const CycloInt& o) const {
  CycloInt r = *this;
  r -= o;
  return r;
}

CycloInt CycloInt::operator-() const {
  CycloInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CycloInt& CycloInt::operator+=(const CycloInt& o) {
  if (m_ != o.m_) throw InvalidInput("CycloInt: mismatched m");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloInt& CycloInt::operator-=(const CycloInt& o) {
  if (m_ != o.m_) throw InvalidInput("CycloInt: mismatched m");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloInt CycloInt::operator*(const CycloInt& o) const {
  if (m_ != o.m_) throw InvalidInput("CycloInt: mismatched m");
  const auto ring = ring_for(m_);
  const int phi = ring->phi;
  std::vector<Integer> acc(2 * phi - 1, 0);
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] != 0) acc[i + j] += c_[i] * o.c_[j];
    }
  }
  // Fold degrees >= phi through the monic cyclotomic polynomial.
  for (int i = 2 * phi - 2; i >= phi; --i) {
    if (acc[i] == 0) continue;
    const Integer c = acc[i];
    for (int j = 0; j < phi; ++j) {
      if (ring->poly[j]) acc[i - phi + j] -= c * ring->poly[j];
    }
    acc[i] = 0;
  }
  CycloInt r(m_);
  for (int i = 0; i < phi; ++i) r.c_[i] = std::move(acc[i]);
  return r;
}

CycloInt CycloInt::operator*(const Integer& s) const {
  CycloInt r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool CycloInt::is_zero() const {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloInt::is_integer() const {
  for (size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

Integer CycloInt::to_integer() const {
  if (!is_integer()) throw ConsistencyError("CycloInt: value is not a rational integer");
  return c_.empty() ? Integer(0) : c_[0];
}

CycloInt CycloInt::galois(i64 c) const {
  if (nt::gcd(c, m_) != 1) throw InvalidInput("CycloInt::galois: exponent is not a unit");
  std::vector<Integer> weights(m_, 0);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] != 0) weights[nt::mod(c * static_cast<i64>(k), m_)] += c_[k];
  }
  return from_exponent_weights(m_, weights);
}

Integer CycloInt::norm() const {
  CycloInt prod = from_integer(m_, 1);
  for (int c : nt::units_mod(m_)) prod = prod * galois(c);
  return prod.to_integer();
}

std::optional<CycloInt> CycloInt::divide(const CycloInt& y) const {
  if (y.is_zero()) throw InvalidInput("CycloInt: division by zero");
  CycloInt cofactor = from_integer(m_, 1);
  for (int c : nt::units_mod(m_)) {
    if (c != 1) cofactor = cofactor * y.galois(c);
  }
  const Integer n = (y * cofactor).to_integer();
  CycloInt num = *this * cofactor;
  for (auto& c : num.c_) {
    if (c % n != 0) return std::nullopt;
    c /= n;
  }
  return num;
}

CycloInt CycloInt::divide_exact(const Integer& d) const {
  CycloInt r = *this;
  for (auto& c : r.c_) {
    if (c % d != 0) throw ConsistencyError("CycloInt: inexact integer division");
    c /= d;
  }
  return r;
}

std::complex<long double> CycloInt::embed(int k) const {
  std::complex<long double> sum = 0;
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    const long double angle = two_pi * static_cast<long double>(nt::mod(static_cast<i64>(k) * i, m_)) / m_;
    sum += static_cast<long double>(c_[i]) * std::polar(1.0L, angle);
  }
  return sum;
}

std::string CycloInt::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    const Integer a = c_[i] < 0 ? Integer(-c_[i]) : c_[i];
    if (i == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace muord
