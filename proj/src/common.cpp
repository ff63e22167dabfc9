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
#include "muord/common.hpp"

#include <algorithm>

namespace muord::nt {

u64 powmod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, mod);
    base = mulmod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

i64 gcd(i64 a, i64 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

u64 inverse_mod(u64 a, u64 m) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw InvalidInput("inverse_mod: element is not invertible");
  return static_cast<u64>(mod(t, static_cast<i64>(m)));
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u32> primes_upto(u32 n) {
  std::vector<u32> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  sieve[0] = sieve[1] = false;
  for (u64 i = 2; i * i <= n; ++i) {
    if (!sieve[i]) continue;
    for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
  }
  for (u32 i = 2; i <= n; ++i) {
    if (sieve[i]) out.push_back(i);
  }
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> units_mod(int m) {
  std::vector<int> out;
  for (int k = 1; k < m; ++k) {
    if (gcd(k, m) == 1) out.push_back(k);
  }
  if (m == 1) out.push_back(0);
  return out;
}

int multiplicative_order(u64 a, int m) {
  if (m == 1) return 1;
  if (gcd(static_cast<i64>(a % m), m) != 1) throw InvalidInput("multiplicative_order: not a unit");
  u64 x = a % m;
  int order = 1;
  while (x != 1) {
    x = x * (a % m) % m;
    ++order;
  }
  return order;
}

u128 ipow128(u64 p, int k) {
  u128 r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (~static_cast<u128>(0)) / p) throw BudgetExceeded("ipow128: overflow");
    r *= p;
  }
  return r;
}

int valuation(const Integer& x, u64 p) {
  if (x == 0) throw InvalidInput("valuation of zero");
  Integer y = x;
  int v = 0;
  while (y % p == 0) {
    y /= p;
    ++v;
  }
  return v;
}

std::string to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

}  // namespace muord::nt
