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
#ifndef MUORD_COMMON_HPP
#define MUORD_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace muord {

using Integer = boost::multiprecision::cpp_int;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a computation would enumerate more field elements than allowed.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Raised when a p-adic precision sentinel could change a hull decision.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

/// Raised on malformed user input (data, configuration, arguments).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Raised when an internal consistency check fails.  Such a failure
/// always indicates a bug rather than bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

namespace nt {

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 mod);
i64 gcd(i64 a, i64 b);
i64 mod(i64 a, i64 m);  // representative in [0, m)
u64 inverse_mod(u64 a, u64 m);

bool is_prime(u64 n);
std::vector<u32> primes_upto(u32 n);
std::vector<u64> prime_divisors(u64 n);

int euler_phi(int m);
std::vector<int> units_mod(int m);  // ascending
int multiplicative_order(u64 a, int m);

/// p^k as an unsigned 128-bit value; throws on overflow.
u128 ipow128(u64 p, int k);
/// v_p(x) for x != 0.
int valuation(const Integer& x, u64 p);

std::string to_string(u128 v);

}  // namespace nt
}  // namespace muord

#endif  // MUORD_COMMON_HPP
