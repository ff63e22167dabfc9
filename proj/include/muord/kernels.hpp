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
#ifndef MUORD_KERNELS_HPP
#define MUORD_KERNELS_HPP

#include <cstdint>
#include <string>

namespace muord::kernels {

/// Largest number of shifted table terms one histogram pass accepts.
inline constexpr int kMaxTerms = 16;
/// Byte lanes look residues up with a 16-entry shuffle, so delta <= 16.
inline constexpr int kMaxDelta = 16;

/// Input of the exponent histogram.  The table is laid out in rows of
/// length p (element index = row * p + c0).  For every row r in
/// [row_begin, row_end) and every c0 in [0, p) the kernel forms
///   s = sum_i weight[i] * table[r*p + (c0 - shift[i] mod p)]  (mod delta)
/// and increments hist[s].  Table entries must be below delta.
struct HistogramJob {
  const std::uint8_t* table = nullptr;
  std::uint32_t p = 0;
  std::uint64_t row_begin = 0;
  std::uint64_t row_end = 0;
  int nterms = 0;
  std::uint32_t shift[kMaxTerms] = {};
  std::uint8_t weight[kMaxTerms] = {};
  int delta = 1;
};

using HistogramFn = void (*)(const HistogramJob& job, std::uint64_t* hist);

/// Portable reference implementation.
void exponent_histogram_scalar(const HistogramJob& job, std::uint64_t* hist);

/// AVX2 implementation; only callable when the CPU reports AVX2.
void exponent_histogram_avx2(const HistogramJob& job, std::uint64_t* hist);

bool cpu_has_avx2();

/// The implementation used by the library: AVX2 when available unless
/// the environment variable MUORD_SIMD is set to "scalar".
HistogramFn exponent_histogram();
std::string exponent_histogram_name();

}  // namespace muord::kernels

#endif  // MUORD_KERNELS_HPP
