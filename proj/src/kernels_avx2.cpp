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

// This translation unit is compiled with -mavx2.  Nothing here may run
// before exponent_histogram() has confirmed CPU support.

#include <immintrin.h>

#include <cstring>
#include <vector>

#include "muord/kernels.hpp"

namespace muord::kernels {

void exponent_histogram_avx2(const HistogramJob& job, std::uint64_t* hist) {
  const int delta = job.delta;
  if (delta > kMaxDelta || job.nterms > kMaxTerms) {
    exponent_histogram_scalar(job, hist);
    return;
  }
  const std::uint32_t p = job.p;
  const int nterms = job.nterms;

  // Per-term lookup e -> weight*e mod delta, replicated in both lanes.
  __m256i lut[kMaxTerms];
  for (int i = 0; i < nterms; ++i) {
    alignas(32) std::uint8_t bytes[32];
    for (int e = 0; e < 16; ++e) {
      const std::uint8_t v = static_cast<std::uint8_t>((job.weight[i] % delta) * e % delta);
      bytes[e] = v;
      bytes[e + 16] = v;
    }
    lut[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(bytes));
  }
  const __m256i vdelta = _mm256_set1_epi8(static_cast<char>(delta));
  __m256i probes[kMaxDelta];
  for (int s = 0; s < delta; ++s) probes[s] = _mm256_set1_epi8(static_cast<char>(s));

  // Doubled copy of the current row so that index (c0 - shift) mod p is a
  // plain offset: buf[p + c0 - shift] == row[(c0 - shift) mod p].
  std::vector<std::uint8_t> buf(2 * static_cast<size_t>(p) + 64, 0);
  std::uint64_t counts[kMaxDelta] = {};
  const std::uint32_t full = p - p % 32;

  for (std::uint64_t r = job.row_begin; r < job.row_end; ++r) {
    const std::uint8_t* row = job.table + r * p;
    std::memcpy(buf.data(), row, p);
    std::memcpy(buf.data() + p, row, p);
    for (std::uint32_t c0 = 0; c0 < full; c0 += 32) {
      __m256i acc = _mm256_setzero_si256();
      for (int i = 0; i < nterms; ++i) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(buf.data() + p - job.shift[i] + c0));
        acc = _mm256_add_epi8(acc, _mm256_shuffle_epi8(lut[i], v));
        acc = _mm256_min_epu8(acc, _mm256_sub_epi8(acc, vdelta));
      }
      for (int s = 0; s < delta; ++s) {
        const unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(acc, probes[s])));
        counts[s] += static_cast<unsigned>(__builtin_popcount(mask));
      }
    }
    for (std::uint32_t c0 = full; c0 < p; ++c0) {
      int s = 0;
      for (int i = 0; i < nterms; ++i) s += job.weight[i] * buf[p - job.shift[i] + c0];
      ++counts[s % delta];
    }
  }
  for (int s = 0; s < delta; ++s) hist[s] += counts[s];
}

}  // namespace muord::kernels
