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
#include <cstdlib>
#include <cstring>
#include <vector>

#include "muord/kernels.hpp"

namespace muord::kernels {

void exponent_histogram_scalar(const HistogramJob& job, std::uint64_t* hist) {
  const std::uint32_t p = job.p;
  const int delta = job.delta;
  std::vector<std::uint64_t> local(delta, 0);
  for (std::uint64_t r = job.row_begin; r < job.row_end; ++r) {
    const std::uint8_t* row = job.table + r * p;
    for (std::uint32_t c0 = 0; c0 < p; ++c0) {
      int s = 0;
      for (int i = 0; i < job.nterms; ++i) {
        const std::uint32_t shifted = c0 >= job.shift[i] ? c0 - job.shift[i] : c0 + p - job.shift[i];
        s += job.weight[i] * row[shifted];
      }
      ++local[s % delta];
    }
  }
  for (int s = 0; s < delta; ++s) hist[s] += local[s];
}

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {
bool scalar_forced() {
  const char* env = std::getenv("MUORD_SIMD");
  return env != nullptr && std::strcmp(env, "scalar") == 0;
}
}  // namespace

HistogramFn exponent_histogram() {
  static const HistogramFn chosen = (!scalar_forced() && cpu_has_avx2()) ? exponent_histogram_avx2
                                                                         : exponent_histogram_scalar;
  return chosen;
}

std::string exponent_histogram_name() {
  return exponent_histogram() == exponent_histogram_avx2 ? "avx2" : "scalar";
}

}  // namespace muord::kernels
