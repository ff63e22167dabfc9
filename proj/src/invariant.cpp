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
#include "muord/invariant.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace muord {

Integer compute_ap(const std::vector<CycloInt>& coset_traces, const SplittingDatum& split) {
  if (coset_traces.size() != split.cosets.size()) {
    throw InvalidInput("compute_ap: expected one trace per coset");
  }
  CycloInt product = CycloInt::from_integer(split.m, 1);
  for (const auto& t : coset_traces) product = product * t;
  if (!product.is_integer()) throw ConsistencyError("compute_ap: norm is not rational: " + product.to_string());
  Integer a = product.to_integer();
  // sign (-1)^{(f+1) r}
  if ((split.f + 1) % 2 == 1 && split.r % 2 == 1) a = -a;
  return a;
}

Integer compute_ap(const std::vector<EigenspaceCharPoly>& pieces, const SplittingDatum& split) {
  std::vector<CycloInt> traces;
  for (const auto& cp : pieces) {
    if (cp.n == 0 || !cp.e.at(1)) throw InvalidInput("compute_ap: piece without its first coefficient");
    if (cp.f != split.f) throw InvalidInput("compute_ap: piece orbit size differs from the splitting datum");
    traces.push_back(*cp.e[1]);
  }
  return compute_ap(traces, split);
}

Integer compute_ap(FrobeniusSums& sums, const SplittingDatum& split, bool largest_representatives) {
  std::vector<CycloInt> traces;
  for (const auto& coset : split.cosets) {
    const int j = largest_representatives ? coset.back() : coset.front();
    traces.push_back(sums.trace(j, split.f));
  }
  return compute_ap(traces, split);
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ApDiagnostics diagnostics(const Integer& a_p, u64 p, const SplittingDatum& split, int n) {
  ApDiagnostics out;
  out.a_p = a_p;
  out.d = split.d;
  out.C = boost::multiprecision::pow(binomial(n * split.f, split.f), static_cast<unsigned>(split.r));
  if (a_p != 0) out.v = nt::valuation(a_p, p);
  const Integer pd1 = boost::multiprecision::pow(Integer(p), static_cast<unsigned>(split.d - 1));
  out.div_ok = a_p % pd1 == 0;
  const Integer scaled = (a_p < 0 ? Integer(-a_p) : a_p);
  // |a_p| / p^{d-1} <= C p  <=>  |a_p| <= C p^d
  out.bound_ok = scaled <= out.C * pd1 * p;
  out.mu_certified = a_p % (pd1 * p) != 0;
  return out;
}

}  // namespace muord
