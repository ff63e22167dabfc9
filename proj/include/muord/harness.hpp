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

/*
 * Classification of single primes and of prime ranges.  Scans keep a
 * JSON-lines cache of records and write CSV; their tallies are compared
 * with the predicted densities.
 */
#ifndef MUORD_HARNESS_HPP
#define MUORD_HARNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "muord/counting.hpp"
#include "muord/cyclo_cm.hpp"
#include "muord/newton.hpp"

namespace muord {

struct ScanConfig {
  std::string family;            // built-in key; empty when `datum` is explicit
  MonodromyDatum datum;
  std::vector<i64> branch;       // finite branch points b_1 .. b_{N-1}
  u64 p_min = 3;
  u64 p_max = 3;
  u64 budget = kDefaultBudget;
  int threads = 0;               // 0: hardware concurrency
  std::string out_csv;
  std::string cache_path;

  /// Keys: family | datum {m, N, a}; t | branch_points; p_min; p_max;
  /// budget; out_csv; cache_path; threads.  `t` replaces the last default
  /// finite branch point of the family.
  static ScanConfig from_json_text(const std::string& text);
  static ScanConfig from_file(const std::string& path);
  /// Config for a family with its default branch points, optionally
  /// replacing the last finite branch point by t.
  static ScanConfig for_family(const std::string& key, std::optional<i64> t = std::nullopt);

  void validate() const;
  std::string label() const;       // family key or datum text
  std::string params_key() const;  // branch points and budget
};

struct ScanRecord {
  u64 p = 0;
  int p_mod_m = 0;
  int f = 0;
  std::string skipped;           // empty for classified primes
  std::string error;             // per-prime failure, record kept
  std::optional<NewtonPolygon> nu;  // present when computed directly
  NewtonPolygon mu;
  std::string method;            // "full" or "shortcut"
  std::string comparison;        // compare(nu, mu) when nu is present
  std::optional<bool> shortcut_agrees;
  bool is_mu_ordinary = false;
  bool is_ordinary = false;
  std::optional<Integer> a_p;
  std::optional<int> vp_ap;
  bool div_ok = false;
  bool bound_ok = false;
  bool mu_certified = false;
  /// Per coset: the representative j and the coefficients e_0..e_n of the
  /// eigenspace characteristic polynomial ("?" when undetermined).
  std::vector<std::pair<int, std::vector<std::string>>> pieces;
  i64 ms_elapsed = 0;

  bool classified() const { return skipped.empty() && error.empty(); }
  std::string to_json() const;
  static ScanRecord from_json(const std::string& line);
};

inline constexpr const char* kCsvHeader =
    "p,p_mod_m,f,skipped,slopes,mu_slopes,is_mu_ordinary,is_ordinary,ap,vp_ap,mu_certified,ms_elapsed";
std::string csv_row(const ScanRecord& r);

/// Classifies one prime; never throws for per-prime failures (they are
/// stored in `error`), only for invalid configurations.
ScanRecord classify_prime(const ScanConfig& config, u64 p);

struct ClassTally {
  int residue = 0;
  int scanned = 0;
  int skipped = 0;
  int errors = 0;
  int mu_ordinary = 0;
  int ordinary = 0;
  int certified = 0;
  int div_violations = 0;
  int bound_violations = 0;
  int below_mu = 0;
  int shortcut_disagreements = 0;
};

struct ClassPrediction {
  int residue = 0;
  NewtonPolygon mu;
  std::optional<Rational> mu_ordinary;  // empty when withheld
  std::optional<Rational> ordinary;
};

struct DensityPrediction {
  std::vector<ClassPrediction> classes;
  std::optional<Rational> overall_ordinary;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
};

DensityPrediction predicted_densities(const MonodromyDatum& datum);

struct ScanSummary {
  std::vector<ScanRecord> records;  // sorted by p
  std::map<int, ClassTally> by_class;
  ClassTally pooled;
  int reused_from_cache = 0;
  DensityPrediction prediction;

  std::string to_text() const;
};

/// Classifies every prime in [p_min, p_max], reusing cached records, and
/// writes the CSV (sorted by p) when out_csv is set.
ScanSummary scan(const ScanConfig& config);

/// "numerator/denominator (decimal)".
std::string frequency_text(int num, int den);

}  // namespace muord

#endif  // MUORD_HARNESS_HPP
