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
#include "muord/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "muord/invariant.hpp"
#include "muord/padic.hpp"

namespace muord {

using nlohmann::json;

// ------------------------------------------------------------------ config

namespace {

ScanConfig config_from_json(const json& j) {
  ScanConfig c;
  if (!j.is_object()) throw InvalidInput("config: expected a JSON object");
  static const std::set<std::string> known{"family", "datum", "t", "branch_points", "p_min", "p_max",
                                           "budget", "out_csv", "cache_path", "threads"};
  for (const auto& item : j.items()) {
    if (!known.count(item.key())) throw InvalidInput("config: unknown key '" + item.key() + "'");
  }
  if (j.contains("family") && j.contains("datum")) throw InvalidInput("config: give 'family' or 'datum', not both");
  if (j.contains("family")) {
    const Family& fam = family_by_key(j.at("family").get<std::string>());
    c.family = fam.key;
    c.datum = fam.datum;
    c.branch = fam.default_branch;
  } else if (j.contains("datum")) {
    const json& d = j.at("datum");
    c.datum.m = d.at("m").get<int>();
    c.datum.a = d.at("a").get<std::vector<int>>();
    c.datum.N = d.contains("N") ? d.at("N").get<int>() : static_cast<int>(c.datum.a.size());
    if (c.datum.N != static_cast<int>(c.datum.a.size())) throw InvalidInput("config: datum N does not match a");
    c.datum.validate();
  } else {
    throw InvalidInput("config: either 'family' or 'datum' is required");
  }
  if (j.contains("branch_points")) {
    c.branch = j.at("branch_points").get<std::vector<i64>>();
  }
  if (j.contains("t")) {
    if (c.branch.empty()) throw InvalidInput("config: 't' needs a family with default branch points");
    c.branch.back() = j.at("t").get<i64>();
  }
  c.p_min = j.value("p_min", static_cast<u64>(3));
  c.p_max = j.value("p_max", c.p_min);
  c.budget = j.value("budget", kDefaultBudget);
  c.threads = j.value("threads", 0);
  c.out_csv = j.value("out_csv", std::string());
  c.cache_path = j.value("cache_path", std::string());
  c.validate();
  return c;
}

std::string join(const std::vector<i64>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

ScanConfig ScanConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
  try {
    return config_from_json(j);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("config: ") + e.what());
  }
}

ScanConfig ScanConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("config: cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

ScanConfig ScanConfig::for_family(const std::string& key, std::optional<i64> t) {
  const Family& fam = family_by_key(key);
  ScanConfig c;
  c.family = fam.key;
  c.datum = fam.datum;
  c.branch = fam.default_branch;
  if (t) c.branch.back() = *t;
  return c;
}

void ScanConfig::validate() const {
  datum.validate();
  if (static_cast<int>(branch.size()) != datum.N - 1) {
    throw InvalidInput("config: expected " + std::to_string(datum.N - 1) + " finite branch points, got " +
                       std::to_string(branch.size()));
  }
  std::vector<i64> sorted = branch;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("config: branch points must be distinct");
  }
  if (p_min < 3) throw InvalidInput("config: p_min must be at least 3");
  if (p_max < p_min) throw InvalidInput("config: p_max must be at least p_min");
  if (p_max > 100'000'000ULL) throw InvalidInput("config: p_max above 10^8 is out of range");
}

std::string ScanConfig::label() const { return family.empty() ? datum.to_string() : family; }

std::string ScanConfig::params_key() const {
  return "branch=" + join(branch) + ";budget=" + std::to_string(budget);
}

// ------------------------------------------------------------------ records

std::string ScanRecord::to_json() const {
  json j;
  j["p"] = p;
  j["p_mod_m"] = p_mod_m;
  j["f"] = f;
  j["skipped"] = skipped;
  j["error"] = error;
  j["nu"] = nu ? json(nu->to_string()) : json(nullptr);
  j["mu"] = mu.to_string();
  j["method"] = method;
  j["comparison"] = comparison;
  j["shortcut_agrees"] = shortcut_agrees ? json(*shortcut_agrees) : json(nullptr);
  j["is_mu_ordinary"] = is_mu_ordinary;
  j["is_ordinary"] = is_ordinary;
  j["a_p"] = a_p ? json(a_p->str()) : json(nullptr);
  j["vp_ap"] = vp_ap ? json(*vp_ap) : json(nullptr);
  j["div_ok"] = div_ok;
  j["bound_ok"] = bound_ok;
  j["mu_certified"] = mu_certified;
  json pcs = json::array();
  for (const auto& [jj, coeffs] : pieces) pcs.push_back({{"j", jj}, {"e", coeffs}});
  j["pieces"] = pcs;
  j["ms_elapsed"] = ms_elapsed;
  return j.dump();
}

ScanRecord ScanRecord::from_json(const std::string& line) {
  const json j = json::parse(line);
  ScanRecord r;
  r.p = j.at("p").get<u64>();
  r.p_mod_m = j.at("p_mod_m").get<int>();
  r.f = j.at("f").get<int>();
  r.skipped = j.at("skipped").get<std::string>();
  r.error = j.at("error").get<std::string>();
  if (!j.at("nu").is_null()) r.nu = NewtonPolygon::from_string(j.at("nu").get<std::string>());
  const auto mu_text = j.at("mu").get<std::string>();
  if (!mu_text.empty()) r.mu = NewtonPolygon::from_string(mu_text);
  r.method = j.at("method").get<std::string>();
  r.comparison = j.at("comparison").get<std::string>();
  if (!j.at("shortcut_agrees").is_null()) r.shortcut_agrees = j.at("shortcut_agrees").get<bool>();
  r.is_mu_ordinary = j.at("is_mu_ordinary").get<bool>();
  r.is_ordinary = j.at("is_ordinary").get<bool>();
  if (!j.at("a_p").is_null()) r.a_p = Integer(j.at("a_p").get<std::string>());
  if (!j.at("vp_ap").is_null()) r.vp_ap = j.at("vp_ap").get<int>();
  r.div_ok = j.at("div_ok").get<bool>();
  r.bound_ok = j.at("bound_ok").get<bool>();
  r.mu_certified = j.at("mu_certified").get<bool>();
  for (const auto& pc : j.at("pieces")) {
    r.pieces.emplace_back(pc.at("j").get<int>(), pc.at("e").get<std::vector<std::string>>());
  }
  r.ms_elapsed = j.at("ms_elapsed").get<i64>();
  return r;
}

namespace {

std::string csv_text(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string csv_row(const ScanRecord& r) {
  std::ostringstream os;
  os << r.p << ',' << r.p_mod_m << ',' << r.f << ',';
  if (!r.skipped.empty()) {
    os << csv_text(r.skipped) << ",,,,,,,," << r.ms_elapsed;
    return os.str();
  }
  if (!r.error.empty()) {
    os << csv_text("error: " + r.error) << ",," << csv_text(r.mu.to_string()) << ",,,,,," << r.ms_elapsed;
    return os.str();
  }
  os << ',' << (r.nu ? csv_text(r.nu->to_string()) : std::string()) << ',' << csv_text(r.mu.to_string()) << ','
     << flag(r.is_mu_ordinary) << ',' << flag(r.is_ordinary) << ',' << (r.a_p ? r.a_p->str() : std::string()) << ','
     << (r.vp_ap ? std::to_string(*r.vp_ap) : std::string()) << ',' << flag(r.mu_certified) << ',' << r.ms_elapsed;
  return os.str();
}

// ---------------------------------------------------------------- classify

namespace {

std::vector<std::string> coefficient_texts(const EigenspaceCharPoly& cp) {
  std::vector<std::string> out;
  for (const auto& e : cp.e) out.push_back(e ? e->to_string() : "?");
  return out;
}

void classify_into(ScanRecord& r, const ScanConfig& config, u64 p) {
  const Signature sig = signature_of(config.datum);
  const auto simple = simple_signature_check(sig);
  const CurveInstance curve = CurveInstance::from_datum(config.datum, config.branch, p);
  r.p_mod_m = static_cast<int>(p % static_cast<u64>(sig.m));

  if (!nt::is_prime(p)) {
    r.skipped = "p is not prime";
    return;
  }
  if (const std::string bad = curve.bad_reason(); !bad.empty()) {
    r.skipped = bad;
    return;
  }
  const SplittingDatum split = simple ? splitting_datum(sig.m, p, *simple) : splitting_datum(sig.m, p);
  r.f = split.f;
  r.mu = mu_ordinary_polygon(sig, split);

  FrobeniusSums fs(curve, config.budget);
  if (!fs.affordable(split.f)) {
    r.skipped = "budget: F_{p^" + std::to_string(split.f) + "} exceeds " + std::to_string(config.budget) + " elements";
    return;
  }
  // Slopes of phi^f on a piece are at most f, so valuations of e_i stay below n f + 1.
  const PadicContext ctx(fs.reference(), sig.n * split.f + 2);

  std::vector<EigenspaceCharPoly> cps;
  std::vector<std::optional<NewtonPolygon>> polys;
  for (const auto& coset : split.cosets) {
    EigenspaceCharPoly cp = eigenspace_charpoly(fs, coset.front());
    i64 hodge = 0;
    for (int s : coset) hodge += sig.at(s);
    polys.push_back(piece_polygon(cp, ctx, hodge));
    r.pieces.emplace_back(cp.j, coefficient_texts(cp));
    cps.push_back(std::move(cp));
  }

  // Smallest-slope shortcut at the coset of -sigma_1: usable when the first
  // segment of the mu piece there spans a single coefficient.
  std::optional<bool> shortcut;
  if (simple && split.P1_star >= 0) {
    const NewtonPolygon piece = mu_ordinary_piece(sig, split, split.P1_star);
    const Rational s = piece.smallest_slope();
    if (piece.multiplicity_of(s) == split.f && cps[split.P1_star].e[1]) {
      const Rational target = s * split.f;
      const auto v = ctx.valuation(*cps[split.P1_star].e[1]);
      shortcut = v && target.denominator() == 1 && *v == target.numerator();
    }
  }

  const bool full = std::all_of(polys.begin(), polys.end(), [](const auto& x) { return x.has_value(); });
  if (full) {
    NewtonPolygon nu;
    for (const auto& x : polys) nu = nu + *x;
    const Comparison cmp = compare(nu, r.mu);
    r.nu = nu;
    r.method = "full";
    r.comparison = to_string(cmp);
    r.is_mu_ordinary = cmp == Comparison::Equal;
    r.is_ordinary = nu.is_ordinary();
    if (shortcut) r.shortcut_agrees = *shortcut == r.is_mu_ordinary;
  } else if (shortcut) {
    r.method = "shortcut";
    r.is_mu_ordinary = *shortcut;
    // A polygon strictly above a non-ordinary mu is non-ordinary; above an
    // ordinary mu it has some slope strictly between 0 and 1.
    r.is_ordinary = *shortcut && r.mu.is_ordinary();
  } else {
    r.error = "Newton polygon undetermined within the budget";
    return;
  }

  const Integer ap = compute_ap(cps, split);
  const ApDiagnostics dg = diagnostics(ap, p, split, sig.n);
  r.a_p = ap;
  r.vp_ap = dg.v;
  r.div_ok = dg.div_ok;
  r.bound_ok = dg.bound_ok;
  r.mu_certified = dg.mu_certified;
}

}  // namespace

ScanRecord classify_prime(const ScanConfig& config, u64 p) {
  config.validate();
  ScanRecord r;
  r.p = p;
  const auto start = std::chrono::steady_clock::now();
  try {
    classify_into(r, config, p);
  } catch (const Error& e) {
    r.error = e.what();
  }
  r.ms_elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// --------------------------------------------------------------- densities

DensityPrediction predicted_densities(const MonodromyDatum& datum) {
  datum.validate();
  DensityPrediction out;
  const Signature sig = signature_of(datum);
  const auto simple = simple_signature_check(sig);
  const bool assumption_c = check_assumption_c(sig);
  if (!simple) out.warnings.push_back("signature is not simple: no density prediction");
  if (!assumption_c) {
    out.warnings.push_back("the rank condition on Galois translates (assumption C) fails: the density "
                           "predictions that rest on it are withheld");
  }
  const bool predict = simple && assumption_c && sig.n >= 1;
  for (int s : nt::units_mod(sig.m)) {
    ClassPrediction cp;
    cp.residue = s;
    cp.mu = mu_ordinary_polygon(sig, simple ? splitting_datum(sig.m, static_cast<u64>(s), *simple)
                                            : splitting_datum(sig.m, static_cast<u64>(s)));
    if (predict) {
      cp.mu_ordinary = Rational(1);
      cp.ordinary = Rational(cp.mu.is_ordinary() ? 1 : 0);
    }
    out.classes.push_back(std::move(cp));
  }
  if (predict && sig.n >= 2) out.overall_ordinary = Rational(1, nt::euler_phi(sig.m));
  if (predict && sig.n == 1) out.notes.push_back("n = 1: the primitive part has CM, every good prime is mu-ordinary");
  if (sig.genus != sig.primitive_genus()) {
    out.notes.push_back("m is composite: predictions cover the primitive part only (imprimitive eigenspaces "
                        "belong to quotient curves)");
  }
  if (predict) {
    out.notes.push_back("the mu-ordinary statement is a lower-density bound; a lower bound of 1 forces density 1");
  }
  return out;
}

// -------------------------------------------------------------------- scan

std::string frequency_text(int num, int den) {
  if (den == 0) return "0/0";
  std::ostringstream os;
  os << num << "/" << den << " (" << std::fixed << std::setprecision(4) << static_cast<double>(num) / den << ")";
  return os.str();
}

namespace {

void tally(ClassTally& t, const ScanRecord& r) {
  if (!r.skipped.empty()) {
    ++t.skipped;
    return;
  }
  if (!r.error.empty()) {
    ++t.errors;
    return;
  }
  ++t.scanned;
  t.mu_ordinary += r.is_mu_ordinary;
  t.ordinary += r.is_ordinary;
  t.certified += r.mu_certified;
  t.div_violations += !r.div_ok;
  t.bound_violations += !r.bound_ok;
  t.below_mu += r.comparison == "below" || r.comparison == "incomparable";
  t.shortcut_disagreements += r.shortcut_agrees.has_value() && !*r.shortcut_agrees;
}

std::string rational_text(const std::optional<Rational>& r) {
  if (!r) return "withheld";
  return muord::rational_text(*r);
}

std::string tally_line(const std::string& name, const ClassTally& t) {
  std::ostringstream os;
  os << name << ": scanned " << t.scanned << ", skipped " << t.skipped << ", errors " << t.errors
     << ", mu-ordinary " << frequency_text(t.mu_ordinary, t.scanned) << ", ordinary "
     << frequency_text(t.ordinary, t.scanned) << ", certified by a_p " << t.certified << ", divisibility violations "
     << t.div_violations << ", bound violations " << t.bound_violations;
  if (t.below_mu) os << ", below mu " << t.below_mu;
  if (t.shortcut_disagreements) os << ", shortcut disagreements " << t.shortcut_disagreements;
  return os.str();
}

}  // namespace

std::string ScanSummary::to_text() const {
  std::ostringstream os;
  for (const auto& w : prediction.warnings) os << "warning: " << w << "\n";
  for (const auto& [residue, t] : by_class) {
    std::string predicted;
    for (const auto& c : prediction.classes) {
      if (c.residue == residue) {
        predicted = " [predicted mu-ordinary " + rational_text(c.mu_ordinary) + ", ordinary " +
                    rational_text(c.ordinary) + "; mu = " + c.mu.to_string() + "]";
      }
    }
    os << tally_line("class " + std::to_string(residue), t) << predicted << "\n";
  }
  os << tally_line("pooled", pooled) << " [predicted overall ordinary " << rational_text(prediction.overall_ordinary)
     << "]\n";
  os << "records reused from cache: " << reused_from_cache << "\n";
  for (const auto& n : prediction.notes) os << "note: " << n << "\n";
  return os.str();
}

ScanSummary scan(const ScanConfig& config) {
  config.validate();
  ScanSummary summary;
  summary.prediction = predicted_densities(config.datum);

  std::map<u64, ScanRecord> done;
  const std::string family = config.label(), params = config.params_key();
  if (!config.cache_path.empty()) {
    std::ifstream in(config.cache_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      try {
        const json j = json::parse(line);
        if (j.at("family") != family || j.at("params") != params) continue;
        ScanRecord r = ScanRecord::from_json(j.at("record").dump());
        done.emplace(r.p, std::move(r));
      } catch (const std::exception&) {
        // A torn trailing line from an interrupted run is recomputed.
      }
    }
  }

  std::vector<u64> todo;
  for (u32 q : nt::primes_upto(static_cast<u32>(config.p_max))) {
    if (q < config.p_min) continue;
    if (done.count(q)) ++summary.reused_from_cache;
    else todo.push_back(q);
  }

  std::ofstream cache_out;
  if (!config.cache_path.empty()) {
    cache_out.open(config.cache_path, std::ios::app);
    if (!cache_out) throw InvalidInput("scan: cannot write cache " + config.cache_path);
  }
  std::mutex mu;
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      ScanRecord r = classify_prime(config, todo[i]);
      std::lock_guard<std::mutex> lock(mu);
      if (cache_out.is_open()) {
        json line;
        line["family"] = family;
        line["params"] = params;
        line["p"] = r.p;
        line["record"] = json::parse(r.to_json());
        cache_out << line.dump() << "\n" << std::flush;
      }
      done.emplace(r.p, std::move(r));
    }
  };
  int threads = config.threads > 0 ? config.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min<int>(threads, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& [p, r] : done) {
    if (p < config.p_min || p > config.p_max) continue;
    summary.records.push_back(r);
    ClassTally& t = summary.by_class[r.p_mod_m];
    t.residue = r.p_mod_m;
    tally(t, r);
    tally(summary.pooled, r);
  }

  if (!config.out_csv.empty()) {
    std::ofstream csv(config.out_csv, std::ios::trunc);
    if (!csv) throw InvalidInput("scan: cannot write " + config.out_csv);
    csv << kCsvHeader << "\n";
    for (const auto& r : summary.records) csv << csv_row(r) << "\n";
  }
  return summary;
}

}  // namespace muord
