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

// Command-line front end.  Each subcommand wraps one library entry point.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "muord/counting.hpp"
#include "muord/cyclo_cm.hpp"
#include "muord/harness.hpp"
#include "muord/newton.hpp"
#include "muord/weyl.hpp"

using namespace muord;

namespace {

struct CurveOptions {
  std::string family;
  std::string datum;  // "m:a_1,...,a_N"
  std::optional<i64> t;
  std::vector<i64> branch;
  u64 budget = kDefaultBudget;

  void add_to(CLI::App* app, bool with_branch) {
    app->add_option("--family", family, "built-in family key, e.g. M11");
    app->add_option("--datum", datum, "explicit monodromy datum m:a_1,...,a_N");
    if (with_branch) {
      app->add_option("--t", t, "replaces the last default finite branch point");
      app->add_option("--branch", branch, "finite branch points b_1 .. b_{N-1}")->delimiter(',');
      app->add_option("--budget", budget, "largest field to enumerate");
    }
  }
};

MonodromyDatum parse_datum(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidInput("datum must look like m:a_1,...,a_N");
  MonodromyDatum d;
  d.m = std::stoi(text.substr(0, colon));
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) d.a.push_back(std::stoi(item));
  d.N = static_cast<int>(d.a.size());
  d.validate();
  return d;
}

/// Accepts a family key or a datum in the same positional slot.
MonodromyDatum datum_from(const std::string& family, const std::string& datum) {
  if (!datum.empty()) return parse_datum(datum);
  if (family.empty()) throw InvalidInput("give --family or --datum");
  if (family.find(':') != std::string::npos) return parse_datum(family);
  return family_by_key(family).datum;
}

ScanConfig config_from(const CurveOptions& o) {
  ScanConfig c;
  if (!o.datum.empty() || o.family.find(':') != std::string::npos) {
    c.datum = datum_from(o.family, o.datum);
    if (o.branch.empty()) throw InvalidInput("an explicit datum needs --branch");
  } else {
    c = ScanConfig::for_family(o.family);
  }
  if (!o.branch.empty()) c.branch = o.branch;
  if (o.t) c.branch.back() = *o.t;
  c.budget = o.budget;
  return c;
}

std::string units_text(const std::vector<int>& v) {
  std::string out = "{";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

int cmd_predict(const std::string& target, bool classes) {
  const MonodromyDatum datum = datum_from(target, "");
  const Signature sig = signature_of(datum);
  const auto simple = simple_signature_check(sig);
  std::cout << "datum " << datum.to_string() << ": genus " << datum.genus() << ", n = " << sig.n << ", d = " << sig.d
            << "\n";
  std::cout << "signature on units " << units_text(sig.on_units()) << "\n";
  if (simple) {
    std::cout << "simple: CM type " << units_text(simple->phi) << ", sigma_1 = " << simple->sigma1 << "\n";
  } else {
    std::cout << "signature is not simple\n";
  }
  const DensityPrediction pred = predicted_densities(datum);
  for (const auto& w : pred.warnings) std::cout << "warning: " << w << "\n";
  for (const auto& c : pred.classes) {
    std::cout << "p = " << c.residue << " mod " << sig.m << ": mu = " << c.mu.to_string();
    if (classes) {
      const SplittingDatum split = simple ? splitting_datum(sig.m, static_cast<u64>(c.residue), *simple)
                                          : splitting_datum(sig.m, static_cast<u64>(c.residue));
      std::cout << "\n  f = " << split.f << ", r = " << split.r << ", K in F_0: " << (split.K_in_F0 ? "yes" : "no");
      for (size_t P = 0; P < split.cosets.size(); ++P) {
        std::cout << "\n  coset " << units_text(split.cosets[P]);
        if (!split.aP.empty()) std::cout << " a_P = " << split.aP[P];
        std::cout << " piece " << mu_ordinary_piece(sig, split, static_cast<int>(P)).to_string();
      }
      if (split.P1_star >= 0) std::cout << "\n  smallest-slope target " << rational_text(smallest_slope_target(split));
    }
    std::cout << "\n";
  }
  if (pred.overall_ordinary) {
    std::cout << "predicted ordinary density " << pred.overall_ordinary->numerator() << "/"
              << pred.overall_ordinary->denominator() << "; mu-ordinary density 1 in every class\n";
  }
  for (const auto& n : pred.notes) std::cout << "note: " << n << "\n";
  return 0;
}

int cmd_lpoly(const CurveOptions& o, u64 p, bool brute) {
  const ScanConfig c = config_from(o);
  const CurveInstance curve = CurveInstance::from_datum(c.datum, c.branch, p);
  if (const auto bad = curve.bad_reason(); !bad.empty()) {
    std::cout << "p = " << p << " skipped: " << bad << "\n";
    return 0;
  }
  FrobeniusSums sums(curve, c.budget);
  const LPolynomial L = lpolynomial_from_characters(sums);
  std::cout << "L(T) coefficients " << L.to_string() << "\n";
  std::cout << "functional equation " << (L.functional_equation_holds() ? "holds" : "FAILS") << ", Weil bound "
            << (L.weil_bound_holds() ? "holds" : "FAILS") << "\n";
  std::cout << "Newton polygon " << L.newton_polygon().to_string() << "\n";
  if (brute) {
    const LPolynomial B = lpolynomial_from_counts(curve, c.budget);
    std::cout << "brute-force counts " << (B.c == L.c ? "agree" : "DISAGREE: " + B.to_string()) << "\n";
    if (B.c != L.c) return 1;
  }
  return L.functional_equation_holds() && L.weil_bound_holds() ? 0 : 1;
}

int cmd_classify(const CurveOptions& o, u64 p) {
  const ScanConfig c = config_from(o);
  const ScanRecord r = classify_prime(c, p);
  std::cout << "p = " << r.p << " (" << r.p_mod_m << " mod " << c.datum.m << "), f = " << r.f << "\n";
  if (!r.skipped.empty()) {
    std::cout << "skipped: " << r.skipped << "\n";
    return 0;
  }
  if (!r.error.empty()) {
    std::cout << "error: " << r.error << "\n";
    return 1;
  }
  std::cout << "mu = " << r.mu.to_string() << "\n";
  std::cout << "nu = " << (r.nu ? r.nu->to_string() : std::string("(not computed; decided by the smallest slope)"))
            << "\n";
  std::cout << "method " << r.method;
  if (!r.comparison.empty()) std::cout << ", nu vs mu: " << r.comparison;
  if (r.shortcut_agrees) std::cout << ", smallest-slope test " << (*r.shortcut_agrees ? "agrees" : "DISAGREES");
  std::cout << "\n";
  std::cout << "mu-ordinary " << (r.is_mu_ordinary ? "yes" : "no") << ", ordinary " << (r.is_ordinary ? "yes" : "no")
            << "\n";
  std::cout << "a_p = " << (r.a_p ? r.a_p->str() : "?") << ", v_p(a_p) = "
            << (r.vp_ap ? std::to_string(*r.vp_ap) : std::string("inf")) << ", divisibility "
            << (r.div_ok ? "ok" : "VIOLATED") << ", bound " << (r.bound_ok ? "ok" : "VIOLATED") << ", certified "
            << (r.mu_certified ? "yes" : "no") << "\n";
  return 0;
}

int cmd_scan(const std::string& path) {
  const ScanConfig c = ScanConfig::from_file(path);
  const ScanSummary s = scan(c);
  std::cout << s.to_text();
  if (!c.out_csv.empty()) std::cout << "wrote " << s.records.size() << " rows to " << c.out_csv << "\n";
  return 0;
}

int cmd_weyl(const std::string& family, const std::string& datum_text, std::optional<int> cls_opt) {
  const MonodromyDatum datum = datum_from(family, datum_text);
  const Signature sig = signature_of(datum);
  std::vector<int> classes;
  if (cls_opt) classes.push_back(*cls_opt);
  else classes = nt::units_mod(sig.m);
  bool all_ok = true;
  for (int s : classes) {
    const weyl::ClassStructure cls = weyl::class_structure(sig.m, s, sig.n);
    const auto names = weyl::variable_names(sig.n, sig.d);
    for (const auto& e : weyl::consistent_elements(cls)) {
      const weyl::LaurentPoly tf = weyl::trace_function(cls, e, false);
      const bool nc = weyl::nonconstant_on_Tprime(tf, sig.n, sig.d);
      const bool uniform = weyl::nonconstant_uniformly_in_t(weyl::trace_function(cls, e, true), sig.n, sig.d);
      all_ok = all_ok && nc && uniform;
      std::cout << "class " << s << " component " << e.to_string() << ": " << tf.to_string(names) << " | on T': "
                << (nc ? "nonconstant" : "CONSTANT") << ", uniformly in t: " << (uniform ? "yes" : "NO") << "\n";
    }
  }
  return all_ok ? 0 : 1;
}

int cmd_assumptions(const std::string& family, const std::string& datum_text) {
  const MonodromyDatum datum = datum_from(family, datum_text);
  const Signature sig = signature_of(datum);
  const auto simple = simple_signature_check(sig);
  std::cout << "datum " << datum.to_string() << "\n";
  std::cout << "F: Q(zeta_" << sig.m << ") is a CM field of degree " << 2 * sig.d << "; relative dimension n = "
            << sig.n << (sig.n >= 2 ? "" : " (CM case)") << "\n";
  if (sig.genus != sig.primitive_genus()) {
    std::cout << "   m is composite: only the primitive part (genus " << sig.primitive_genus() << " of "
              << sig.genus << ") is analysed\n";
  }
  std::cout << "S: " << (simple ? "simple, CM type " + units_text(simple->phi) + ", sigma_1 = " +
                                      std::to_string(simple->sigma1)
                                : std::string("not simple"))
            << "\n";
  std::cout << "A: Q(zeta_" << sig.m << ")/Q is abelian\n";
  const bool c = check_assumption_c(sig);
  std::cout << "C: Galois-translate rank condition " << (c ? "holds" : "FAILS") << "\n";
  if (simple) {
    const ExceptionalDims ex = assumption_c_exceptional_dims(sig.m, *simple);
    std::cout << "   det B(n) at n = 0: " << ex.det_at_zero << "; positive integer roots " << units_text(ex.roots)
              << "\n";
  }
  if (const Family* fam = [&]() -> const Family* {
        for (const auto& f : builtin_families()) {
          if (f.key == family) return &f;
        }
        return nullptr;
      }();
      fam && !fam->note.empty()) {
    std::cout << "note: " << fam->note << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mu-ordinary Newton polygons of cyclic covers of the projective line"};
  app.require_subcommand(1);

  std::string predict_target;
  bool predict_classes = false;
  auto* predict = app.add_subcommand("predict", "signature, splitting data and mu-ordinary polygons per class");
  predict->add_option("target", predict_target, "family key or datum m:a_1,...,a_N")->required();
  predict->add_flag("--classes", predict_classes, "print the coset data of every class");

  CurveOptions lp_opts;
  u64 lp_p = 0;
  bool lp_brute = false;
  auto* lpoly = app.add_subcommand("lpoly", "L-polynomial at one prime from character sums");
  lp_opts.add_to(lpoly, true);
  lpoly->add_option("--p", lp_p, "prime")->required();
  lpoly->add_flag("--brute", lp_brute, "also count points directly and compare");

  CurveOptions cl_opts;
  u64 cl_p = 0;
  auto* classify = app.add_subcommand("classify", "Newton polygon and a_p diagnostics at one prime");
  cl_opts.add_to(classify, true);
  classify->add_option("--p", cl_p, "prime")->required();

  std::string scan_config;
  auto* scan_cmd = app.add_subcommand("scan", "classify a range of primes");
  scan_cmd->add_option("--config", scan_config, "JSON configuration file")->required();

  CurveOptions wy_opts;
  std::optional<int> wy_class;
  auto* weyl_cmd = app.add_subcommand("weyl-check", "component trace functions and their nonconstancy");
  wy_opts.add_to(weyl_cmd, false);
  weyl_cmd->add_option("--class", wy_class, "residue of p mod m (default: every unit)");

  CurveOptions as_opts;
  auto* assumptions = app.add_subcommand("assumptions", "report the standing assumptions for a datum");
  as_opts.add_to(assumptions, false);

  CLI11_PARSE(app, argc, argv);
  try {
    if (*predict) return cmd_predict(predict_target, predict_classes);
    if (*lpoly) return cmd_lpoly(lp_opts, lp_p, lp_brute);
    if (*classify) return cmd_classify(cl_opts, cl_p);
    if (*scan_cmd) return cmd_scan(scan_config);
    if (*weyl_cmd) return cmd_weyl(wy_opts.family, wy_opts.datum, wy_class);
    if (*assumptions) return cmd_assumptions(as_opts.family, as_opts.datum);
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
