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
#include "muord/newton.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace muord {

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

const char* const kOplus = " ⊕ ";

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(text));
  return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<Slope> slopes) {
  std::map<Rational, int> merged;
  for (const auto& s : slopes) {
    if (s.mult < 0) throw InvalidInput("NewtonPolygon: negative multiplicity");
    if (s.mult > 0) merged[s.value] += s.mult;
  }
  for (const auto& [value, mult] : merged) slopes_.push_back({value, mult});
}

int NewtonPolygon::total_multiplicity() const {
  int total = 0;
  for (const auto& s : slopes_) total += s.mult;
  return total;
}

Rational NewtonPolygon::total_rise() const {
  Rational rise = 0;
  for (const auto& s : slopes_) rise += s.value * s.mult;
  return rise;
}

int NewtonPolygon::multiplicity_of(const Rational& v) const {
  for (const auto& s : slopes_) {
    if (s.value == v) return s.mult;
  }
  return 0;
}

Rational NewtonPolygon::smallest_slope() const {
  if (slopes_.empty()) throw InvalidInput("NewtonPolygon: empty polygon has no slopes");
  return slopes_.front().value;
}

bool NewtonPolygon::is_symmetric() const {
  for (const auto& s : slopes_) {
    if (multiplicity_of(Rational(1) - s.value) != s.mult) return false;
  }
  return true;
}

bool NewtonPolygon::is_ordinary() const {
  for (const auto& s : slopes_) {
    if (s.value != Rational(0) && s.value != Rational(1)) return false;
  }
  return true;
}

Rational NewtonPolygon::height_at(int x) const {
  Rational h = 0;
  int used = 0;
  for (const auto& s : slopes_) {
    const int take = std::min(s.mult, x - used);
    if (take <= 0) break;
    h += s.value * take;
    used += take;
  }
  if (used < x) throw InvalidInput("NewtonPolygon: abscissa beyond the polygon");
  return h;
}

NewtonPolygon NewtonPolygon::operator+(const NewtonPolygon& o) const {
  std::vector<Slope> all = slopes_;
  all.insert(all.end(), o.slopes_.begin(), o.slopes_.end());
  return NewtonPolygon(std::move(all));
}

std::string NewtonPolygon::to_string() const {
  std::string out;
  for (size_t i = 0; i < slopes_.size(); ++i) {
    if (i) out += kOplus;
    out += rational_text(slopes_[i].value) + "^" + std::to_string(slopes_[i].mult);
  }
  return out;
}

NewtonPolygon NewtonPolygon::from_string(const std::string& text) {
  std::vector<Slope> slopes;
  std::string rest = text;
  const std::string sep = kOplus;
  while (!rest.empty()) {
    const auto pos = rest.find(sep);
    const std::string term = rest.substr(0, pos);
    const auto caret = term.find('^');
    if (caret == std::string::npos) throw InvalidInput("NewtonPolygon::from_string: missing multiplicity");
    slopes.push_back({parse_rational(term.substr(0, caret)), std::stoi(term.substr(caret + 1))});
    if (pos == std::string::npos) break;
    rest = rest.substr(pos + sep.size());
  }
  return NewtonPolygon(std::move(slopes));
}

std::string NewtonPolygon::to_json() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < slopes_.size(); ++i) {
    os << (i ? "," : "") << "[" << slopes_[i].value.numerator() << "," << slopes_[i].value.denominator() << ","
       << slopes_[i].mult << "]";
  }
  os << "]";
  return os.str();
}

NewtonPolygon mu_ordinary_piece(const Signature& sig, const SplittingDatum& split, int P) {
  const auto& coset = split.cosets.at(P);
  const int f = split.f;
  std::vector<Slope> slopes;
  for (int j = 1; j <= sig.n; ++j) {
    int count = 0;
    for (int k : coset) count += sig.at(k) > sig.n - j ? 1 : 0;
    slopes.push_back({Rational(count, f), f});
  }
  return NewtonPolygon(std::move(slopes));
}

NewtonPolygon mu_ordinary_polygon(const Signature& sig, const SplittingDatum& split) {
  NewtonPolygon total;
  for (size_t P = 0; P < split.cosets.size(); ++P) total = total + mu_ordinary_piece(sig, split, static_cast<int>(P));
  return total;
}

NewtonPolygon polygon_from_valuations(const std::vector<ValuationPoint>& points, int f) {
  using Kind = ValuationPoint::Kind;
  std::vector<std::pair<i64, i64>> known;
  int last = 0;
  for (const auto& pt : points) {
    last = std::max(last, pt.i);
    if (pt.kind == Kind::Finite) known.emplace_back(pt.i, pt.v);
  }
  std::sort(known.begin(), known.end());
  if (known.empty() || known.front().first != 0) throw InvalidInput("polygon_from_valuations: need the point at index 0");
  if (known.back().first != last) throw InvalidInput("polygon_from_valuations: final index must be finite");

  // Andrew's monotone chain, lower part.
  std::vector<std::pair<i64, i64>> hull;
  for (const auto& pt : known) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const i64 cross = (b.first - a.first) * (pt.second - a.second) - (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  auto hull_height = [&hull](i64 x) {
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
      const auto& a = hull[k];
      const auto& b = hull[k + 1];
      if (x >= a.first && x <= b.first) {
        return Rational(a.second) + Rational((b.second - a.second) * (x - a.first), b.first - a.first);
      }
    }
    return Rational(hull.back().second);
  };
  for (const auto& pt : points) {
    if (pt.kind != Kind::AtLeast) continue;
    if (!(Rational(pt.v) > hull_height(pt.i))) {
      throw PrecisionInsufficient("polygon_from_valuations: a valuation known only as >= " + std::to_string(pt.v) +
                                  " at index " + std::to_string(pt.i) + " could lower the hull");
    }
  }
  std::vector<Slope> slopes;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    const i64 run = hull[k + 1].first - hull[k].first;
    const Rational slope(hull[k + 1].second - hull[k].second, run * f);
    if (slope < 0 || slope > 1) {
      throw Error("polygon_from_valuations: slope " + rational_text(slope) + " lies outside [0, 1]");
    }
    slopes.push_back({slope, static_cast<int>(run * f)});
  }
  return NewtonPolygon(std::move(slopes));
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::Equal: return "equal";
    case Comparison::Above: return "above";
    case Comparison::Below: return "below";
    case Comparison::Incomparable: return "incomparable";
  }
  return "?";
}

Comparison compare(const NewtonPolygon& nu, const NewtonPolygon& mu) {
  const int total = nu.total_multiplicity();
  if (total != mu.total_multiplicity() || nu.total_rise() != mu.total_rise()) {
    throw InvalidInput("compare: polygons do not share endpoints");
  }
  bool some_above = false, some_below = false;
  for (int x = 1; x < total; ++x) {
    const Rational a = nu.height_at(x), b = mu.height_at(x);
    if (a > b) some_above = true;
    if (a < b) some_below = true;
  }
  if (some_above && some_below) return Comparison::Incomparable;
  if (some_above) return Comparison::Above;
  if (some_below) return Comparison::Below;
  return Comparison::Equal;
}

Rational smallest_slope_target(const SplittingDatum& split) {
  if (split.P1_star < 0) throw InvalidInput("smallest_slope_target: splitting datum carries no CM type");
  if (split.K_in_F0) return Rational(1, 2) - Rational(1, split.f);
  return Rational(split.aP.at(split.P1_star) - 1, split.f);
}

bool smallest_slope_test(const NewtonPolygon& piece, const SplittingDatum& split) {
  return piece.smallest_slope() == smallest_slope_target(split);
}

NewtonPolygon basic_polygon_degree5(u64 p) {
  if (p % 5 == 1) return NewtonPolygon({{0, 2}, {Rational(1, 2), 4}, {1, 2}});
  return NewtonPolygon({{Rational(1, 2), 8}});
}

}  // namespace muord
