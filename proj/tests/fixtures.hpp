// Loading of the frozen oracle files produced by oracles/generate.py.
#ifndef MUORD_TEST_FIXTURES_HPP
#define MUORD_TEST_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "muord/common.hpp"
#include "muord/newton.hpp"

namespace fixtures {

inline nlohmann::json load(const std::string& name) {
  std::ifstream in(std::string(MUORD_ORACLE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing oracle file " + name);
  return nlohmann::json::parse(in);
}

inline std::vector<muord::Integer> integers(const nlohmann::json& arr) {
  std::vector<muord::Integer> out;
  for (const auto& x : arr) out.emplace_back(x.get<std::string>());
  return out;
}

inline muord::NewtonPolygon polygon(const nlohmann::json& arr) {
  std::vector<muord::Slope> slopes;
  for (const auto& s : arr) {
    slopes.push_back({muord::Rational(s[0].get<muord::i64>(), s[1].get<muord::i64>()), s[2].get<int>()});
  }
  return muord::NewtonPolygon(slopes);
}

}  // namespace fixtures

#endif
