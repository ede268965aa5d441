// Copyright 2026 The t2fuzzy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON form of a PiecewiseFn:
//
//   {"breakpoints": [{"x": "0/1", "v": "1/1"}, ...],
//    "pieces":      [{"slope": "0/1", "intercept": "1/1"}, ...]}
//
// Rationals are written as "p/q" strings, so a write/read cycle is bit-exact.

#include "t2fuzzy/piecewise.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace t2fuzzy {

using Json = nlohmann::ordered_json;

inline Json to_json(const PiecewiseFn& f) {
  Json bps = Json::array();
  for (std::size_t i = 0; i < f.breakpoint_count(); ++i)
    bps.push_back({{"x", to_string(f.breakpoints()[i])}, {"v", to_string(f.values()[i])}});
  Json pieces = Json::array();
  for (const auto& p : f.pieces())
    pieces.push_back({{"slope", to_string(p.slope)}, {"intercept", to_string(p.intercept)}});
  return {{"breakpoints", std::move(bps)}, {"pieces", std::move(pieces)}};
}

namespace detail {

inline Rational rational_field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  const Json& v = obj.at(key);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ValidationError(std::string("field '") + key + "' must be a \"p/q\" string");
}

}  // namespace detail

/// Throws ValidationError on any schema or range problem.
inline PiecewiseFn from_json(const Json& j) {
  if (!j.is_object() || !j.contains("breakpoints") || !j.contains("pieces") ||
      !j.at("breakpoints").is_array() || !j.at("pieces").is_array())
    throw ValidationError("expected an object with 'breakpoints' and 'pieces' arrays");
  std::vector<Rational> xs, vs;
  std::vector<Affine> ps;
  for (const auto& bp : j.at("breakpoints")) {
    xs.push_back(detail::rational_field(bp, "x"));
    vs.push_back(detail::rational_field(bp, "v"));
  }
  for (const auto& p : j.at("pieces"))
    ps.push_back({detail::rational_field(p, "slope"), detail::rational_field(p, "intercept")});
  return PiecewiseFn(std::move(xs), std::move(vs), std::move(ps));
}

inline std::string dump_function(const PiecewiseFn& f, int indent = 2) {
  return to_json(f).dump(indent);
}

inline PiecewiseFn parse_function(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline PiecewiseFn load_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str());
}

inline void save_function(const PiecewiseFn& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << dump_function(f) << '\n';
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace t2fuzzy
