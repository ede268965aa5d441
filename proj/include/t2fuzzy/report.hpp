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

#include "t2fuzzy/serialization.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace t2fuzzy {

/// The inputs that broke an axiom and the two sides that should have agreed.
struct Witness {
  std::vector<PiecewiseFn> inputs;
  std::vector<Rational> parameters;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

/// Outcome of checking one axiom or property.
struct AxiomReport {
  std::string axiom;
  bool passed = true;
  std::size_t trials = 0;
  std::optional<Witness> witness;

  void fail(Witness w) {
    if (passed) witness = std::move(w);
    passed = false;
  }
};

inline bool all_passed(const std::vector<AxiomReport>& reports) {
  for (const auto& r : reports)
    if (!r.passed) return false;
  return true;
}

inline Json to_json(const Witness& w) {
  Json inputs = Json::array();
  for (const auto& f : w.inputs) inputs.push_back(to_json(f));
  Json params = Json::array();
  for (const auto& p : w.parameters) params.push_back(to_string(p));
  return {{"inputs", std::move(inputs)}, {"parameters", std::move(params)},
          {"lhs", w.lhs},          {"rhs", w.rhs},
          {"detail", w.detail}};
}

inline Json to_json(const AxiomReport& r) {
  Json j = {{"axiom", r.axiom}, {"status", r.passed ? "pass" : "fail"}, {"trials", r.trials}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

inline Json to_json(const std::vector<AxiomReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

/// Fixed-width text table; witnesses are printed under their failing row.
inline std::string format_table(const std::vector<AxiomReport>& reports) {
  std::string out;
  char line[160];
  std::snprintf(line, sizeof line, "%-14s %-6s %8s\n", "axiom", "status", "trials");
  out += line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-14s %-6s %8zu\n", r.axiom.c_str(),
                  r.passed ? "pass" : "FAIL", r.trials);
    out += line;
    if (r.witness) {
      const Witness& w = *r.witness;
      for (std::size_t i = 0; i < w.inputs.size(); ++i)
        out += "    input[" + std::to_string(i) + "] = " + dump_function(w.inputs[i], -1) + "\n";
      if (!w.parameters.empty()) {
        out += "    parameters =";
        for (const auto& p : w.parameters) out += " " + to_string(p);
        out += "\n";
      }
      out += "    lhs = " + w.lhs + "\n";
      out += "    rhs = " + w.rhs + "\n";
      if (!w.detail.empty()) out += "    " + w.detail + "\n";
    }
  }
  return out;
}

}  // namespace t2fuzzy
