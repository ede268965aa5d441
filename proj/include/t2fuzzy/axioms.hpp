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

// Falsification checks for the restrictive t_r-norm / t_r-conorm axioms on L.
//
//   O1  commutativity           op(f, g) = op(g, f)
//   O2  associativity           op(f, op(g, h)) = op(op(f, g), h)
//   O3  neutral 1_{1}           op(f, 1_{1}) = f          (O3': 1_{0})
//   O4  monotonicity            f ⊑ g  =>  op(f, h) ⊑ op(g, h)
//   O5  op(1_[0,1], 1_[a,b]) = 1_[0,b]                    (O5': 1_[a,1])
//   O6  op(1_{x1}, 1_{x2}) is a singleton indicator
//   O7  op(1_[a1,b1], 1_[a2,b2]) is an interval indicator
//
// plus "closure": op maps L x L into L. The quantified axioms are sampled:
// random members of L with fixtures mixed in for O1-O4, and exhaustive
// parameter lattices {k/D} for O5-O7. Passing is evidence, not proof.
//
// A failing axiom keeps the first violating case, shrunk by dropping
// breakpoints and snapping coordinates to coarser denominators while the
// failure persists.

#include "t2fuzzy/generator.hpp"
#include "t2fuzzy/report.hpp"
#include "t2fuzzy/star.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace t2fuzzy {

enum class TrKind { norm, conorm };

inline const char* to_string(TrKind kind) { return kind == TrKind::norm ? "tr-norm" : "tr-conorm"; }

inline std::optional<TrKind> parse_tr_kind(std::string_view text) {
  if (text == "tr-norm") return TrKind::norm;
  if (text == "tr-conorm") return TrKind::conorm;
  return std::nullopt;
}

struct TrialBudget {
  std::size_t pairs = 200;
  std::size_t triples = 100;
  std::size_t neutral = 100;
  std::size_t monotone = 100;
  long long lattice_denominator = 16;
  bool shrink = true;
};

inline std::vector<std::string> tr_axiom_ids(TrKind kind) {
  if (kind == TrKind::norm) return {"O1", "O2", "O3", "O4", "O5", "O6", "O7", "closure"};
  return {"O1", "O2", "O3'", "O4", "O5'", "O6", "O7", "closure"};
}

/// Bounds [a, b] when f is the indicator of a closed interval.
inline std::optional<std::pair<Rational, Rational>> indicator_bounds(const PiecewiseFn& f) {
  auto a = level_set_inf(f, Rational(1));
  auto b = level_set_sup(f, Rational(1));
  if (!a || !b) return std::nullopt;
  if (!equals(f, indicator(UnitScalar(*a), UnitScalar(*b)))) return std::nullopt;
  return std::make_pair(*a, *b);
}

namespace detail {

inline Witness function_witness(const std::vector<PiecewiseFn>& inputs,
                                const std::vector<Rational>& params, const PiecewiseFn& lhs,
                                const PiecewiseFn& rhs, const std::string& relation) {
  Witness w;
  w.inputs = inputs;
  w.parameters = params;
  w.lhs = to_string(lhs);
  w.rhs = to_string(rhs);
  if (auto x = first_difference(lhs, rhs))
    w.detail = relation + " fails; at x = " + to_string(*x) + " lhs = " + to_string(lhs(*x)) +
               ", rhs = " + to_string(rhs(*x));
  else
    w.detail = relation + " fails";
  return w;
}

inline std::optional<Witness> require_equal(const std::vector<PiecewiseFn>& inputs,
                                            const std::vector<Rational>& params,
                                            const PiecewiseFn& lhs, const PiecewiseFn& rhs) {
  if (equals(lhs, rhs)) return std::nullopt;
  return function_witness(inputs, params, lhs, rhs, "equality");
}

inline std::optional<Witness> require_member(const std::vector<PiecewiseFn>& inputs,
                                             const std::vector<Rational>& params,
                                             const PiecewiseFn& result, bool ok,
                                             const std::string& set) {
  if (ok) return std::nullopt;
  Witness w;
  w.inputs = inputs;
  w.parameters = params;
  w.lhs = to_string(result);
  w.rhs = "a member of " + set;
  w.detail = "result is not in " + set;
  return w;
}

inline std::optional<Witness> check_case_unguarded(const TruthValueOp& op, TrKind kind,
                                                   std::string_view axiom,
                                                   const std::vector<PiecewiseFn>& in,
                                                   const std::vector<Rational>& p) {
  if (axiom == "O1") {
    return require_equal(in, p, op(in[0], in[1]), op(in[1], in[0]));
  }
  if (axiom == "O2") {
    return require_equal(in, p, op(in[0], op(in[1], in[2])), op(op(in[0], in[1]), in[2]));
  }
  if (axiom == "O3" || axiom == "O3'") {
    const PiecewiseFn& e = axiom == "O3" ? unit_at_one() : unit_at_zero();
    return require_equal(in, p, op(in[0], e), in[0]);
  }
  if (axiom == "O4") {
    PiecewiseFn lhs = op(in[0], in[2]);
    PiecewiseFn rhs = op(in[1], in[2]);
    if (leq_sub(lhs, rhs)) return std::nullopt;
    return function_witness(in, p, lhs, rhs, "lhs ⊑ rhs");
  }
  if (axiom == "O5" || axiom == "O5'") {
    std::vector<PiecewiseFn> args{indicator(UnitScalar::zero(), UnitScalar::one()),
                                  indicator(UnitScalar(p[0]), UnitScalar(p[1]))};
    PiecewiseFn expected = axiom == "O5" ? indicator(UnitScalar::zero(), UnitScalar(p[1]))
                                         : indicator(UnitScalar(p[0]), UnitScalar::one());
    return require_equal(args, p, op(args[0], args[1]), expected);
  }
  if (axiom == "O6") {
    std::vector<PiecewiseFn> args{singleton(UnitScalar(p[0])), singleton(UnitScalar(p[1]))};
    PiecewiseFn r = op(args[0], args[1]);
    auto b = indicator_bounds(r);
    return require_member(args, p, r, b && b->first == b->second, "J");
  }
  if (axiom == "O7") {
    std::vector<PiecewiseFn> args{indicator(UnitScalar(p[0]), UnitScalar(p[1])),
                                  indicator(UnitScalar(p[2]), UnitScalar(p[3]))};
    PiecewiseFn r = op(args[0], args[1]);
    return require_member(args, p, r, indicator_bounds(r).has_value(), "K");
  }
  if (axiom == "closure") {
    PiecewiseFn r = op(in[0], in[1]);
    return require_member(in, p, r, is_normal_convex(r), "L");
  }
  (void)kind;
  return std::nullopt;
}

// (function count, parameter count) of a case, or nullopt for unknown ids.
using CaseShape = std::pair<std::size_t, std::size_t>;

inline std::optional<CaseShape> case_shape(std::string_view axiom) {
  if (axiom == "O1" || axiom == "closure") return CaseShape(2, 0);
  if (axiom == "O2" || axiom == "O4") return CaseShape(3, 0);
  if (axiom == "O3" || axiom == "O3'") return CaseShape(1, 0);
  if (axiom == "O5" || axiom == "O5'" || axiom == "O6") return CaseShape(0, 2);
  if (axiom == "O7") return CaseShape(0, 4);
  return std::nullopt;
}

}  // namespace detail

/// Checks one case. For O5-O7 the inputs are rebuilt from the parameters
/// (a, b), (x1, x2), (a1, b1, a2, b2); the other axioms take functions only.
/// An exception thrown by op counts as a failure of the case.
inline std::optional<Witness> check_tr_case(const TruthValueOp& op, TrKind kind,
                                            std::string_view axiom,
                                            const std::vector<PiecewiseFn>& inputs,
                                            const std::vector<Rational>& params) {
  auto shape = detail::case_shape(axiom);
  if (!shape) throw std::invalid_argument("unknown axiom '" + std::string(axiom) + "'");
  if (inputs.size() != shape->first || params.size() != shape->second)
    throw std::invalid_argument("wrong arity for axiom " + std::string(axiom));
  try {
    return detail::check_case_unguarded(op, kind, axiom, inputs, params);
  } catch (const std::exception& e) {
    Witness w;
    w.inputs = inputs;
    w.parameters = params;
    w.lhs = "exception";
    w.rhs = "a value";
    w.detail = op.name + " threw: " + e.what();
    return w;
  }
}

/// Re-runs the recorded witness of a failing report.
inline std::optional<Witness> replay(const TruthValueOp& op, TrKind kind,
                                     const AxiomReport& report) {
  if (!report.witness) return std::nullopt;
  const Witness& w = *report.witness;
  const bool lattice = report.axiom == "O5" || report.axiom == "O5'" || report.axiom == "O6" ||
                       report.axiom == "O7";
  return check_tr_case(op, kind, report.axiom, lattice ? std::vector<PiecewiseFn>{} : w.inputs,
                       w.parameters);
}

namespace detail {

inline Rational snap(const Rational& x, long long d) {
  return Rational(floor_of(x * d + make_rational(1, 2))) / d;
}

inline std::optional<PiecewiseFn> drop_breakpoint(const PiecewiseFn& f, std::size_t i) {
  const auto& xs = f.breakpoints();
  if (i == 0 || i + 1 >= xs.size()) return std::nullopt;
  std::vector<Rational> nx, nv;
  std::vector<Affine> np;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k == i) continue;
    nx.push_back(xs[k]);
    nv.push_back(f.values()[k]);
  }
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    if (k == i - 1) {
      np.push_back(Affine::through(xs[i - 1], f.right_limit(i - 1), xs[i + 1],
                                   f.left_limit(i + 1)));
    } else if (k != i) {
      np.push_back(f.pieces()[k]);
    }
  }
  return canonicalize(PiecewiseFn(std::move(nx), std::move(nv), std::move(np)));
}

inline std::optional<PiecewiseFn> snap_function(const PiecewiseFn& f, long long d) {
  const std::size_t n = f.breakpoint_count();
  std::vector<Rational> nx, nv;
  std::vector<Affine> np;
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = snap(f.breakpoints()[i], d);
    if (!nx.empty() && !(nx.back() < x)) return std::nullopt;
    nx.push_back(x);
    nv.push_back(snap(f.values()[i], d));
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    np.push_back(Affine::through(nx[i], snap(f.right_limit(i), d), nx[i + 1],
                                 snap(f.left_limit(i + 1), d)));
  PiecewiseFn out = canonicalize(PiecewiseFn(std::move(nx), std::move(nv), std::move(np)));
  if (equals(out, f)) return std::nullopt;
  return out;
}

inline std::vector<PiecewiseFn> simplifications(const PiecewiseFn& f) {
  std::vector<PiecewiseFn> out;
  for (long long d : {1LL, 2LL, 4LL, 8LL, 16LL, 32LL})
    if (auto s = snap_function(f, d)) out.push_back(std::move(*s));
  for (std::size_t i = 1; i + 1 < f.breakpoint_count(); ++i)
    if (auto s = drop_breakpoint(f, i)) out.push_back(std::move(*s));
  return out;
}

}  // namespace detail

/// Simplifies the function inputs of a failing case while it keeps failing.
/// Candidates stay in L, and for O4 keep the first input ⊑ the second.
inline Witness shrink_witness(const TruthValueOp& op, TrKind kind, std::string_view axiom,
                              Witness witness, std::size_t max_steps = 200) {
  std::size_t steps = 0;
  bool progress = true;
  while (progress && steps < max_steps) {
    progress = false;
    for (std::size_t i = 0; i < witness.inputs.size() && !progress; ++i) {
      for (auto& candidate : detail::simplifications(witness.inputs[i])) {
        if (++steps > max_steps) break;
        if (!is_normal_convex(candidate)) continue;
        std::vector<PiecewiseFn> trial = witness.inputs;
        trial[i] = std::move(candidate);
        if (axiom == "O4" && !leq_sub(trial[0], trial[1])) continue;
        if (auto w = check_tr_case(op, kind, axiom, trial, witness.parameters)) {
          witness = std::move(*w);
          progress = true;
          break;
        }
      }
    }
  }
  return witness;
}

/// Runs every axiom of `kind` against op and returns one report per axiom,
/// in the order of tr_axiom_ids(kind).
inline std::vector<AxiomReport> check_tr_axioms(const TruthValueOp& op, TrKind kind,
                                                const GeneratorConfig& config,
                                                const TrialBudget& budget = {}) {
  std::vector<AxiomReport> reports;
  std::size_t stream = 0;
  // Each axiom draws from its own stream so early exits elsewhere never
  // shift its samples.
  auto generator = [&] {
    GeneratorConfig c = config;
    c.seed = config.seed + 0x9E3779B97F4A7C15ULL * ++stream;
    return FunctionGenerator(c);
  };
  auto record = [&](AxiomReport& r, std::optional<Witness> w) {
    ++r.trials;
    if (!w) return;
    r.fail(budget.shrink ? shrink_witness(op, kind, r.axiom, std::move(*w)) : std::move(*w));
  };
  auto functions = [&](const std::string& id, std::size_t count, std::size_t arity) {
    AxiomReport r{id};
    FunctionGenerator gen = generator();
    for (std::size_t t = 0; t < count && r.passed; ++t) {
      std::vector<PiecewiseFn> in;
      for (std::size_t k = 0; k < arity; ++k) in.push_back(gen.normal_convex());
      record(r, check_tr_case(op, kind, id, in, {}));
    }
    return r;
  };

  const std::string neutral_id = kind == TrKind::norm ? "O3" : "O3'";
  const std::string boundary_id = kind == TrKind::norm ? "O5" : "O5'";

  reports.push_back(functions("O1", budget.pairs, 2));
  reports.push_back(functions("O2", budget.triples, 3));

  {
    AxiomReport r{neutral_id};
    const Rational half = make_rational(1, 2);
    std::vector<PiecewiseFn> seeds = {
        fixtures::one_minus_x(),
        fixtures::psi(),
        fixtures::f_zeta(UnitScalar(half)),
        fixtures::identity(),
        indicator(UnitScalar::zero(), UnitScalar::one()),
        singleton(UnitScalar(half)),
        indicator(UnitScalar(make_rational(1, 5)), UnitScalar(make_rational(3, 5))),
        unit_at_one(),
        unit_at_zero(),
    };
    FunctionGenerator gen = generator();
    for (std::size_t t = 0; t < budget.neutral && r.passed; ++t)
      record(r, check_tr_case(op, kind, neutral_id,
                              {t < seeds.size() ? seeds[t] : gen.normal_convex()}, {}));
    reports.push_back(std::move(r));
  }

  {
    // f = g meet k is the greatest lower bound of g and k in L, so f ⊑ g.
    AxiomReport r{"O4"};
    FunctionGenerator gen = generator();
    for (std::size_t t = 0; t < budget.monotone && r.passed; ++t) {
      PiecewiseFn g = gen.normal_convex();
      PiecewiseFn h = gen.normal_convex();
      PiecewiseFn f = t % 10 == 0 ? g : t % 10 == 1 ? unit_at_zero()
                                                    : meet(g, gen.normal_convex());
      if (!leq_sub(f, g)) throw std::logic_error("O4 generator produced an incomparable pair");
      record(r, check_tr_case(op, kind, "O4", {f, g, h}, {}));
    }
    reports.push_back(std::move(r));
  }

  const long long D = budget.lattice_denominator;
  std::vector<Rational> grid;
  for (long long k = 0; k <= D; ++k) grid.push_back(make_rational(k, D));

  {
    AxiomReport r{boundary_id};
    for (std::size_t i = 0; i < grid.size() && r.passed; ++i)
      for (std::size_t j = i; j < grid.size() && r.passed; ++j)
        record(r, check_tr_case(op, kind, boundary_id, {}, {grid[i], grid[j]}));
    reports.push_back(std::move(r));
  }
  {
    AxiomReport r{"O6"};
    for (std::size_t i = 0; i < grid.size() && r.passed; ++i)
      for (std::size_t j = 0; j < grid.size() && r.passed; ++j)
        record(r, check_tr_case(op, kind, "O6", {}, {grid[i], grid[j]}));
    reports.push_back(std::move(r));
  }
  {
    AxiomReport r{"O7"};
    std::vector<std::pair<Rational, Rational>> intervals;
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (std::size_t j = i; j < grid.size(); ++j) intervals.emplace_back(grid[i], grid[j]);
    for (std::size_t i = 0; i < intervals.size() && r.passed; ++i)
      for (std::size_t j = 0; j < intervals.size() && r.passed; ++j)
        record(r, check_tr_case(op, kind, "O7", {},
                                {intervals[i].first, intervals[i].second, intervals[j].first,
                                 intervals[j].second}));
    reports.push_back(std::move(r));
  }

  reports.push_back(functions("closure", budget.pairs, 2));
  return reports;
}

}  // namespace t2fuzzy
