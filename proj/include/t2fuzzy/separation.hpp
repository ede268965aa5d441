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

// Executable counterexamples separating star from the convolution operations.
//
// Separation: with psi = 1 on [0, 3/4], 1/2 on (3/4, 1],
//   (psi star 1_{4/5})(4/5) = 0,
// while any conv_meet with min as the outer connective admits the pair
// y = z = 4/5, so its value at 4/5 is at least psi(4/5) * 1 = 1/2.
// The oracle value is a lower bound of the true sup, which is all the
// argument needs.
//
// Neutrality gap: conv_join with max does not have 1_{1} as neutral element,
// and conv_meet with min does not have 1_{0} as neutral element.

#include "t2fuzzy/convolution.hpp"
#include "t2fuzzy/fixtures.hpp"
#include "t2fuzzy/star.hpp"

#include <string>
#include <vector>

namespace t2fuzzy {

struct SeparationRow {
  std::string star;
  Rational star_value;                   // (psi star 1_{4/5})(4/5)
  std::optional<Rational> oracle_value;  // conv_meet at 4/5
  bool separated = false;
};

struct SeparationReport {
  std::vector<SeparationRow> rows;
  AxiomReport report{"separation"};
};

inline SeparationReport replicate_separation(const std::vector<ScalarConnective>& stars,
                                             const GridSpec& grid) {
  const Rational x = make_rational(4, 5);
  const Rational half = make_rational(1, 2);
  if (!grid.index_of(x))
    throw DomainError("grid 1/" + std::to_string(grid.resolution) + " does not contain 4/5");
  for (const auto& s : stars)
    if (s.profile != ConnectiveProfile::t_norm)
      throw DomainError("separation needs t-norms, got '" + s.name + "'");

  const PiecewiseFn psi = fixtures::psi();
  const PiecewiseFn spike = singleton(UnitScalar(x));
  const Rational star_value = star(psi, spike)(x);
  const auto tmin = connectives::minimum();

  SeparationReport out;
  for (const auto& s : stars) {
    SeparationRow row{s.name, star_value, convolve_meet_at(psi, spike, s, tmin, grid, x)};
    row.separated = row.oracle_value && *row.oracle_value >= half && star_value < *row.oracle_value;
    ++out.report.trials;
    if (!row.separated) {
      Witness w;
      w.inputs = {psi, spike};
      w.parameters = {x};
      w.lhs = "(psi star 1_{4/5})(4/5) = " + to_string(star_value);
      w.rhs = "(psi conv_meet 1_{4/5})(4/5) = " +
              (row.oracle_value ? to_string(*row.oracle_value) : std::string("undefined"));
      w.detail = "no strict gap for * = " + s.name;
      out.report.fail(std::move(w));
    }
    out.rows.push_back(std::move(row));
  }
  return out;
}

struct GapRow {
  std::string star;
  std::string check;
  Rational expected;                // value the neutral element would force
  std::optional<Rational> oracle;   // value the oracle computes
  bool gap = false;                 // the two differ
};

struct GapReport {
  std::vector<GapRow> rows;
  AxiomReport report{"neutrality-gap"};
};

/// Per * choice:
///   (f conv_join 1_{1})(0) for f(x) = x/2 + 1/2, against f(0) = 1/2;
///   (g conv_join 1_{1})(1/2) for g(x) = 1 - x, against g(1/2) = 1/2;
///   (1_{1/2} conv_meet 1_{0}) against 1_{1/2}, compared at every grid point,
///   with the dual of `tconorm` as the outer t-norm.
/// The first two use `tconorm` as the outer connective. The grid must
/// contain 1/2.
inline GapReport replicate_notnorm_conorm_gap(const ScalarConnective& tconorm,
                                              const std::vector<ScalarConnective>& stars,
                                              const GridSpec& grid) {
  if (tconorm.profile != ConnectiveProfile::t_conorm)
    throw DomainError("neutrality gap needs a t-conorm, got '" + tconorm.name + "'");
  const Rational zero(0), half = make_rational(1, 2);
  if (!grid.index_of(half))
    throw DomainError("grid 1/" + std::to_string(grid.resolution) + " does not contain 1/2");

  const auto tnorm = dual_connective(tconorm);
  const PiecewiseFn fz = fixtures::f_zeta(UnitScalar(half));
  const PiecewiseFn g = fixtures::one_minus_x();
  const PiecewiseFn at_half = singleton(UnitScalar(half));

  GapReport out;
  auto add = [&](GapRow row, std::vector<PiecewiseFn> inputs) {
    ++out.report.trials;
    if (!row.gap) {
      Witness w;
      w.inputs = std::move(inputs);
      w.lhs = row.oracle ? to_string(*row.oracle) : "undefined";
      w.rhs = to_string(row.expected);
      w.detail = row.check + " agrees with the neutral-element value for * = " + row.star;
      out.report.fail(std::move(w));
    }
    out.rows.push_back(std::move(row));
  };

  for (const auto& s : stars) {
    auto v0 = convolve_join_at(fz, unit_at_one(), s, tconorm, grid, zero);
    add({s.name, "(f_1/2 conv_join 1_{1})(0)", fz(zero), v0, v0 != std::optional(fz(zero))},
        {fz, unit_at_one()});

    auto v1 = convolve_join_at(g, unit_at_one(), s, tconorm, grid, half);
    add({s.name, "(1-x conv_join 1_{1})(1/2)", g(half), v1, v1 != std::optional(g(half))},
        {g, unit_at_one()});

    // Compare the whole grid function; report the value at 1/2.
    GridFn m = convolve_meet(at_half, unit_at_zero(), s, tnorm, grid);
    bool differs = false;
    for (std::size_t k = 0; k <= grid.resolution; ++k)
      differs |= m.values[k] != std::optional(at_half(m.x(k)));
    add({s.name, "(1_{1/2} conv_meet 1_{0})", Rational(1), m.at(half), differs},
        {at_half, unit_at_zero()});
  }
  return out;
}

}  // namespace t2fuzzy
