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

// Brute-force sup-convolution on a rational grid:
//
//   (f conv_meet g)(x) = sup{ f(y) * g(z) : y tnorm z = x }
//   (f conv_join g)(x) = sup{ f(y) * g(z) : y tconorm z = x }
//
// Results are reported at x = k/n. Candidate arguments y, z range over the
// half-step lattice {j/(2n)}, so every open interval between grid points is
// sampled once; for piecewise-constant inputs with breakpoints on the grid
// this makes the min/max cases exact. When the inner connective is min (resp.
// max) the solution set is enumerated exactly; for other connectives a pair
// counts for x when |y tnorm z - x| <= tolerance.

#include "t2fuzzy/connectives.hpp"
#include "t2fuzzy/piecewise.hpp"

#include <optional>
#include <string>
#include <vector>

namespace t2fuzzy {

struct GridSpec {
  std::size_t resolution = 200;
  Rational tolerance;

  /// Tolerance defaults to half a grid step.
  static GridSpec make(std::size_t n) {
    if (n < 2) throw DomainError("grid resolution must be at least 2");
    return {n, make_rational(1, 2 * static_cast<long long>(n))};
  }
  static GridSpec make(std::size_t n, Rational tolerance) {
    if (n < 2) throw DomainError("grid resolution must be at least 2");
    if (tolerance < 0) throw DomainError("grid tolerance must be nonnegative");
    return {n, std::move(tolerance)};
  }

  Rational point(std::size_t k) const {
    return make_rational(static_cast<long long>(k), static_cast<long long>(resolution));
  }
  /// Index of x on the grid, if x is a grid point.
  std::optional<std::size_t> index_of(const Rational& x) const {
    Rational scaled = x * static_cast<long long>(resolution);
    if (denominator_of(scaled) != 1 || x < 0 || x > 1) return std::nullopt;
    return static_cast<std::size_t>(numerator_of(scaled).convert_to<long long>());
  }
};

/// Values at k/n; points whose constraint set is empty are undefined.
struct GridFn {
  std::size_t resolution = 0;
  std::vector<std::optional<Rational>> values;

  Rational x(std::size_t k) const {
    return make_rational(static_cast<long long>(k), static_cast<long long>(resolution));
  }
  bool defined(std::size_t k) const { return values[k].has_value(); }

  /// Value at a grid point; throws DomainError if x is off-grid.
  const std::optional<Rational>& at(const Rational& x) const {
    Rational scaled = x * static_cast<long long>(resolution);
    if (denominator_of(scaled) != 1 || x < 0 || x > 1)
      throw DomainError(to_string(x) + " is not a point of the 1/" +
                        std::to_string(resolution) + " grid");
    return values[static_cast<std::size_t>(numerator_of(scaled).convert_to<long long>())];
  }

  /// "x,value,defined" rows; undefined points carry an empty value.
  std::string to_csv(bool decimal = false) const {
    std::string out = "x,value,defined\n";
    auto render = [decimal](const Rational& r) { return decimal ? to_decimal(r) : to_string(r); };
    for (std::size_t k = 0; k < values.size(); ++k) {
      out += render(x(k)) + ",";
      if (values[k]) out += render(*values[k]);
      out += values[k] ? ",1\n" : ",0\n";
    }
    return out;
  }
};

namespace detail {

enum class ConvolutionSide { meet, join };

class GridConvolver {
 public:
  GridConvolver(const PiecewiseFn& f, const PiecewiseFn& g, const ScalarConnective& star,
                const ScalarConnective& outer, const GridSpec& grid, ConvolutionSide side)
      : star_(star), outer_(outer), grid_(grid), side_(side) {
    if (grid.resolution < 2) throw DomainError("grid resolution must be at least 2");
    if (side == ConvolutionSide::meet && outer.profile != ConnectiveProfile::t_norm)
      throw DomainError("conv-meet needs a t-norm, got '" + outer.name + "'");
    if (side == ConvolutionSide::join && outer.profile != ConnectiveProfile::t_conorm)
      throw DomainError("conv-join needs a t-conorm, got '" + outer.name + "'");
    exact_ = (side == ConvolutionSide::meet && outer.role == LatticeRole::minimum) ||
             (side == ConvolutionSide::join && outer.role == LatticeRole::maximum);
    if (!exact_ && grid.tolerance == 0)
      throw DomainError("zero tolerance is only allowed when the solution set is exact");
    const std::size_t m = 2 * grid.resolution;
    lattice_.reserve(m + 1);
    for (std::size_t j = 0; j <= m; ++j)
      lattice_.push_back(make_rational(static_cast<long long>(j), static_cast<long long>(m)));
    fv_.reserve(m + 1);
    gv_.reserve(m + 1);
    for (const auto& t : lattice_) {
      fv_.push_back(f(t));
      gv_.push_back(g(t));
    }
  }

  bool exact() const { return exact_; }

  std::optional<Rational> at(std::size_t k) const {
    const std::size_t j = 2 * k;
    const std::size_t m = lattice_.size() - 1;
    std::optional<Rational> best;
    auto offer = [&best](Rational v) {
      if (!best || *best < v) best = std::move(v);
    };
    if (exact_) {
      // y min z = x: one argument equals x, the other is >= x (<= x for max).
      std::size_t lo = side_ == ConvolutionSide::meet ? j : 0;
      std::size_t hi = side_ == ConvolutionSide::meet ? m : j;
      for (std::size_t i = lo; i <= hi; ++i) {
        offer(star_(fv_[j], gv_[i]));
        offer(star_(fv_[i], gv_[j]));
      }
      return best;
    }
    const Rational x = grid_.point(k);
    for (std::size_t a = 0; a <= m; ++a)
      for (std::size_t b = 0; b <= m; ++b) {
        Rational t = outer_(lattice_[a], lattice_[b]);
        if (abs(t - x) <= grid_.tolerance) offer(star_(fv_[a], gv_[b]));
      }
    return best;
  }

  GridFn all() const {
    GridFn out{grid_.resolution, std::vector<std::optional<Rational>>(grid_.resolution + 1)};
    if (exact_) {
      for (std::size_t k = 0; k <= grid_.resolution; ++k) out.values[k] = at(k);
    } else {
      // One pass over all pairs, distributing each to the grid points in band.
      const std::size_t m = lattice_.size() - 1;
      const long long n = static_cast<long long>(grid_.resolution);
      for (std::size_t a = 0; a <= m; ++a)
        for (std::size_t b = 0; b <= m; ++b) {
          Rational t = outer_(lattice_[a], lattice_[b]);
          long long lo = ceil_of((t - grid_.tolerance) * n).convert_to<long long>();
          long long hi = floor_of((t + grid_.tolerance) * n).convert_to<long long>();
          if (lo < 0) lo = 0;
          if (hi > n) hi = n;
          if (lo > hi) continue;
          Rational v = star_(fv_[a], gv_[b]);
          for (long long k = lo; k <= hi; ++k) {
            auto& slot = out.values[static_cast<std::size_t>(k)];
            if (!slot || *slot < v) slot = v;
          }
        }
    }
    bool any = false;
    for (const auto& v : out.values) any |= v.has_value();
    if (!any) throw DomainError("constraint set is empty at every grid point");
    return out;
  }

 private:
  const ScalarConnective& star_;
  const ScalarConnective& outer_;
  GridSpec grid_;
  ConvolutionSide side_;
  bool exact_ = false;
  std::vector<Rational> lattice_;
  std::vector<Rational> fv_;
  std::vector<Rational> gv_;
};

}  // namespace detail

inline GridFn convolve_meet(const PiecewiseFn& f, const PiecewiseFn& g,
                            const ScalarConnective& star, const ScalarConnective& tnorm,
                            const GridSpec& grid) {
  return detail::GridConvolver(f, g, star, tnorm, grid, detail::ConvolutionSide::meet).all();
}

inline GridFn convolve_join(const PiecewiseFn& f, const PiecewiseFn& g,
                            const ScalarConnective& star, const ScalarConnective& tconorm,
                            const GridSpec& grid) {
  return detail::GridConvolver(f, g, star, tconorm, grid, detail::ConvolutionSide::join).all();
}

/// Single grid point of convolve_meet; x must lie on the grid.
inline std::optional<Rational> convolve_meet_at(const PiecewiseFn& f, const PiecewiseFn& g,
                                                const ScalarConnective& star,
                                                const ScalarConnective& tnorm,
                                                const GridSpec& grid, const Rational& x) {
  auto k = grid.index_of(x);
  if (!k) throw DomainError(to_string(x) + " is not a grid point");
  return detail::GridConvolver(f, g, star, tnorm, grid, detail::ConvolutionSide::meet).at(*k);
}

inline std::optional<Rational> convolve_join_at(const PiecewiseFn& f, const PiecewiseFn& g,
                                                const ScalarConnective& star,
                                                const ScalarConnective& tconorm,
                                                const GridSpec& grid, const Rational& x) {
  auto k = grid.index_of(x);
  if (!k) throw DomainError(to_string(x) + " is not a grid point");
  return detail::GridConvolver(f, g, star, tconorm, grid, detail::ConvolutionSide::join).at(*k);
}

/// The properties any inner operation * must have for conv_meet / conv_join
/// (with min / max as the outer connective) to be a t-norm / t-conorm on L:
/// commutativity, witnessed through the decreasing affine pair
/// f(x) = (u-1)x + 1, g(x) = (v-1)x + 1 at x = 1, and the boundary values
/// 0*0 = 0*1 = 1*0 = 0, 1*1 = 1, witnessed through indicator convolutions.
/// Every value is computed by the oracle, not by evaluating * directly.
inline std::vector<AxiomReport> verify_star_forced_properties(
    const ScalarConnective& star, const GridSpec& grid,
    const std::vector<Rational>& probes = uniform_sample(10)) {
  const auto tmin = connectives::minimum();
  const auto tmax = connectives::maximum();
  const Rational zero(0), one(1), half = make_rational(1, 2);
  auto fmt = [](const std::optional<Rational>& v) { return v ? to_string(*v) : "undefined"; };

  std::vector<AxiomReport> out;

  AxiomReport comm{"commutativity"};
  for (std::size_t i = 0; i < probes.size() && comm.passed; ++i)
    for (std::size_t j = i + 1; j < probes.size() && comm.passed; ++j) {
      ++comm.trials;
      const Rational& u = probes[i];
      const Rational& v = probes[j];
      PiecewiseFn f = affine_function(u - 1, one);
      PiecewiseFn g = affine_function(v - 1, one);
      auto fg = convolve_meet_at(f, g, star, tmin, grid, one);
      auto gf = convolve_meet_at(g, f, star, tmin, grid, one);
      if (fg != gf) {
        Witness w;
        w.inputs = {f, g};
        w.parameters = {u, v};
        w.lhs = "(f conv_meet g)(1) = " + fmt(fg);
        w.rhs = "(g conv_meet f)(1) = " + fmt(gf);
        w.detail = "f(x) = (u-1)x+1, g(x) = (v-1)x+1 with u = " + to_string(u) +
                   ", v = " + to_string(v);
        comm.fail(std::move(w));
      }
    }
  out.push_back(std::move(comm));

  struct Identity {
    const char* id;
    PiecewiseFn f, g;
    Rational x;
    bool join_side;
    Rational expected;
    bool lower_bound;  // oracle value bounds the identity's * term from above
    const char* what;
  };
  const PiecewiseFn at0 = singleton(UnitScalar::zero());
  const PiecewiseFn at1 = singleton(UnitScalar::one());
  const PiecewiseFn at_half = singleton(UnitScalar(half));
  std::vector<Identity> ids = {
      {"meet:1*0", at1, at0, one, false, zero, false, "(1_{1} conv_meet 1_{0})(1) = 1*0"},
      {"meet:0*1", at0, at1, one, false, zero, false, "(1_{0} conv_meet 1_{1})(1) = 0*1"},
      {"meet:0*0", at_half, at1, zero, false, zero, true,
       "(1_{1/2} conv_meet 1_{1})(0) >= 1_{1/2}(1)*1_{1}(0) = 0*0"},
      {"meet:1*1", at1, at1, one, false, one, false, "(1_{1} conv_meet 1_{1})(1) = 1*1"},
      {"join:0*1", at1, at0, zero, true, zero, false, "(1_{1} conv_join 1_{0})(0) = 0*1"},
      {"join:1*0", at0, at1, zero, true, zero, false, "(1_{0} conv_join 1_{1})(0) = 1*0"},
      {"join:0*0", at_half, at0, one, true, zero, true,
       "(1_{1/2} conv_join 1_{0})(1) >= 1_{1/2}(0)*1_{0}(1) = 0*0"},
      {"join:1*1", at1, at0, one, true, one, false, "(1_{1} conv_join 1_{0})(1) = 1*1"},
  };
  for (auto& id : ids) {
    AxiomReport r{id.id};
    r.trials = 1;
    auto value = id.join_side ? convolve_join_at(id.f, id.g, star, tmax, grid, id.x)
                              : convolve_meet_at(id.f, id.g, star, tmin, grid, id.x);
    // The neutral-element argument forces the convolution to reproduce the
    // non-unit argument, whose value at x is `expected`.
    bool ok = value && *value == id.expected;
    if (!ok) {
      Witness w;
      w.inputs = {id.f, id.g};
      w.parameters = {id.x};
      w.lhs = std::string(id.what) + ", oracle gives " + fmt(value);
      w.rhs = to_string(id.expected);
      w.detail = id.lower_bound ? "oracle value bounds 0*0 from above"
                                : "neutral element forces this value";
      r.fail(std::move(w));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace t2fuzzy
