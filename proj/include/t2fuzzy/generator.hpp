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

// Seeded random functions with coordinates on the lattice {k/D}.
//
// Members of L are drawn as unimodal shapes: a rising part, a top, and a
// falling part. Along the rising part the sequence
//   f(x_0) <= f(x_0+) <= f(x_1-) <= f(x_1) <= f(x_1+) <= ...
// is a sorted random draw, which keeps every point value between its
// one-sided limits. The top is either attained (a plateau or a single point)
// or reached only as a one-sided limit at a jump.

#include "t2fuzzy/envelope.hpp"
#include "t2fuzzy/fixtures.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace t2fuzzy {

struct GeneratorConfig {
  std::uint64_t seed = 0;
  std::size_t max_breakpoints = 8;  // including 0 and 1
  long long denominator_bound = 64;
  bool include_fixtures = true;
};

class FunctionGenerator {
 public:
  explicit FunctionGenerator(GeneratorConfig config) : config_(config), rng_(config.seed) {
    if (config_.max_breakpoints < 2) throw DomainError("max_breakpoints must be at least 2");
    if (config_.denominator_bound < 2) throw DomainError("denominator_bound must be at least 2");
  }

  const GeneratorConfig& config() const { return config_; }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = rng_.max() - rng_.max() % n;
    std::uint64_t r;
    do r = rng_(); while (r >= limit);
    return r % n;
  }
  bool coin() { return below(2) == 1; }

  Rational lattice_value() { return lattice(static_cast<long long>(below(D() + 1))); }

  /// A member of L.
  PiecewiseFn normal_convex() {
    if (config_.include_fixtures && below(4) == 0) return fixture();
    return shaped();
  }

  /// An arbitrary piecewise-affine function, possibly in L.
  PiecewiseFn general() {
    auto xs = breakpoints();
    std::vector<Rational> vs;
    std::vector<Affine> ps;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      vs.push_back(lattice_value());
      if (i + 1 < xs.size()) ps.push_back(Affine::through(xs[i], lattice_value(), xs[i + 1],
                                                          lattice_value()));
    }
    return canonicalize(PiecewiseFn(std::move(xs), std::move(vs), std::move(ps)));
  }

  /// A function outside L (by rejection from general()).
  PiecewiseFn outside_normal_convex() {
    for (;;) {
      PiecewiseFn f = general();
      if (!is_normal_convex(f)) return f;
    }
  }

  /// A normal function that is not convex: general() with a forced unit value.
  PiecewiseFn normal_nonconvex() {
    for (;;) {
      PiecewiseFn f = general();
      std::vector<Rational> vs = f.values();
      vs[below(vs.size())] = 1;
      PiecewiseFn g(f.breakpoints(), std::move(vs), f.pieces());
      if (!is_convex(g)) return canonicalize(g);
    }
  }

  /// Piecewise constant with breakpoints on {k/n}; point values independent.
  PiecewiseFn grid_step(std::size_t n) {
    std::vector<Rational> xs{Rational(0)};
    for (std::size_t k = 1; k < n; ++k)
      if (below(4) == 0) xs.push_back(make_rational(static_cast<long long>(k),
                                                    static_cast<long long>(n)));
    xs.emplace_back(1);
    std::vector<Rational> vs;
    std::vector<Affine> ps;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      vs.push_back(lattice_value());
      if (i + 1 < xs.size()) ps.push_back(Affine::constant(lattice_value()));
    }
    return canonicalize(PiecewiseFn(std::move(xs), std::move(vs), std::move(ps)));
  }

 private:
  long long D() const { return config_.denominator_bound; }
  Rational lattice(long long k) const { return make_rational(k, D()); }

  std::vector<Rational> breakpoints() {
    const std::size_t cap = std::min<std::size_t>(config_.max_breakpoints - 2,
                                                  static_cast<std::size_t>(D() - 1));
    const std::size_t interior = static_cast<std::size_t>(below(cap + 1));
    std::vector<long long> ks;
    while (ks.size() < interior) {
      long long k = 1 + static_cast<long long>(below(static_cast<std::uint64_t>(D() - 1)));
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    std::sort(ks.begin(), ks.end());
    std::vector<Rational> xs{Rational(0)};
    for (long long k : ks) xs.push_back(lattice(k));
    xs.emplace_back(1);
    return xs;
  }

  std::vector<Rational> sorted_draw(std::size_t count) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(lattice_value());
    std::sort(out.begin(), out.end());
    return out;
  }

  PiecewiseFn shaped() {
    auto xs = breakpoints();
    const std::size_t m = xs.size() - 1;
    enum { plateau, peak, limit_left, limit_right } mode =
        static_cast<decltype(plateau)>(below(4));
    std::size_t top_lo = static_cast<std::size_t>(below(m + 1));
    std::size_t top_hi = top_lo;
    if (mode == plateau) top_hi = top_lo + static_cast<std::size_t>(below(m - top_lo + 1));
    if (mode == limit_left && top_lo == 0) mode = peak;
    if (mode == limit_right && top_lo == m) mode = peak;

    std::vector<Rational> vs(m + 1, Rational(1));
    std::vector<Rational> left_lim(m + 1), right_lim(m + 1);  // limits at x_i

    // Rising part: intervals 0 .. top_lo-1.
    auto rise = sorted_draw(3 * top_lo);
    for (std::size_t i = 0; i < top_lo; ++i) {
      vs[i] = rise[3 * i];
      right_lim[i] = rise[3 * i + 1];
      left_lim[i + 1] = rise[3 * i + 2];
    }
    // Falling part: intervals top_hi .. m-1, drawn from the right end.
    auto fall = sorted_draw(3 * (m - top_hi));
    for (std::size_t r = 0; r < m - top_hi; ++r) {
      std::size_t i = m - r;
      vs[i] = fall[3 * r];
      left_lim[i] = fall[3 * r + 1];
      right_lim[i - 1] = fall[3 * r + 2];
    }
    for (std::size_t i = top_lo; i < top_hi; ++i) {
      right_lim[i] = 1;
      left_lim[i + 1] = 1;
    }
    if (mode == limit_left) {
      left_lim[top_lo] = 1;
      // Between the right-hand limit and 1, strictly below 1 when possible.
      vs[top_lo] = between(right_lim[top_lo], Rational(1));
    } else if (mode == limit_right) {
      right_lim[top_lo] = 1;
      vs[top_lo] = between(left_lim[top_lo], Rational(1));
    }

    std::vector<Affine> ps;
    for (std::size_t i = 0; i < m; ++i)
      ps.push_back(Affine::through(xs[i], right_lim[i], xs[i + 1], left_lim[i + 1]));
    return canonicalize(PiecewiseFn(std::move(xs), std::move(vs), std::move(ps)));
  }

  // Lattice value in [lo, hi), or lo when the range is empty.
  Rational between(const Rational& lo, const Rational& hi) {
    long long first = ceil_of(lo * D()).convert_to<long long>();
    long long last = ceil_of(hi * D()).convert_to<long long>() - 1;
    if (last < first) return lo;
    return max_of(lo, lattice(first + static_cast<long long>(
                                          below(static_cast<std::uint64_t>(last - first + 1)))));
  }

  PiecewiseFn fixture() {
    auto u = [&] { return UnitScalar(lattice_value()); };
    switch (below(8)) {
      case 0: return singleton(u());
      case 1: {
        UnitScalar a = u(), b = u();
        return a <= b ? indicator(a, b) : indicator(b, a);
      }
      case 2: return fixtures::psi();
      case 3: return fixtures::f_zeta(u());
      case 4: return fixtures::decreasing_affine(u());
      case 5: return fixtures::one_minus_x();
      case 6: return fixtures::identity();
      default: return PiecewiseFn::constant(Rational(1));
    }
  }

  GeneratorConfig config_;
  std::mt19937_64 rng_;
};

/// First draw from a fresh generator: deterministic in the seed.
inline PiecewiseFn random_normal_convex(const GeneratorConfig& config) {
  return FunctionGenerator(config).normal_convex();
}

}  // namespace t2fuzzy
