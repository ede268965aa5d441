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

// Reference computations used only by tests. Nothing here calls the sweep
// code in envelope.hpp: suprema are taken by brute force over every piece,
// one query point at a time.

#include "t2fuzzy/t2fuzzy.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace t2fuzzy::oracle {

/// sup{ f(y) : y <= x }, or y < x when strict (with f(0) at x = 0).
inline Rational sup_left(const PiecewiseFn& f, const Rational& x, bool strict = false) {
  if (strict && x == 0) return f(Rational(0));
  const auto& xs = f.breakpoints();
  Rational best(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < x || (!strict && xs[i] == x)) best = max_of(best, f.values()[i]);
    if (i + 1 == xs.size() || !(xs[i] < x)) continue;
    // Interval (x_i, x_{i+1}) meets [0, x): the affine piece's sup over the
    // part inside is one of its two end values there.
    const Affine& p = f.pieces()[i];
    best = max_of(best, p(xs[i]));
    best = max_of(best, p(min_of(xs[i + 1], x)));
  }
  return best;
}

/// sup{ f(y) : y >= x }, or y > x when strict (with f(1) at x = 1).
inline Rational sup_right(const PiecewiseFn& f, const Rational& x, bool strict = false) {
  if (strict && x == 1) return f(Rational(1));
  const auto& xs = f.breakpoints();
  Rational best(0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] > x || (!strict && xs[i] == x)) best = max_of(best, f.values()[i]);
    if (i + 1 == xs.size() || !(xs[i + 1] > x)) continue;
    const Affine& p = f.pieces()[i];
    best = max_of(best, p(xs[i + 1]));
    best = max_of(best, p(max_of(xs[i], x)));
  }
  return best;
}

inline Rational sup_all(const PiecewiseFn& f) { return sup_left(f, Rational(1)); }

/// Merged breakpoints of the inputs plus the midpoint of every merged interval.
inline std::vector<Rational> probe_points(const std::vector<const PiecewiseFn*>& fs) {
  std::vector<Rational> xs;
  for (const auto* f : fs) xs.insert(xs.end(), f->breakpoints().begin(), f->breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i + 1 < n; ++i) xs.push_back((xs[i] + xs[i + 1]) / 2);
  std::sort(xs.begin(), xs.end());
  return xs;
}

inline std::vector<Rational> probe_points(const PiecewiseFn& f) { return probe_points({&f}); }
inline std::vector<Rational> probe_points(const PiecewiseFn& f, const PiecewiseFn& g) {
  return probe_points({&f, &g});
}

/// Probe points plus points just inside each side of every breakpoint, which
/// is where a piecewise-affine function shows a dip if it has one.
inline std::vector<Rational> dense_points(const PiecewiseFn& f) {
  auto xs = probe_points(f);
  const auto& bs = f.breakpoints();
  Rational gap(1);
  for (std::size_t i = 0; i + 1 < bs.size(); ++i) gap = min_of(gap, bs[i + 1] - bs[i]);
  Rational eps = gap / 1000;
  for (const auto& b : bs) {
    if (b > 0) xs.push_back(b - eps);
    if (b < 1) xs.push_back(b + eps);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

/// Quasi-concavity by its definition, f(y) >= f(x) min f(z) for x <= y <= z.
inline bool quasi_concave(const PiecewiseFn& f) {
  auto xs = dense_points(f);
  std::vector<Rational> v;
  for (const auto& x : xs) v.push_back(f(x));
  // For each y, the largest values to its left and right bound any violation.
  const std::size_t n = xs.size();
  std::vector<Rational> left(n), right(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = i ? max_of(left[i - 1], v[i]) : v[i];
  for (std::size_t i = n; i-- > 0;) right[i] = i + 1 < n ? max_of(right[i + 1], v[i]) : v[i];
  for (std::size_t i = 1; i + 1 < n; ++i)
    if (v[i] < min_of(left[i - 1], right[i + 1])) return false;
  return true;
}

/// First point where f reaches 1, as a value or a one-sided limit.
inline std::optional<Rational> first_unit(const PiecewiseFn& f) {
  const auto& xs = f.breakpoints();
  std::optional<Rational> best;
  auto offer = [&](const Rational& x) {
    if (!best || x < *best) best = x;
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f.values()[i] == 1) offer(xs[i]);
    if (i + 1 == xs.size()) continue;
    const Affine& p = f.pieces()[i];
    if (p(xs[i]) == 1) offer(xs[i]);
    if (p(xs[i + 1]) == 1) offer(xs[i + 1]);
  }
  return best;
}

/// Last point where f reaches 1, as a value or a one-sided limit.
inline std::optional<Rational> last_unit(const PiecewiseFn& f) {
  auto r = first_unit(reflect(f));
  if (!r) return std::nullopt;
  return Rational(1 - *r);
}

/// n random rationals k/d in [0, 1].
inline std::vector<Rational> random_points(std::uint64_t seed, std::size_t n, long long d = 997) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(make_rational(static_cast<long long>(rng() % static_cast<std::uint64_t>(d + 1)), d));
  return out;
}

/// Pointwise check of f == op(g, h) at probe points of all three.
template <class Op>
bool agrees_pointwise(const PiecewiseFn& f, const PiecewiseFn& g, const PiecewiseFn& h, Op op) {
  for (const auto& x : probe_points({&f, &g, &h}))
    if (f(x) != op(g(x), h(x))) return false;
  return true;
}

}  // namespace t2fuzzy::oracle
