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

// Piecewise-affine functions I -> I with explicit breakpoint values.
//
// A function is stored as breakpoints 0 = x_0 < x_1 < ... < x_m = 1, the value
// f(x_i) at each breakpoint, and one affine map per open interval
// (x_i, x_{i+1}). Point values and pieces are independent, so jumps and
// isolated spikes (indicators of singletons) are represented exactly.
//
// Pieces are global affine maps slope * x + intercept, which makes two
// neighbouring pieces collinear exactly when their coefficients agree. The
// canonical form drops every interior breakpoint whose value matches both
// one-sided limits and whose neighbouring pieces are collinear; two functions
// are pointwise equal iff their canonical forms are identical.

#include "t2fuzzy/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace t2fuzzy {

struct Affine {
  Rational slope{0};
  Rational intercept{0};

  static Affine constant(const Rational& c) { return {Rational(0), c}; }
  /// The line through (x0, y0) and (x1, y1); requires x0 != x1.
  static Affine through(const Rational& x0, const Rational& y0, const Rational& x1,
                        const Rational& y1) {
    Rational s = (y1 - y0) / (x1 - x0);
    return {s, y0 - s * x0};
  }

  Rational operator()(const Rational& x) const { return slope * x + intercept; }

  friend bool operator==(const Affine&, const Affine&) = default;
};

class PiecewiseFn {
 public:
  /// Validates structure; does not canonicalize. Throws ValidationError.
  PiecewiseFn(std::vector<Rational> breakpoints, std::vector<Rational> values,
              std::vector<Affine> pieces)
      : xs_(std::move(breakpoints)), vs_(std::move(values)), pieces_(std::move(pieces)) {
    validate();
  }

  static PiecewiseFn constant(const Rational& c) {
    return PiecewiseFn({Rational(0), Rational(1)}, {c, c}, {Affine::constant(c)});
  }

  const std::vector<Rational>& breakpoints() const { return xs_; }
  const std::vector<Rational>& values() const { return vs_; }
  const std::vector<Affine>& pieces() const { return pieces_; }
  std::size_t breakpoint_count() const { return xs_.size(); }

  /// Limit of f at breakpoint i from the left; i > 0.
  Rational left_limit(std::size_t i) const { return pieces_[i - 1](xs_[i]); }
  /// Limit of f at breakpoint i from the right; i < last.
  Rational right_limit(std::size_t i) const { return pieces_[i](xs_[i]); }

  /// Index of the open interval containing x, or of the breakpoint equal to x.
  /// Returns {index, on_breakpoint}.
  std::pair<std::size_t, bool> locate(const Rational& x) const {
    auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
    auto i = static_cast<std::size_t>(it - xs_.begin());
    if (it != xs_.end() && *it == x) return {i, true};
    return {i - 1, false};
  }

  Rational operator()(const Rational& x) const {
    if (x < 0 || x > 1) throw DomainError("evaluation point " + to_string(x) + " outside [0,1]");
    auto [i, exact] = locate(x);
    return exact ? vs_[i] : pieces_[i](x);
  }

  /// Representation equality (not pointwise equality; see equals()).
  friend bool operator==(const PiecewiseFn&, const PiecewiseFn&) = default;

 private:
  void validate() const {
    if (xs_.size() < 2) throw ValidationError("need at least the breakpoints 0 and 1");
    if (vs_.size() != xs_.size())
      throw ValidationError("one point value per breakpoint is required");
    if (pieces_.size() + 1 != xs_.size())
      throw ValidationError("one piece per interval between breakpoints is required");
    if (xs_.front() != 0 || xs_.back() != 1)
      throw ValidationError("breakpoints must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < xs_.size(); ++i)
      if (!(xs_[i] < xs_[i + 1]))
        throw ValidationError("breakpoints must be strictly increasing");
    auto in_unit = [](const Rational& v) { return v >= 0 && v <= 1; };
    for (const auto& v : vs_)
      if (!in_unit(v)) throw ValidationError("point value " + to_string(v) + " outside [0,1]");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (!in_unit(pieces_[i](xs_[i])) || !in_unit(pieces_[i](xs_[i + 1])))
        throw ValidationError("piece " + std::to_string(i) + " leaves [0,1] on its interval");
    }
  }

  std::vector<Rational> xs_;
  std::vector<Rational> vs_;
  std::vector<Affine> pieces_;
};

/// Incremental left-to-right construction; finish() canonicalizes.
class PiecewiseBuilder {
 public:
  PiecewiseBuilder(Rational x0, Rational v0) {
    xs_.push_back(std::move(x0));
    vs_.push_back(std::move(v0));
  }

  /// Extends with `piece` on (last_x, x) and the point value `v` at x.
  PiecewiseBuilder& piece(Affine piece, Rational x, Rational v) {
    pieces_.push_back(std::move(piece));
    xs_.push_back(std::move(x));
    vs_.push_back(std::move(v));
    return *this;
  }

  const Rational& last_x() const { return xs_.back(); }

  PiecewiseFn finish() &&;

 private:
  std::vector<Rational> xs_;
  std::vector<Rational> vs_;
  std::vector<Affine> pieces_;
};

inline PiecewiseFn canonicalize(const PiecewiseFn& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  const auto& ps = f.pieces();
  std::vector<Rational> out_x{xs.front()};
  std::vector<Rational> out_v{vs.front()};
  std::vector<Affine> out_p{ps.front()};
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    // Current last piece ends at xs[i]; ps[i] starts there.
    if (out_p.back() == ps[i] && ps[i](xs[i]) == vs[i]) continue;
    out_x.push_back(xs[i]);
    out_v.push_back(vs[i]);
    out_p.push_back(ps[i]);
  }
  out_x.push_back(xs.back());
  out_v.push_back(vs.back());
  return PiecewiseFn(std::move(out_x), std::move(out_v), std::move(out_p));
}

inline bool is_canonical(const PiecewiseFn& f) { return canonicalize(f) == f; }

inline PiecewiseFn PiecewiseBuilder::finish() && {
  return canonicalize(PiecewiseFn(std::move(xs_), std::move(vs_), std::move(pieces_)));
}

/// Pointwise equality on I, decided on canonical forms.
inline bool equals(const PiecewiseFn& f, const PiecewiseFn& g) {
  return canonicalize(f) == canonicalize(g);
}

inline UnitScalar evaluate(const PiecewiseFn& f, const UnitScalar& x) {
  return UnitScalar(f(x.value()));
}

/// Closed-interval indicator 1_[a,b]; a == b gives the singleton indicator.
inline PiecewiseFn indicator(const UnitScalar& a, const UnitScalar& b) {
  if (b < a) throw DomainError("indicator needs a <= b, got [" + to_string(a) + "," +
                               to_string(b) + "]");
  std::vector<Rational> xs{Rational(0), a.value(), b.value(), Rational(1)};
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto inside = [&](const Rational& x) { return x >= a.value() && x <= b.value(); };
  std::vector<Rational> vs;
  std::vector<Affine> ps;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    vs.emplace_back(inside(xs[i]) ? 1 : 0);
    if (i + 1 < xs.size())
      ps.push_back(Affine::constant(Rational(inside((xs[i] + xs[i + 1]) / 2) ? 1 : 0)));
  }
  return canonicalize(PiecewiseFn(std::move(xs), std::move(vs), std::move(ps)));
}

inline PiecewiseFn singleton(const UnitScalar& x) { return indicator(x, x); }

/// x -> slope * x + intercept on all of I (throws if it leaves [0,1]).
inline PiecewiseFn affine_function(const Rational& slope, const Rational& intercept) {
  Affine a{slope, intercept};
  return PiecewiseFn({Rational(0), Rational(1)}, {a(Rational(0)), a(Rational(1))}, {a});
}

/// (neg f)(x) = f(1 - x).
inline PiecewiseFn reflect(const PiecewiseFn& f) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  const auto& ps = f.pieces();
  std::vector<Rational> rx;
  std::vector<Rational> rv(vs.rbegin(), vs.rend());
  std::vector<Affine> rp;
  rx.reserve(xs.size());
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) rx.emplace_back(1 - *it);
  for (auto it = ps.rbegin(); it != ps.rend(); ++it)
    rp.push_back({Rational(-it->slope), Rational(it->slope + it->intercept)});
  return PiecewiseFn(std::move(rx), std::move(rv), std::move(rp));
}

inline Rational max_of(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational min_of(const Rational& a, const Rational& b) { return b < a ? b : a; }

namespace detail {

inline std::vector<Rational> merged_breakpoints(const PiecewiseFn& f, const PiecewiseFn& g) {
  std::vector<Rational> xs;
  xs.reserve(f.breakpoint_count() + g.breakpoint_count());
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(),
             g.breakpoints().end(), std::back_inserter(xs));
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

inline const Affine& piece_over(const PiecewiseFn& f, const Rational& a, std::size_t& cursor) {
  const auto& xs = f.breakpoints();
  while (!(xs[cursor] <= a && a < xs[cursor + 1])) ++cursor;
  return f.pieces()[cursor];
}

// Pointwise h(x) = op(f(x), g(x)) for an op that is affine in (f, g) between
// kinks. `kinks(pf, pg)` lists the x values where op may switch branch for the
// affine inputs pf, pg; the result is affine on every sub-interval free of
// kinks, so two interior samples determine each piece.
template <class ValueOp, class KinkOp>
PiecewiseFn combine(const PiecewiseFn& f, const PiecewiseFn& g, ValueOp op, KinkOp kinks) {
  auto xs = merged_breakpoints(f, g);
  std::size_t cf = 0, cg = 0;
  PiecewiseBuilder out(xs.front(), op(f(xs.front()), g(xs.front())));
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Rational& a = xs[i];
    const Rational& b = xs[i + 1];
    const Affine& pf = piece_over(f, a, cf);
    const Affine& pg = piece_over(g, a, cg);
    std::vector<Rational> cuts;
    for (Rational& k : kinks(pf, pg))
      if (a < k && k < b) cuts.push_back(std::move(k));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    cuts.push_back(b);
    Rational lo = a;
    for (std::size_t c = 0; c < cuts.size(); ++c) {
      const Rational& hi = cuts[c];
      Rational t1 = lo + (hi - lo) / 3;
      Rational t2 = lo + 2 * (hi - lo) / 3;
      Affine piece = Affine::through(t1, op(pf(t1), pg(t1)), t2, op(pf(t2), pg(t2)));
      bool last = c + 1 == cuts.size();
      Rational v = last ? op(f(hi), g(hi)) : op(pf(hi), pg(hi));
      out.piece(std::move(piece), hi, std::move(v));
      lo = hi;
    }
  }
  return std::move(out).finish();
}

inline std::vector<Rational> crossing(const Affine& p, const Affine& q) {
  if (p.slope == q.slope) return {};
  return {Rational((q.intercept - p.intercept) / (p.slope - q.slope))};
}

}  // namespace detail

inline PiecewiseFn pointwise_min(const PiecewiseFn& f, const PiecewiseFn& g) {
  return detail::combine(f, g, [](const Rational& a, const Rational& b) { return min_of(a, b); },
                         detail::crossing);
}

inline PiecewiseFn pointwise_max(const PiecewiseFn& f, const PiecewiseFn& g) {
  return detail::combine(f, g, [](const Rational& a, const Rational& b) { return max_of(a, b); },
                         detail::crossing);
}

/// x -> max(f(x) + g(x) - 1, 0), the Lukasiewicz t-norm applied pointwise.
inline PiecewiseFn pointwise_lukasiewicz(const PiecewiseFn& f, const PiecewiseFn& g) {
  return detail::combine(
      f, g, [](const Rational& a, const Rational& b) { return max_of(a + b - 1, Rational(0)); },
      [](const Affine& p, const Affine& q) -> std::vector<Rational> {
        Rational s = p.slope + q.slope;
        if (s == 0) return {};
        return {Rational((1 - p.intercept - q.intercept) / s)};
      });
}

/// f <= g everywhere on I, decided exactly.
inline bool pointwise_leq(const PiecewiseFn& f, const PiecewiseFn& g) {
  auto xs = detail::merged_breakpoints(f, g);
  std::size_t cf = 0, cg = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f(xs[i]) > g(xs[i])) return false;
    if (i + 1 == xs.size()) break;
    // Affine on the open interval: comparing the two end limits suffices.
    const Affine& pf = detail::piece_over(f, xs[i], cf);
    const Affine& pg = detail::piece_over(g, xs[i], cg);
    if (pf(xs[i]) > pg(xs[i]) || pf(xs[i + 1]) > pg(xs[i + 1])) return false;
  }
  return true;
}

/// A point where f and g differ, if any. Checks merged breakpoints, then a
/// midpoint and a quarter point of every merged interval (two distinct affine
/// maps agree on at most one point).
inline std::optional<Rational> first_difference(const PiecewiseFn& f, const PiecewiseFn& g) {
  auto xs = detail::merged_breakpoints(f, g);
  for (const auto& x : xs)
    if (f(x) != g(x)) return x;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    Rational mid = (xs[i] + xs[i + 1]) / 2;
    if (f(mid) != g(mid)) return mid;
    Rational quarter = (3 * xs[i] + xs[i + 1]) / 4;
    if (f(quarter) != g(quarter)) return quarter;
  }
  return std::nullopt;
}

/// Largest value in f's range or limit set: the exact sup over I.
inline Rational sup_value(const PiecewiseFn& f) {
  Rational best = f.values().front();
  for (const auto& v : f.values()) best = max_of(best, v);
  for (std::size_t i = 0; i + 1 < f.breakpoint_count(); ++i) {
    best = max_of(best, f.right_limit(i));
    best = max_of(best, f.left_limit(i + 1));
  }
  return best;
}

inline std::string to_string(const PiecewiseFn& f) {
  std::string s = "{";
  const auto& xs = f.breakpoints();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    s += "f(" + to_string(xs[i]) + ")=" + to_string(f.values()[i]);
    if (i + 1 < xs.size()) {
      const auto& p = f.pieces()[i];
      s += "; " + to_string(p.slope) + "x+" + to_string(p.intercept) + "; ";
    }
  }
  return s + "}";
}

inline std::ostream& operator<<(std::ostream& os, const PiecewiseFn& f) {
  return os << to_string(f);
}

}  // namespace t2fuzzy
