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

// Running-supremum envelopes and the predicates built on them.
//
//   f^L(x)   = sup{ f(y) : y <= x }      f^R(x)   = sup{ f(y) : y >= x }
//   f^Lw(x)  = sup{ f(y) : y <  x }      f^Rw(x)  = sup{ f(y) : y >  x }
//
// with the boundary conventions f^Lw(0) = f(0) and f^Rw(1) = f(1). Each
// envelope is computed by a single exact sweep. A rising piece that starts
// below the running maximum contributes a new breakpoint where it crosses it.

#include "t2fuzzy/piecewise.hpp"

#include <algorithm>
#include <optional>

namespace t2fuzzy {

namespace detail {

inline PiecewiseFn sweep_left(const PiecewiseFn& f, bool strict) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  Rational running = vs.front();
  PiecewiseBuilder out(xs.front(), vs.front());
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Affine& p = f.pieces()[i];
    const Rational& a = xs[i];
    const Rational& c = xs[i + 1];
    Rational at_a = p(a);
    Rational at_c = p(c);
    Rational interval_sup;
    if (p.slope > 0) {
      interval_sup = at_c;
      Rational after = max_of(running, at_c);
      Rational point = strict ? after : max_of(after, vs[i + 1]);
      if (at_c <= running) {
        out.piece(Affine::constant(running), c, point);
      } else if (at_a >= running) {
        out.piece(p, c, point);
      } else {
        Rational cross = (running - p.intercept) / p.slope;
        out.piece(Affine::constant(running), cross, running);
        out.piece(p, c, point);
      }
    } else {
      interval_sup = at_a;
      Rational level = max_of(running, at_a);
      out.piece(Affine::constant(level), c, strict ? level : max_of(level, vs[i + 1]));
    }
    running = max_of(max_of(running, interval_sup), vs[i + 1]);
  }
  return std::move(out).finish();
}

// Mirror image of sweep_left, walking from x = 1 down to x = 0.
inline PiecewiseFn sweep_right(const PiecewiseFn& f, bool strict) {
  const auto& xs = f.breakpoints();
  const auto& vs = f.values();
  const std::size_t m = xs.size() - 1;
  Rational running = vs[m];
  std::vector<Rational> rx{xs[m]};
  std::vector<Rational> rv{vs[m]};
  std::vector<Affine> rp;
  for (std::size_t i = m; i-- > 0;) {
    const Affine& p = f.pieces()[i];
    const Rational& a = xs[i];
    const Rational& c = xs[i + 1];
    Rational at_a = p(a);
    Rational at_c = p(c);
    Rational interval_sup;
    if (p.slope < 0) {
      interval_sup = at_a;
      Rational after = max_of(running, at_a);
      Rational point = strict ? after : max_of(after, vs[i]);
      if (at_a <= running) {
        rp.push_back(Affine::constant(running));
      } else if (at_c >= running) {
        rp.push_back(p);
      } else {
        Rational cross = (running - p.intercept) / p.slope;
        rp.push_back(Affine::constant(running));
        rx.push_back(cross);
        rv.push_back(running);
        rp.push_back(p);
      }
      rx.push_back(a);
      rv.push_back(std::move(point));
    } else {
      interval_sup = at_c;
      Rational level = max_of(running, at_c);
      rp.push_back(Affine::constant(level));
      rx.push_back(a);
      rv.push_back(strict ? level : max_of(level, vs[i]));
    }
    running = max_of(max_of(running, interval_sup), vs[i]);
  }
  std::reverse(rx.begin(), rx.end());
  std::reverse(rv.begin(), rv.end());
  std::reverse(rp.begin(), rp.end());
  return canonicalize(PiecewiseFn(std::move(rx), std::move(rv), std::move(rp)));
}

}  // namespace detail

/// f^L: increasing, idempotent.
inline PiecewiseFn envelope_left(const PiecewiseFn& f) { return detail::sweep_left(f, false); }
/// f^R: decreasing, idempotent.
inline PiecewiseFn envelope_right(const PiecewiseFn& f) { return detail::sweep_right(f, false); }
inline PiecewiseFn envelope_left_strict(const PiecewiseFn& f) {
  return detail::sweep_left(f, true);
}
inline PiecewiseFn envelope_right_strict(const PiecewiseFn& f) {
  return detail::sweep_right(f, true);
}

inline bool is_normal(const PiecewiseFn& f) { return sup_value(f) == 1; }

/// Convex in the fuzzy (quasiconcave) sense, decided as f == f^L min f^R.
inline bool is_convex(const PiecewiseFn& f) {
  return equals(f, pointwise_min(envelope_left(f), envelope_right(f)));
}

/// Membership in L (normal and convex).
inline bool is_normal_convex(const PiecewiseFn& f) { return is_normal(f) && is_convex(f); }

/// inf of the closure of { x : f(x) = level }, if the set is nonempty.
inline std::optional<Rational> level_set_inf(const PiecewiseFn& f, const Rational& level) {
  const auto& xs = f.breakpoints();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (f.values()[i] == level) return xs[i];
    if (i + 1 == xs.size()) break;
    const Affine& p = f.pieces()[i];
    if (p.slope == 0) {
      if (p.intercept == level) return xs[i];
    } else {
      Rational t = (level - p.intercept) / p.slope;
      if (xs[i] < t && t < xs[i + 1]) return t;
    }
  }
  return std::nullopt;
}

/// sup of the closure of { x : f(x) = level }, if the set is nonempty.
inline std::optional<Rational> level_set_sup(const PiecewiseFn& f, const Rational& level) {
  const auto& xs = f.breakpoints();
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (f.values()[i] == level) return xs[i];
    if (i == 0) break;
    const Affine& p = f.pieces()[i - 1];
    if (p.slope == 0) {
      if (p.intercept == level) return xs[i];
    } else {
      Rational t = (level - p.intercept) / p.slope;
      if (xs[i - 1] < t && t < xs[i]) return t;
    }
  }
  return std::nullopt;
}

struct EnvelopeThresholds {
  UnitScalar eta;
  UnitScalar xi;
};

namespace detail {

// Thresholds from precomputed envelopes of two normal functions.
inline EnvelopeThresholds thresholds_from_envelopes(const PiecewiseFn& fL, const PiecewiseFn& fR,
                                                    const PiecewiseFn& gL, const PiecewiseFn& gR) {
  const Rational one(1);
  auto need = [](std::optional<Rational> v) {
    if (!v) throw DomainError("thresholds need normal functions");
    return std::move(*v);
  };
  Rational eta = min_of(need(level_set_inf(fL, one)), need(level_set_inf(gL, one)));
  Rational xi = min_of(need(level_set_sup(fR, one)), need(level_set_sup(gR, one)));
  return {UnitScalar(std::move(eta)), UnitScalar(std::move(xi))};
}

}  // namespace detail

/// eta = inf{f^L = 1} min inf{g^L = 1}, xi = sup{f^R = 1} min sup{g^R = 1}.
/// Both inputs must be normal.
inline EnvelopeThresholds thresholds(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (!is_normal(f) || !is_normal(g)) throw DomainError("thresholds need normal functions");
  return detail::thresholds_from_envelopes(envelope_left(f), envelope_right(f), envelope_left(g),
                                           envelope_right(g));
}

}  // namespace t2fuzzy
