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

// A t_r-norm on L that is not a sup-convolution, and its De Morgan dual.
//
// For f, g in L with neither equal to 1_{1}, and thresholds eta <= xi,
//
//   (f star g)(t) = f^L(t) max g^L(t)     t in [0, eta)
//                 = 1                     t in [eta, xi)
//                 = f^R(xi) min g^R(xi)   t = xi
//                 = 0                     t in (xi, 1]
//
// and 1_{1} is the neutral element. When eta == xi the second branch is
// empty. costar(f, g) = neg(neg f star neg g).

#include "t2fuzzy/envelope.hpp"
#include "t2fuzzy/lattice.hpp"

#include <functional>
#include <string>
#include <utility>

namespace t2fuzzy {

inline const PiecewiseFn& unit_at_one() {
  static const PiecewiseFn f = singleton(UnitScalar::one());
  return f;
}
inline const PiecewiseFn& unit_at_zero() {
  static const PiecewiseFn f = singleton(UnitScalar::zero());
  return f;
}

namespace detail {

inline void require_normal_convex(const PiecewiseFn& f, const char* op) {
  if (!is_normal_convex(f))
    throw DomainError(std::string(op) + " is defined on normal convex functions only");
}

// Appends h restricted to (builder.last_x(), end), then the value at `end`.
inline void append_prefix(PiecewiseBuilder& out, const PiecewiseFn& h, const Rational& end,
                          const Rational& value_at_end) {
  const auto& xs = h.breakpoints();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!(out.last_x() < xs[i + 1])) continue;
    if (xs[i + 1] < end) {
      out.piece(h.pieces()[i], xs[i + 1], h.values()[i + 1]);
    } else {
      out.piece(h.pieces()[i], end, value_at_end);
      return;
    }
  }
}

struct StarParts {
  PiecewiseFn rising;  // f^L max g^L
  Rational eta, xi;
  Rational at_xi;  // f^R(xi) min g^R(xi)
};

inline StarParts star_parts(const PiecewiseFn& f, const PiecewiseFn& g) {
  PiecewiseFn fL = envelope_left(f), gL = envelope_left(g);
  PiecewiseFn fR = envelope_right(f), gR = envelope_right(g);
  auto th = thresholds_from_envelopes(fL, fR, gL, gR);
  Rational at_xi = min_of(fR(th.xi.value()), gR(th.xi.value()));
  return {pointwise_max(fL, gL), th.eta.value(), th.xi.value(), std::move(at_xi)};
}

}  // namespace detail

/// The t_r-norm star on L. Throws DomainError for inputs outside L.
inline PiecewiseFn star(const PiecewiseFn& f, const PiecewiseFn& g) {
  detail::require_normal_convex(f, "star");
  detail::require_normal_convex(g, "star");
  if (equals(f, unit_at_one())) return canonicalize(g);
  if (equals(g, unit_at_one())) return canonicalize(f);

  auto parts = detail::star_parts(f, g);
  const Rational& eta = parts.eta;
  const Rational& xi = parts.xi;
  Rational at_eta = eta < xi ? Rational(1) : parts.at_xi;

  PiecewiseBuilder out(Rational(0), eta > 0 ? parts.rising(Rational(0)) : at_eta);
  if (eta > 0) detail::append_prefix(out, parts.rising, eta, at_eta);
  if (eta < xi) out.piece(Affine::constant(Rational(1)), xi, parts.at_xi);
  if (xi < 1) out.piece(Affine::constant(Rational(0)), Rational(1), Rational(0));
  return std::move(out).finish();
}

/// Closed-form (f star g)^L and (f star g)^R for f, g in L other than 1_{1}:
///   ^L = f^L max g^L on [0, eta), 1 on [eta, 1]
///   ^R = 1 on [0, xi), f^R(xi) min g^R(xi) at xi, 0 on (xi, 1]
inline std::pair<PiecewiseFn, PiecewiseFn> star_envelopes(const PiecewiseFn& f,
                                                          const PiecewiseFn& g) {
  detail::require_normal_convex(f, "star_envelopes");
  detail::require_normal_convex(g, "star_envelopes");
  if (equals(f, unit_at_one()) || equals(g, unit_at_one()))
    throw DomainError("star_envelopes excludes 1_{1}");
  auto parts = detail::star_parts(f, g);
  const Rational one(1), zero(0);

  PiecewiseBuilder left(zero, parts.eta > 0 ? parts.rising(zero) : one);
  if (parts.eta > 0) detail::append_prefix(left, parts.rising, parts.eta, one);
  if (parts.eta < 1) left.piece(Affine::constant(one), one, one);

  PiecewiseBuilder right(zero, parts.xi > 0 ? one : parts.at_xi);
  if (parts.xi > 0) right.piece(Affine::constant(one), parts.xi, parts.at_xi);
  if (parts.xi < 1) right.piece(Affine::constant(zero), one, zero);

  return {std::move(left).finish(), std::move(right).finish()};
}

/// neg((neg f) star (neg g)), the dual t_r-conorm.
inline PiecewiseFn costar(const PiecewiseFn& f, const PiecewiseFn& g) {
  return reflect(star(reflect(f), reflect(g)));
}

/// A named binary operation on L.
struct TruthValueOp {
  std::string name;
  std::function<PiecewiseFn(const PiecewiseFn&, const PiecewiseFn&)> apply;

  PiecewiseFn operator()(const PiecewiseFn& f, const PiecewiseFn& g) const { return apply(f, g); }
};

/// f op^c g = neg((neg f) op (neg g)).
inline TruthValueOp dualize(const TruthValueOp& op) {
  auto inner = op.apply;
  return {op.name + "^c", [inner](const PiecewiseFn& f, const PiecewiseFn& g) {
            return canonicalize(reflect(inner(reflect(f), reflect(g))));
          }};
}

inline TruthValueOp star_op() { return {"star", star}; }
inline TruthValueOp costar_op() { return {"costar", costar}; }
inline TruthValueOp meet_op() {
  return {"meet", [](const PiecewiseFn& f, const PiecewiseFn& g) { return meet(f, g); }};
}
inline TruthValueOp join_op() {
  return {"join", [](const PiecewiseFn& f, const PiecewiseFn& g) { return join(f, g); }};
}

}  // namespace t2fuzzy
