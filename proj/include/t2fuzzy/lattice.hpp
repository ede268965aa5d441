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

// Meet, join and the two partial orders of the truth-value algebra.
//
// Meet is the sup-min convolution over y min z = x. The solution set of
// y min z = x is {y = x, z >= x} u {z = x, y >= x}, hence
//
//   (f meet g)(x) = (f(x) min g^R(x)) max (f^R(x) min g(x))
//   (f join g)(x) = (f(x) min g^L(x)) max (f^L(x) min g(x))
//
// These closed forms are cross-checked against the grid convolution oracle
// in the test suite.

#include "t2fuzzy/envelope.hpp"

namespace t2fuzzy {

inline PiecewiseFn meet(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pointwise_max(pointwise_min(f, envelope_right(g)), pointwise_min(envelope_right(f), g));
}

inline PiecewiseFn join(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pointwise_max(pointwise_min(f, envelope_left(g)), pointwise_min(envelope_left(f), g));
}

/// f ⊑ g by its defining equation f meet g = f. Valid on all of M.
inline bool leq_sub_by_definition(const PiecewiseFn& f, const PiecewiseFn& g) {
  return equals(meet(f, g), f);
}

/// f ≼ g by its defining equation f join g = g. Valid on all of M.
inline bool leq_pre_by_definition(const PiecewiseFn& f, const PiecewiseFn& g) {
  return equals(join(f, g), g);
}

/// f ⊑ g for f, g in L: f^L >= g^L and f^R <= g^R.
inline bool leq_sub_by_envelopes(const PiecewiseFn& f, const PiecewiseFn& g) {
  return pointwise_leq(envelope_left(g), envelope_left(f)) &&
         pointwise_leq(envelope_right(f), envelope_right(g));
}

/// ⊑, using the envelope criterion on L and the defining equation elsewhere.
inline bool leq_sub(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (is_normal_convex(f) && is_normal_convex(g)) return leq_sub_by_envelopes(f, g);
  return leq_sub_by_definition(f, g);
}

inline bool leq_pre(const PiecewiseFn& f, const PiecewiseFn& g) {
  return leq_pre_by_definition(f, g);
}

/// Whether ⊑ and ≼ agree on the pair; both inputs must lie in L.
inline bool order_equivalence_check(const PiecewiseFn& f, const PiecewiseFn& g) {
  if (!is_normal_convex(f) || !is_normal_convex(g))
    throw DomainError("order_equivalence_check needs members of L");
  return leq_sub(f, g) == leq_pre(f, g);
}

}  // namespace t2fuzzy
