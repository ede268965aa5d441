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

// Named functions that recur in the separation and axiom checks.

#include "t2fuzzy/piecewise.hpp"

namespace t2fuzzy::fixtures {

/// 1 on [0, 3/4], 1/2 on (3/4, 1].
inline PiecewiseFn psi() {
  const Rational one(1), half = make_rational(1, 2), cut = make_rational(3, 4);
  return PiecewiseFn({Rational(0), cut, one}, {one, one, half},
                     {Affine::constant(one), Affine::constant(half)});
}

/// x -> (1 - zeta) x + zeta, increasing from zeta to 1.
inline PiecewiseFn f_zeta(const UnitScalar& zeta) {
  return canonicalize(affine_function(Rational(1 - zeta.value()), zeta.value()));
}

/// x -> (u - 1) x + 1, decreasing from 1 to u.
inline PiecewiseFn decreasing_affine(const UnitScalar& u) {
  return canonicalize(affine_function(Rational(u.value() - 1), Rational(1)));
}

/// x -> 1 - x.
inline PiecewiseFn one_minus_x() { return affine_function(Rational(-1), Rational(1)); }

/// x -> x.
inline PiecewiseFn identity() { return affine_function(Rational(1), Rational(0)); }

}  // namespace t2fuzzy::fixtures
