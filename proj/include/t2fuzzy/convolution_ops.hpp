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

// Exact piecewise versions of the convolutions, where they exist.
//
// With min (resp. max) as the outer connective the solution set is
// {y = x, z >= x} u {z = x, y >= x} (resp. <=). When * is continuous and
// nondecreasing, sup_z a * g(z) = a * sup_z g(z), so
//
//   (f conv_meet g)(x) = (f(x) * g^R(x)) max (f^R(x) * g(x))
//   (f conv_join g)(x) = (f(x) * g^L(x)) max (f^L(x) * g(x))
//
// Pointwise min and Lukasiewicz keep the result piecewise affine; product
// does not, so it is left to the grid oracle.

#include "t2fuzzy/convolution.hpp"
#include "t2fuzzy/envelope.hpp"
#include "t2fuzzy/star.hpp"

#include <optional>

namespace t2fuzzy {

/// The exact operation for (outer, star), or nullopt when none is available.
/// `join_side` selects conv_join (outer must be a t-conorm) over conv_meet.
inline std::optional<TruthValueOp> exact_convolution_op(bool join_side,
                                                        const ScalarConnective& outer,
                                                        const ScalarConnective& star) {
  const LatticeRole needed = join_side ? LatticeRole::maximum : LatticeRole::minimum;
  if (outer.role != needed) return std::nullopt;
  PiecewiseFn (*pointwise)(const PiecewiseFn&, const PiecewiseFn&) = nullptr;
  if (star.name == "min") pointwise = pointwise_min;
  if (star.name == "lukasiewicz") pointwise = pointwise_lukasiewicz;
  if (!pointwise) return std::nullopt;

  std::string name = std::string(join_side ? "conv-join:" : "conv-meet:") + outer.name + ":" +
                     star.name;
  if (join_side)
    return TruthValueOp{name, [pointwise](const PiecewiseFn& f, const PiecewiseFn& g) {
                          return pointwise_max(pointwise(f, envelope_left(g)),
                                               pointwise(envelope_left(f), g));
                        }};
  return TruthValueOp{name, [pointwise](const PiecewiseFn& f, const PiecewiseFn& g) {
                        return pointwise_max(pointwise(f, envelope_right(g)),
                                             pointwise(envelope_right(f), g));
                      }};
}

}  // namespace t2fuzzy
