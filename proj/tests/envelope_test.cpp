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

#include "test_util.hpp"

namespace t2fuzzy::testing {
namespace {

TEST(EnvelopeLeft, IntervalIndicator) {
  PiecewiseFn fL = envelope_left(ind(1, 5, 3, 5));
  EXPECT_TRUE(SameFunction(fL, ind(1, 5, 1, 1)));
  EXPECT_EQ(fL(q(1, 10)), q(0));
  EXPECT_EQ(fL(q(1, 5)), q(1));
}

TEST(EnvelopeLeft, SupAtOneAndDecreasingLine) {
  EXPECT_EQ(envelope_left(fixtures::psi())(q(1)), sup_value(fixtures::psi()));
  EXPECT_TRUE(SameFunction(envelope_left(fixtures::one_minus_x()), PiecewiseFn::constant(q(1))));
}

TEST(EnvelopeRight, PsiAndIndicator) {
  EXPECT_TRUE(SameFunction(envelope_right(fixtures::psi()), fixtures::psi()));
  EXPECT_TRUE(SameFunction(envelope_right(ind(1, 5, 3, 5)), ind(0, 1, 3, 5)));
  EXPECT_EQ(envelope_right(fixtures::identity())(q(0)), q(1));
}

TEST(EnvelopeStrict, SingletonSpike) {
  PiecewiseFn s = spike(1, 2);
  EXPECT_EQ(envelope_left_strict(s)(q(1, 2)), q(0));
  EXPECT_EQ(envelope_left_strict(s)(q(3, 5)), q(1));
  EXPECT_EQ(envelope_right_strict(s)(q(1, 2)), q(0));
  EXPECT_EQ(envelope_right_strict(s)(q(2, 5)), q(1));
}

TEST(EnvelopeStrict, BoundaryConventions) {
  auto gen = generator(21);
  for (int i = 0; i < 100; ++i) {
    PiecewiseFn f = gen.general();
    EXPECT_EQ(envelope_left_strict(f)(q(0)), f(q(0)));
    EXPECT_EQ(envelope_right_strict(f)(q(1)), f(q(1)));
  }
}

TEST(Envelope, MatchesBruteForceSupremum) {
  auto gen = generator(22);
  for (int i = 0; i < 200; ++i) {
    PiecewiseFn f = i % 2 ? gen.general() : gen.normal_convex();
    PiecewiseFn fL = envelope_left(f), fR = envelope_right(f);
    PiecewiseFn fLw = envelope_left_strict(f), fRw = envelope_right_strict(f);
    for (const auto& x : oracle::dense_points(f)) {
      ASSERT_EQ(fL(x), oracle::sup_left(f, x)) << to_string(f) << " x=" << to_string(x);
      ASSERT_EQ(fR(x), oracle::sup_right(f, x)) << to_string(f) << " x=" << to_string(x);
      ASSERT_EQ(fLw(x), oracle::sup_left(f, x, true)) << to_string(f) << " x=" << to_string(x);
      ASSERT_EQ(fRw(x), oracle::sup_right(f, x, true)) << to_string(f) << " x=" << to_string(x);
    }
  }
}

TEST(Envelope, StrictLeftIsSupOfLeftBelow) {
  // f^Lw(x) = sup_{t < x} f^L(t) for x in (0, 1], with the brute-force sup.
  auto gen = generator(23);
  for (int i = 0; i < 200; ++i) {
    PiecewiseFn f = gen.general();
    PiecewiseFn fL = envelope_left(f), fLw = envelope_left_strict(f);
    for (const auto& x : oracle::dense_points(f)) {
      if (x == 0) continue;
      ASSERT_EQ(fLw(x), oracle::sup_left(fL, x, true));
    }
  }
}

TEST(Envelope, AlgebraicIdentities) {
  auto gen = generator(24);
  for (int i = 0; i < 150; ++i) {
    PiecewiseFn f = i % 3 == 0 ? gen.general() : gen.normal_convex();
    PiecewiseFn fL = envelope_left(f), fR = envelope_right(f);
    const Rational s = sup_value(f);
    EXPECT_TRUE(pointwise_leq(f, pointwise_min(fL, fR)));
    EXPECT_TRUE(SameFunction(envelope_left(fL), fL));
    EXPECT_TRUE(SameFunction(envelope_right(fR), fR));
    EXPECT_TRUE(SameFunction(envelope_left(reflect(f)), reflect(fR)));
    EXPECT_TRUE(SameFunction(envelope_right(reflect(f)), reflect(fL)));
    EXPECT_TRUE(SameFunction(envelope_right(fL), PiecewiseFn::constant(s)));
    EXPECT_TRUE(SameFunction(envelope_left(fR), PiecewiseFn::constant(s)));
    EXPECT_TRUE(SameFunction(pointwise_max(fL, fR), PiecewiseFn::constant(s)));
    EXPECT_EQ(fL(q(1)), s);
    EXPECT_EQ(fR(q(0)), s);
  }
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_normal(fixtures::psi()));
  EXPECT_TRUE(is_convex(fixtures::psi()));
  PiecewiseFn two = pointwise_max(spike(3, 10), spike(7, 10));
  EXPECT_TRUE(is_normal(two));
  EXPECT_FALSE(is_convex(two));
  EXPECT_FALSE(is_normal(PiecewiseFn::constant(q(9, 10))));
  EXPECT_TRUE(is_convex(PiecewiseFn::constant(q(9, 10))));
}

TEST(Predicates, ConvexityMatchesDefinition) {
  auto gen = generator(25);
  int convex = 0, nonconvex = 0;
  for (int i = 0; i < 300; ++i) {
    PiecewiseFn f = i % 2 ? gen.general() : gen.normal_nonconvex();
    bool c = is_convex(f);
    EXPECT_EQ(c, oracle::quasi_concave(f)) << to_string(f);
    EXPECT_EQ(c, equals(f, pointwise_min(envelope_left(f), envelope_right(f))));
    (c ? convex : nonconvex)++;
  }
  EXPECT_GT(convex, 0);
  EXPECT_GT(nonconvex, 0);
}

TEST(LevelSets, ClosureSemantics) {
  // 1 reached only as the right-hand limit at 1/2.
  PiecewiseFn f({q(0), q(1, 2), q(1)}, {q(0), q(1, 2), q(0)},
                {Affine::constant(q(0)), Affine{q(-2), q(2)}});
  EXPECT_EQ(level_set_inf(envelope_left(f), q(1)), q(1, 2));
  EXPECT_EQ(level_set_sup(envelope_right(f), q(1)), q(1, 2));
  EXPECT_FALSE(level_set_inf(PiecewiseFn::constant(q(1, 2)), q(1)).has_value());
}

TEST(Thresholds, Examples) {
  auto t = thresholds(spike(3, 10), spike(7, 10));
  EXPECT_EQ(t.eta, u(3, 10));
  EXPECT_EQ(t.xi, u(3, 10));
  t = thresholds(ind(0, 1, 1, 1), ind(1, 5, 3, 5));
  EXPECT_EQ(t.eta, u(0));
  EXPECT_EQ(t.xi, u(3, 5));
  t = thresholds(ind(0, 1, 1, 1), ind(0, 1, 1, 1));
  EXPECT_EQ(t.eta, u(0));
  EXPECT_EQ(t.xi, u(1));
}

TEST(Thresholds, NonNormalIsDomainError) {
  EXPECT_THROW(thresholds(PiecewiseFn::constant(q(1, 2)), spike(1, 2)), DomainError);
  EXPECT_THROW(thresholds(spike(1, 2), PiecewiseFn::constant(q(1, 2))), DomainError);
}

TEST(Thresholds, OrderedAndMatchFirstAndLastUnit) {
  auto gen = generator(26);
  for (int i = 0; i < 300; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    auto t = thresholds(f, g);
    EXPECT_LE(t.eta, t.xi);
    EXPECT_EQ(t.eta.value(), min_of(*oracle::first_unit(f), *oracle::first_unit(g)));
    EXPECT_EQ(t.xi.value(), min_of(*oracle::last_unit(f), *oracle::last_unit(g)));
  }
}

}  // namespace
}  // namespace t2fuzzy::testing
