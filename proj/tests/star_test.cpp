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

const PiecewiseFn& top() { return unit_at_one(); }

TEST(Star, IntervalExamples) {
  EXPECT_TRUE(SameFunction(star(ind(0, 1, 1, 1), ind(1, 5, 3, 5)), ind(0, 1, 3, 5)));
  EXPECT_TRUE(SameFunction(star(ind(1, 10, 2, 5), ind(3, 10, 9, 10)), ind(1, 10, 2, 5)));
  EXPECT_TRUE(SameFunction(star(spike(3, 10), spike(7, 10)), spike(3, 10)));
}

TEST(Star, PsiWithSpike) {
  PiecewiseFn r = star(fixtures::psi(), spike(4, 5));
  EXPECT_TRUE(SameFunction(r, ind(0, 1, 3, 4)));
  EXPECT_EQ(r(q(4, 5)), q(0));
}

TEST(Star, NeutralElement) {
  auto gen = generator(61);
  for (int i = 0; i < 100; ++i) {
    PiecewiseFn f = gen.normal_convex();
    EXPECT_TRUE(SameFunction(star(f, top()), f));
    EXPECT_TRUE(SameFunction(star(top(), f), f));
  }
}

TEST(Star, RejectsInputsOutsideL) {
  auto gen = generator(62);
  PiecewiseFn outside = gen.outside_normal_convex();
  EXPECT_THROW(star(outside, top()), DomainError);
  EXPECT_THROW(star(top(), outside), DomainError);
  EXPECT_THROW(costar(outside, unit_at_zero()), DomainError);
  EXPECT_THROW(star_envelopes(top(), spike(1, 2)), DomainError);
}

// Pointwise evaluation of the defining cases, independent of the builder.
Rational star_by_cases(const PiecewiseFn& f, const PiecewiseFn& g, const Rational& t) {
  const Rational eta = min_of(*oracle::first_unit(f), *oracle::first_unit(g));
  const Rational xi = min_of(*oracle::last_unit(f), *oracle::last_unit(g));
  if (t < eta) return max_of(oracle::sup_left(f, t), oracle::sup_left(g, t));
  if (t < xi) return Rational(1);
  if (t == xi) return min_of(oracle::sup_right(f, t), oracle::sup_right(g, t));
  return Rational(0);
}

TEST(Star, MatchesDefiningCases) {
  auto gen = generator(63);
  for (int i = 0; i < 200; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    if (equals(f, top()) || equals(g, top())) continue;
    PiecewiseFn r = star(f, g);
    PiecewiseFn probe = pointwise_max(pointwise_max(f, g), r);
    for (const auto& t : oracle::dense_points(probe))
      ASSERT_EQ(r(t), star_by_cases(f, g, t)) << to_string(f) << " | " << to_string(g)
                                              << " t=" << to_string(t);
  }
}

TEST(Star, ClosureNonDegeneracyAndShape) {
  auto gen = generator(64);
  for (int i = 0; i < 300; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    PiecewiseFn r = star(f, g);
    ASSERT_TRUE(is_normal_convex(r)) << to_string(f) << " | " << to_string(g);
    if (equals(f, top()) || equals(g, top())) continue;
    EXPECT_FALSE(equals(r, top()));
    // Nondecreasing on [0, xi), zero after xi.
    const Rational xi = thresholds(f, g).xi.value();
    Rational prev(0);
    for (const auto& t : oracle::dense_points(r)) {
      if (t < xi) {
        EXPECT_GE(r(t), prev);
        prev = r(t);
      } else if (t > xi) {
        EXPECT_EQ(r(t), q(0));
      }
    }
  }
}

TEST(Star, BelowBothArgumentsInSubOrder) {
  // From monotonicity and g ⊑ 1_{1}: f star g ⊑ f star 1_{1} = f.
  auto gen = generator(65);
  for (int i = 0; i < 100; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    PiecewiseFn r = star(f, g);
    EXPECT_TRUE(leq_sub(r, f));
    EXPECT_TRUE(leq_sub(r, g));
  }
}

TEST(StarEnvelopes, Examples) {
  auto [l, r] = star_envelopes(ind(0, 1, 1, 1), ind(0, 1, 1, 1));
  EXPECT_TRUE(SameFunction(l, PiecewiseFn::constant(q(1))));
  EXPECT_TRUE(SameFunction(r, PiecewiseFn::constant(q(1))));
  auto [pl, pr] = star_envelopes(fixtures::psi(), spike(4, 5));
  EXPECT_TRUE(SameFunction(pr, ind(0, 1, 3, 4)));
  EXPECT_TRUE(SameFunction(pl, PiecewiseFn::constant(q(1))));
}

TEST(StarEnvelopes, MatchRecomputedEnvelopes) {
  auto gen = generator(66);
  int checked = 0;
  while (checked < 200) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    if (equals(f, top()) || equals(g, top())) continue;
    PiecewiseFn r = star(f, g);
    auto [l, rr] = star_envelopes(f, g);
    ASSERT_TRUE(SameFunction(l, envelope_left(r))) << to_string(f) << " | " << to_string(g);
    ASSERT_TRUE(SameFunction(rr, envelope_right(r))) << to_string(f) << " | " << to_string(g);
    ++checked;
  }
}

TEST(Costar, Examples) {
  EXPECT_TRUE(SameFunction(costar(spike(3, 10), spike(7, 10)), spike(7, 10)));
  EXPECT_TRUE(SameFunction(costar(ind(0, 1, 1, 1), ind(1, 5, 3, 5)), ind(1, 5, 1, 1)));
  auto gen = generator(67);
  for (int i = 0; i < 100; ++i) {
    PiecewiseFn f = gen.normal_convex();
    EXPECT_TRUE(SameFunction(costar(f, unit_at_zero()), f));
  }
}

TEST(Dualize, NameAndExamples) {
  TruthValueOp d = dualize(star_op());
  EXPECT_EQ(d.name, "star^c");
  EXPECT_TRUE(SameFunction(d(ind(0, 1, 1, 1), ind(1, 5, 3, 5)), ind(1, 5, 1, 1)));
  auto gen = generator(68);
  for (int i = 0; i < 50; ++i) {
    PiecewiseFn f = gen.normal_convex();
    EXPECT_TRUE(SameFunction(d(f, unit_at_zero()), f));
  }
}

TEST(Dualize, InvolutionAndAgreementWithCostar) {
  TruthValueOp d = dualize(star_op());
  TruthValueOp dd = dualize(d);
  auto gen = generator(69);
  for (int i = 0; i < 100; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    EXPECT_TRUE(SameFunction(dd(f, g), star(f, g)));
    EXPECT_TRUE(SameFunction(d(f, g), costar(f, g)));
  }
}

TEST(Dualize, MeetAndJoinAreDual) {
  TruthValueOp d = dualize(meet_op());
  auto gen = generator(70);
  for (int i = 0; i < 50; ++i) {
    PiecewiseFn f = gen.normal_convex(), g = gen.normal_convex();
    EXPECT_TRUE(SameFunction(d(f, g), join(f, g)));
  }
}

TEST(Dualize, TransportsNeutralAndIntervalAxioms) {
  // star passes O3 and O5; its dual passes O3' and O5' on the reflected fixtures.
  TruthValueOp d = dualize(star_op());
  for (long long a = 0; a <= 10; a += 2)
    for (long long b = a; b <= 10; b += 2) {
      PiecewiseFn i_ab = ind(a, 10, b, 10);
      ASSERT_TRUE(SameFunction(star(ind(0, 1, 1, 1), i_ab), ind(0, 1, b, 10)));
      ASSERT_TRUE(SameFunction(d(ind(0, 1, 1, 1), i_ab), ind(a, 10, 1, 1)));
    }
  auto gen = generator(71);
  for (int i = 0; i < 50; ++i) {
    PiecewiseFn f = gen.normal_convex();
    ASSERT_TRUE(SameFunction(star(f, top()), f));
    ASSERT_TRUE(SameFunction(d(reflect(f), unit_at_zero()), reflect(f)));
  }
}

}  // namespace
}  // namespace t2fuzzy::testing
