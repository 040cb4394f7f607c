/*
 * Copyright 2026 The pk Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pk/errors.hpp"
#include "pk/partial_action.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

namespace pk {
namespace {

TEST(FinAbGroup, MixedRadixIndexing) {
  const FinAbGroup g({2, 4});
  EXPECT_EQ(g.order(), 8);
  EXPECT_EQ(g.tuple(5), (std::vector<int>{1, 1}));
  EXPECT_EQ(g.op(5, 7), g.index(std::vector<int>{0, 0}));
  EXPECT_EQ(g.element_order(1), 4);
  EXPECT_EQ(g.element_order(4), 2);
  EXPECT_EQ(g.name(5), "(1,1)");
  EXPECT_EQ(FinAbGroup::cyclic(4).name(3), "g^3");
  EXPECT_THROW(FinAbGroup({4, 2}), std::invalid_argument);
  EXPECT_EQ(FinAbGroup({1}).order(), 1);
}

TEST(PartialAction, FixturesValidate) {
  EXPECT_TRUE(validate(fixture::c4_on_three()));
  EXPECT_TRUE(validate(fixture::c5_on_four()));
  EXPECT_TRUE(validate(fixture::c2_in_c4()));
  EXPECT_TRUE(validate(fixture::c3_in_c6()));
  EXPECT_TRUE(validate(fixture::regular(5)));
}

TEST(PartialAction, BrokenSquareViolatesComposition) {
  const auto a = fixture::c4_on_three_broken();
  const auto v = find_violation(a);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->axiom, 3);
  EXPECT_EQ(v->g, 1);
  EXPECT_EQ(v->h, 1);
  EXPECT_EQ(v->component, 2);
  EXPECT_EQ(validate(a).detail, "axiom (iii) fails at (g, h) = (g, g), component 3");
}

TEST(PartialAction, ShapeErrorsAreRejected) {
  const SplitAlgebra s(2, 2);
  std::vector<PartialAction::Map> maps{{IdempotentIdeal::full(2), {0, 1}}, {IdempotentIdeal::full(2), {0, 0}}};
  EXPECT_THROW(PartialAction(s, FinAbGroup::cyclic(2), maps), std::invalid_argument);
  maps[1].sigma = {1, -1};
  EXPECT_THROW(PartialAction(s, FinAbGroup::cyclic(2), maps), std::invalid_argument);
}

TEST(PartialAction, ApplyFollowsComponents) {
  const auto a = fixture::c4_on_three();
  const auto& s = a.algebra();
  EXPECT_EQ(apply(a, 1, s.idempotent(1)), s.idempotent(0));
  EXPECT_EQ(apply(a, 1, s.idempotent(0)), s.zero());
  const AlgElem x = s.element({1, 2, 3});
  EXPECT_EQ(apply(a, 0, x), x);
  EXPECT_EQ(apply(a, 2, x), s.element({3, 0, 1}));
}

TEST(PartialAction, Invariants) {
  const auto a = fixture::c4_on_three();
  const AlgElem ones[] = {a.algebra().one()};
  EXPECT_EQ(invariants(a), Subspace::span(a.algebra(), ones));

  const auto b = fixture::c5_on_four();
  const AlgElem rs[] = {b.algebra().element({1, 1, 0, 0}), b.algebra().element({0, 0, 1, 1})};
  EXPECT_EQ(invariants(b), Subspace::span(b.algebra(), rs));
  EXPECT_TRUE(is_unital_subalgebra(invariants(b)));

  const auto t = PartialAction::trivial(SplitAlgebra(3, 2), FinAbGroup());
  EXPECT_EQ(invariants(t), Subspace::full(t.algebra()));
}

TEST(PartialAction, TraceAndTraceOne) {
  const auto a = fixture::c4_on_three();
  const auto& s = a.algebra();
  EXPECT_EQ(trace(a, s.idempotent(0)), s.one());
  EXPECT_EQ(trace(a, s.zero()), s.zero());
  EXPECT_EQ(trace(a, find_trace_one(a)), s.one());

  const auto swap = fixture::regular(2);
  EXPECT_EQ(trace(swap, swap.algebra().idempotent(0)), swap.algebra().one());
  const auto reg = fixture::regular(5);
  EXPECT_EQ(find_trace_one(reg), reg.algebra().idempotent(0));
}

TEST(PartialAction, TrivialActionHasTraceOneButNoCoordinates) {
  const auto t = PartialAction::trivial(SplitAlgebra(2, 1), FinAbGroup::cyclic(2));
  EXPECT_EQ(find_trace_one(t), t.algebra().element({mpq_class(1, 2)}));
  EXPECT_THROW(find_galois_coordinates(t), NotGalois);
}

TEST(PartialAction, GaloisCoordinates) {
  for (const auto& a : {fixture::c4_on_three(), fixture::c5_on_four(), fixture::regular(2), fixture::c2_in_c4(),
                        fixture::c3_in_c6()}) {
    const auto coords = find_galois_coordinates(a);
    EXPECT_TRUE(verify_coordinates(a, coords));
  }
  const auto swap = fixture::regular(2);
  GaloisCoordinates bad{{swap.algebra().one()}, {swap.algebra().one()}};
  EXPECT_FALSE(verify_coordinates(swap, bad));
}

TEST(PartialAction, GlobalAndExtensionByZero) {
  EXPECT_FALSE(is_global(fixture::c4_on_three()));
  EXPECT_FALSE(is_extension_by_zero(fixture::c4_on_three()).has_value());
  EXPECT_EQ(is_extension_by_zero(fixture::c2_in_c4()), (std::vector<int>{0, 2}));
  EXPECT_EQ(is_extension_by_zero(fixture::c3_in_c6()), (std::vector<int>{0, 2, 4}));
  const auto t = PartialAction::trivial(SplitAlgebra(2, 3), FinAbGroup());
  EXPECT_TRUE(is_global(t));
  EXPECT_EQ(is_extension_by_zero(t), (std::vector<int>{0}));
  EXPECT_TRUE(is_global(fixture::regular(4)));
}

TEST(PartialAction, RestrictToSubgroup) {
  const auto a = fixture::c4_on_three();
  const auto id = restrict_to_subgroup(a, 0);
  EXPECT_EQ(id.group().order(), 1);
  const auto sq = restrict_to_subgroup(a, 2);
  EXPECT_EQ(sq.group().order(), 2);
  EXPECT_TRUE(validate(sq));
  EXPECT_FALSE(is_global(sq));
  const auto h = restrict_to_subgroup(fixture::c2_in_c4(), 2);
  EXPECT_TRUE(is_global(h));
  EXPECT_TRUE(is_global(restrict_to_subgroup(fixture::regular(6), 3)));
}

TEST(PartialAction, InducedShiftIsTheFourCycleExampleUpToRelabeling) {
  const auto beta = gen::cyclic_permutation_action(4, {4});
  const auto induced = induced_from_global(4, FinAbGroup::cyclic(4), beta, IdempotentIdeal(4, 0b0111));
  const int reverse[] = {2, 1, 0};
  EXPECT_TRUE(g_isomorphic(induced, fixture::c4_on_three(), reverse));
  const int identity[] = {0, 1, 2};
  EXPECT_FALSE(g_isomorphic(induced, fixture::c4_on_three(), identity));
  EXPECT_TRUE(g_isomorphic(induced, induced, identity));
  const int four[] = {0, 1, 2, 3};
  EXPECT_EQ(g_isomorphic(fixture::c4_on_three(), fixture::c5_on_four(), four).detail,
            "the actions are by different groups");
  EXPECT_THROW(induced_from_global(4, FinAbGroup::cyclic(4), beta, IdempotentIdeal::empty(4)), std::invalid_argument);
  EXPECT_EQ(induced_from_global(4, FinAbGroup::cyclic(4), beta, IdempotentIdeal::full(4)), fixture::regular(4));
}

TEST(PartialAction, TwistsMustBeConstantOnOrbits) {
  const auto a = fixture::regular(2, 5);
  const int perm[] = {0, 1};
  const int same[] = {2, 2};
  const int mixed[] = {1, 2};
  EXPECT_TRUE(g_isomorphic(a, a, perm, same));
  EXPECT_FALSE(g_isomorphic(a, a, perm, mixed));
}

TEST(PartialActionProperties, InducedActionsAlwaysValidate) {
  int count = 0;
  for (int k = 1; k <= 6; ++k) {
    for (const auto& inst : gen::all_induced(k, 6, k)) {
      ASSERT_TRUE(validate(inst.action)) << inst.label << ": " << validate(inst.action).detail;
      ++count;
    }
  }
  EXPECT_GT(count, 1000);
}

TEST(PartialActionProperties, CompositionIdentityOnElements) {
  std::mt19937 rng(99);
  for (int k = 2; k <= 5; ++k) {
    for (const auto& inst : gen::all_induced(k, 4, k)) {
      const auto& a = inst.action;
      const AlgElem x = gen::random_element(rng, a.algebra());
      for (int g = 0; g < k; ++g) {
        for (int h = 0; h < k; ++h) {
          const int gh = a.group().op(g, h);
          const AlgElem mask = elem_mul(a.source(h).identity(a.n()), a.source(gh).identity(a.n()));
          const AlgElem xm = elem_mul(x, mask);
          ASSERT_EQ(apply(a, g, apply(a, h, xm)), apply(a, gh, xm)) << inst.label;
        }
      }
    }
  }
}

TEST(PartialActionProperties, GaloisInstancesHaveInvariantTraceAndTraceOne) {
  std::mt19937 rng(17);
  int count = 0;
  for (int k = 2; k <= 6; ++k) {
    for (const auto& inst : gen::galois_induced(k, 5, k)) {
      const auto& a = inst.action;
      const auto coords = find_galois_coordinates(a);
      ASSERT_TRUE(verify_coordinates(a, coords)) << inst.label;
      const Subspace r = invariants(a);
      for (int trial = 0; trial < 3; ++trial) EXPECT_TRUE(r.contains(trace(a, gen::random_element(rng, a.algebra()))));
      EXPECT_EQ(trace(a, find_trace_one(a)), a.algebra().one());
      ++count;
    }
  }
  EXPECT_GT(count, 50);
}

// On each orbit the trace matrix is the stabilizer order times the all-ones block.
TEST(PartialActionProperties, TraceOneAlwaysExistsOverSplitAlgebras) {
  for (int k = 1; k <= 6; ++k) {
    for (const auto& inst : gen::all_induced(k, 5, k)) {
      EXPECT_EQ(trace(inst.action, find_trace_one(inst.action)), inst.action.algebra().one()) << inst.label;
    }
  }
}

TEST(PartialActionProperties, GaloisIffNoFixedComponent) {
  for (int k = 2; k <= 4; ++k) {
    for (const auto& inst : gen::all_induced(k, 4, k)) {
      const auto& a = inst.action;
      bool fixed = false;
      for (int g = 1; g < k; ++g) {
        for (int c : a.source(g).members()) fixed = fixed || a.sigma(g, c) == c;
      }
      EXPECT_EQ(is_partial_galois(a), !fixed) << inst.label;
    }
  }
}

}  // namespace
}  // namespace pk
