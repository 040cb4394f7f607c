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

#include "pk/linalg.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace pk {
namespace {

TEST(Linalg, RankAgreesWithMinors) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = (trial % 3 == 0) ? 1 : (trial % 3 == 1 ? 4 : 5);
    const auto a = gen::low_rank_matrix(rng, n, 1 + trial % 4, 1 + (trial / 4) % 4);
    EXPECT_EQ(rank(a), oracle::rank_by_minors(a)) << trial;
  }
}

TEST(Linalg, NullspaceIsAnnihilatedAndComplementary) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::low_rank_matrix(rng, 3, 1 + trial % 4, 1 + (trial / 3) % 5);
    const auto ns = nullspace(a);
    EXPECT_EQ(ns.rows() + rank(a), a.cols());
    const Matrix<CycNum> prod = a * ns.transpose();
    for (Eigen::Index i = 0; i < prod.size(); ++i) EXPECT_TRUE(prod(i).is_zero());
    EXPECT_EQ(rank(ns), ns.rows());
  }
}

TEST(Linalg, RrefIsCanonical) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = gen::low_rank_matrix(rng, 8, 3, 4);
    Matrix<CycNum> mix(3, 3);
    do {
      for (Eigen::Index i = 0; i < mix.size(); ++i) mix(i) = gen::small_cyc(rng, 8);
    } while (oracle::determinant(mix).is_zero());
    const Matrix<CycNum> b = mix * a;
    const auto ra = rref(a), rb = rref(b);
    ASSERT_EQ(ra.rows(), rb.rows());
    for (Eigen::Index i = 0; i < ra.size(); ++i) EXPECT_EQ(ra(i), rb(i));
  }
}

TEST(Linalg, SolveFindsSolutionOrReportsInconsistency) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = gen::low_rank_matrix(rng, 4, 3, 3);
    Vector<CycNum> b(3);
    for (int i = 0; i < 3; ++i) b(i) = gen::small_cyc(rng, 4);
    const auto x = solve(a, b);
    Matrix<CycNum> aug(3, 4);
    aug << a, b;
    const bool consistent = rank(aug) == rank(a);
    ASSERT_EQ(x.has_value(), consistent);
    if (x) {
      const Vector<CycNum> r = a * *x - b;
      for (Eigen::Index i = 0; i < r.size(); ++i) EXPECT_TRUE(r(i).is_zero());
    }
  }
}

}  // namespace
}  // namespace pk
