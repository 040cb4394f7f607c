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

#ifndef PK_TESTS_SUPPORT_GENERATORS_HPP
#define PK_TESTS_SUPPORT_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "pk/cyclotomic.hpp"
#include "pk/linalg.hpp"
#include "pk/partial_action.hpp"

namespace pk::gen {

/// Small random element of Q(zeta_n); about a third of the draws are zero.
CycNum small_cyc(std::mt19937& rng, int n);

/// Random rows x cols matrix, with rank pushed down by repeating combinations of earlier rows.
Matrix<CycNum> low_rank_matrix(std::mt19937& rng, int n, int rows, int cols);

/// Random element of K^m with small entries.
AlgElem random_element(std::mt19937& rng, const SplitAlgebra& s);
/// Random unit of the ideal: nonzero small entries on its support, zero elsewhere.
AlgElem random_unit(std::mt19937& rng, const SplitAlgebra& s, const IdempotentIdeal& ideal);

/// Nonincreasing lists of divisors of k with the given sum.
std::vector<std::vector<int>> cycle_types(int k, int points);
/// Global action of C_k in which the generator runs through consecutive blocks of the given lengths.
std::vector<std::vector<int>> cyclic_permutation_action(int k, const std::vector<int>& cycle_lengths);

struct InducedInstance {
  std::vector<std::vector<int>> beta;
  IdempotentIdeal e;
  PartialAction action;
  std::string label;
};

/// One induced action of C_k for every cycle type on at most max_points points and every
/// nonempty E. Up to G-isomorphism this covers every partial action of C_k on at most
/// max_points components.
std::vector<InducedInstance> all_induced(int k, int max_points, int n);

/// Induced actions coming from free C_k orbits: one per multiset of orbit patterns (nonempty
/// subsets of Z_k up to rotation) of total size at most max_m. These are exactly the partial
/// Galois actions of C_k on at most max_m components, up to G-isomorphism.
std::vector<InducedInstance> galois_induced(int k, int max_m, int n);

}  // namespace pk::gen

#endif  // PK_TESTS_SUPPORT_GENERATORS_HPP
