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

#include "support/fixtures.hpp"

#include <initializer_list>
#include <utility>

namespace pk::fixture {

namespace {

using Pairs = std::initializer_list<std::pair<int, int>>;

// Builds a cyclic action from 1-based (source, target) pairs per power of g.
PartialAction cyclic_action(int n, int m, int k, std::initializer_list<Pairs> per_element) {
  std::vector<PartialAction::Map> maps;
  for (const auto& pairs : per_element) {
    PartialAction::Map mp{IdempotentIdeal::empty(m), std::vector<int>(static_cast<std::size_t>(m), -1)};
    for (const auto& [src, dst] : pairs) {
      mp.source = mp.source | IdempotentIdeal(m, std::uint64_t{1} << (src - 1));
      mp.sigma[static_cast<std::size_t>(src - 1)] = dst - 1;
    }
    maps.push_back(std::move(mp));
  }
  return PartialAction(SplitAlgebra(n, m), FinAbGroup::cyclic(k), std::move(maps));
}

}  // namespace

PartialAction c4_on_three() {
  return cyclic_action(4, 3, 4, {{{1, 1}, {2, 2}, {3, 3}}, {{2, 1}, {3, 2}}, {{1, 3}, {3, 1}}, {{1, 2}, {2, 3}}});
}

PartialAction c4_on_three_broken() {
  return cyclic_action(4, 3, 4, {{{1, 1}, {2, 2}, {3, 3}}, {{2, 1}, {3, 2}}, {{1, 1}, {3, 3}}, {{1, 2}, {2, 3}}});
}

PartialAction c5_on_four() {
  return cyclic_action(5, 4, 5, {{{1, 1}, {2, 2}, {3, 3}, {4, 4}}, {{2, 1}, {4, 3}}, {}, {}, {{1, 2}, {3, 4}}});
}

PartialAction c2_in_c4() { return cyclic_action(4, 2, 4, {{{1, 1}, {2, 2}}, {}, {{1, 2}, {2, 1}}, {}}); }

PartialAction c3_in_c6() {
  return cyclic_action(6, 3, 6,
                       {{{1, 1}, {2, 2}, {3, 3}}, {}, {{1, 2}, {2, 3}, {3, 1}}, {}, {{1, 3}, {2, 1}, {3, 2}}, {}});
}

PartialAction regular(int k, int n) {
  std::vector<std::vector<int>> beta(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int g = 0; g < k; ++g) {
    for (int c = 0; c < k; ++c) beta[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = (c + g) % k;
  }
  return induced_from_global(n, FinAbGroup::cyclic(k), beta, IdempotentIdeal::full(k));
}

PartialAction regular(int k) { return regular(k, k); }

}  // namespace pk::fixture
