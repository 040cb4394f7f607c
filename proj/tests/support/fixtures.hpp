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

#ifndef PK_TESTS_SUPPORT_FIXTURES_HPP
#define PK_TESTS_SUPPORT_FIXTURES_HPP

#include "pk/partial_action.hpp"

namespace pk::fixture {

/// C4 on K^3 with D_g = {1,2}, D_{g^2} = {1,3}, D_{g^3} = {2,3} (1-based components).
PartialAction c4_on_three();
/// The same data with alpha_{g^2} replaced by the identity of {1,3}.
PartialAction c4_on_three_broken();
/// C5 on K^4: g moves e2 -> e1, e4 -> e3; g^4 is its inverse; g^2, g^3 have zero domain.
PartialAction c5_on_four();
/// C4 on K^2: g^2 swaps the components, g and g^3 have zero domain.
PartialAction c2_in_c4();
/// C6 on K^3: g^2 and g^4 rotate the components, the odd powers have zero domain.
PartialAction c3_in_c6();
/// Regular global action of C_k on K^k.
PartialAction regular(int k);
/// Regular action of C_k with Kummer order n (k must divide n).
PartialAction regular(int k, int n);

}  // namespace pk::fixture

#endif  // PK_TESTS_SUPPORT_FIXTURES_HPP
