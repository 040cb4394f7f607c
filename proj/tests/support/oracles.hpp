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

#ifndef PK_TESTS_SUPPORT_ORACLES_HPP
#define PK_TESTS_SUPPORT_ORACLES_HPP

// Slow, independent reference computations used to cross-check the library.

#include <complex>
#include <vector>

#include "pk/cohomology.hpp"
#include "pk/cyclotomic.hpp"
#include "pk/linalg.hpp"
#include "pk/partial_action.hpp"

namespace pk::oracle {

/// Value of x under the embedding zeta_n -> exp(2 pi i / n).
std::complex<double> numeric_value(const CycNum& x);

/// Determinant by cofactor expansion along the first row.
CycNum determinant(const Matrix<CycNum>& a);

/// Largest r such that some r x r minor is nonzero.
int rank_by_minors(const Matrix<CycNum>& a);

/// Every exponent matrix supported on the D_g, kept when the cocycle identity holds at every
/// (g, h, c). Sorted. Exponential in the number of unknowns.
std::vector<TorsionCochain> brute_torsion_cocycles(const PartialAction& a, int n);

/// Searches t in mu_n^m with delta^0 t = f. For a torsion f this search is complete: a witness
/// divided by its value at one component per orbit is again a witness, with values in the group
/// generated by the values of f.
bool brute_is_torsion_coboundary(const PartialAction& a, const TorsionCochain& f);

}  // namespace pk::oracle

#endif  // PK_TESTS_SUPPORT_ORACLES_HPP
