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

#ifndef PK_COHOMOLOGY_HPP
#define PK_COHOMOLOGY_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pk/partial_action.hpp"

namespace pk {

/// An n-cochain: one value per (g_1, ..., g_n), a unit of S 1_{g_1} 1_{g_1 g_2} ... 1_{g_1...g_n}.
///
/// Tuples are flattened in mixed radix over the group order with g_1 most significant, so an
/// arity-0 cochain has a single value and a 1-cochain is indexed by the group element.
class Cochain {
 public:
  Cochain(std::shared_ptr<const PartialAction> action, int arity, std::vector<AlgElem> values);
  static Cochain identity(std::shared_ptr<const PartialAction> action, int arity);

  const PartialAction& action() const noexcept { return *action_; }
  const std::shared_ptr<const PartialAction>& action_ptr() const noexcept { return action_; }
  int arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return values_.size(); }

  const AlgElem& at(std::size_t flat) const { return values_.at(flat); }
  const AlgElem& operator()(std::span<const int> gs) const { return values_.at(flatten(gs)); }
  const AlgElem& operator()(int g) const { return values_.at(static_cast<std::size_t>(g)); }
  const AlgElem& operator()(int g, int h) const;

  std::size_t flatten(std::span<const int> gs) const;
  std::vector<int> unflatten(std::size_t flat) const;

  /// 1_{g_1} 1_{g_1 g_2} ... 1_{g_1 ... g_n}.
  static IdempotentIdeal ideal(const PartialAction& a, std::span<const int> gs);
  /// Every value is a unit of its ideal.
  Verdict check_values() const;

  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

 private:
  std::shared_ptr<const PartialAction> action_;
  int arity_;
  std::vector<AlgElem> values_;
};

Cochain cochain_mul(const Cochain& f, const Cochain& g);
Cochain cochain_inv(const Cochain& f);
inline Cochain operator*(const Cochain& f, const Cochain& g) { return cochain_mul(f, g); }

/// (delta^0 t)(g) = alpha_g(t 1_{g^-1}) t^-1 for a unit t of S.
Cochain coboundary0(std::shared_ptr<const PartialAction> action, const AlgElem& t);
/// delta^n for n >= 1; an arity-0 cochain is sent through coboundary0.
Cochain coboundary(const Cochain& f);

/// f(gh) 1_g = f(g) alpha_g(f(h) 1_{g^-1}) for all g, h, together with the same identity for f^-1.
bool is_cocycle1(const Cochain& f);
/// A unit t with f = delta^0 t, found by propagating along sigma-orbits with t = 1 at the
/// smallest component of each orbit. Throws NotACocycle if f is not a 1-cocycle.
std::optional<AlgElem> is_coboundary1(const Cochain& f);
std::optional<AlgElem> cohomology_witness(const Cochain& f, const Cochain& g);
bool cohomologous(const Cochain& f, const Cochain& g);

/// 1-cochain with f(g) = sum_{c in D_g} zeta_n^{k(g,c)} e_c; k(g,c) = -1 marks c outside D_g.
struct TorsionCochain {
  int order = 1;  // n
  std::vector<std::vector<int>> exponents;

  friend bool operator==(const TorsionCochain&, const TorsionCochain&) = default;
  friend auto operator<=>(const TorsionCochain&, const TorsionCochain&) = default;
};

/// The exponent matrix of a torsion-valued 1-cochain, or nullopt if some value is not a power of
/// zeta_n on its domain.
std::optional<TorsionCochain> torsion_exponents(const Cochain& f, int n);
Cochain to_cochain(std::shared_ptr<const PartialAction> action, const TorsionCochain& t);
TorsionCochain torsion_mul(const TorsionCochain& a, const TorsionCochain& b);
TorsionCochain torsion_inv(const TorsionCochain& a);
TorsionCochain torsion_identity(const PartialAction& a, int n);

struct TorsionCensus {
  std::uint64_t z1 = 0;  // |Z^1_tors|
  std::uint64_t b1 = 0;  // torsion cocycles that are coboundaries of some unit
  std::uint64_t h1 = 0;  // classes
};

/// All torsion 1-cocycles with values in <zeta_n>, sorted by exponent matrix. n must divide the
/// field order. Throws SizeGuardExceeded if there are more than max_count of them.
std::vector<TorsionCochain> enumerate_torsion_cocycles(const PartialAction& a, int n,
                                                       std::uint64_t max_count = 1000000);
/// Number of torsion 1-cocycles, computed without enumerating.
std::uint64_t count_torsion_cocycles(const PartialAction& a, int n);

/// Class representatives (lexicographically least exponent matrix per class), sorted.
std::vector<TorsionCochain> h1_torsion(const std::shared_ptr<const PartialAction>& a, int n,
                                       std::uint64_t max_count = 1000000, TorsionCensus* census = nullptr);

}  // namespace pk

#endif  // PK_COHOMOLOGY_HPP
