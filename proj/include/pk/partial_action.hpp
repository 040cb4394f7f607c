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

#ifndef PK_PARTIAL_ACTION_HPP
#define PK_PARTIAL_ACTION_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pk/split_algebra.hpp"

namespace pk {

/// Finite abelian group Z_{d_1} x ... x Z_{d_r} with d_1 | d_2 | ... | d_r.
///
/// Elements are indexed 0..order-1 in mixed radix, first factor most significant, so the
/// identity is 0 and in the cyclic case index k is the element g^k.
class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<int> invariant_factors);
  static FinAbGroup cyclic(int n) { return FinAbGroup(std::vector<int>{n}); }

  const std::vector<int>& factors() const noexcept { return factors_; }
  int order() const noexcept { return order_; }
  bool is_cyclic() const noexcept { return factors_.size() <= 1; }

  int op(int a, int b) const;
  int inverse(int a) const;
  int power(int a, long k) const;
  int element_order(int a) const;

  std::vector<int> tuple(int a) const;
  int index(std::span<const int> tuple) const;
  /// "e" for the identity, "g^k" in the cyclic case, "(a,b,...)" otherwise.
  std::string name(int a) const;

  friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

/// Outcome of a structural check, with the first witness found when it fails.
struct Verdict {
  bool ok = true;
  std::string detail;
  explicit operator bool() const noexcept { return ok; }
};

struct AxiomViolation {
  int axiom;  // 1, 2 or 3
  int g;
  int h;
  int component;  // 0-based
};

/// Partial action of a finite abelian group on K^m by partial bijections of components.
///
/// For each g we store D_{g^-1} (the ideal alpha_g is defined on) and sigma_g, with
/// alpha_g(e_c) = e_{sigma_g(c)}. The range D_g is the image of sigma_g.
class PartialAction {
 public:
  struct Map {
    IdempotentIdeal source;  // D_{g^-1}
    std::vector<int> sigma;  // length m; -1 outside the source
  };

  /// Checks shape only: m entries per map, targets in range, each sigma injective and defined
  /// exactly on its source. Throws std::invalid_argument otherwise. Axioms are left to validate().
  PartialAction(SplitAlgebra algebra, FinAbGroup group, std::vector<Map> maps);
  static PartialAction trivial(SplitAlgebra algebra, FinAbGroup group);

  const SplitAlgebra& algebra() const noexcept { return algebra_; }
  const FinAbGroup& group() const noexcept { return group_; }
  int m() const noexcept { return algebra_.m(); }
  int n() const noexcept { return algebra_.n(); }

  /// D_{g^-1}.
  const IdempotentIdeal& source(int g) const { return maps_.at(static_cast<std::size_t>(g)).source; }
  /// D_g, the image of sigma_g.
  const IdempotentIdeal& range(int g) const { return ranges_.at(static_cast<std::size_t>(g)); }
  AlgElem unit(int g) const { return range(g).identity(n()); }
  /// sigma_g(c), or -1 when c is outside D_{g^-1}.
  int sigma(int g, int c) const { return maps_.at(static_cast<std::size_t>(g)).sigma.at(static_cast<std::size_t>(c)); }
  /// sigma_g^{-1}(c), or -1 when c is outside D_g.
  int sigma_inverse(int g, int c) const { return inverses_.at(static_cast<std::size_t>(g)).at(static_cast<std::size_t>(c)); }
  const Map& map(int g) const { return maps_.at(static_cast<std::size_t>(g)); }

  friend bool operator==(const PartialAction& a, const PartialAction& b);

 private:
  SplitAlgebra algebra_;
  FinAbGroup group_;
  std::vector<Map> maps_;
  std::vector<IdempotentIdeal> ranges_;
  std::vector<std::vector<int>> inverses_;
};

/// First violated axiom scanning (g, h) in index order; axiom (i) is checked before any pair.
std::optional<AxiomViolation> find_violation(const PartialAction& a);
Verdict validate(const PartialAction& a);
std::string describe(const PartialAction& a, const AxiomViolation& v);

/// alpha_g(x 1_{g^-1}); zero outside D_g.
AlgElem apply(const PartialAction& a, int g, const AlgElem& x);

/// S^alpha = {x : alpha_g(x 1_{g^-1}) = x 1_g for all g}.
Subspace invariants(const PartialAction& a);
AlgElem trace(const PartialAction& a, const AlgElem& s);
/// The solution of tr(w) = 1 with every free coordinate zero. Throws NoTraceOne.
AlgElem find_trace_one(const PartialAction& a);

struct GaloisCoordinates {
  std::vector<AlgElem> xs;
  std::vector<AlgElem> ys;
};

/// Solves sum_i x_i alpha_g(y_i 1_{g^-1}) = delta_{1,g} for the y_i with the given x_i fixed.
std::optional<std::vector<AlgElem>> solve_coordinates(const PartialAction& a, std::span<const AlgElem> xs);
/// Coordinates with x_i = e_i. Over K^m this choice is exhaustive: the system is solvable iff
/// no sigma_g with g != e fixes a component, and that condition is necessary for any choice.
/// Throws NotGalois.
GaloisCoordinates find_galois_coordinates(const PartialAction& a);
Verdict verify_coordinates(const PartialAction& a, const GaloisCoordinates& coords);
bool is_partial_galois(const PartialAction& a);

bool is_global(const PartialAction& a);
/// H = {g : D_g != 0} if it is a subgroup acting globally and every other domain vanishes.
std::optional<std::vector<int>> is_extension_by_zero(const PartialAction& a);

/// The partial action of the cyclic subgroup <generator>, indexed so that k means generator^k.
PartialAction restrict_to_subgroup(const PartialAction& a, int generator);

/// Induced partial action on K^E from a global permutation action beta of G on K^M.
/// beta[g][c] is the image of component c; E is a nonempty set of components.
PartialAction induced_from_global(int n, const FinAbGroup& group, const std::vector<std::vector<int>>& beta,
                                  const IdempotentIdeal& e);

/// Algebra map f: K^m -> K^m', f(x)_{perm[c]} = tau_{twist[c]}(x_c), where tau_u is zeta -> zeta^u.
/// Checks f(S_g) = S'_g and f alpha_g = alpha'_g f on S_{g^-1} for every g.
Verdict g_isomorphic(const PartialAction& a, const PartialAction& b, std::span<const int> perm,
                     std::span<const int> twist);
Verdict g_isomorphic(const PartialAction& a, const PartialAction& b, std::span<const int> perm);

}  // namespace pk

#endif  // PK_PARTIAL_ACTION_HPP
