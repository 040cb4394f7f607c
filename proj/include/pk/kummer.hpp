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

#ifndef PK_KUMMER_HPP
#define PK_KUMMER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pk/cohomology.hpp"
#include "pk/partial_action.hpp"

namespace pk {

/// omega 1 lies in R, omega^n = 1 and every 1 - omega^i (0 < i < n) is a unit of R.
bool is_kummerian(const Subspace& r, const CycNum& omega, int n);

/// Everything the trace-one projectors need: R = S^alpha, omega, w with tr(w) = 1 and
/// Galois coordinates.
struct KummerData {
  std::shared_ptr<const PartialAction> action;
  int n = 1;
  CycNum omega;
  Subspace r;
  AlgElem w;
  GaloisCoordinates coords;

  const SplitAlgebra& algebra() const { return action->algebra(); }
};

/// Builds the data with omega = zeta_n for the field order n. Throws NotGalois or NoTraceOne,
/// and MathError if R is not n-kummerian.
KummerData make_kummer_data(std::shared_ptr<const PartialAction> action);

/// f^(x) = sum_g f^-1(g) alpha_g(w x 1_{g^-1}).
AlgElem f_hat(const KummerData& kd, const Cochain& f, const AlgElem& x);
/// f~(x) = sum_g f^-1(g) alpha_g(x 1_{g^-1}).
AlgElem f_tilde(const KummerData& kd, const Cochain& f, const AlgElem& x);
Subspace image_of_f_hat(const KummerData& kd, const Cochain& f);
Subspace image_of_f_tilde(const KummerData& kd, const Cochain& f);

struct QModule {
  Cochain cocycle;
  Subspace space;
};

/// Q_f = {a : alpha_g(a 1_{g^-1}) = f(g) a for all g}. Throws NotACocycle.
QModule q_module(const KummerData& kd, const Cochain& f);

/// f^ o f^ = f^ on a basis, and Im f^ = Im f~ = Q_f.
Verdict verify_projector(const KummerData& kd, const Cochain& f);

struct QLawReport {
  bool product = false;       // Q_f Q_f' = Q_ff'
  bool covers_s = false;      // Q_f S = S
  bool coordinates = false;   // sum f^(x_i) (f^-1)~(y_i) = 1
  bool faithful = false;      // Ann_R(Q_f) = 0
  bool inverse = false;       // Q_f Q_f^-1 = R
  bool coboundary = false;    // Q_f = R t when f = delta t; Q_f = Q_f' u when f ~ f'
  bool all() const { return product && covers_s && coordinates && faithful && inverse && coboundary; }
};

QLawReport verify_q_laws(const KummerData& kd, const Cochain& f, const Cochain& fp);

/// A unit of S contained in the subspace, if any. Over an infinite field this exists iff no
/// component vanishes on the whole subspace.
std::optional<AlgElem> unit_in(const Subspace& x);

/// Rank one on every block of R, dim (Q_f M) e_B = dim M e_B for a few R-submodules M derived
/// from `seed`, and Q_f = R t for a unit t iff f is a coboundary.
Verdict verify_pic_hom(const KummerData& kd, std::span<const Cochain> cocycles, std::uint64_t seed = 1);

/// chi(t)(g) = zeta_n^{exponent(g)}; characters of G are indexed by the elements t of G:
/// chi_t(g) = zeta_n^{sum_i (n / d_i) t_i g_i}. The exponent of G must divide n.
struct Character {
  int n = 1;
  int index = 0;
  std::vector<int> exponents;

  CycNum value(int g) const { return CycNum::root_of_unity(n, exponents.at(static_cast<std::size_t>(g))); }
  friend bool operator==(const Character&, const Character&) = default;
};

std::vector<Character> characters(const FinAbGroup& group, int n);
/// chi_p(g) = chi(g) 1_g.
Cochain char_p(const std::shared_ptr<const PartialAction>& action, const Character& chi);
/// {chi : chi(g) = 1 whenever 1_g != 0}.
std::vector<Character> ker_mu_p(const PartialAction& a, int n);
/// sum_chi chi(g) = 0 for g != e and |G| at e, exactly.
Verdict character_sum_check(const FinAbGroup& group, int n);

struct Decomposition {
  struct Entry {
    Character chi;
    QModule module;
    std::vector<int> block_ranks;
  };
  std::vector<Entry> entries;  // by character index
  std::vector<IdempotentIdeal> blocks;
  bool direct = false;         // dimensions of the full sum add up to m
  bool global = false;
};

/// Q_{chi_p} for every character. Throws SumNotS if they do not span S.
Decomposition decompose(const KummerData& kd);

struct DirectSubset {
  std::vector<int> members;  // character indices
  bool saturated = false;    // contains the trivial character and is closed under products
};

/// Every X with S = (+)_{i in X} Q_{chi_i}, by exhaustive search; sorted by size then
/// lexicographically. Throws SizeGuardExceeded for more than max_characters characters.
std::vector<DirectSubset> find_direct_subsets(const Decomposition& dec, const FinAbGroup& group,
                                              int max_characters = 12);

/// I contains the identity and is closed under the group operation of G (for G = C_m: contains
/// 0 and is closed under addition mod m).
bool is_saturated(std::span<const int> members, const FinAbGroup& group);

}  // namespace pk

#endif  // PK_KUMMER_HPP
