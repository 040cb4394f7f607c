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


#ifndef PK_RADICAL_HPP
#define PK_RADICAL_HPP

// Radical extensions over a split base R. Over each block u_B of R the module Q is a line
// K q_B, so Q^{(x)i} u_B is the line spanned by the word q_B^{(x)i} and a graded element is an
// m x (number of blocks) coefficient matrix: entry (i, B) multiplies q_B^{(x)i}.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pk/kummer.hpp"

namespace pk {

using GradedElem = Matrix<CycNum>;

class RadicalExtension {
 public:
  const Subspace& base() const noexcept { return base_; }
  const Subspace& module() const noexcept { return module_; }
  int modulus() const noexcept { return modulus_; }
  int field_order() const noexcept { return base_.algebra().n(); }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  const std::vector<IdempotentIdeal>& blocks() const noexcept { return blocks_; }
  /// The canonical generator of Q u_B inside S.
  const std::vector<AlgElem>& generators() const noexcept { return generators_; }
  /// phi(q_B^{(x)m}) = phi_B u_B.
  const std::vector<CycNum>& phi() const noexcept { return phi_; }
  bool phi_invertible() const;

  GradedElem zero() const;
  GradedElem one() const;
  GradedElem basis(int degree, int block) const;
  /// Rank of the carrier over K, one line per degree and block.
  int dim() const noexcept { return modulus_ * block_count(); }

 private:
  friend RadicalExtension build_radical(const Subspace&, const Subspace&, int, const Matrix<CycNum>&);
  friend RadicalExtension i_radical_to_radical(const RadicalExtension&, std::span<const int>);
  RadicalExtension(Subspace base, Subspace module, int modulus, std::vector<IdempotentIdeal> blocks,
                   std::vector<AlgElem> generators, std::vector<CycNum> phi)
      : base_(std::move(base)),
        module_(std::move(module)),
        modulus_(modulus),
        blocks_(std::move(blocks)),
        generators_(std::move(generators)),
        phi_(std::move(phi)) {}

  Subspace base_;
  Subspace module_;
  int modulus_ = 1;
  std::vector<IdempotentIdeal> blocks_;
  std::vector<AlgElem> generators_;
  std::vector<CycNum> phi_;
};

/// phi is the matrix of Q^{(x)m} -> R in the bases q_B^{(x)m} and u_B. Throws RankNotOne if Q is
/// not a line over some block, PhiNotLinear if phi mixes blocks, and invalid_argument if R is not
/// a unital subalgebra or Q is not an R-module.
RadicalExtension build_radical(const Subspace& r, const Subspace& q, int m, const Matrix<CycNum>& phi);

/// The contraction q_B^{(x)m} -> q_B^m computed inside S; throws MathError when q_B^m is not in R.
Matrix<CycNum> multiplication_phi(const Subspace& r, const Subspace& q, int m);

/// x . y = phi~(x (x) y).
GradedElem multiply(const RadicalExtension& ext, const GradedElem& x, const GradedElem& y);

/// Contains 0 and is closed under addition mod m.
bool is_saturated(std::span<const int> members, int m);

struct IRadical {
  RadicalExtension parent;
  std::vector<int> members;
  bool saturated = false;
  /// Contains 1 and is closed under the product, checked on every pair of basis words.
  bool subalgebra = false;
  /// The fixed points of mu over C_m equal the degree-zero part; unset when zeta_m is not in K.
  std::optional<bool> invariants_are_base;
};

IRadical i_radical(const RadicalExtension& ext, std::span<const int> members);

/// For I = <i0> with i0 = m / |I|: Q' = Q^{(x)i0}, modulus |I| and phi' = phi. Checks that
/// degree k -> degree k i0 is an algebra map onto the I-part. Throws NotSaturated.
RadicalExtension i_radical_to_radical(const RadicalExtension& ext, std::span<const int> members);

/// mu_g(x) = chi(g)^i x on degree i.
GradedElem mu_action(const RadicalExtension& ext, const Character& chi, int g, const GradedElem& x);

/// Fixed points of every mu_g on the I-part, as a basis of coefficient matrices.
std::vector<GradedElem> mu_invariants(const RadicalExtension& ext, std::span<const int> members,
                                      const FinAbGroup& group, const Character& chi);

/// lambda(q_B^{(x)i}) = q_B^i, computed in S.
AlgElem realize(const RadicalExtension& ext, const GradedElem& x);

struct LambdaReport {
  bool module_iso = false;         // images of the X-words form a K-basis of S
  bool degree_preserving = false;  // q_B^i lies in Q_{chi^i}; true when no targets are given
  std::optional<bool> multiplicative;
  int low_pairs = 0;   // i + j < m
  int wrap_pairs = 0;  // i + j >= m
  bool low_ok = true;
  bool wrap_ok = true;
};

/// Exhaustive check of lambda_X on basis words. Products are only tested for saturated X.
/// targets[i], when given, is the module Q_{chi^i} that degree i must land in.
LambdaReport verify_lambda(const RadicalExtension& ext, std::span<const int> members,
                           std::span<const Subspace> targets = {});

struct ProductEntry {
  int left = 0;
  int right = 0;
  int block = 0;
  int degree = 0;
  CycNum coefficient;
};

/// q_B^{(x)i} . q_B^{(x)j} = coefficient q_B^{(x)degree} for i, j in members.
std::vector<ProductEntry> product_table(const RadicalExtension& ext, std::span<const int> members);

struct SubgroupRoute {
  int generator = 0;         // H = <g^generator>
  std::vector<int> subgroup;
  std::vector<int> members;  // character exponents used
  bool extension_by_zero = false;
  bool invariants_match = false;  // S^{alpha_H} = R
  bool rank_matches = false;      // rank of S over R is |H| on every block
  bool direct = false;
  LambdaReport lambda;
  bool verified() const {
    return extension_by_zero && invariants_match && rank_matches && direct && lambda.module_iso &&
           lambda.degree_preserving && lambda.multiplicative.value_or(false);
  }
};

struct Classification {
  std::vector<DirectSubset> direct_subsets;
  std::vector<LambdaReport> module_verdicts;  // lambda_X for each direct subset, in order
  std::vector<std::vector<int>> saturated;
  /// One entry per saturated direct I, with H = <g^{i0}> read off from I.
  std::vector<SubgroupRoute> from_saturated;
  /// One entry per subgroup H whose restricted action is global, X = {0, ..., |H| - 1}.
  std::vector<SubgroupRoute> from_subgroups;
  std::optional<SubgroupRoute> chosen;
  std::optional<RadicalExtension> radical;
  std::string verdict;
  bool routes_agree = true;
  /// No direct subset at all.
  bool potential_counterexample = false;
};

/// Requires a cyclic group; characters are the powers of chi_1. Propagates SumNotS.
Classification parametrize(const KummerData& kd);

}  // namespace pk

#endif  // PK_RADICAL_HPP
