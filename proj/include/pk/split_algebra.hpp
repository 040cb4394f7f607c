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

#ifndef PK_SPLIT_ALGEBRA_HPP
#define PK_SPLIT_ALGEBRA_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "pk/cyclotomic.hpp"
#include "pk/linalg.hpp"

namespace pk {

/// An element of K^m, one field entry per primitive idempotent e_c.
using AlgElem = Vector<CycNum>;

/// The split algebra K^m over K = Q(zeta_n).
class SplitAlgebra {
 public:
  SplitAlgebra(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

  AlgElem zero() const;
  AlgElem one() const;
  /// The primitive idempotent e_c (0-based component).
  AlgElem idempotent(int c) const;
  AlgElem element(std::initializer_list<CycNum> comps) const;
  /// Moves every entry into Q(zeta_n); rejects a wrong size or foreign field.
  AlgElem normalized(const AlgElem& x) const;

  friend bool operator==(const SplitAlgebra&, const SplitAlgebra&) = default;

 private:
  int n_;
  int m_;
};

/// Ideal of K^m spanned by {e_c : c in support}; its unit 1_I is the indicator of the support.
class IdempotentIdeal {
 public:
  static constexpr int kMaxComponents = 64;

  IdempotentIdeal() = default;
  IdempotentIdeal(int m, std::uint64_t mask);
  static IdempotentIdeal full(int m);
  static IdempotentIdeal empty(int m) { return IdempotentIdeal(m, 0); }
  static IdempotentIdeal of(int m, std::span<const int> comps);

  int m() const noexcept { return m_; }
  std::uint64_t mask() const noexcept { return mask_; }
  bool contains(int c) const noexcept { return (mask_ >> c) & 1U; }
  int size() const noexcept;
  bool is_empty() const noexcept { return mask_ == 0; }
  bool is_full() const noexcept;
  std::vector<int> members() const;

  IdempotentIdeal operator&(const IdempotentIdeal& other) const;
  IdempotentIdeal operator|(const IdempotentIdeal& other) const;
  friend bool operator==(const IdempotentIdeal&, const IdempotentIdeal&) = default;

  AlgElem identity(int n) const;

 private:
  int m_ = 0;
  std::uint64_t mask_ = 0;
};

/// Support of x: the set of components where x is nonzero.
IdempotentIdeal support(const AlgElem& x);

AlgElem elem_mul(const AlgElem& a, const AlgElem& b);
AlgElem elem_add(const AlgElem& a, const AlgElem& b);
AlgElem elem_scalar(const CycNum& s, const AlgElem& a);

/// True iff a lives in the ideal and is invertible there (nonzero on every component of it).
bool is_unit(const AlgElem& a, const IdempotentIdeal& ideal);
/// Componentwise inverse on the support of a, zero elsewhere.
AlgElem partial_inverse(const AlgElem& a);

/// A K-subspace of K^m stored as its reduced row echelon basis.
class Subspace {
 public:
  explicit Subspace(SplitAlgebra algebra);
  Subspace(SplitAlgebra algebra, Matrix<CycNum> rows);

  static Subspace full(SplitAlgebra algebra);
  static Subspace span(SplitAlgebra algebra, std::span<const AlgElem> elems);

  const SplitAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix<CycNum>& basis() const noexcept { return basis_; }
  const std::vector<Eigen::Index>& pivots() const noexcept { return pivots_; }
  int dim() const noexcept { return static_cast<int>(basis_.rows()); }
  AlgElem basis_vector(int i) const { return basis_.row(i).transpose(); }
  std::vector<AlgElem> basis_vectors() const;

  bool contains(const AlgElem& x) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const noexcept { return basis_.rows() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  SplitAlgebra algebra_;
  Matrix<CycNum> basis_;
  std::vector<Eigen::Index> pivots_;
};

Subspace sum(const Subspace& x, const Subspace& y);
Subspace intersect(const Subspace& x, const Subspace& y);
/// {v : sum_c v_c x_c = 0 for all x in X} under the standard symmetric form.
Subspace orthogonal(const Subspace& x);
/// Span of all products xy, x in X, y in Y.
Subspace module_product(const Subspace& x, const Subspace& y);
/// X * u.
Subspace scaled(const Subspace& x, const AlgElem& u);
/// X * e_B: the projection of X onto the components of `block`.
Subspace restrict_to(const Subspace& x, const IdempotentIdeal& block);

/// Components on which some element of X is nonzero.
IdempotentIdeal support(const Subspace& x);

bool is_unital_subalgebra(const Subspace& r);

/// Supports of the primitive idempotents of a unital subalgebra R of K^m. Two components are
/// linked when a basis row of R is nonzero on both; blocks are the connected classes, ordered by
/// their smallest component.
std::vector<IdempotentIdeal> blocks(const Subspace& r);

/// dim(Q e_B) / dim(R e_B) for each block B of R. Throws std::invalid_argument if R is not a
/// unital subalgebra and MathError if some quotient is not an integer.
std::vector<int> rank_over(const Subspace& q, const Subspace& r);

}  // namespace pk

#endif  // PK_SPLIT_ALGEBRA_HPP
