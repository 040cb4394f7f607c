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

#include "pk/split_algebra.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pk/errors.hpp"

namespace pk {

SplitAlgebra::SplitAlgebra(int n, int m) : n_(n), m_(m) {
  if (n < 1) throw std::invalid_argument("split algebra: n must be positive");
  if (m < 1 || m > IdempotentIdeal::kMaxComponents) {
    throw std::invalid_argument("split algebra: need 1 <= m <= 64, got m = " + std::to_string(m));
  }
}

AlgElem SplitAlgebra::zero() const { return AlgElem::Constant(m_, CycNum::zero(n_)); }

AlgElem SplitAlgebra::one() const { return AlgElem::Constant(m_, CycNum::one(n_)); }

AlgElem SplitAlgebra::idempotent(int c) const {
  if (c < 0 || c >= m_) throw std::out_of_range("idempotent: component out of range");
  AlgElem e = zero();
  e(c) = CycNum::one(n_);
  return e;
}

AlgElem SplitAlgebra::element(std::initializer_list<CycNum> comps) const {
  if (static_cast<int>(comps.size()) != m_) throw std::invalid_argument("element: wrong number of components");
  AlgElem x(m_);
  int i = 0;
  for (const auto& c : comps) x(i++) = c.in_field(n_);
  return x;
}

AlgElem SplitAlgebra::normalized(const AlgElem& x) const {
  if (x.size() != m_) throw std::invalid_argument("element has wrong number of components");
  AlgElem y(m_);
  for (int i = 0; i < m_; ++i) y(i) = x(i).in_field(n_);
  return y;
}

IdempotentIdeal::IdempotentIdeal(int m, std::uint64_t mask) : m_(m), mask_(mask) {
  if (m < 0 || m > kMaxComponents) throw std::invalid_argument("ideal: bad component count");
  if (m < kMaxComponents && (mask >> m) != 0) throw std::invalid_argument("ideal: support out of range");
}

IdempotentIdeal IdempotentIdeal::full(int m) {
  return IdempotentIdeal(m, m == kMaxComponents ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
}

IdempotentIdeal IdempotentIdeal::of(int m, std::span<const int> comps) {
  std::uint64_t mask = 0;
  for (int c : comps) {
    if (c < 0 || c >= m) throw std::out_of_range("ideal: component out of range");
    mask |= std::uint64_t{1} << c;
  }
  return IdempotentIdeal(m, mask);
}

int IdempotentIdeal::size() const noexcept { return std::popcount(mask_); }

bool IdempotentIdeal::is_full() const noexcept { return *this == full(m_); }

std::vector<int> IdempotentIdeal::members() const {
  std::vector<int> out;
  for (int c = 0; c < m_; ++c) {
    if (contains(c)) out.push_back(c);
  }
  return out;
}

IdempotentIdeal IdempotentIdeal::operator&(const IdempotentIdeal& other) const {
  return IdempotentIdeal(m_, mask_ & other.mask_);
}

IdempotentIdeal IdempotentIdeal::operator|(const IdempotentIdeal& other) const {
  return IdempotentIdeal(m_, mask_ | other.mask_);
}

AlgElem IdempotentIdeal::identity(int n) const {
  AlgElem e(m_);
  for (int c = 0; c < m_; ++c) e(c) = contains(c) ? CycNum::one(n) : CycNum::zero(n);
  return e;
}

IdempotentIdeal support(const AlgElem& x) {
  std::uint64_t mask = 0;
  for (Eigen::Index c = 0; c < x.size(); ++c) {
    if (!x(c).is_zero()) mask |= std::uint64_t{1} << c;
  }
  return IdempotentIdeal(static_cast<int>(x.size()), mask);
}

namespace {

void require_same_shape(const AlgElem& a, const AlgElem& b) {
  if (a.size() != b.size()) throw std::invalid_argument("algebra elements from different algebras");
}

}  // namespace

AlgElem elem_mul(const AlgElem& a, const AlgElem& b) {
  require_same_shape(a, b);
  return a.cwiseProduct(b);
}

AlgElem elem_add(const AlgElem& a, const AlgElem& b) {
  require_same_shape(a, b);
  return a + b;
}

AlgElem elem_scalar(const CycNum& s, const AlgElem& a) { return s * a; }

bool is_unit(const AlgElem& a, const IdempotentIdeal& ideal) {
  if (a.size() != ideal.m()) return false;
  return support(a) == ideal;
}

AlgElem partial_inverse(const AlgElem& a) {
  AlgElem out = a;
  for (Eigen::Index c = 0; c < a.size(); ++c) {
    if (!a(c).is_zero()) out(c) = a(c).inverse();
  }
  return out;
}

Subspace::Subspace(SplitAlgebra algebra) : Subspace(algebra, Matrix<CycNum>(0, algebra.m())) {}

Subspace::Subspace(SplitAlgebra algebra, Matrix<CycNum> rows) : algebra_(algebra), basis_(std::move(rows)) {
  if (basis_.cols() != algebra_.m()) throw std::invalid_argument("subspace rows have the wrong width");
  for (Eigen::Index i = 0; i < basis_.rows(); ++i) {
    for (Eigen::Index j = 0; j < basis_.cols(); ++j) basis_(i, j) = basis_(i, j).in_field(algebra_.n());
  }
  pivots_ = rref_in_place(basis_);
}

Subspace Subspace::full(SplitAlgebra algebra) {
  Matrix<CycNum> id(algebra.m(), algebra.m());
  for (int i = 0; i < algebra.m(); ++i) id.row(i) = algebra.idempotent(i).transpose();
  return Subspace(algebra, std::move(id));
}

Subspace Subspace::span(SplitAlgebra algebra, std::span<const AlgElem> elems) {
  Matrix<CycNum> rows(static_cast<Eigen::Index>(elems.size()), algebra.m());
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].size() != algebra.m()) throw std::invalid_argument("span: element of wrong size");
    rows.row(static_cast<Eigen::Index>(i)) = elems[i].transpose();
  }
  return Subspace(algebra, std::move(rows));
}

std::vector<AlgElem> Subspace::basis_vectors() const {
  std::vector<AlgElem> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

bool Subspace::contains(const AlgElem& x) const {
  if (x.size() != algebra_.m()) throw std::invalid_argument("contains: element of wrong size");
  const Vector<CycNum> r = reduce_against(basis_, pivots_, x);
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    if (!r(i).is_zero()) return false;
  }
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (!(other.algebra_ == algebra_)) throw std::invalid_argument("contains: subspaces of different algebras");
  for (int i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (!(a.algebra_ == b.algebra_)) throw std::invalid_argument("comparing subspaces of different algebras");
  if (a.basis_.rows() != b.basis_.rows()) return false;
  for (Eigen::Index i = 0; i < a.basis_.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.basis_.cols(); ++j) {
      if (a.basis_(i, j) != b.basis_(i, j)) return false;
    }
  }
  return true;
}

namespace {

void require_same_algebra(const Subspace& x, const Subspace& y) {
  if (!(x.algebra() == y.algebra())) throw std::invalid_argument("subspaces of different algebras");
}

}  // namespace

Subspace sum(const Subspace& x, const Subspace& y) {
  require_same_algebra(x, y);
  Matrix<CycNum> rows(x.dim() + y.dim(), x.algebra().m());
  rows << x.basis(), y.basis();
  return Subspace(x.algebra(), std::move(rows));
}

Subspace orthogonal(const Subspace& x) { return Subspace(x.algebra(), nullspace(x.basis())); }

Subspace intersect(const Subspace& x, const Subspace& y) {
  require_same_algebra(x, y);
  return orthogonal(sum(orthogonal(x), orthogonal(y)));
}

Subspace module_product(const Subspace& x, const Subspace& y) {
  require_same_algebra(x, y);
  Matrix<CycNum> rows(x.dim() * y.dim(), x.algebra().m());
  Eigen::Index r = 0;
  for (int i = 0; i < x.dim(); ++i) {
    for (int j = 0; j < y.dim(); ++j) rows.row(r++) = x.basis().row(i).cwiseProduct(y.basis().row(j));
  }
  return Subspace(x.algebra(), std::move(rows));
}

Subspace scaled(const Subspace& x, const AlgElem& u) {
  Matrix<CycNum> rows = x.basis();
  for (Eigen::Index i = 0; i < rows.rows(); ++i) rows.row(i) = rows.row(i).cwiseProduct(u.transpose());
  return Subspace(x.algebra(), std::move(rows));
}

Subspace restrict_to(const Subspace& x, const IdempotentIdeal& block) {
  return scaled(x, block.identity(x.algebra().n()));
}

IdempotentIdeal support(const Subspace& x) {
  IdempotentIdeal out = IdempotentIdeal::empty(x.algebra().m());
  for (int i = 0; i < x.dim(); ++i) out = out | support(x.basis_vector(i));
  return out;
}

bool is_unital_subalgebra(const Subspace& r) {
  return r.contains(r.algebra().one()) && r.contains(module_product(r, r));
}

std::vector<IdempotentIdeal> blocks(const Subspace& r) {
  const int m = r.algebra().m();
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int c) {
    while (parent[static_cast<std::size_t>(c)] != c) {
      parent[static_cast<std::size_t>(c)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(c)])];
      c = parent[static_cast<std::size_t>(c)];
    }
    return c;
  };
  for (int i = 0; i < r.dim(); ++i) {
    int first = -1;
    for (int c = 0; c < m; ++c) {
      if (r.basis()(i, c).is_zero()) continue;
      if (first < 0) {
        first = c;
      } else {
        const int a = find(first), b = find(c);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
  }
  std::vector<IdempotentIdeal> out;
  std::vector<int> index_of(static_cast<std::size_t>(m), -1);
  for (int c = 0; c < m; ++c) {
    const int root = find(c);
    if (index_of[static_cast<std::size_t>(root)] < 0) {
      index_of[static_cast<std::size_t>(root)] = static_cast<int>(out.size());
      out.push_back(IdempotentIdeal::empty(m));
    }
    auto& b = out[static_cast<std::size_t>(index_of[static_cast<std::size_t>(root)])];
    b = b | IdempotentIdeal(m, std::uint64_t{1} << c);
  }
  return out;
}

std::vector<int> rank_over(const Subspace& q, const Subspace& r) {
  require_same_algebra(q, r);
  if (!is_unital_subalgebra(r)) throw std::invalid_argument("rank_over: base is not a unital subalgebra");
  std::vector<int> ranks;
  for (const auto& b : blocks(r)) {
    const int dq = restrict_to(q, b).dim();
    const int dr = restrict_to(r, b).dim();
    if (dq % dr != 0) {
      throw MathError("rank_over: dimension " + std::to_string(dq) + " over a block of dimension " +
                      std::to_string(dr) + " is not an integral rank");
    }
    ranks.push_back(dq / dr);
  }
  return ranks;
}

}  // namespace pk
