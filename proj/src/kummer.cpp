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

#include "pk/kummer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "pk/errors.hpp"

namespace pk {

bool is_kummerian(const Subspace& r, const CycNum& omega, int n) {
  if (n < 1 || !is_unital_subalgebra(r)) return false;
  const AlgElem one = r.algebra().one();
  if (!r.contains(AlgElem(omega * one))) return false;
  if (!omega.pow(n).is_one()) return false;
  for (int i = 1; i < n; ++i) {
    if ((CycNum(1) - omega.pow(i)).is_zero()) return false;
  }
  return true;
}

KummerData make_kummer_data(std::shared_ptr<const PartialAction> action) {
  KummerData kd{action, action->n(), CycNum::root_of_unity(action->n(), 1), invariants(*action), {}, {}};
  kd.w = find_trace_one(*action);
  kd.coords = find_galois_coordinates(*action);
  if (!is_kummerian(kd.r, kd.omega, kd.n)) throw MathError("the invariant ring is not kummerian for this order");
  return kd;
}

namespace {

void require_cocycle(const Cochain& f) {
  if (!is_cocycle1(f)) throw NotACocycle();
}

AlgElem twisted_sum(const KummerData& kd, const Cochain& f, const AlgElem& x) {
  const auto& a = *kd.action;
  AlgElem out = a.algebra().zero();
  for (int g = 0; g < a.group().order(); ++g) out += elem_mul(partial_inverse(f(g)), apply(a, g, x));
  return out;
}

Subspace image(const KummerData& kd, const Cochain& f, bool hat) {
  std::vector<AlgElem> gens;
  for (int c = 0; c < kd.action->m(); ++c) {
    const AlgElem e = kd.algebra().idempotent(c);
    gens.push_back(hat ? f_hat(kd, f, e) : f_tilde(kd, f, e));
  }
  return Subspace::span(kd.algebra(), gens);
}

}  // namespace

AlgElem f_hat(const KummerData& kd, const Cochain& f, const AlgElem& x) {
  require_cocycle(f);
  return twisted_sum(kd, f, elem_mul(kd.w, x));
}

AlgElem f_tilde(const KummerData& kd, const Cochain& f, const AlgElem& x) {
  require_cocycle(f);
  return twisted_sum(kd, f, x);
}

Subspace image_of_f_hat(const KummerData& kd, const Cochain& f) { return image(kd, f, true); }
Subspace image_of_f_tilde(const KummerData& kd, const Cochain& f) { return image(kd, f, false); }

QModule q_module(const KummerData& kd, const Cochain& f) {
  require_cocycle(f);
  const auto& a = *kd.action;
  const int m = a.m();
  std::vector<std::pair<int, int>> rows;  // (g, c) with c in D_g
  for (int g = 0; g < a.group().order(); ++g) {
    for (int c : a.range(g).members()) rows.emplace_back(g, c);
  }
  Matrix<CycNum> sys = Matrix<CycNum>::Constant(static_cast<Eigen::Index>(rows.size()), m, CycNum::zero(a.n()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto [g, c] = rows[i];
    const auto r = static_cast<Eigen::Index>(i);
    // a_{sigma_g^-1(c)} - f(g)_c a_c = 0
    sys(r, a.sigma_inverse(g, c)) += CycNum(1);
    sys(r, c) -= f(g)(c);
  }
  return {f, Subspace(a.algebra(), nullspace(std::move(sys)))};
}

Verdict verify_projector(const KummerData& kd, const Cochain& f) {
  for (int c = 0; c < kd.action->m(); ++c) {
    const AlgElem e = kd.algebra().idempotent(c);
    const AlgElem once = f_hat(kd, f, e);
    if (f_hat(kd, f, once) != once) return {false, "f^ is not idempotent on e_" + std::to_string(c + 1)};
  }
  const Subspace q = q_module(kd, f).space;
  if (image_of_f_hat(kd, f) != q) return {false, "Im f^ differs from the eigenspace"};
  if (image_of_f_tilde(kd, f) != q) return {false, "Im f~ differs from the eigenspace"};
  return {};
}

QLawReport verify_q_laws(const KummerData& kd, const Cochain& f, const Cochain& fp) {
  QLawReport rep;
  const Subspace qf = q_module(kd, f).space;
  const Subspace qfp = q_module(kd, fp).space;
  const Cochain finv = cochain_inv(f);
  const Subspace full = Subspace::full(kd.algebra());
  rep.product = module_product(qf, qfp) == q_module(kd, f * fp).space;
  rep.covers_s = module_product(qf, full) == full;

  AlgElem acc = kd.algebra().zero();
  for (std::size_t i = 0; i < kd.coords.xs.size(); ++i) {
    acc += elem_mul(f_hat(kd, f, kd.coords.xs[i]), f_tilde(kd, finv, kd.coords.ys[i]));
  }
  rep.coordinates = acc == kd.algebra().one();

  // r = sum_j l_j r_j with r q_k = 0 for every basis vector q_k of Q_f.
  const int dr = kd.r.dim();
  const int m = kd.action->m();
  Matrix<CycNum> ann = Matrix<CycNum>::Constant(static_cast<Eigen::Index>(qf.dim()) * m, dr, CycNum::zero(kd.n));
  for (int k = 0; k < qf.dim(); ++k) {
    for (int j = 0; j < dr; ++j) {
      const AlgElem prod = elem_mul(kd.r.basis_vector(j), qf.basis_vector(k));
      for (int c = 0; c < m; ++c) ann(static_cast<Eigen::Index>(k) * m + c, j) = prod(c);
    }
  }
  rep.faithful = nullspace(std::move(ann)).rows() == 0;
  rep.inverse = module_product(qf, q_module(kd, finv).space) == kd.r;

  rep.coboundary = true;
  if (const auto t = is_coboundary1(f)) rep.coboundary = qf == scaled(kd.r, *t);
  if (const auto u = cohomology_witness(f, fp)) rep.coboundary = rep.coboundary && qf == scaled(qfp, *u);
  return rep;
}

std::optional<AlgElem> unit_in(const Subspace& x) {
  const int m = x.algebra().m();
  if (!(support(x) == IdempotentIdeal::full(m))) return std::nullopt;
  // Each component of sum_j s^j b_j is a nonzero polynomial in s of degree < dim, so some s in
  // 1..dim*m+1 avoids all of their roots.
  for (long s = 1; s <= static_cast<long>(x.dim()) * m + 1; ++s) {
    AlgElem v = x.algebra().zero();
    CycNum coeff(1);
    for (int j = 0; j < x.dim(); ++j, coeff *= CycNum(s)) v += coeff * x.basis_vector(j);
    if (is_unit(v, IdempotentIdeal::full(m))) return v;
  }
  return std::nullopt;
}

Verdict verify_pic_hom(const KummerData& kd, std::span<const Cochain> cocycles, std::uint64_t seed) {
  const auto bl = blocks(kd.r);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-2, 2);
  const auto& s = kd.algebra();
  std::vector<Subspace> modules{kd.r, Subspace::full(s)};
  for (int trial = 0; trial < 3; ++trial) {
    AlgElem x(s.m());
    for (int c = 0; c < s.m(); ++c) x(c) = CycNum(coeff(rng));
    const AlgElem gens[] = {x};
    modules.push_back(module_product(kd.r, Subspace::span(s, gens)));
  }
  for (const auto& f : cocycles) {
    const Subspace q = q_module(kd, f).space;
    const auto ranks = rank_over(q, kd.r);
    if (std::any_of(ranks.begin(), ranks.end(), [](int r) { return r != 1; })) return {false, "Q_f is not of rank one"};
    for (const auto& mod : modules) {
      const Subspace qm = module_product(q, mod);
      for (const auto& b : bl) {
        if (restrict_to(qm, b).dim() != restrict_to(mod, b).dim()) {
          return {false, "Q_f (x) M and Q_f M differ in dimension on a block"};
        }
      }
    }
    const bool free = unit_in(q).has_value();
    if (free != is_coboundary1(f).has_value()) return {false, "freeness of Q_f disagrees with the coboundary test"};
  }
  return {};
}

std::vector<Character> characters(const FinAbGroup& group, int n) {
  for (int d : group.factors()) {
    if (n % d != 0) throw std::invalid_argument("characters: the group exponent must divide n");
  }
  std::vector<Character> out;
  const auto& fac = group.factors();
  for (int t = 0; t < group.order(); ++t) {
    const auto tt = group.tuple(t);
    Character chi{n, t, std::vector<int>(static_cast<std::size_t>(group.order()))};
    for (int g = 0; g < group.order(); ++g) {
      const auto tg = group.tuple(g);
      long e = 0;
      for (std::size_t i = 0; i < fac.size(); ++i) e += static_cast<long>(n / fac[i]) * tt[i] * tg[i];
      chi.exponents[static_cast<std::size_t>(g)] = static_cast<int>(e % n);
    }
    out.push_back(std::move(chi));
  }
  return out;
}

Cochain char_p(const std::shared_ptr<const PartialAction>& action, const Character& chi) {
  if (static_cast<int>(chi.exponents.size()) != action->group().order()) throw std::invalid_argument("char_p: wrong group");
  if (action->n() % chi.n != 0) throw std::invalid_argument("char_p: character order does not divide the field order");
  std::vector<AlgElem> values;
  const int scale = action->n() / chi.n;
  for (int g = 0; g < action->group().order(); ++g) {
    values.push_back(CycNum::root_of_unity(action->n(), static_cast<long>(scale) * chi.exponents[static_cast<std::size_t>(g)]) *
                     action->unit(g));
  }
  return Cochain(action, 1, std::move(values));
}

std::vector<Character> ker_mu_p(const PartialAction& a, int n) {
  std::vector<Character> out;
  for (auto& chi : characters(a.group(), n)) {
    bool trivial = true;
    for (int g = 0; g < a.group().order(); ++g) trivial = trivial && (a.range(g).is_empty() || chi.exponents[static_cast<std::size_t>(g)] == 0);
    if (trivial) out.push_back(std::move(chi));
  }
  return out;
}

Verdict character_sum_check(const FinAbGroup& group, int n) {
  const auto chars = characters(group, n);
  for (int g = 0; g < group.order(); ++g) {
    CycNum sum = CycNum::zero(n);
    for (const auto& chi : chars) sum += chi.value(g);
    const CycNum expect = g == 0 ? CycNum(group.order()) : CycNum(0);
    if (sum != expect) return {false, "character sum at " + group.name(g) + " is " + sum.to_string()};
  }
  return {};
}

Decomposition decompose(const KummerData& kd) {
  Decomposition dec;
  dec.blocks = blocks(kd.r);
  dec.global = is_global(*kd.action);
  Subspace total(kd.algebra());
  int dims = 0;
  for (const auto& chi : characters(kd.action->group(), kd.n)) {
    QModule q = q_module(kd, char_p(kd.action, chi));
    total = sum(total, q.space);
    dims += q.space.dim();
    auto ranks = rank_over(q.space, kd.r);
    dec.entries.push_back({chi, std::move(q), std::move(ranks)});
  }
  if (total.dim() != kd.action->m()) throw SumNotS();
  dec.direct = dims == kd.action->m();
  return dec;
}

bool is_saturated(std::span<const int> members, const FinAbGroup& group) {
  std::vector<bool> in(static_cast<std::size_t>(group.order()), false);
  for (int x : members) {
    if (x < 0 || x >= group.order()) return false;
    in[static_cast<std::size_t>(x)] = true;
  }
  if (!in[0]) return false;
  for (int x : members) {
    for (int y : members) {
      if (!in[static_cast<std::size_t>(group.op(x, y))]) return false;
    }
  }
  return true;
}

std::vector<DirectSubset> find_direct_subsets(const Decomposition& dec, const FinAbGroup& group, int max_characters) {
  const int k = static_cast<int>(dec.entries.size());
  if (k > max_characters) {
    throw SizeGuardExceeded("direct subset search: " + std::to_string(k) + " characters exceed the bound " +
                            std::to_string(max_characters));
  }
  if (k == 0) return {};
  const auto& alg = dec.entries[0].module.space.algebra();
  const int m = alg.m();
  std::vector<DirectSubset> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    int dims = 0;
    std::vector<int> members;
    for (int i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) {
        members.push_back(i);
        dims += dec.entries[static_cast<std::size_t>(i)].module.space.dim();
      }
    }
    if (dims != m) continue;
    Matrix<CycNum> stacked(m, m);
    Eigen::Index row = 0;
    for (int i : members) {
      const auto& b = dec.entries[static_cast<std::size_t>(i)].module.space.basis();
      stacked.middleRows(row, b.rows()) = b;
      row += b.rows();
    }
    if (rank(std::move(stacked)) != m) continue;
    const bool sat = is_saturated(members, group);
    out.push_back({std::move(members), sat});
  }
  std::sort(out.begin(), out.end(), [](const DirectSubset& a, const DirectSubset& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace pk
