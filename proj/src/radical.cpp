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


#include "pk/radical.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pk/errors.hpp"

namespace pk {
namespace {

std::vector<int> normalized_members(std::span<const int> members, int m) {
  std::vector<int> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int i : out) {
    if (i < 0 || i >= m) throw std::invalid_argument("degree " + std::to_string(i) + " outside 0.." + std::to_string(m - 1));
  }
  return out;
}

bool has(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

// Checks R and Q and returns the blocks of R with the canonical generator of each line Q u_B.
std::pair<std::vector<IdempotentIdeal>, std::vector<AlgElem>> lines(const Subspace& r, const Subspace& q) {
  if (!(r.algebra() == q.algebra())) throw std::invalid_argument("radical: R and Q live in different algebras");
  if (!is_unital_subalgebra(r)) throw std::invalid_argument("radical: R is not a unital subalgebra");
  if (!q.contains(module_product(r, q))) throw std::invalid_argument("radical: Q is not an R-module");
  auto bl = blocks(r);
  const auto ranks = rank_over(q, r);
  std::vector<AlgElem> gens;
  for (std::size_t b = 0; b < bl.size(); ++b) {
    if (ranks[b] != 1) {
      throw RankNotOne("radical: Q has rank " + std::to_string(ranks[b]) + " over block " + std::to_string(b));
    }
    gens.push_back(restrict_to(q, bl[b]).basis_vector(0));
  }
  return {std::move(bl), std::move(gens)};
}

AlgElem power_in(const AlgElem& x, int k, const AlgElem& start) {
  AlgElem p = start;
  for (int i = 0; i < k; ++i) p = elem_mul(p, x);
  return p;
}

bool only_degrees(const GradedElem& x, const std::vector<int>& members) {
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    if (has(members, static_cast<int>(i))) continue;
    for (Eigen::Index b = 0; b < x.cols(); ++b) {
      if (!x(i, b).is_zero()) return false;
    }
  }
  return true;
}

CycNum character_value(const Character& chi, int g, int field) {
  if (field % chi.n != 0) throw std::invalid_argument("mu: character values are not in the base field");
  return CycNum::root_of_unity(field, chi.exponents.at(static_cast<std::size_t>(g)) * (field / chi.n));
}

void check_shape(const RadicalExtension& ext, const GradedElem& x) {
  if (x.rows() != ext.modulus() || x.cols() != ext.block_count()) throw std::invalid_argument("radical: graded element of wrong shape");
}

}  // namespace

bool RadicalExtension::phi_invertible() const {
  return std::none_of(phi_.begin(), phi_.end(), [](const CycNum& c) { return c.is_zero(); });
}

GradedElem RadicalExtension::zero() const {
  GradedElem z(modulus_, block_count());
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    for (Eigen::Index b = 0; b < z.cols(); ++b) z(i, b) = CycNum::zero(field_order());
  }
  return z;
}

GradedElem RadicalExtension::one() const {
  GradedElem u = zero();
  for (int b = 0; b < block_count(); ++b) u(0, b) = CycNum::one(field_order());
  return u;
}

GradedElem RadicalExtension::basis(int degree, int block) const {
  if (degree < 0 || degree >= modulus_ || block < 0 || block >= block_count()) throw std::out_of_range("radical: basis index");
  GradedElem x = zero();
  x(degree, block) = CycNum::one(field_order());
  return x;
}

RadicalExtension build_radical(const Subspace& r, const Subspace& q, int m, const Matrix<CycNum>& phi) {
  if (m < 1) throw std::invalid_argument("radical: modulus must be positive");
  auto [bl, gens] = lines(r, q);
  const auto nb = static_cast<Eigen::Index>(bl.size());
  if (phi.rows() != nb || phi.cols() != nb) throw std::invalid_argument("radical: phi must be square in the block count");
  std::vector<CycNum> diag;
  for (Eigen::Index i = 0; i < nb; ++i) {
    for (Eigen::Index j = 0; j < nb; ++j) {
      if (i != j && !phi(i, j).is_zero()) {
        throw PhiNotLinear("radical: phi sends the word of block " + std::to_string(j) + " into block " + std::to_string(i));
      }
    }
    diag.push_back(phi(i, i).in_field(r.algebra().n()));
  }
  return RadicalExtension(r, q, m, std::move(bl), std::move(gens), std::move(diag));
}

Matrix<CycNum> multiplication_phi(const Subspace& r, const Subspace& q, int m) {
  const auto [bl, gens] = lines(r, q);
  const auto nb = static_cast<Eigen::Index>(bl.size());
  Matrix<CycNum> phi = Matrix<CycNum>::Zero(nb, nb);
  for (Eigen::Index b = 0; b < nb; ++b) {
    const auto& u = bl[static_cast<std::size_t>(b)];
    const AlgElem p = power_in(gens[static_cast<std::size_t>(b)], m, u.identity(r.algebra().n()));
    const CycNum c = p(u.members().front());
    if (!r.contains(p) || !(p == elem_scalar(c, u.identity(r.algebra().n())))) {
      throw MathError("radical: the m-th power of the generator of block " + std::to_string(b) + " is not in R");
    }
    phi(b, b) = c;
  }
  return phi;
}

GradedElem multiply(const RadicalExtension& ext, const GradedElem& x, const GradedElem& y) {
  check_shape(ext, x);
  check_shape(ext, y);
  const int m = ext.modulus();
  GradedElem out = ext.zero();
  for (int b = 0; b < ext.block_count(); ++b) {
    for (int i = 0; i < m; ++i) {
      if (x(i, b).is_zero()) continue;
      for (int j = 0; j < m; ++j) {
        if (y(j, b).is_zero()) continue;
        // The word q^{(x)(i+j)}: contract the leading m letters through phi until it is short.
        int degree = i + j;
        CycNum c = x(i, b) * y(j, b);
        while (degree >= m) {
          c *= ext.phi()[static_cast<std::size_t>(b)];
          degree -= m;
        }
        out(degree, b) += c;
      }
    }
  }
  return out;
}

bool is_saturated(std::span<const int> members, int m) {
  return is_saturated(normalized_members(members, m), FinAbGroup::cyclic(m));
}

std::vector<GradedElem> mu_invariants(const RadicalExtension& ext, std::span<const int> members,
                                      const FinAbGroup& group, const Character& chi) {
  const auto deg = normalized_members(members, ext.modulus());
  const int nb = ext.block_count();
  const auto d = static_cast<Eigen::Index>(deg.size()) * nb;
  Matrix<CycNum> eq = Matrix<CycNum>::Zero(static_cast<Eigen::Index>(group.order()) * d, d);
  for (int g = 0; g < group.order(); ++g) {
    const CycNum v = character_value(chi, g, ext.field_order());
    for (std::size_t k = 0; k < deg.size(); ++k) {
      for (int b = 0; b < nb; ++b) {
        const auto col = static_cast<Eigen::Index>(k) * nb + b;
        eq(g * d + col, col) = v.pow(deg[k]) - CycNum(1);
      }
    }
  }
  const Matrix<CycNum> kernel = nullspace(eq);
  std::vector<GradedElem> out;
  for (Eigen::Index r = 0; r < kernel.rows(); ++r) {
    GradedElem x = ext.zero();
    for (std::size_t k = 0; k < deg.size(); ++k) {
      for (int b = 0; b < nb; ++b) x(deg[k], b) = kernel(r, static_cast<Eigen::Index>(k) * nb + b);
    }
    out.push_back(std::move(x));
  }
  return out;
}

IRadical i_radical(const RadicalExtension& ext, std::span<const int> members) {
  IRadical out{ext, normalized_members(members, ext.modulus()), false, false, std::nullopt};
  const auto& deg = out.members;
  out.saturated = is_saturated(deg, ext.modulus());
  bool closed = has(deg, 0);
  for (int i : deg) {
    for (int j : deg) {
      for (int b = 0; b < ext.block_count() && closed; ++b) {
        closed = only_degrees(multiply(ext, ext.basis(i, b), ext.basis(j, b)), deg);
      }
    }
  }
  out.subalgebra = closed;
  if (ext.field_order() % ext.modulus() == 0) {
    const FinAbGroup cm = FinAbGroup::cyclic(ext.modulus());
    const auto chars = characters(cm, ext.field_order());
    const Character& chi = chars[ext.modulus() > 1 ? 1 : 0];
    const auto fixed = mu_invariants(ext, deg, cm, chi);
    bool base = has(deg, 0) && static_cast<int>(fixed.size()) == ext.block_count();
    for (const auto& x : fixed) base = base && only_degrees(x, {0});
    out.invariants_are_base = base;
  }
  return out;
}

RadicalExtension i_radical_to_radical(const RadicalExtension& ext, std::span<const int> members) {
  const auto deg = normalized_members(members, ext.modulus());
  if (!is_saturated(deg, ext.modulus())) throw NotSaturated("radical: the degree set is not a subgroup of C_m");
  const int mp = static_cast<int>(deg.size());
  const int i0 = ext.modulus() / mp;
  std::vector<AlgElem> gens;
  for (std::size_t b = 0; b < ext.blocks_.size(); ++b) {
    gens.push_back(power_in(ext.generators_[b], i0, ext.blocks_[b].identity(ext.field_order())));
  }
  Subspace module = Subspace::span(ext.base_.algebra(), gens);
  const RadicalExtension out(ext.base_, std::move(module), mp, ext.blocks_, std::move(gens), ext.phi_);

  const auto embed = [&](const GradedElem& x) {
    GradedElem y = ext.zero();
    for (int k = 0; k < mp; ++k) {
      for (int b = 0; b < ext.block_count(); ++b) y(k * i0, b) = x(k, b);
    }
    return y;
  };
  for (int k = 0; k < mp; ++k) {
    for (int l = 0; l < mp; ++l) {
      for (int b = 0; b < ext.block_count(); ++b) {
        const GradedElem x = out.basis(k, b);
        const GradedElem y = out.basis(l, b);
        if (!(embed(multiply(out, x, y)) == multiply(ext, embed(x), embed(y)))) {
          throw MathError("radical: the contraction does not match the I-part at degrees " + std::to_string(k) + ", " +
                          std::to_string(l));
        }
      }
    }
  }
  return out;
}

GradedElem mu_action(const RadicalExtension& ext, const Character& chi, int g, const GradedElem& x) {
  check_shape(ext, x);
  const CycNum v = character_value(chi, g, ext.field_order());
  GradedElem y = x;
  CycNum s(1);
  for (int i = 0; i < ext.modulus(); ++i) {
    for (int b = 0; b < ext.block_count(); ++b) y(i, b) = s * x(i, b);
    s *= v;
  }
  return y;
}

AlgElem realize(const RadicalExtension& ext, const GradedElem& x) {
  check_shape(ext, x);
  const SplitAlgebra& s = ext.base().algebra();
  AlgElem out = s.zero();
  for (int b = 0; b < ext.block_count(); ++b) {
    AlgElem p = ext.blocks()[static_cast<std::size_t>(b)].identity(s.n());
    for (int i = 0; i < ext.modulus(); ++i) {
      if (!x(i, b).is_zero()) out = elem_add(out, elem_scalar(x(i, b), p));
      p = elem_mul(p, ext.generators()[static_cast<std::size_t>(b)]);
    }
  }
  return out;
}

LambdaReport verify_lambda(const RadicalExtension& ext, std::span<const int> members, std::span<const Subspace> targets) {
  const auto deg = normalized_members(members, ext.modulus());
  const SplitAlgebra& s = ext.base().algebra();
  LambdaReport rep;
  std::vector<AlgElem> images;
  rep.degree_preserving = true;
  for (int i : deg) {
    for (int b = 0; b < ext.block_count(); ++b) {
      images.push_back(realize(ext, ext.basis(i, b)));
      if (!targets.empty()) {
        rep.degree_preserving = rep.degree_preserving && targets[static_cast<std::size_t>(i)].contains(images.back());
      }
    }
  }
  rep.module_iso = static_cast<int>(images.size()) == s.m() && Subspace::span(s, images).dim() == s.m();
  if (!is_saturated(deg, ext.modulus())) return rep;
  for (int i : deg) {
    for (int j : deg) {
      for (int b = 0; b < ext.block_count(); ++b) {
        for (int c = 0; c < ext.block_count(); ++c) {
          const GradedElem x = ext.basis(i, b);
          const GradedElem y = ext.basis(j, c);
          const bool ok = realize(ext, multiply(ext, x, y)) == elem_mul(realize(ext, x), realize(ext, y));
          if (i + j < ext.modulus()) {
            ++rep.low_pairs;
            rep.low_ok = rep.low_ok && ok;
          } else {
            ++rep.wrap_pairs;
            rep.wrap_ok = rep.wrap_ok && ok;
          }
        }
      }
    }
  }
  rep.multiplicative = rep.low_ok && rep.wrap_ok;
  return rep;
}

std::vector<ProductEntry> product_table(const RadicalExtension& ext, std::span<const int> members) {
  const auto deg = normalized_members(members, ext.modulus());
  std::vector<ProductEntry> out;
  for (int i : deg) {
    for (int j : deg) {
      if (j < i) continue;
      for (int b = 0; b < ext.block_count(); ++b) {
        const GradedElem p = multiply(ext, ext.basis(i, b), ext.basis(j, b));
        for (int d = 0; d < ext.modulus(); ++d) {
          if (!p(d, b).is_zero()) out.push_back({i, j, b, d, p(d, b)});
        }
      }
    }
  }
  return out;
}

namespace {

struct Setting {
  const KummerData& kd;
  const Decomposition& dec;
  int order;
};

bool direct_sum(const Setting& st, const std::vector<int>& xs) {
  std::vector<AlgElem> gens;
  int total = 0;
  for (int i : xs) {
    const auto& q = st.dec.entries[static_cast<std::size_t>(i)].module.space;
    total += q.dim();
    for (auto& v : q.basis_vectors()) gens.push_back(std::move(v));
  }
  const int m = st.kd.algebra().m();
  return total == m && Subspace::span(st.kd.algebra(), gens).dim() == m;
}

RadicalExtension radical_of_chi(const Setting& st, int modulus) {
  const Subspace& q = st.dec.entries[st.order > 1 ? 1U : 0U].module.space;
  return build_radical(st.kd.r, q, modulus, multiplication_phi(st.kd.r, q, modulus));
}

std::vector<Subspace> targets(const Setting& st) {
  std::vector<Subspace> t;
  for (const auto& e : st.dec.entries) t.push_back(e.module.space);
  return t;
}

SubgroupRoute check_route(const Setting& st, int generator, std::vector<int> members, const RadicalExtension* ext) {
  const PartialAction& a = *st.kd.action;
  const auto& grp = a.group();
  SubgroupRoute route;
  route.generator = generator;
  for (int k = 0; k < grp.element_order(generator); ++k) route.subgroup.push_back(grp.power(generator, k));
  std::sort(route.subgroup.begin(), route.subgroup.end());
  route.members = std::move(members);
  const auto h = is_extension_by_zero(a);
  route.extension_by_zero = h.has_value() && *h == route.subgroup;
  route.invariants_match = invariants(restrict_to_subgroup(a, generator)) == st.kd.r;
  const auto ranks = rank_over(Subspace::full(st.kd.algebra()), st.kd.r);
  route.rank_matches = std::all_of(ranks.begin(), ranks.end(), [&](int r) { return r == static_cast<int>(route.subgroup.size()); });
  route.direct = direct_sum(st, route.members);
  if (ext != nullptr) {
    const auto t = targets(st);
    route.lambda = verify_lambda(*ext, route.members, t);
  }
  return route;
}

std::string verdict_for(const FinAbGroup& grp, const SubgroupRoute& r) {
  return "global " + std::to_string(r.subgroup.size()) + "-kummerian via H = <" + grp.name(r.generator) + ">";
}

}  // namespace

Classification parametrize(const KummerData& kd) {
  const auto& grp = kd.action->group();
  if (!grp.is_cyclic()) throw std::invalid_argument("parametrize: the group must be cyclic");
  const int order = grp.order();
  const Decomposition dec = decompose(kd);
  const Setting st{kd, dec, order};
  const int unit_tuple[] = {1};
  const int g1 = order > 1 ? grp.index(unit_tuple) : 0;

  Classification out;
  out.direct_subsets = find_direct_subsets(dec, grp);
  out.potential_counterexample = out.direct_subsets.empty();
  const RadicalExtension full = radical_of_chi(st, order);
  for (const auto& d : out.direct_subsets) {
    out.module_verdicts.push_back(verify_lambda(full, d.members));
    if (!d.saturated) continue;
    out.saturated.push_back(d.members);
    const int i0 = order / static_cast<int>(d.members.size());
    out.from_saturated.push_back(check_route(st, grp.power(g1, i0), d.members, &full));
  }

  for (int d = 1; d <= order; ++d) {
    if (order % d != 0) continue;
    const int gen = grp.power(g1, d);
    if (!is_global(restrict_to_subgroup(*kd.action, gen))) continue;
    const int h = order / d;
    std::vector<int> xs;
    for (int i = 0; i < h; ++i) xs.push_back(i);
    // phi: Q^{(x)h} -> R only exists when chi^h is trivial on every nonzero domain.
    std::optional<RadicalExtension> ext;
    try {
      ext = radical_of_chi(st, h);
    } catch (const MathError&) {
    }
    out.from_subgroups.push_back(check_route(st, gen, xs, ext ? &*ext : nullptr));
  }

  const auto verified = [](const std::vector<SubgroupRoute>& v) {
    return std::find_if(v.begin(), v.end(), [](const SubgroupRoute& r) { return r.verified(); });
  };
  const auto a = verified(out.from_saturated);
  const auto b = verified(out.from_subgroups);
  out.routes_agree = (a == out.from_saturated.end()) == (b == out.from_subgroups.end());
  if (a != out.from_saturated.end()) {
    out.chosen = *a;
    out.radical = i_radical_to_radical(full, a->members);
  } else if (b != out.from_subgroups.end()) {
    out.chosen = *b;
    out.radical = radical_of_chi(st, static_cast<int>(b->subgroup.size()));
  }
  out.verdict = out.chosen ? verdict_for(grp, *out.chosen) : "not parametrizable by any I-radical extension";
  return out;
}

}  // namespace pk
