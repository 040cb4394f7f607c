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

#include "pk/partial_action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pk/errors.hpp"

namespace pk {

FinAbGroup::FinAbGroup(std::vector<int> invariant_factors) {
  for (int d : invariant_factors) {
    if (d < 1) throw std::invalid_argument("group: invariant factors must be positive");
    if (d == 1) continue;
    if (!factors_.empty() && d % factors_.back() != 0) {
      throw std::invalid_argument("group: invariant factors must divide each other in order");
    }
    factors_.push_back(d);
  }
  order_ = 1;
  for (int d : factors_) {
    if (order_ > (1 << 20) / d) throw std::invalid_argument("group: order too large");
    order_ *= d;
  }
}

std::vector<int> FinAbGroup::tuple(int a) const {
  if (a < 0 || a >= order_) throw std::out_of_range("group element out of range");
  std::vector<int> t(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    t[i] = a % factors_[i];
    a /= factors_[i];
  }
  return t;
}

int FinAbGroup::index(std::span<const int> t) const {
  if (t.size() != factors_.size()) throw std::invalid_argument("group element has the wrong arity");
  int a = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    a = a * d + ((t[i] % d) + d) % d;
  }
  return a;
}

int FinAbGroup::op(int a, int b) const {
  auto ta = tuple(a);
  const auto tb = tuple(b);
  for (std::size_t i = 0; i < ta.size(); ++i) ta[i] += tb[i];
  return index(ta);
}

int FinAbGroup::inverse(int a) const {
  auto t = tuple(a);
  for (auto& x : t) x = -x;
  return index(t);
}

int FinAbGroup::power(int a, long k) const {
  auto t = tuple(a);
  std::vector<int> out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    const long d = factors_[i];
    out[i] = static_cast<int>((((t[i] * (k % d)) % d) + d) % d);
  }
  return index(out);
}

int FinAbGroup::element_order(int a) const {
  const auto t = tuple(a);
  int ord = 1;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const int d = factors_[i];
    ord = std::lcm(ord, d / std::gcd(d, t[i]));
  }
  return ord;
}

std::string FinAbGroup::name(int a) const {
  if (a == 0) return "e";
  if (is_cyclic()) return a == 1 ? "g" : "g^" + std::to_string(a);
  std::ostringstream os;
  os << '(';
  const auto t = tuple(a);
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ')';
  return os.str();
}

PartialAction::PartialAction(SplitAlgebra algebra, FinAbGroup group, std::vector<Map> maps)
    : algebra_(algebra), group_(std::move(group)), maps_(std::move(maps)) {
  const int m = algebra_.m();
  if (static_cast<int>(maps_.size()) != group_.order()) {
    throw std::invalid_argument("partial action: expected one map per group element");
  }
  ranges_.assign(maps_.size(), IdempotentIdeal::empty(m));
  inverses_.assign(maps_.size(), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (std::size_t g = 0; g < maps_.size(); ++g) {
    const auto& mp = maps_[g];
    const std::string who = "partial action: map of " + group_.name(static_cast<int>(g));
    if (mp.source.m() != m || static_cast<int>(mp.sigma.size()) != m) {
      throw std::invalid_argument(who + " has the wrong number of components");
    }
    std::uint64_t image = 0;
    for (int c = 0; c < m; ++c) {
      const int t = mp.sigma[static_cast<std::size_t>(c)];
      if (!mp.source.contains(c)) {
        if (t != -1) throw std::invalid_argument(who + " is defined outside its domain");
        continue;
      }
      if (t < 0 || t >= m) throw std::invalid_argument(who + " sends a component out of range");
      if ((image >> t) & 1U) throw std::invalid_argument(who + " is not injective");
      image |= std::uint64_t{1} << t;
      inverses_[g][static_cast<std::size_t>(t)] = c;
    }
    ranges_[g] = IdempotentIdeal(m, image);
  }
}

PartialAction PartialAction::trivial(SplitAlgebra algebra, FinAbGroup group) {
  std::vector<Map> maps;
  std::vector<int> id(static_cast<std::size_t>(algebra.m()));
  std::iota(id.begin(), id.end(), 0);
  for (int g = 0; g < group.order(); ++g) maps.push_back({IdempotentIdeal::full(algebra.m()), id});
  return PartialAction(algebra, std::move(group), std::move(maps));
}

bool operator==(const PartialAction& a, const PartialAction& b) {
  if (!(a.algebra_ == b.algebra_) || !(a.group_ == b.group_)) return false;
  for (std::size_t g = 0; g < a.maps_.size(); ++g) {
    if (!(a.maps_[g].source == b.maps_[g].source) || a.maps_[g].sigma != b.maps_[g].sigma) return false;
  }
  return true;
}

std::optional<AxiomViolation> find_violation(const PartialAction& a) {
  const int m = a.m();
  const auto& grp = a.group();
  const int order = grp.order();
  for (int c = 0; c < m; ++c) {
    if (a.sigma(0, c) != c) return AxiomViolation{1, 0, 0, c};
  }
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const int gh = grp.op(g, h);
      // (ii): sigma_g(D_{g^-1} cap D_h) = D_g cap D_{gh}
      const IdempotentIdeal lhs_src = a.source(g) & a.range(h);
      const IdempotentIdeal rhs = a.range(g) & a.range(gh);
      std::uint64_t img = 0;
      for (int c : lhs_src.members()) {
        const int t = a.sigma(g, c);
        if (!rhs.contains(t)) return AxiomViolation{2, g, h, c};
        img |= std::uint64_t{1} << t;
      }
      for (int c : rhs.members()) {
        if (!((img >> c) & 1U)) return AxiomViolation{2, g, h, c};
      }
      // (iii): sigma_g sigma_h = sigma_gh on D_{h^-1} cap D_{(gh)^-1}
      for (int c : (a.source(h) & a.source(gh)).members()) {
        const int mid = a.sigma(h, c);
        const int t = a.source(g).contains(mid) ? a.sigma(g, mid) : -1;
        if (t != a.sigma(gh, c)) return AxiomViolation{3, g, h, c};
      }
    }
  }
  return std::nullopt;
}

std::string describe(const PartialAction& a, const AxiomViolation& v) {
  const auto& grp = a.group();
  std::ostringstream os;
  switch (v.axiom) {
    case 1:
      os << "axiom (i) fails: the identity does not fix component " << v.component + 1;
      break;
    case 2:
      os << "axiom (ii) fails at (g, h) = (" << grp.name(v.g) << ", " << grp.name(v.h) << "), component "
         << v.component + 1;
      break;
    default:
      os << "axiom (iii) fails at (g, h) = (" << grp.name(v.g) << ", " << grp.name(v.h) << "), component "
         << v.component + 1;
      break;
  }
  return os.str();
}

Verdict validate(const PartialAction& a) {
  const auto v = find_violation(a);
  if (!v) return {};
  return {false, describe(a, *v)};
}

AlgElem apply(const PartialAction& a, int g, const AlgElem& x) {
  if (x.size() != a.m()) throw std::invalid_argument("apply: element of wrong size");
  AlgElem y = a.algebra().zero();
  for (int c : a.source(g).members()) y(a.sigma(g, c)) = x(c);
  return y;
}

Subspace invariants(const PartialAction& a) {
  const int m = a.m();
  std::vector<std::pair<int, int>> eqs;  // x_{src} - x_{dst} = 0
  for (int g = 1; g < a.group().order(); ++g) {
    for (int c : a.source(g).members()) {
      const int t = a.sigma(g, c);
      if (t != c) eqs.emplace_back(c, t);
    }
  }
  Matrix<CycNum> sys = Matrix<CycNum>::Constant(static_cast<Eigen::Index>(eqs.size()), m, CycNum::zero(a.n()));
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    sys(static_cast<Eigen::Index>(r), eqs[r].first) = CycNum(1);
    sys(static_cast<Eigen::Index>(r), eqs[r].second) = CycNum(-1);
  }
  return Subspace(a.algebra(), nullspace(std::move(sys)));
}

AlgElem trace(const PartialAction& a, const AlgElem& s) {
  AlgElem t = a.algebra().zero();
  for (int g = 0; g < a.group().order(); ++g) t += apply(a, g, s);
  return t;
}

AlgElem find_trace_one(const PartialAction& a) {
  const int m = a.m();
  Matrix<CycNum> t = Matrix<CycNum>::Constant(m, m, CycNum::zero(a.n()));
  for (int g = 0; g < a.group().order(); ++g) {
    for (int c : a.source(g).members()) t(a.sigma(g, c), c) += CycNum(1);
  }
  const auto w = solve<CycNum>(t, a.algebra().one());
  if (!w) throw NoTraceOne("no element of trace one: the extension is not partial Galois");
  return a.algebra().normalized(*w);
}

std::optional<std::vector<AlgElem>> solve_coordinates(const PartialAction& a, std::span<const AlgElem> xs) {
  const int m = a.m();
  const int k = static_cast<int>(xs.size());
  const int order = a.group().order();
  // Unknown (y_i)_d sits in column i*m + d. Equation (g, c):
  // sum_i (x_i)_c (y_i)_{sigma_g^{-1}(c)} = delta_{g,e} for c in D_g, and 0 = delta_{g,e} otherwise.
  Matrix<CycNum> sys =
      Matrix<CycNum>::Constant(static_cast<Eigen::Index>(order) * m, static_cast<Eigen::Index>(k) * m, CycNum::zero(a.n()));
  Vector<CycNum> rhs = Vector<CycNum>::Constant(static_cast<Eigen::Index>(order) * m, CycNum::zero(a.n()));
  for (int g = 0; g < order; ++g) {
    for (int c = 0; c < m; ++c) {
      const Eigen::Index row = static_cast<Eigen::Index>(g) * m + c;
      if (g == 0) rhs(row) = CycNum::one(a.n());
      const int d = a.sigma_inverse(g, c);
      if (d < 0) continue;
      for (int i = 0; i < k; ++i) sys(row, static_cast<Eigen::Index>(i) * m + d) = xs[static_cast<std::size_t>(i)](c);
    }
  }
  const auto sol = solve<CycNum>(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<AlgElem> ys;
  for (int i = 0; i < k; ++i) ys.push_back(a.algebra().normalized(sol->segment(static_cast<Eigen::Index>(i) * m, m)));
  return ys;
}

GaloisCoordinates find_galois_coordinates(const PartialAction& a) {
  GaloisCoordinates coords;
  for (int c = 0; c < a.m(); ++c) coords.xs.push_back(a.algebra().idempotent(c));
  auto ys = solve_coordinates(a, coords.xs);
  if (!ys) {
    for (int g = 1; g < a.group().order(); ++g) {
      for (int c : a.source(g).members()) {
        if (a.sigma(g, c) == c) {
          throw NotGalois(a.group().name(g) + " fixes component " + std::to_string(c + 1) +
                          ", so no Galois coordinates exist");
        }
      }
    }
    throw NotGalois("no Galois coordinates exist");
  }
  coords.ys = std::move(*ys);
  return coords;
}

Verdict verify_coordinates(const PartialAction& a, const GaloisCoordinates& coords) {
  if (coords.xs.size() != coords.ys.size()) return {false, "coordinate lists differ in length"};
  const int order = a.group().order();
  const auto& s = a.algebra();
  for (int g = 0; g < order; ++g) {
    AlgElem acc = s.zero();
    for (std::size_t i = 0; i < coords.xs.size(); ++i) acc += elem_mul(coords.xs[i], apply(a, g, coords.ys[i]));
    const AlgElem expect = g == 0 ? s.one() : s.zero();
    if (acc != expect) return {false, "sum x_i alpha_g(y_i) != delta_{e,g} at g = " + a.group().name(g)};
  }
  for (int g = 0; g < order; ++g) {
    std::vector<AlgElem> gx;
    for (const auto& x : coords.xs) gx.push_back(apply(a, g, x));
    for (int h = 0; h < order; ++h) {
      AlgElem acc = s.zero();
      for (std::size_t i = 0; i < coords.xs.size(); ++i) acc += elem_mul(gx[i], apply(a, h, coords.ys[i]));
      const AlgElem expect = g == h ? a.unit(g) : s.zero();
      if (acc != expect) {
        return {false, "sum alpha_g(x_i) alpha_h(y_i) != delta_{g,h} 1_g at (" + a.group().name(g) + ", " +
                           a.group().name(h) + ")"};
      }
    }
  }
  return {};
}

bool is_partial_galois(const PartialAction& a) {
  std::vector<AlgElem> xs;
  for (int c = 0; c < a.m(); ++c) xs.push_back(a.algebra().idempotent(c));
  return solve_coordinates(a, xs).has_value();
}

bool is_global(const PartialAction& a) {
  for (int g = 0; g < a.group().order(); ++g) {
    if (!a.range(g).is_full()) return false;
  }
  return true;
}

std::optional<std::vector<int>> is_extension_by_zero(const PartialAction& a) {
  const auto& grp = a.group();
  std::vector<int> h;
  for (int g = 0; g < grp.order(); ++g) {
    if (a.range(g).is_empty()) continue;
    if (!a.range(g).is_full()) return std::nullopt;
    h.push_back(g);
  }
  for (int x : h) {
    for (int y : h) {
      if (!std::binary_search(h.begin(), h.end(), grp.op(x, y))) return std::nullopt;
    }
  }
  return h;
}

PartialAction restrict_to_subgroup(const PartialAction& a, int generator) {
  const auto& grp = a.group();
  const int k = grp.element_order(generator);
  std::vector<PartialAction::Map> maps;
  for (int i = 0; i < k; ++i) maps.push_back(a.map(grp.power(generator, i)));
  return PartialAction(a.algebra(), FinAbGroup::cyclic(k), std::move(maps));
}

PartialAction induced_from_global(int n, const FinAbGroup& group, const std::vector<std::vector<int>>& beta,
                                  const IdempotentIdeal& e) {
  if (e.is_empty()) throw std::invalid_argument("induced action: the ideal support is empty");
  const int big_m = e.m();
  if (static_cast<int>(beta.size()) != group.order()) throw std::invalid_argument("induced action: one permutation per element");
  for (int g = 0; g < group.order(); ++g) {
    const auto& p = beta[static_cast<std::size_t>(g)];
    if (static_cast<int>(p.size()) != big_m) throw std::invalid_argument("induced action: permutation of wrong size");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < big_m; ++c) {
      if (sorted[static_cast<std::size_t>(c)] != c) throw std::invalid_argument("induced action: not a permutation");
    }
    for (int h = 0; h < group.order(); ++h) {
      const auto& q = beta[static_cast<std::size_t>(h)];
      const auto& pq = beta[static_cast<std::size_t>(group.op(g, h))];
      for (int c = 0; c < big_m; ++c) {
        if (p[static_cast<std::size_t>(q[static_cast<std::size_t>(c)])] != pq[static_cast<std::size_t>(c)]) {
          throw std::invalid_argument("induced action: beta is not a homomorphism");
        }
      }
    }
  }
  const auto members = e.members();
  std::vector<int> local(static_cast<std::size_t>(big_m), -1);
  for (std::size_t i = 0; i < members.size(); ++i) local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  const int m = static_cast<int>(members.size());
  std::vector<PartialAction::Map> maps;
  for (int g = 0; g < group.order(); ++g) {
    PartialAction::Map mp{IdempotentIdeal::empty(m), std::vector<int>(static_cast<std::size_t>(m), -1)};
    for (int i = 0; i < m; ++i) {
      const int t = local[static_cast<std::size_t>(beta[static_cast<std::size_t>(g)][static_cast<std::size_t>(members[static_cast<std::size_t>(i)])])];
      if (t < 0) continue;
      mp.source = mp.source | IdempotentIdeal(m, std::uint64_t{1} << i);
      mp.sigma[static_cast<std::size_t>(i)] = t;
    }
    maps.push_back(std::move(mp));
  }
  return PartialAction(SplitAlgebra(n, m), group, std::move(maps));
}

Verdict g_isomorphic(const PartialAction& a, const PartialAction& b, std::span<const int> perm,
                     std::span<const int> twist) {
  if (!(a.group() == b.group())) return {false, "the actions are by different groups"};
  if (a.m() != b.m() || a.n() != b.n()) return {false, "the algebras are not isomorphic"};
  const int m = a.m();
  if (static_cast<int>(perm.size()) != m || static_cast<int>(twist.size()) != m) {
    return {false, "the map has the wrong number of components"};
  }
  std::vector<bool> hit(static_cast<std::size_t>(m), false);
  for (int c = 0; c < m; ++c) {
    const int t = perm[static_cast<std::size_t>(c)];
    if (t < 0 || t >= m || hit[static_cast<std::size_t>(t)]) return {false, "the component map is not a bijection"};
    hit[static_cast<std::size_t>(t)] = true;
    if (std::gcd(((twist[static_cast<std::size_t>(c)] % a.n()) + a.n()) % a.n(), a.n()) != 1) {
      return {false, "a twist exponent is not a unit"};
    }
  }
  for (int g = 0; g < a.group().order(); ++g) {
    for (int c = 0; c < m; ++c) {
      if (a.range(g).contains(c) != b.range(g).contains(perm[static_cast<std::size_t>(c)])) {
        return {false, "f(S_g) != S'_g at g = " + a.group().name(g)};
      }
    }
    for (int c : a.source(g).members()) {
      const int t = a.sigma(g, c);
      const auto pc = static_cast<std::size_t>(c), pt = static_cast<std::size_t>(t);
      const long n = a.n();
      const bool same_twist = ((twist[pt] - twist[pc]) % n + n) % n == 0;
      if (b.sigma(g, perm[pc]) != perm[pt] || !same_twist) {
        return {false, "f alpha_g != alpha'_g f at g = " + a.group().name(g) + ", component " + std::to_string(c + 1)};
      }
    }
  }
  return {};
}

Verdict g_isomorphic(const PartialAction& a, const PartialAction& b, std::span<const int> perm) {
  const std::vector<int> twist(perm.size(), 1);
  return g_isomorphic(a, b, perm, twist);
}

}  // namespace pk
