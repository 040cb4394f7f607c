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

#include "pk/cohomology.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pk/errors.hpp"

namespace pk {

namespace {

std::size_t tuple_count(int order, int arity) {
  std::size_t count = 1;
  for (int i = 0; i < arity; ++i) {
    if (count > (std::size_t{1} << 24) / static_cast<std::size_t>(order)) {
      throw SizeGuardExceeded("cochain: too many tuples for arity " + std::to_string(arity));
    }
    count *= static_cast<std::size_t>(order);
  }
  return count;
}

void require_compatible(const Cochain& f, const Cochain& g) {
  if (f.arity() != g.arity()) throw std::invalid_argument("cochains of different arity");
  if (f.action_ptr() != g.action_ptr() && !(f.action() == g.action())) {
    throw std::invalid_argument("cochains over different actions");
  }
}

}  // namespace

Cochain::Cochain(std::shared_ptr<const PartialAction> action, int arity, std::vector<AlgElem> values)
    : action_(std::move(action)), arity_(arity), values_(std::move(values)) {
  if (!action_) throw std::invalid_argument("cochain: null action");
  if (arity_ < 0) throw std::invalid_argument("cochain: negative arity");
  if (values_.size() != tuple_count(action_->group().order(), arity_)) {
    throw std::invalid_argument("cochain: wrong number of values");
  }
  for (auto& v : values_) v = action_->algebra().normalized(v);
}

Cochain Cochain::identity(std::shared_ptr<const PartialAction> action, int arity) {
  const std::size_t count = tuple_count(action->group().order(), arity);
  std::vector<AlgElem> values;
  values.reserve(count);
  Cochain shape(action, arity, std::vector<AlgElem>(count, action->algebra().zero()));
  for (std::size_t i = 0; i < count; ++i) values.push_back(ideal(*action, shape.unflatten(i)).identity(action->n()));
  return Cochain(std::move(action), arity, std::move(values));
}

const AlgElem& Cochain::operator()(int g, int h) const {
  const int gs[] = {g, h};
  return (*this)(gs);
}

std::size_t Cochain::flatten(std::span<const int> gs) const {
  if (static_cast<int>(gs.size()) != arity_) throw std::invalid_argument("cochain: wrong tuple length");
  const auto order = static_cast<std::size_t>(action_->group().order());
  std::size_t flat = 0;
  for (int g : gs) flat = flat * order + static_cast<std::size_t>(g);
  return flat;
}

std::vector<int> Cochain::unflatten(std::size_t flat) const {
  const auto order = static_cast<std::size_t>(action_->group().order());
  std::vector<int> gs(static_cast<std::size_t>(arity_));
  for (std::size_t i = gs.size(); i-- > 0;) {
    gs[i] = static_cast<int>(flat % order);
    flat /= order;
  }
  return gs;
}

IdempotentIdeal Cochain::ideal(const PartialAction& a, std::span<const int> gs) {
  IdempotentIdeal out = IdempotentIdeal::full(a.m());
  int prefix = 0;
  for (int g : gs) {
    prefix = a.group().op(prefix, g);
    out = out & a.range(prefix);
  }
  return out;
}

Verdict Cochain::check_values() const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto gs = unflatten(i);
    if (!is_unit(values_[i], ideal(*action_, gs))) {
      std::string where;
      for (int g : gs) where += (where.empty() ? "" : ", ") + action_->group().name(g);
      return {false, "value at (" + where + ") is not a unit of its ideal"};
    }
  }
  return {};
}

bool operator==(const Cochain& a, const Cochain& b) {
  return a.arity_ == b.arity_ && (a.action_ == b.action_ || *a.action_ == *b.action_) && a.values_ == b.values_;
}

Cochain cochain_mul(const Cochain& f, const Cochain& g) {
  require_compatible(f, g);
  std::vector<AlgElem> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(elem_mul(f.at(i), g.at(i)));
  return Cochain(f.action_ptr(), f.arity(), std::move(values));
}

Cochain cochain_inv(const Cochain& f) {
  std::vector<AlgElem> values;
  values.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) values.push_back(partial_inverse(f.at(i)));
  return Cochain(f.action_ptr(), f.arity(), std::move(values));
}

Cochain coboundary0(std::shared_ptr<const PartialAction> action, const AlgElem& t) {
  const auto& a = *action;
  if (!is_unit(t, IdempotentIdeal::full(a.m()))) throw std::invalid_argument("coboundary0: t is not a unit of S");
  const AlgElem tinv = partial_inverse(t);
  std::vector<AlgElem> values;
  for (int g = 0; g < a.group().order(); ++g) values.push_back(elem_mul(apply(a, g, t), tinv));
  return Cochain(std::move(action), 1, std::move(values));
}

Cochain coboundary(const Cochain& f) {
  if (f.arity() == 0) return coboundary0(f.action_ptr(), f.at(0));
  const auto& a = f.action();
  const auto& grp = a.group();
  const int n = f.arity();
  Cochain shape = Cochain::identity(f.action_ptr(), n + 1);
  std::vector<AlgElem> values;
  values.reserve(shape.size());
  std::vector<int> sub(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < shape.size(); ++flat) {
    const auto gs = shape.unflatten(flat);
    std::copy(gs.begin() + 1, gs.end(), sub.begin());
    AlgElem v = apply(a, gs[0], f(sub));
    for (int i = 1; i <= n; ++i) {
      // f(g_1, ..., g_i g_{i+1}, ..., g_{n+1}) with exponent (-1)^i
      std::size_t w = 0;
      for (int j = 0; j <= n; ++j) {
        if (j == i - 1) {
          sub[w++] = grp.op(gs[static_cast<std::size_t>(j)], gs[static_cast<std::size_t>(j + 1)]);
          ++j;
        } else {
          sub[w++] = gs[static_cast<std::size_t>(j)];
        }
      }
      const AlgElem& term = f(sub);
      v = elem_mul(v, i % 2 ? partial_inverse(term) : term);
    }
    std::copy(gs.begin(), gs.end() - 1, sub.begin());
    const AlgElem& last = f(sub);
    v = elem_mul(v, (n + 1) % 2 ? partial_inverse(last) : last);
    values.push_back(std::move(v));
  }
  return Cochain(f.action_ptr(), n + 1, std::move(values));
}

namespace {

bool satisfies_cocycle_identity(const Cochain& f) {
  const auto& a = f.action();
  const int order = a.group().order();
  for (int g = 0; g < order; ++g) {
    const AlgElem unit_g = a.unit(g);
    for (int h = 0; h < order; ++h) {
      const AlgElem lhs = elem_mul(f(a.group().op(g, h)), unit_g);
      const AlgElem rhs = elem_mul(f(g), apply(a, g, f(h)));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace

bool is_cocycle1(const Cochain& f) {
  if (f.arity() != 1 || !f.check_values()) return false;
  return satisfies_cocycle_identity(f) && satisfies_cocycle_identity(cochain_inv(f));
}

std::optional<AlgElem> is_coboundary1(const Cochain& f) {
  if (!is_cocycle1(f)) throw NotACocycle();
  const auto& a = f.action();
  const int m = a.m();
  const int order = a.group().order();
  struct Edge {
    int to;
    int g;
    bool forward;  // true: to = sigma_g(from)
  };
  std::vector<std::vector<Edge>> adj(static_cast<std::size_t>(m));
  for (int g = 1; g < order; ++g) {
    for (int c : a.range(g).members()) {
      const int src = a.sigma_inverse(g, c);
      adj[static_cast<std::size_t>(src)].push_back({c, g, true});
      adj[static_cast<std::size_t>(c)].push_back({src, g, false});
    }
  }
  // t_c = t_{sigma_g^{-1}(c)} / f(g)_c
  std::vector<std::optional<CycNum>> t(static_cast<std::size_t>(m));
  for (int root = 0; root < m; ++root) {
    if (t[static_cast<std::size_t>(root)]) continue;
    t[static_cast<std::size_t>(root)] = CycNum::one(a.n());
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& e : adj[static_cast<std::size_t>(u)]) {
        if (t[static_cast<std::size_t>(e.to)]) continue;
        const CycNum& tu = *t[static_cast<std::size_t>(u)];
        t[static_cast<std::size_t>(e.to)] = e.forward ? tu / f(e.g)(e.to) : tu * f(e.g)(u);
        queue.push_back(e.to);
      }
    }
  }
  AlgElem out(m);
  for (int c = 0; c < m; ++c) out(c) = *t[static_cast<std::size_t>(c)];
  if (coboundary0(f.action_ptr(), out) != f) return std::nullopt;
  return out;
}

std::optional<AlgElem> cohomology_witness(const Cochain& f, const Cochain& g) {
  require_compatible(f, g);
  return is_coboundary1(f * cochain_inv(g));
}

bool cohomologous(const Cochain& f, const Cochain& g) { return cohomology_witness(f, g).has_value(); }

std::optional<TorsionCochain> torsion_exponents(const Cochain& f, int n) {
  const auto& a = f.action();
  const int big_n = a.n();
  if (f.arity() != 1) throw std::invalid_argument("torsion_exponents: expected a 1-cochain");
  if (n < 1 || big_n % n != 0) throw std::invalid_argument("torsion order must divide the field order");
  std::vector<CycNum> powers;
  for (int k = 0; k < n; ++k) powers.push_back(CycNum::root_of_unity(big_n, static_cast<long>(big_n / n) * k));
  TorsionCochain t{n, {}};
  for (int g = 0; g < a.group().order(); ++g) {
    std::vector<int> row(static_cast<std::size_t>(a.m()), -1);
    for (int c = 0; c < a.m(); ++c) {
      const CycNum& v = f(g)(c);
      if (!a.range(g).contains(c)) {
        if (!v.is_zero()) return std::nullopt;
        continue;
      }
      const auto it = std::find(powers.begin(), powers.end(), v);
      if (it == powers.end()) return std::nullopt;
      row[static_cast<std::size_t>(c)] = static_cast<int>(it - powers.begin());
    }
    t.exponents.push_back(std::move(row));
  }
  return t;
}

Cochain to_cochain(std::shared_ptr<const PartialAction> action, const TorsionCochain& t) {
  const auto& a = *action;
  const int big_n = a.n();
  if (big_n % t.order != 0) throw std::invalid_argument("torsion order must divide the field order");
  if (static_cast<int>(t.exponents.size()) != a.group().order()) throw std::invalid_argument("torsion cochain: wrong shape");
  std::vector<AlgElem> values;
  for (int g = 0; g < a.group().order(); ++g) {
    AlgElem v = a.algebra().zero();
    const auto& row = t.exponents[static_cast<std::size_t>(g)];
    if (static_cast<int>(row.size()) != a.m()) throw std::invalid_argument("torsion cochain: wrong shape");
    for (int c = 0; c < a.m(); ++c) {
      const int k = row[static_cast<std::size_t>(c)];
      if (a.range(g).contains(c) != (k >= 0)) {
        throw std::invalid_argument("torsion cochain: exponents must be given exactly on D_g");
      }
      if (k >= 0) v(c) = CycNum::root_of_unity(big_n, static_cast<long>(big_n / t.order) * k);
    }
    values.push_back(std::move(v));
  }
  return Cochain(std::move(action), 1, std::move(values));
}

TorsionCochain torsion_mul(const TorsionCochain& a, const TorsionCochain& b) {
  if (a.order != b.order || a.exponents.size() != b.exponents.size()) throw std::invalid_argument("torsion_mul: shape mismatch");
  TorsionCochain out = a;
  for (std::size_t g = 0; g < a.exponents.size(); ++g) {
    for (std::size_t c = 0; c < a.exponents[g].size(); ++c) {
      const int x = a.exponents[g][c], y = b.exponents[g][c];
      if ((x < 0) != (y < 0)) throw std::invalid_argument("torsion_mul: supports differ");
      out.exponents[g][c] = x < 0 ? -1 : (x + y) % a.order;
    }
  }
  return out;
}

TorsionCochain torsion_inv(const TorsionCochain& a) {
  TorsionCochain out = a;
  for (auto& row : out.exponents) {
    for (auto& k : row) {
      if (k > 0) k = a.order - k;
    }
  }
  return out;
}

TorsionCochain torsion_identity(const PartialAction& a, int n) {
  TorsionCochain t{n, {}};
  for (int g = 0; g < a.group().order(); ++g) {
    std::vector<int> row(static_cast<std::size_t>(a.m()), -1);
    for (int c : a.range(g).members()) row[static_cast<std::size_t>(c)] = 0;
    t.exponents.push_back(std::move(row));
  }
  return t;
}

namespace {

using Int = long long;

Int mod(Int x, Int n) {
  x %= n;
  return x < 0 ? x + n : x;
}

// x a + y b = g with g = gcd(a, b) >= 0. When a divides b this is the plain (1, 0) combination,
// which keeps the elimination below from cycling on a fixed pivot.
Int ext_gcd(Int a, Int b, Int& x, Int& y) {
  if (a != 0 && b % a == 0) {
    x = 1;
    y = 0;
    return a;
  }
  Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    const Int q = a / b;
    Int t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
    t = y0 - q * y1;
    y0 = y1;
    y1 = t;
  }
  x = x0;
  y = y0;
  return a;
}

// Solution set of A k = 0 over Z_n, written as k = C k' with k'_j a multiple of step[j].
struct ZnKernel {
  std::vector<std::vector<Int>> c;
  std::vector<Int> step;
};

ZnKernel zn_kernel(std::vector<std::vector<Int>> a, std::size_t vars, Int n) {
  const std::size_t rows = a.size();
  ZnKernel out;
  out.c.assign(vars, std::vector<Int>(vars, 0));
  for (std::size_t i = 0; i < vars; ++i) out.c[i][i] = 1;
  out.step.assign(vars, 1);
  for (auto& row : a) {
    for (auto& x : row) x = mod(x, n);
  }
  auto col_op = [&](std::size_t t, std::size_t j, Int x, Int y, Int u, Int v) {
    // col_t <- x col_t + y col_j, col_j <- u col_t + v col_j
    for (std::size_t r = 0; r < rows; ++r) {
      const Int ct = a[r][t], cj = a[r][j];
      a[r][t] = mod(x * ct + y * cj, n);
      a[r][j] = mod(u * ct + v * cj, n);
    }
    for (std::size_t r = 0; r < vars; ++r) {
      const Int ct = out.c[r][t], cj = out.c[r][j];
      out.c[r][t] = mod(x * ct + y * cj, n);
      out.c[r][j] = mod(u * ct + v * cj, n);
    }
  };
  std::size_t t = 0;
  for (; t < std::min(rows, vars); ++t) {
    std::size_t pr = rows, pc = vars;
    for (std::size_t r = t; r < rows && pr == rows; ++r) {
      for (std::size_t c = t; c < vars; ++c) {
        if (a[r][c] != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    if (pc != t) col_op(t, pc, 0, 1, 1, 0);
    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a[r][t] == 0) continue;
        Int x, y;
        const Int p = a[t][t], b = a[r][t];
        const Int g = ext_gcd(p, b, x, y);
        const Int u = -b / g, v = p / g;
        for (std::size_t c = 0; c < vars; ++c) {
          const Int rt = a[t][c], rr = a[r][c];
          a[t][c] = mod(x * rt + y * rr, n);
          a[r][c] = mod(u * rt + v * rr, n);
        }
      }
      for (std::size_t j = t + 1; j < vars; ++j) {
        if (a[t][j] == 0) continue;
        Int x, y;
        const Int p = a[t][t], b = a[t][j];
        const Int g = ext_gcd(p, b, x, y);
        col_op(t, j, x, y, -b / g, p / g);
        dirty = true;
      }
      if (dirty) {
        dirty = false;
        for (std::size_t r = t + 1; r < rows; ++r) dirty = dirty || a[r][t] != 0;
      }
    }
    out.step[t] = n / std::gcd(a[t][t], n);
  }
  return out;
}

struct CocycleSystem {
  std::vector<std::pair<int, int>> vars;  // (g, c)
  ZnKernel kernel;
};

CocycleSystem cocycle_system(const PartialAction& a, int n) {
  if (n < 1 || a.n() % n != 0) throw std::invalid_argument("torsion order must divide the field order");
  const int order = a.group().order();
  const int m = a.m();
  CocycleSystem sys;
  std::vector<std::vector<int>> index(static_cast<std::size_t>(order), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int g = 0; g < order; ++g) {
    for (int c : a.range(g).members()) {
      index[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = static_cast<int>(sys.vars.size());
      sys.vars.emplace_back(g, c);
    }
  }
  const std::size_t nv = sys.vars.size();
  std::vector<std::vector<Int>> rows;
  for (int g = 0; g < order; ++g) {
    for (int h = 0; h < order; ++h) {
      const int gh = a.group().op(g, h);
      // k(gh, c) = k(g, c) + k(h, sigma_g^{-1}(c)) for c in D_g cap D_gh
      for (int c : (a.range(g) & a.range(gh)).members()) {
        std::vector<Int> row(nv, 0);
        row[static_cast<std::size_t>(index[static_cast<std::size_t>(gh)][static_cast<std::size_t>(c)])] += 1;
        row[static_cast<std::size_t>(index[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)])] -= 1;
        const int src = a.sigma_inverse(g, c);
        row[static_cast<std::size_t>(index[static_cast<std::size_t>(h)][static_cast<std::size_t>(src)])] -= 1;
        if (std::any_of(row.begin(), row.end(), [n](Int x) { return x % n != 0; })) rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  sys.kernel = zn_kernel(std::move(rows), nv, n);
  return sys;
}

std::uint64_t solution_count(const CocycleSystem& sys, int n) {
  std::uint64_t count = 1;
  for (Int s : sys.kernel.step) {
    const auto choices = static_cast<std::uint64_t>(n / s);
    if (count > std::numeric_limits<std::uint64_t>::max() / choices) return std::numeric_limits<std::uint64_t>::max();
    count *= choices;
  }
  return count;
}

}  // namespace

std::uint64_t count_torsion_cocycles(const PartialAction& a, int n) { return solution_count(cocycle_system(a, n), n); }

std::vector<TorsionCochain> enumerate_torsion_cocycles(const PartialAction& a, int n, std::uint64_t max_count) {
  const CocycleSystem sys = cocycle_system(a, n);
  const std::uint64_t count = solution_count(sys, n);
  if (count > max_count) {
    throw SizeGuardExceeded("torsion cocycle enumeration: " +
                            (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                               : std::to_string(count)) +
                            " solutions exceed the bound " + std::to_string(max_count));
  }
  const std::size_t nv = sys.vars.size();
  const TorsionCochain base = torsion_identity(a, n);
  std::vector<TorsionCochain> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<Int> kp(nv, 0);
  for (std::uint64_t iter = 0; iter < count; ++iter) {
    TorsionCochain t = base;
    for (std::size_t v = 0; v < nv; ++v) {
      Int k = 0;
      for (std::size_t j = 0; j < nv; ++j) k += sys.kernel.c[v][j] * kp[j];
      const auto [g, c] = sys.vars[v];
      t.exponents[static_cast<std::size_t>(g)][static_cast<std::size_t>(c)] = static_cast<int>(mod(k, n));
    }
    out.push_back(std::move(t));
    for (std::size_t j = 0; j < nv; ++j) {
      kp[j] += sys.kernel.step[j];
      if (kp[j] < n) break;
      kp[j] = 0;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TorsionCochain> h1_torsion(const std::shared_ptr<const PartialAction>& a, int n, std::uint64_t max_count,
                                       TorsionCensus* census) {
  const auto z = enumerate_torsion_cocycles(*a, n, max_count);
  std::vector<const TorsionCochain*> trivial;
  for (const auto& f : z) {
    if (is_coboundary1(to_cochain(a, f))) trivial.push_back(&f);
  }
  std::vector<bool> assigned(z.size(), false);
  std::vector<TorsionCochain> reps;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (assigned[i]) continue;
    reps.push_back(z[i]);
    for (const auto* k : trivial) {
      const auto member = torsion_mul(z[i], *k);
      const auto it = std::lower_bound(z.begin(), z.end(), member);
      assigned[static_cast<std::size_t>(it - z.begin())] = true;
    }
  }
  if (census) *census = {z.size(), trivial.size(), reps.size()};
  return reps;
}

}  // namespace pk
