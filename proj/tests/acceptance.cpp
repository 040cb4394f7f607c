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

// Acceptance run: one PASS/FAIL line per criterion. Every comparison is exact; the only
// numeric thresholds are the sample counts below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pk/errors.hpp"
#include "pk/radical.hpp"
#include "pk/report.hpp"
#include "support/generators.hpp"

namespace {

using namespace pk;
using ActionPtr = std::shared_ptr<const PartialAction>;

// Exact arithmetic throughout: the tolerance on every equality is zero.
constexpr int kTolerance = 0;
constexpr int kMinDeltaSamples = 100;
constexpr int kMinLawInstances = 30;
constexpr std::uint64_t kGroupCheckBound = 50000;
constexpr int kClosurePairs = 64;

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + why;
  }
};

ActionPtr share(PartialAction a) { return std::make_shared<const PartialAction>(std::move(a)); }

std::string instance(const std::string& name) { return std::string(PK_INSTANCE_DIR) + "/" + name + ".json"; }

std::string row_string(const report::Json& rows) {
  std::string s;
  for (const auto& r : rows) {
    s += "(";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + r[i].get<std::string>();
    s += ")";
  }
  return s;
}

std::set<std::vector<int>> subsets_of(const report::Json& res) {
  std::set<std::vector<int>> out;
  for (const auto& d : res["direct_subsets"]) out.insert(d["members"].get<std::vector<int>>());
  return out;
}

std::string set_string(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

AlgElem random_unit(std::mt19937& rng, const SplitAlgebra& s, const IdempotentIdeal& ideal) {
  AlgElem x = s.zero();
  for (int c : ideal.members()) {
    x(c) = CycNum(1 + static_cast<long>(rng() % 5)) * CycNum::root_of_unity(s.n(), static_cast<long>(rng() % 12));
  }
  return x;
}

Result four_cycle_tables() {
  Result r;
  const auto out = report::run("decompose", instance("e1"), {});
  const auto& res = out.report["result"];
  const char* expected[4][3] = {{"1", "1", "1"}, {"1", "z", "-1"}, {"1", "-1", "1"}, {"1", "-z", "1"}};
  for (int k = 0; k < 4; ++k) {
    report::Json want = report::Json::array({report::Json::array({expected[k][0], expected[k][1], expected[k][2]})});
    const auto& got = res["modules"][static_cast<std::size_t>(k)]["basis"];
    if (got != want) r.fail("Q_chi^" + std::to_string(k) + " = <" + row_string(got) + ">, expected <" + row_string(want) + ">");
  }
  const auto ds = subsets_of(res);
  for (const std::vector<int>& x : {std::vector<int>{0, 1, 2}, {0, 1, 3}, {1, 2, 3}}) {
    if (!ds.count(x)) r.fail(set_string(x) + " missing from the direct subsets");
  }
  if (ds.count({0, 2, 3})) r.fail("{0,2,3} is direct");
  return r;
}

Result five_cycle_tables() {
  Result r;
  const auto out = report::run("decompose", instance("e2"), {});
  const auto& res = out.report["result"];
  for (int k = 0; k < 5; ++k) {
    const std::string w = CycNum::root_of_unity(5, k).to_string();
    report::Json want = report::Json::array({report::Json::array({"1", w, "0", "0"}), report::Json::array({"0", "0", "1", w})});
    const auto& got = res["modules"][static_cast<std::size_t>(k)]["basis"];
    if (got != want) r.fail("Q_chi^" + std::to_string(k) + " = <" + row_string(got) + ">, expected <" + row_string(want) + ">");
  }
  std::set<std::vector<int>> pairs;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) pairs.insert({i, j});
  }
  if (subsets_of(res) != pairs) r.fail("direct subsets are not exactly the ten pairs");
  return r;
}

Result classification() {
  Result r;
  for (const char* name : {"e1", "e2"}) {
    const auto out = report::run("classify", instance(name), {});
    const std::string v = out.report["result"]["verdict"];
    if (v.rfind("not parametrizable", 0) != 0) r.fail(std::string(name) + ": " + v);
  }
  const auto out = report::run("classify", instance("c2_in_c4"), {});
  const auto& res = out.report["result"];
  if (res["verdict"] != "global 2-kummerian via H = <g^2>") r.fail("c2_in_c4: " + res["verdict"].get<std::string>());
  for (const char* clause : {"extension_by_zero", "invariants_chain", "rank_equals_order", "lambda_products"}) {
    bool found = false;
    for (const auto& c : out.report["checks"]) {
      if (c["name"] == clause) found = c["pass"].get<bool>();
    }
    if (!found) r.fail(std::string("c2_in_c4: ") + clause);
  }
  const auto dec = report::run("decompose", instance("c2_in_c4"), {});
  if (dec.report["result"]["modules"][0]["basis"] != dec.report["result"]["invariants"]) r.fail("Q_chi^0 differs from R");
  if (r.pass) r.detail = "verdict and all three clauses hold on c2_in_c4";
  return r;
}

Result cohomology_suite() {
  Result r;
  std::mt19937 rng(2024);
  int instances = 0, d1 = 0, d2 = 0, groups = 0, skipped = 0;
  for (int k = 1; k <= 6; ++k) {
    const int n = k == 1 ? 2 : k;
    for (const auto& inst : gen::all_induced(k, 6, n)) {
      const auto a = share(inst.action);
      const SplitAlgebra& s = a->algebra();
      ++instances;
      const Cochain d0 = coboundary0(a, random_unit(rng, s, IdempotentIdeal::full(s.m())));
      ++d1;
      if (!(coboundary(d0) == Cochain::identity(a, 2))) r.fail(inst.label + ": delta1 delta0 != 1");
      if (!is_cocycle1(d0)) r.fail(inst.label + ": coboundary is not a cocycle");
      std::vector<AlgElem> values;
      for (int g = 0; g < a->group().order(); ++g) values.push_back(random_unit(rng, s, a->range(g)));
      ++d2;
      if (!(coboundary(coboundary(Cochain(a, 1, std::move(values)))) == Cochain::identity(a, 3))) r.fail(inst.label + ": delta2 delta1 != 1");

      if (count_torsion_cocycles(*a, n) > kGroupCheckBound) {
        ++skipped;
        continue;
      }
      const auto z = enumerate_torsion_cocycles(*a, n, kGroupCheckBound);
      const auto in = [&](const TorsionCochain& t) { return std::binary_search(z.begin(), z.end(), t); };
      bool ok = in(torsion_identity(*a, n));
      for (int p = 0; p < kClosurePairs && ok; ++p) {
        const auto& x = z[rng() % z.size()];
        const auto& y = z[rng() % z.size()];
        ok = in(torsion_mul(x, y)) && in(torsion_inv(x));
      }
      ++groups;
      if (!ok) r.fail(inst.label + ": torsion cocycles are not a group");
    }
  }
  if (d1 < kMinDeltaSamples || d2 < kMinDeltaSamples) r.fail("too few samples");
  if (r.pass) {
    r.detail = std::to_string(instances) + " instances, " + std::to_string(d1) + "+" + std::to_string(d2) +
               " delta samples, group law on " + std::to_string(groups) + " (" + std::to_string(skipped) + " above the bound)";
  }
  return r;
}

Result module_laws() {
  Result r;
  int instances = 0;
  long pairs = 0;
  for (int k = 2; k <= 3; ++k) {
    for (const auto& inst : gen::galois_induced(k, 6, k)) {
      const auto a = share(inst.action);
      const auto kd = make_kummer_data(a);
      // Laws on a single cocycle run once per f; the two pair laws reuse the cached modules.
      const auto z = enumerate_torsion_cocycles(*a, k);
      std::vector<Cochain> cs;
      std::vector<Subspace> qs;
      for (const auto& t : z) {
        cs.push_back(to_cochain(a, t));
        qs.push_back(q_module(kd, cs.back()).space);
      }
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const Verdict v = verify_projector(kd, cs[i]);
        if (!v) r.fail(inst.label + ": projector: " + v.detail);
        if (!verify_q_laws(kd, cs[i], cs[i]).all()) r.fail(inst.label + ": module law on one cocycle");
        for (std::size_t j = 0; j < cs.size(); ++j) {
          ++pairs;
          const auto prod = std::lower_bound(z.begin(), z.end(), torsion_mul(z[i], z[j]));
          if (prod == z.end() || !(module_product(qs[i], qs[j]) == qs[static_cast<std::size_t>(prod - z.begin())])) {
            r.fail(inst.label + ": Q_f Q_f' != Q_ff'");
          }
          if (const auto u = cohomology_witness(cs[i], cs[j]); u && !(qs[i] == scaled(qs[j], *u))) {
            r.fail(inst.label + ": cohomologous modules differ");
          }
        }
      }
      const Verdict pic = verify_pic_hom(kd, cs);
      if (!pic) r.fail(inst.label + ": " + pic.detail);
      ++instances;
    }
  }
  if (instances < kMinLawInstances) r.fail("only " + std::to_string(instances) + " instances");
  if (r.pass) r.detail = std::to_string(instances) + " instances, " + std::to_string(pairs) + " cocycle pairs";
  return r;
}

Result kummer_identities() {
  Result r;
  for (int n = 2; n <= 12; ++n) {
    const CycNum w = CycNum::root_of_unity(n, 1);
    CycNum sum = CycNum::zero(n), prod = CycNum::one(n);
    for (int i = 0; i < n; ++i) sum += w.pow(i);
    for (int i = 1; i < n; ++i) prod *= CycNum(1) - w.pow(i);
    if (!sum.is_zero()) r.fail("sum of powers, n = " + std::to_string(n));
    if (!(prod == CycNum(n))) r.fail("product of 1 - w^i, n = " + std::to_string(n));
  }
  for (int k = 1; k <= 12; ++k) {
    const Verdict v = character_sum_check(FinAbGroup::cyclic(k), k);
    if (!v) r.fail("character sum, order " + std::to_string(k) + ": " + v.detail);
  }
  if (r.pass) r.detail = "n = 2..12 and cyclic groups of order 1..12";
  return r;
}

RadicalExtension paired(int n, int m, const std::vector<CycNum>& twists, const std::vector<CycNum>& phi) {
  const int r = static_cast<int>(twists.size());
  const SplitAlgebra s(n, 2 * r);
  std::vector<AlgElem> rs, qs;
  Matrix<CycNum> p = Matrix<CycNum>::Zero(r, r);
  for (int b = 0; b < r; ++b) {
    AlgElem u = s.zero(), q = s.zero();
    u(2 * b) = u(2 * b + 1) = CycNum(1);
    q(2 * b) = CycNum(1);
    q(2 * b + 1) = twists[static_cast<std::size_t>(b)];
    rs.push_back(u);
    qs.push_back(q);
    p(b, b) = phi[static_cast<std::size_t>(b)];
  }
  return build_radical(Subspace::span(s, rs), Subspace::span(s, qs), m, p);
}

Result radical_suite() {
  Result r;
  std::mt19937 rng(77);
  const auto nonzero = [&](int n) {
    for (;;) {
      const CycNum c = gen::small_cyc(rng, n);
      if (!c.is_zero()) return c;
    }
  };
  long triples = 0, subsets = 0, low = 0, wrap = 0;
  for (int m = 1; m <= 6; ++m) {
    for (int blocks = 1; blocks <= 3; ++blocks) {
      std::vector<CycNum> tw, phi;
      for (int b = 0; b < blocks; ++b) tw.push_back(nonzero(12)), phi.push_back(nonzero(12));
      const auto ext = paired(12, m, tw, phi);
      for (int i = 0; i < m; ++i) {
        for (int b = 0; b < blocks; ++b) {
          const GradedElem x = ext.basis(i, b);
          if (!(multiply(ext, ext.one(), x) == x)) r.fail("unit");
          for (int j = 0; j < m; ++j) {
            for (int c = 0; c < blocks; ++c) {
              const GradedElem y = ext.basis(j, c);
              const GradedElem xy = multiply(ext, x, y);
              if (!(xy == multiply(ext, y, x))) r.fail("commutativity");
              for (int k = 0; k < m; ++k) {
                for (int d = 0; d < blocks; ++d) {
                  const GradedElem z = ext.basis(k, d);
                  ++triples;
                  if (!(multiply(ext, xy, z) == multiply(ext, x, multiply(ext, y, z)))) r.fail("associativity");
                }
              }
            }
          }
        }
      }
    }
    const auto ext = paired(60, m, {CycNum(1), nonzero(60)}, {nonzero(60), nonzero(60)});
    for (unsigned mask = 0; mask < (1U << m); ++mask) {
      std::vector<int> members;
      for (int i = 0; i < m; ++i) {
        if ((mask >> i) & 1U) members.push_back(i);
      }
      ++subsets;
      const auto ir = i_radical(ext, members);
      if (ir.subalgebra != is_saturated(members, m)) r.fail("saturation vs subalgebra at m = " + std::to_string(m));
    }
  }
  for (int k = 2; k <= 6; ++k) {
    const auto kd = make_kummer_data(share(gen::galois_induced(k, k, k).back().action));
    const auto dec = decompose(kd);
    if (!dec.global) continue;
    const Subspace& q = dec.entries[1].module.space;
    const auto ext = build_radical(kd.r, q, k, multiplication_phi(kd.r, q, k));
    std::vector<int> all;
    std::vector<Subspace> targets;
    for (int i = 0; i < k; ++i) all.push_back(i), targets.push_back(dec.entries[static_cast<std::size_t>(i)].module.space);
    const auto rep = verify_lambda(ext, all, targets);
    low += rep.low_pairs;
    wrap += rep.wrap_pairs;
    if (!rep.low_ok) r.fail("lambda below the modulus, k = " + std::to_string(k));
    if (!rep.wrap_ok) r.fail("lambda wrapping, k = " + std::to_string(k));
  }
  if (low == 0 || wrap == 0) r.fail("a degree branch was never exercised");
  if (r.pass) {
    r.detail = std::to_string(triples) + " basis triples, " + std::to_string(subsets) + " degree sets, lambda pairs " +
               std::to_string(low) + " low / " + std::to_string(wrap) + " wrapping";
  }
  return r;
}

Result directness_law() {
  Result r;
  int instances = 0, global = 0;
  for (int k = 1; k <= 6; ++k) {
    const int n = k == 1 ? 2 : k;
    for (const auto& inst : gen::galois_induced(k, 6, n)) {
      const auto a = share(inst.action);
      const auto dec = decompose(make_kummer_data(a));
      ++instances;
      global += dec.global;
      if (dec.global != is_global(*a)) r.fail(inst.label + ": global flag");
      if (dec.direct != dec.global) r.fail(inst.label + ": direct = " + std::to_string(dec.direct));
    }
  }
  if (r.pass) r.detail = std::to_string(instances) + " partial Galois instances, " + std::to_string(global) + " global";
  return r;
}

}  // namespace

int main() {
  static_assert(kTolerance == 0);
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria = {
      {"C4 on K^3: module bases and direct subsets", four_cycle_tables},
      {"C5 on K^4: module bases and direct pairs", five_cycle_tables},
      {"classification verdicts", classification},
      {"cohomology property suite", cohomology_suite},
      {"Q-module law suite", module_laws},
      {"root of unity and character identities", kummer_identities},
      {"radical algebra suite", radical_suite},
      {"direct full sum iff global", directness_law},
  };
  const auto start = std::chrono::steady_clock::now();
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    passed += res.pass;
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("AC%zu %s %s%s%s [%.1f s]\n", i + 1, res.pass ? "PASS" : "FAIL", criteria[i].first,
                res.detail.empty() ? "" : ": ", res.detail.c_str(), t);
    std::fflush(stdout);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.1f s\n", passed, criteria.size(), secs);
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
