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


#include "pk/report.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "pk/errors.hpp"
#include "pk/radical.hpp"

namespace pk::report {
namespace {

Json cyc(const CycNum& x) { return x.to_string(); }

Json elem(const AlgElem& x) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < x.size(); ++c) out.push_back(cyc(x(c)));
  return out;
}

Json subspace(const Subspace& s) {
  Json out = Json::array();
  for (int i = 0; i < s.dim(); ++i) out.push_back(elem(s.basis_vector(i)));
  return out;
}

Json torsion(const TorsionCochain& t) {
  Json out = Json::array();
  for (const auto& row : t.exponents) {
    Json r = Json::array();
    for (int k : row) r.push_back(k < 0 ? Json(nullptr) : Json(k));
    out.push_back(std::move(r));
  }
  return out;
}

Json names(const FinAbGroup& grp, const std::vector<int>& elems) {
  Json out = Json::array();
  for (int g : elems) out.push_back(grp.name(g));
  return out;
}

std::string character_name(const FinAbGroup& grp, int t) {
  return grp.is_cyclic() ? "chi^" + std::to_string(t) : "chi_" + grp.name(t);
}

std::string members_string(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

class Builder {
 public:
  Builder(std::string_view command, const io::Instance& inst) {
    r_["schema"] = kReportSchema;
    r_["command"] = command;
    r_["instance"] = {{"name", inst.name}, {"digest", inst.digest}};
    r_["status"] = "pass";
    r_["checks"] = Json::array();
    r_["result"] = Json::object();
  }

  bool check(const std::string& name, bool ok, const std::string& detail = "") {
    Json c = {{"name", name}, {"pass", ok}};
    if (!detail.empty()) c["detail"] = detail;
    r_["checks"].push_back(std::move(c));
    failed_ = failed_ || !ok;
    return ok;
  }

  Json& result() { return r_["result"]; }

  Outcome finish() {
    r_["status"] = failed_ ? "fail" : "pass";
    return {r_, failed_ ? kCheckFailed : kPass};
  }

 private:
  Json r_;
  bool failed_ = false;
};

bool axioms(Builder& b, const PartialAction& a) {
  const Verdict v = pk::validate(a);
  return b.check("axioms", v.ok, v.detail);
}

std::optional<KummerData> kummer(Builder& b, const io::Instance& inst) {
  try {
    KummerData kd = make_kummer_data(inst.action);
    b.check("galois", true);
    return kd;
  } catch (const MathError& e) {
    b.check("galois", false, e.what());
  }
  return std::nullopt;
}

// Units with small entries; the generator is reseeded per report so output is reproducible.
AlgElem random_unit(std::mt19937& rng, const SplitAlgebra& s, const IdempotentIdeal& ideal) {
  AlgElem x = s.zero();
  for (int c : ideal.members()) {
    const long k = 1 + static_cast<long>(rng() % 4);
    x(c) = CycNum(k) * CycNum::root_of_unity(s.n(), static_cast<long>(rng() % static_cast<unsigned>(s.n())));
  }
  return x;
}

Json route_json(const FinAbGroup& grp, const SubgroupRoute& r) {
  Json lam = {{"module_iso", r.lambda.module_iso},
              {"degree_preserving", r.lambda.degree_preserving},
              {"multiplicative", r.lambda.multiplicative ? Json(*r.lambda.multiplicative) : Json(nullptr)},
              {"low_pairs", r.lambda.low_pairs},
              {"wrap_pairs", r.lambda.wrap_pairs}};
  return {{"generator", grp.name(r.generator)},
          {"subgroup", names(grp, r.subgroup)},
          {"members", r.members},
          {"extension_by_zero", r.extension_by_zero},
          {"invariants_match", r.invariants_match},
          {"rank_matches", r.rank_matches},
          {"direct", r.direct},
          {"lambda", std::move(lam)},
          {"verified", r.verified()}};
}

}  // namespace

Outcome validate(const io::Instance& inst, const Options&) {
  Builder b("validate", inst);
  const PartialAction& a = *inst.action;
  const FinAbGroup& grp = a.group();
  if (!axioms(b, a)) return b.finish();

  std::string bad;
  for (int g = 0; g < grp.order() && bad.empty(); ++g) {
    if (!(apply(a, g, a.unit(grp.inverse(g))) == a.unit(g))) bad = "alpha_" + grp.name(g) + " does not send 1_{g^-1} to 1_g";
  }
  b.check("unital", bad.empty(), bad);

  Json& res = b.result();
  res["group"] = grp.factors();
  res["n"] = a.n();
  res["m"] = a.m();
  res["invariants"] = subspace(invariants(a));
  try {
    const AlgElem w = find_trace_one(a);
    b.check("trace_one", trace(a, w) == a.algebra().one());
    res["trace_one"] = elem(w);
  } catch (const NoTraceOne& e) {
    b.check("trace_one", false, e.what());
  }
  try {
    const GaloisCoordinates gc = find_galois_coordinates(a);
    const Verdict v = verify_coordinates(a, gc);
    b.check("galois_coordinates", v.ok, v.detail);
    Json xs = Json::array(), ys = Json::array();
    for (const auto& x : gc.xs) xs.push_back(elem(x));
    for (const auto& y : gc.ys) ys.push_back(elem(y));
    res["coordinates"] = {{"x", std::move(xs)}, {"y", std::move(ys)}};
  } catch (const NotGalois& e) {
    b.check("galois_coordinates", false, e.what());
  }
  if (inst.coordinates) {
    const Verdict v = verify_coordinates(a, *inst.coordinates);
    b.check("given_coordinates", v.ok, v.detail);
  }
  res["global"] = is_global(a);
  const auto h = is_extension_by_zero(a);
  res["extension_by_zero"] = h ? names(grp, *h) : Json(nullptr);
  return b.finish();
}

Outcome cohomology(const io::Instance& inst, const Options& opt) {
  Builder b("cohomology", inst);
  const auto& ap = inst.action;
  const PartialAction& a = *ap;
  const FinAbGroup& grp = a.group();
  const SplitAlgebra& s = a.algebra();
  if (!axioms(b, a)) return b.finish();

  constexpr int kSamples = 16;
  std::mt19937 rng(7);
  bool dd1 = true, dd2 = true, b_in_z = true;
  for (int i = 0; i < kSamples; ++i) {
    const Cochain d0 = coboundary0(ap, random_unit(rng, s, IdempotentIdeal::full(s.m())));
    dd1 = dd1 && coboundary(d0) == Cochain::identity(ap, 2);
    b_in_z = b_in_z && is_cocycle1(d0);
    std::vector<AlgElem> values;
    for (int g = 0; g < grp.order(); ++g) values.push_back(random_unit(rng, s, a.range(g)));
    const Cochain f(ap, 1, std::move(values));
    dd2 = dd2 && coboundary(coboundary(f)) == Cochain::identity(ap, 3);
  }
  b.check("delta1_delta0", dd1, std::to_string(kSamples) + " random units");
  b.check("delta2_delta1", dd2, std::to_string(kSamples) + " random unit cochains");
  b.check("coboundaries_are_cocycles", b_in_z);

  const int n = a.n();
  TorsionCensus census;
  const auto classes = h1_torsion(ap, n, opt.max_enum, &census);
  const auto z1 = enumerate_torsion_cocycles(a, n, opt.max_enum);
  const auto in_z1 = [&](const TorsionCochain& t) { return std::binary_search(z1.begin(), z1.end(), t); };
  bool group_ok = in_z1(torsion_identity(a, n));
  const std::size_t probe = std::min<std::size_t>(z1.size(), 32);
  for (std::size_t i = 0; i < probe && group_ok; ++i) {
    group_ok = in_z1(torsion_inv(z1[i]));
    for (std::size_t j = 0; j < probe && group_ok; ++j) group_ok = in_z1(torsion_mul(z1[i], z1[j]));
  }
  b.check("cocycles_form_a_group", group_ok, "identity, inverses and products of the first " + std::to_string(probe) + " cocycles");

  Json& res = b.result();
  res["n"] = n;
  res["census"] = {{"z1", census.z1}, {"b1", census.b1}, {"h1", census.h1}};
  Json reps = Json::array();
  for (const auto& t : classes) reps.push_back(torsion(t));
  res["classes"] = std::move(reps);
  Json named = Json::array();
  for (const auto& nc : inst.cochains) {
    const Cochain f = to_cochain(ap, nc.cochain);
    Json j = {{"name", nc.name}, {"order", nc.cochain.order}};
    const bool cocycle = is_cocycle1(f);
    j["cocycle"] = cocycle;
    j["coboundary"] = nullptr;
    j["witness"] = nullptr;
    j["class"] = nullptr;
    if (cocycle) {
      const auto t = is_coboundary1(f);
      j["coboundary"] = t.has_value();
      if (t) j["witness"] = elem(*t);
      for (std::size_t k = 0; k < classes.size(); ++k) {
        if (cohomologous(f, to_cochain(ap, classes[k]))) {
          j["class"] = k;
          break;
        }
      }
    }
    named.push_back(std::move(j));
  }
  res["cochains"] = std::move(named);
  return b.finish();
}

Outcome decompose(const io::Instance& inst, const Options&) {
  Builder b("decompose", inst);
  const PartialAction& a = *inst.action;
  const FinAbGroup& grp = a.group();
  if (!axioms(b, a)) return b.finish();
  const auto kd = kummer(b, inst);
  if (!kd) return b.finish();
  Decomposition dec;
  try {
    dec = pk::decompose(*kd);
    b.check("spans_s", true);
  } catch (const SumNotS& e) {
    b.check("spans_s", false, e.what());
    return b.finish();
  }

  std::string bad_projector, bad_rank;
  std::vector<Cochain> cocycles;
  for (const auto& e : dec.entries) {
    if (bad_projector.empty() && !verify_projector(*kd, e.module.cocycle)) bad_projector = character_name(grp, e.chi.index);
    if (bad_rank.empty() && std::any_of(e.block_ranks.begin(), e.block_ranks.end(), [](int r) { return r != 1; })) {
      bad_rank = character_name(grp, e.chi.index);
    }
    cocycles.push_back(e.module.cocycle);
  }
  b.check("projectors", bad_projector.empty(), bad_projector);
  b.check("rank_one", bad_rank.empty(), bad_rank);
  const Verdict pic = verify_pic_hom(*kd, cocycles);
  b.check("pic_shadow", pic.ok, pic.detail);

  Json& res = b.result();
  res["omega"] = cyc(kd->omega);
  res["invariants"] = subspace(kd->r);
  res["trace_one"] = elem(kd->w);
  Json mods = Json::array();
  for (const auto& e : dec.entries) {
    mods.push_back({{"character", character_name(grp, e.chi.index)},
                    {"values", e.chi.exponents},
                    {"basis", subspace(e.module.space)},
                    {"block_ranks", e.block_ranks}});
  }
  res["modules"] = std::move(mods);
  res["direct"] = dec.direct;
  res["global"] = dec.global;
  Json subsets = Json::array();
  const auto ds = find_direct_subsets(dec, grp);
  for (const auto& d : ds) subsets.push_back({{"members", d.members}, {"saturated", d.saturated}});
  res["direct_subsets"] = std::move(subsets);
  res["potential_counterexample"] = ds.empty();
  return b.finish();
}

Outcome classify(const io::Instance& inst, const Options&) {
  Builder b("classify", inst);
  const PartialAction& a = *inst.action;
  const FinAbGroup& grp = a.group();
  if (!axioms(b, a)) return b.finish();
  if (!b.check("cyclic_group", grp.is_cyclic())) return b.finish();
  const auto kd = kummer(b, inst);
  if (!kd) return b.finish();
  Classification c;
  try {
    c = parametrize(*kd);
    b.check("spans_s", true);
  } catch (const SumNotS& e) {
    b.check("spans_s", false, e.what());
    return b.finish();
  }

  for (std::size_t i = 0; i < c.direct_subsets.size(); ++i) {
    b.check("lambda_module " + members_string(c.direct_subsets[i].members), c.module_verdicts[i].module_iso);
  }
  if (c.chosen) {
    const auto& r = *c.chosen;
    b.check("extension_by_zero", r.extension_by_zero);
    b.check("invariants_chain", r.invariants_match, "S^{alpha_H} = R");
    b.check("rank_equals_order", r.rank_matches, "rank of S over R = " + std::to_string(r.subgroup.size()));
    b.check("lambda_degrees", r.lambda.degree_preserving);
    b.check("lambda_products", r.lambda.multiplicative.value_or(false),
            std::to_string(r.lambda.low_pairs) + " pairs below the modulus, " + std::to_string(r.lambda.wrap_pairs) +
                " wrapping");
  }

  Json& res = b.result();
  res["verdict"] = c.verdict;
  res["subgroup"] = c.chosen ? Json{{"generator", grp.name(c.chosen->generator)}, {"elements", names(grp, c.chosen->subgroup)}}
                             : Json(nullptr);
  res["routes_agree"] = c.routes_agree;
  res["potential_counterexample"] = c.potential_counterexample;
  Json subsets = Json::array();
  for (const auto& d : c.direct_subsets) subsets.push_back({{"members", d.members}, {"saturated", d.saturated}});
  res["direct_subsets"] = std::move(subsets);
  res["saturated"] = c.saturated;
  Json from_sat = Json::array(), from_sub = Json::array();
  for (const auto& r : c.from_saturated) from_sat.push_back(route_json(grp, r));
  for (const auto& r : c.from_subgroups) from_sub.push_back(route_json(grp, r));
  res["routes"] = {{"saturated_sets", std::move(from_sat)}, {"subgroups", std::move(from_sub)}};
  if (c.radical) {
    const RadicalExtension& ext = *c.radical;
    Json phi = Json::array(), gens = Json::array(), table = Json::array();
    for (const auto& p : ext.phi()) phi.push_back(cyc(p));
    for (const auto& g : ext.generators()) gens.push_back(elem(g));
    std::vector<int> all;
    for (int i = 0; i < ext.modulus(); ++i) all.push_back(i);
    for (const auto& e : product_table(ext, all)) {
      table.push_back({{"left", e.left}, {"right", e.right}, {"block", e.block}, {"degree", e.degree}, {"coefficient", cyc(e.coefficient)}});
    }
    res["radical"] = {{"modulus", ext.modulus()}, {"phi", std::move(phi)}, {"generators", std::move(gens)}, {"products", std::move(table)}};
  } else {
    res["radical"] = nullptr;
  }
  return b.finish();
}

Outcome run(std::string_view command, const std::string& path, const Options& opt) {
  Json head;
  head["schema"] = kReportSchema;
  head["command"] = command;
  io::Instance inst;
  try {
    inst = io::load_instance(path);
  } catch (const InputError& e) {
    head["status"] = "input_error";
    head["error"] = e.what();
    head["line"] = e.line();
    return {head, kInputError};
  }
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (command == "validate") out = validate(inst, opt);
    else if (command == "cohomology") out = cohomology(inst, opt);
    else if (command == "decompose") out = decompose(inst, opt);
    else if (command == "classify") out = classify(inst, opt);
    else throw std::invalid_argument("unknown command " + std::string(command));
  } catch (const SizeGuardExceeded& e) {
    head["instance"] = {{"name", inst.name}, {"digest", inst.digest}};
    head["status"] = "resource_guard";
    head["error"] = e.what();
    return {head, kResourceGuard};
  }
  if (opt.timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    out.report["timing_ms"] = ms.count();
  }
  return out;
}

}  // namespace pk::report
