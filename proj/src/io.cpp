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


#include "pk/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pk/errors.hpp"

namespace pk::io {
namespace {

using nlohmann::json;

class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : t_(text) {}

  std::map<std::string, int> run() {
    value("");
    return std::move(out_);
  }

 private:
  bool more() const { return p_ < t_.size(); }
  char peek() const { return more() ? t_[p_] : '\0'; }

  void skip_ws() {
    while (more() && (t_[p_] == ' ' || t_[p_] == '\t' || t_[p_] == '\r' || t_[p_] == '\n')) {
      if (t_[p_] == '\n') ++line_;
      ++p_;
    }
  }

  std::string string_token() {
    std::string s;
    ++p_;
    while (more() && t_[p_] != '"') {
      if (t_[p_] == '\\' && p_ + 1 < t_.size()) ++p_;
      s += t_[p_++];
    }
    ++p_;
    return s;
  }

  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  void value(const std::string& path) {
    skip_ws();
    out_[path] = line_;
    const char c = peek();
    if (c == '{' || c == '[') {
      const char close = c == '{' ? '}' : ']';
      ++p_;
      skip_ws();
      if (peek() == close) {
        ++p_;
        return;
      }
      for (int index = 0; more(); ++index) {
        std::string child = std::to_string(index);
        if (c == '{') {
          skip_ws();
          child = escape(string_token());
          skip_ws();
          ++p_;  // ':'
        }
        value(path + "/" + child);
        skip_ws();
        const char sep = peek();
        ++p_;
        if (sep != ',') return;
      }
      return;
    }
    if (c == '"') {
      string_token();
      return;
    }
    while (more() && std::string_view(",]} \t\r\n").find(t_[p_]) == std::string_view::npos) ++p_;
  }

  std::string_view t_;
  std::size_t p_ = 0;
  int line_ = 1;
  std::map<std::string, int> out_;
};

int line_of_byte(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n'));
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(value_lines(text)) {}

  int line(const std::string& path) const {
    std::string p = path;
    for (;;) {
      const auto it = lines_.find(p);
      if (it != lines_.end()) return it->second;
      const auto cut = p.rfind('/');
      if (cut == std::string::npos) return 0;
      p = p.substr(0, cut);
    }
  }

  [[noreturn]] void fail(const std::string& path, const std::string& what) const { throw InputError(what, line(path)); }

  void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) const {
    if (!obj.is_object()) fail(path, "expected an object");
    for (const auto& [k, v] : obj.items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* s) { return k == s; })) fail(path + "/" + k, "unknown key \"" + k + "\"");
    }
  }

  const json& member(const json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(path, std::string("missing key \"") + key + "\"");
    return obj.at(key);
  }

  long integer(const json& v, const std::string& path, long lo, long hi) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    const long x = v.get<long>();
    if (x < lo || x > hi) fail(path, "value " + std::to_string(x) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    return x;
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }

  mpq_class rational(const json& v, const std::string& path) const {
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (!v.is_string()) fail(path, "expected an integer or a \"p/q\" string");
    const std::string s = v.get<std::string>();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) fail(path, "malformed rational \"" + s + "\"");
    if (q.get_den() == 0) fail(path, "zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  }

  CycNum field_entry(const json& v, const std::string& path, int n) const {
    if (!v.is_array()) return CycNum::rational(n, rational(v, path));
    CycNum out = CycNum::zero(n);
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += CycNum::rational(n, rational(v[i], path + "/" + std::to_string(i))) * CycNum::root_of_unity(n, static_cast<long>(i));
    }
    return out;
  }

  AlgElem element(const json& v, const std::string& path, const SplitAlgebra& s) const {
    array(v, path);
    if (static_cast<int>(v.size()) != s.m()) fail(path, "expected " + std::to_string(s.m()) + " entries");
    AlgElem x = s.zero();
    for (int c = 0; c < s.m(); ++c) x(c) = field_entry(v[static_cast<std::size_t>(c)], path + "/" + std::to_string(c), s.n());
    return x;
  }

 private:
  std::map<std::string, int> lines_;
};

int group_element(const Reader& rd, const json& v, const std::string& path, const FinAbGroup& grp) {
  if (v.is_number_integer()) return static_cast<int>(rd.integer(v, path, 0, grp.order() - 1));
  rd.array(v, path);
  if (v.size() != grp.factors().size()) {
    rd.fail(path, "expected a tuple of " + std::to_string(grp.factors().size()) + " exponents");
  }
  std::vector<int> t;
  for (std::size_t i = 0; i < v.size(); ++i) {
    t.push_back(static_cast<int>(rd.integer(v[i], path + "/" + std::to_string(i), 0, grp.factors()[i] - 1)));
  }
  return grp.index(t);
}

}  // namespace

std::string digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::map<std::string, int> value_lines(std::string_view text) { return LineScanner(text).run(); }

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw InputError("malformed JSON: " + (cut == std::string::npos ? what : what.substr(cut)), line_of_byte(text, e.byte));
  }
  const Reader rd(text);
  rd.only_keys(doc, "", {"schema", "name", "n", "m", "group", "actions", "cochains", "coordinates"});
  const json& schema = rd.member(doc, "", "schema");
  if (!schema.is_string() || schema.get<std::string>() != kInstanceSchema) {
    rd.fail("/schema", "schema must be \"" + std::string(kInstanceSchema) + "\"");
  }

  Instance inst;
  inst.digest = digest(text);
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) rd.fail("/name", "expected a string");
    inst.name = doc["name"].get<std::string>();
  }
  const int n = static_cast<int>(rd.integer(rd.member(doc, "", "n"), "/n", 1, 4096));
  const int m = static_cast<int>(rd.integer(rd.member(doc, "", "m"), "/m", 1, IdempotentIdeal::kMaxComponents));
  const json& gj = rd.array(rd.member(doc, "", "group"), "/group");
  std::vector<int> factors;
  for (std::size_t i = 0; i < gj.size(); ++i) factors.push_back(static_cast<int>(rd.integer(gj[i], "/group/" + std::to_string(i), 1, 4096)));
  FinAbGroup grp;
  try {
    grp = FinAbGroup(factors);
  } catch (const std::invalid_argument& e) {
    rd.fail("/group", e.what());
  }
  const SplitAlgebra s(n, m);

  std::vector<PartialAction::Map> maps(static_cast<std::size_t>(grp.order()), {IdempotentIdeal::empty(m), std::vector<int>(static_cast<std::size_t>(m), -1)});
  {
    std::vector<int> all(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) all[static_cast<std::size_t>(c)] = c;
    maps[0] = {IdempotentIdeal::full(m), all};
  }
  std::set<int> seen;
  const json& acts = rd.array(rd.member(doc, "", "actions"), "/actions");
  for (std::size_t k = 0; k < acts.size(); ++k) {
    const std::string path = "/actions/" + std::to_string(k);
    const json& a = acts[k];
    rd.only_keys(a, path, {"element", "domain", "sigma"});
    const int g = group_element(rd, rd.member(a, path, "element"), path + "/element", grp);
    if (!seen.insert(g).second) rd.fail(path + "/element", "element " + grp.name(g) + " is listed twice");
    const json& dom = rd.array(rd.member(a, path, "domain"), path + "/domain");
    const json& sig = rd.array(rd.member(a, path, "sigma"), path + "/sigma");
    if (dom.size() != sig.size()) rd.fail(path + "/sigma", "sigma must list one image per domain component");
    PartialAction::Map map{IdempotentIdeal::empty(m), std::vector<int>(static_cast<std::size_t>(m), -1)};
    std::set<int> images;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const std::string ip = "/" + std::to_string(i);
      const int c = static_cast<int>(rd.integer(dom[i], path + "/domain" + ip, 1, m)) - 1;
      const int t = static_cast<int>(rd.integer(sig[i], path + "/sigma" + ip, 1, m)) - 1;
      if (map.source.contains(c)) rd.fail(path + "/domain" + ip, "component " + std::to_string(c + 1) + " is listed twice");
      if (!images.insert(t).second) {
        rd.fail(path + "/sigma" + ip, "sigma of " + grp.name(g) + " is not injective: component " + std::to_string(t + 1) + " is hit twice");
      }
      map.source = map.source | IdempotentIdeal(m, std::uint64_t{1} << c);
      map.sigma[static_cast<std::size_t>(c)] = t;
    }
    maps[static_cast<std::size_t>(g)] = std::move(map);
  }
  try {
    inst.action = std::make_shared<const PartialAction>(s, grp, std::move(maps));
  } catch (const std::invalid_argument& e) {
    rd.fail("/actions", e.what());
  }

  if (doc.contains("cochains")) {
    const json& cs = rd.array(doc["cochains"], "/cochains");
    std::set<std::string> names;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string path = "/cochains/" + std::to_string(k);
      const json& c = cs[k];
      rd.only_keys(c, path, {"name", "order", "exponents"});
      const json& nm = rd.member(c, path, "name");
      if (!nm.is_string()) rd.fail(path + "/name", "expected a string");
      NamedCochain named{nm.get<std::string>(), {}};
      if (!names.insert(named.name).second) rd.fail(path + "/name", "cochain \"" + named.name + "\" is defined twice");
      const int order = static_cast<int>(rd.integer(rd.member(c, path, "order"), path + "/order", 1, n));
      if (n % order != 0) rd.fail(path + "/order", "order must divide n");
      named.cochain.order = order;
      const json& ex = rd.array(rd.member(c, path, "exponents"), path + "/exponents");
      if (static_cast<int>(ex.size()) != grp.order()) rd.fail(path + "/exponents", "expected one row per group element");
      for (int g = 0; g < grp.order(); ++g) {
        const std::string rp = path + "/exponents/" + std::to_string(g);
        const json& row = rd.array(ex[static_cast<std::size_t>(g)], rp);
        if (static_cast<int>(row.size()) != m) rd.fail(rp, "expected " + std::to_string(m) + " entries");
        std::vector<int> r;
        for (int col = 0; col < m; ++col) {
          const std::string ep = rp + "/" + std::to_string(col);
          const json& v = row[static_cast<std::size_t>(col)];
          const bool inside = inst.action->range(g).contains(col);
          if (v.is_null() != !inside) {
            rd.fail(ep, inside ? "component lies in D_" + grp.name(g) + " and needs an exponent"
                               : "component lies outside D_" + grp.name(g) + " and must be null");
          }
          if (v.is_null()) {
            r.push_back(-1);
          } else {
            const long e = rd.integer(v, ep, -1000000, 1000000);
            r.push_back(static_cast<int>(((e % order) + order) % order));
          }
        }
        named.cochain.exponents.push_back(std::move(r));
      }
      inst.cochains.push_back(std::move(named));
    }
  }

  if (doc.contains("coordinates")) {
    const json& co = doc["coordinates"];
    rd.only_keys(co, "/coordinates", {"x", "y"});
    GaloisCoordinates gc;
    for (const char* key : {"x", "y"}) {
      const std::string path = std::string("/coordinates/") + key;
      const json& list = rd.array(rd.member(co, "/coordinates", key), path);
      auto& out = key[0] == 'x' ? gc.xs : gc.ys;
      for (std::size_t i = 0; i < list.size(); ++i) out.push_back(rd.element(list[i], path + "/" + std::to_string(i), s));
    }
    if (gc.xs.size() != gc.ys.size()) rd.fail("/coordinates/y", "x and y must have the same length");
    inst.coordinates = std::move(gc);
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

}  // namespace pk::io
