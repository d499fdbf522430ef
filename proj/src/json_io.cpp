#include "ptw/json_io.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptw::io {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("json: " + what);
}

std::int64_t want_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json partition_to_json(const Partition& a) {
  json blocks = json::array();
  for (const auto& b : a.blocks()) {
    json blk = json::array();
    for (int c : b) blk.push_back(c <= a.n() ? c : -(c - a.n()));
    blocks.push_back(std::move(blk));
  }
  return blocks;
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) bad("partition must be an array of blocks");
  int labels = 0;
  for (const auto& blk : j) {
    if (!blk.is_array() || blk.empty()) bad("partition block must be a nonempty array");
    labels += static_cast<int>(blk.size());
  }
  if (labels == 0 || labels % 2 != 0) bad("partition must cover 2n labels");
  int n = labels / 2;
  std::vector<std::vector<int>> blocks;
  for (const auto& blk : j) {
    std::vector<int> out;
    for (const auto& v : blk) {
      std::int64_t s = want_int(v, "partition label");
      if (s == 0 || s > n || s < -n) bad("partition label out of range");
      out.push_back(s > 0 ? static_cast<int>(s) : n - static_cast<int>(s));
    }
    blocks.push_back(std::move(out));
  }
  return Partition(n, std::move(blocks));
}

json element_to_json(const TwistedElement& x) {
  if (x.is_zero()) return json("zero");
  return json{{"i", x.i()}, {"p", partition_to_json(x.alpha())}};
}

TwistedElement element_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "zero") return TwistedElement::zero();
    bad("element string must be \"zero\"");
  }
  if (!j.is_object() || !j.contains("i") || !j.contains("p"))
    bad("element must be \"zero\" or {\"i\", \"p\"}");
  std::int64_t i = want_int(j.at("i"), "element twist");
  if (i < 0) bad("element twist must be nonnegative");
  return TwistedElement::pair(i, partition_from_json(j.at("p")));
}

json natcong_to_json(const NatCong& c) {
  if (c.is_trivial()) return json("trivial");
  return json{{"min", c.min().value()}, {"per", c.per().value()}};
}

NatCong natcong_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "trivial") return NatCong::trivial();
    bad("chain entry string must be \"trivial\"");
  }
  if (!j.is_object() || !j.contains("min") || !j.contains("per"))
    bad("chain entry must be \"trivial\" or {\"min\", \"per\"}");
  std::int64_t m = want_int(j.at("min"), "min");
  std::int64_t p = want_int(j.at("per"), "per");
  if (m < 0 || p < 1) bad("chain entry needs min >= 0 and per >= 1");
  return NatCong::cyclic(m, p);
}

json rowspec_to_json(const RowSpec& r) {
  json prefix = json::array();
  for (const Symbol& s : r.prefix()) prefix.push_back(s.token());
  return json{{"prefix", std::move(prefix)}, {"tail", r.tail().token()}};
}

RowSpec rowspec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("prefix") || !j.contains("tail"))
    bad("row must be {\"prefix\", \"tail\"}");
  if (!j.at("prefix").is_array()) bad("row prefix must be an array of tokens");
  std::vector<Symbol> prefix;
  for (const auto& t : j.at("prefix")) {
    if (!t.is_string()) bad("row token must be a string");
    prefix.push_back(Symbol::from_token(t.get<std::string>()));
  }
  if (!j.at("tail").is_string()) bad("row tail must be a token string");
  return RowSpec(std::move(prefix), Symbol::from_token(j.at("tail").get<std::string>()));
}

json cpair_to_json(const CPair& P, bool exceptional) {
  json theta = json::array();
  json rows = json::array();
  for (int q = 0; q <= P.n(); ++q) {
    theta.push_back(natcong_to_json(P.theta(q)));
    rows.push_back(rowspec_to_json(P.row(q)));
  }
  return json{{"n", P.n()},
              {"theta", std::move(theta)},
              {"rows", std::move(rows)},
              {"exceptional", exceptional}};
}

std::pair<CPair, bool> cpair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("theta") || !j.contains("rows"))
    bad("C-pair must be {\"n\", \"theta\", \"rows\", \"exceptional\"}");
  int n = static_cast<int>(want_int(j.at("n"), "degree"));
  if (!j.at("theta").is_array() || !j.at("rows").is_array())
    bad("C-pair theta and rows must be arrays");
  std::vector<NatCong> theta;
  for (const auto& t : j.at("theta")) theta.push_back(natcong_from_json(t));
  std::vector<RowSpec> rows;
  for (const auto& r : j.at("rows")) rows.push_back(rowspec_from_json(r));
  bool exceptional = false;
  if (j.contains("exceptional")) {
    if (!j.at("exceptional").is_boolean()) bad("exceptional flag must be a boolean");
    exceptional = j.at("exceptional").get<bool>();
  }
  return {CPair(n, std::move(theta), std::move(rows)), exceptional};
}

json fc_to_json(const FCMatrix& M) {
  json rows = json::array();
  for (int q = 0; q <= M.n(); ++q) {
    json row = json::array();
    for (int i = 0; i <= M.d(); ++i) row.push_back(M.entry(q, i).token());
    rows.push_back(std::move(row));
  }
  return json{{"n", M.n()}, {"d", M.d()}, {"rows", std::move(rows)}};
}

FCMatrix fc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j.contains("rows"))
    bad("matrix must be {\"n\", \"d\", \"rows\"}");
  int n = static_cast<int>(want_int(j.at("n"), "degree"));
  int d = static_cast<int>(want_int(j.at("d"), "twist bound"));
  if (!j.at("rows").is_array()) bad("matrix rows must be an array");
  std::vector<std::vector<Symbol>> rows;
  for (const auto& row : j.at("rows")) {
    if (!row.is_array()) bad("matrix row must be an array of tokens");
    std::vector<Symbol> out;
    for (const auto& t : row) {
      if (!t.is_string()) bad("matrix token must be a string");
      out.push_back(Symbol::from_token(t.get<std::string>()));
    }
    rows.push_back(std::move(out));
  }
  return FCMatrix(n, d, std::move(rows));
}

json relation_to_json(const CongRelation& r) {
  std::map<int, std::vector<int>> classes;
  for (std::size_t x = 0; x < r.class_id.size(); ++x)
    classes[r.class_id[x]].push_back(static_cast<int>(x));
  json out = json::array();
  for (const auto& [rep, members] : classes) out.push_back(members);
  return json{{"classes", std::move(out)}};
}

CongRelation relation_from_json(const json& j, int size) {
  if (!j.is_object() || !j.contains("classes") || !j.at("classes").is_array())
    bad("relation must be {\"classes\": [[...]]}");
  CongRelation r;
  r.class_id.assign(size, -1);
  for (const auto& cls : j.at("classes")) {
    if (!cls.is_array() || cls.empty()) bad("relation class must be a nonempty array");
    std::vector<int> members;
    for (const auto& m : cls) {
      std::int64_t v = want_int(m, "relation member");
      if (v < 0 || v >= size) bad("relation member out of range");
      members.push_back(static_cast<int>(v));
    }
    int rep = *std::min_element(members.begin(), members.end());
    for (int m : members) {
      if (r.class_id[m] != -1) bad("relation classes overlap");
      r.class_id[m] = rep;
    }
  }
  for (int x = 0; x < size; ++x)
    if (r.class_id[x] == -1) bad("relation classes must cover every element");
  return r;
}

json lattice_to_json(const Lattice& L) {
  json nodes = json::array();
  for (const FCMatrix& M : L.nodes) {
    json rows = json::array();
    for (int q = 0; q <= L.n; ++q) {
      json row = json::array();
      for (int i = 0; i <= L.d; ++i) row.push_back(M.entry(q, i).token());
      rows.push_back(std::move(row));
    }
    nodes.push_back(std::move(rows));
  }
  json hasse = json::array();
  for (const auto& e : L.hasse) hasse.push_back(json::array({e.first, e.second}));
  return json{{"n", L.n},
              {"d", L.d},
              {"nodes", std::move(nodes)},
              {"hasse", std::move(hasse)},
              {"rees", L.rees}};
}

}  // namespace ptw::io
