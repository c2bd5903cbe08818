#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hallwheels/error.hpp"
#include "hallwheels/expr.hpp"
#include "hallwheels/laurent.hpp"
#include "hallwheels/reps.hpp"
#include "hallwheels/torsion.hpp"

namespace hallwheels {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

/// A parsed problem description (see README for the schema).
struct ProblemSpec {
  Family family = Family::GL;
  int n = 1;

  std::string rep_kind;  // adjoint | standard | gfold | sym_power_sl2 | inline
  std::optional<TsWeights> ts_weights;
  int genus = 1;
  int sym_n = 1;
  SymTsWeights sym_ts;
  Json inline_rep;

  std::optional<std::vector<std::string>> ts_names;
  std::optional<std::size_t> ts_rank;
  std::optional<std::vector<Exponent>> c1;
  std::optional<std::vector<Exponent>> c2;

  std::map<std::string, std::vector<Exponent>> cocharacters;
  std::map<std::string, std::string> polynomials;

  std::vector<std::pair<std::string, std::string>> restriction_gens;
  std::vector<std::string> restriction_targets;
  std::map<std::string, std::string> relations;
};

namespace detail {

[[noreturn]] inline void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("schema: " + path + ": " + what);
}

inline const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, "missing key '" + key + "'");
  return *it;
}

inline std::vector<Exponent> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of integers");
  std::vector<Exponent> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) schema_error(path, "expected an integer");
    out.push_back(x.get<Exponent>());
  }
  return out;
}

inline std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) schema_error(path, "expected a string");
    out.push_back(x.get<std::string>());
  }
  return out;
}

inline int int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

inline std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

inline void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& path) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : keys) ok = ok || it.key() == k;
    if (!ok) schema_error(path, "unexpected key '" + it.key() + "'");
  }
}

inline Json int_array(const std::vector<Exponent>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

inline Json int_array(std::span<const Exponent> v) { return int_array(std::vector<Exponent>(v.begin(), v.end())); }

}  // namespace detail

inline ProblemSpec parse_problem(const Json& j) {
  using namespace detail;
  if (!j.is_object()) schema_error("$", "expected an object");
  only_keys(j, {"schema", "root_datum", "rep", "ts", "cocharacters", "polynomials", "restriction_map", "relations"},
            "$");
  if (int_value(member(j, "schema", "$"), "$.schema") != schema_version)
    schema_error("$.schema", "unsupported schema version");
  ProblemSpec p;
  const Json& rd = member(j, "root_datum", "$");
  only_keys(rd, {"family", "n"}, "$.root_datum");
  try {
    p.family = parse_family(string_value(member(rd, "family", "$.root_datum"), "$.root_datum.family"));
  } catch (const InvalidArgument& e) {
    schema_error("$.root_datum.family", e.what());
  }
  p.n = int_value(member(rd, "n", "$.root_datum"), "$.root_datum.n");

  const Json& rep = member(j, "rep", "$");
  p.rep_kind = string_value(member(rep, "kind", "$.rep"), "$.rep.kind");
  if (p.rep_kind == "adjoint" || p.rep_kind == "standard") {
    only_keys(rep, {"kind", "ts_weights"}, "$.rep");
    if (rep.contains("ts_weights")) {
      const Json& w = rep["ts_weights"];
      only_keys(w, {"v", "vstar", "g"}, "$.rep.ts_weights");
      p.ts_weights = TsWeights{int_list(member(w, "v", "$.rep.ts_weights"), "$.rep.ts_weights.v"),
                               int_list(member(w, "vstar", "$.rep.ts_weights"), "$.rep.ts_weights.vstar"),
                               int_list(member(w, "g", "$.rep.ts_weights"), "$.rep.ts_weights.g")};
    }
  } else if (p.rep_kind == "gfold") {
    only_keys(rep, {"kind", "g"}, "$.rep");
    p.genus = int_value(member(rep, "g", "$.rep"), "$.rep.g");
  } else if (p.rep_kind == "sym_power_sl2") {
    only_keys(rep, {"kind", "n", "ts_weights"}, "$.rep");
    p.sym_n = int_value(member(rep, "n", "$.rep"), "$.rep.n");
    if (rep.contains("ts_weights")) {
      const Json& w = rep["ts_weights"];
      only_keys(w, {"e1", "e2", "g"}, "$.rep.ts_weights");
      p.sym_ts.e1 = int_list(member(w, "e1", "$.rep.ts_weights"), "$.rep.ts_weights.e1");
      p.sym_ts.e2 = int_list(member(w, "e2", "$.rep.ts_weights"), "$.rep.ts_weights.e2");
      p.sym_ts.g = int_list(member(w, "g", "$.rep.ts_weights"), "$.rep.ts_weights.g");
      p.sym_ts.names.clear();
      for (std::size_t i = 0; i < p.sym_ts.e1.size(); ++i) p.sym_ts.names.push_back("q" + std::to_string(i + 1));
    }
  } else if (p.rep_kind == "inline") {
    only_keys(rep, {"kind", "t_names", "v_basis", "vstar_basis", "lie_basis", "action"}, "$.rep");
    p.inline_rep = rep;
  } else {
    schema_error("$.rep.kind", "unknown representation kind '" + p.rep_kind + "'");
  }

  if (j.contains("ts")) {
    const Json& ts = j["ts"];
    only_keys(ts, {"rank", "names", "c1", "c2"}, "$.ts");
    if (ts.contains("rank")) p.ts_rank = static_cast<std::size_t>(int_value(ts["rank"], "$.ts.rank"));
    if (ts.contains("names")) p.ts_names = string_list(ts["names"], "$.ts.names");
    if (ts.contains("c1")) p.c1 = int_list(ts["c1"], "$.ts.c1");
    if (ts.contains("c2")) p.c2 = int_list(ts["c2"], "$.ts.c2");
  }
  if (j.contains("cocharacters")) {
    const Json& c = j["cocharacters"];
    if (!c.is_object()) schema_error("$.cocharacters", "expected an object");
    for (auto it = c.begin(); it != c.end(); ++it)
      p.cocharacters[it.key()] = int_list(it.value(), "$.cocharacters." + it.key());
  }
  if (j.contains("polynomials")) {
    const Json& c = j["polynomials"];
    if (!c.is_object()) schema_error("$.polynomials", "expected an object");
    for (auto it = c.begin(); it != c.end(); ++it)
      p.polynomials[it.key()] = string_value(it.value(), "$.polynomials." + it.key());
  }
  if (j.contains("restriction_map")) {
    const Json& m = j["restriction_map"];
    only_keys(m, {"source_gens", "target_vars"}, "$.restriction_map");
    const Json& gens = member(m, "source_gens", "$.restriction_map");
    if (!gens.is_array()) schema_error("$.restriction_map.source_gens", "expected an array");
    for (const auto& g : gens) {
      auto pairv = string_list(g, "$.restriction_map.source_gens[]");
      if (pairv.size() != 2) schema_error("$.restriction_map.source_gens[]", "expected [name, image]");
      p.restriction_gens.emplace_back(pairv[0], pairv[1]);
    }
    p.restriction_targets = string_list(member(m, "target_vars", "$.restriction_map"), "$.restriction_map.target_vars");
  }
  if (j.contains("relations")) {
    const Json& c = j["relations"];
    if (!c.is_object()) schema_error("$.relations", "expected an object");
    for (auto it = c.begin(); it != c.end(); ++it)
      p.relations[it.key()] = string_value(it.value(), "$.relations." + it.key());
  }
  return p;
}

inline ProblemSpec parse_problem_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_problem(j);
}

inline ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_problem_text(ss.str());
}

/// Canonical serialization: fixed key order, maps sorted by name.
inline Json serialize_problem(const ProblemSpec& p) {
  using detail::int_array;
  Json j;
  j["schema"] = schema_version;
  j["root_datum"] = Json{{"family", to_string(p.family)}, {"n", p.n}};
  Json rep;
  rep["kind"] = p.rep_kind;
  if (p.rep_kind == "adjoint" || p.rep_kind == "standard") {
    if (p.ts_weights)
      rep["ts_weights"] = Json{{"v", int_array(p.ts_weights->v)},
                               {"vstar", int_array(p.ts_weights->vstar)},
                               {"g", int_array(p.ts_weights->g)}};
  } else if (p.rep_kind == "gfold") {
    rep["g"] = p.genus;
  } else if (p.rep_kind == "sym_power_sl2") {
    rep["n"] = p.sym_n;
    rep["ts_weights"] = Json{{"e1", int_array(p.sym_ts.e1)}, {"e2", int_array(p.sym_ts.e2)}, {"g", int_array(p.sym_ts.g)}};
  } else if (p.rep_kind == "inline") {
    for (const char* k : {"t_names", "v_basis", "vstar_basis", "lie_basis", "action"})
      if (p.inline_rep.contains(k)) rep[k] = p.inline_rep[k];
  }
  j["rep"] = rep;
  if (p.ts_rank || p.ts_names || p.c1 || p.c2) {
    Json ts = Json::object();
    if (p.ts_rank) ts["rank"] = *p.ts_rank;
    if (p.ts_names) ts["names"] = *p.ts_names;
    if (p.c1) ts["c1"] = int_array(*p.c1);
    if (p.c2) ts["c2"] = int_array(*p.c2);
    j["ts"] = ts;
  }
  if (!p.cocharacters.empty()) {
    Json c = Json::object();
    for (const auto& [k, v] : p.cocharacters) c[k] = int_array(v);
    j["cocharacters"] = c;
  }
  if (!p.polynomials.empty()) {
    Json c = Json::object();
    for (const auto& [k, v] : p.polynomials) c[k] = v;
    j["polynomials"] = c;
  }
  if (!p.restriction_gens.empty() || !p.restriction_targets.empty()) {
    Json gens = Json::array();
    for (const auto& [name, img] : p.restriction_gens) gens.push_back(Json::array({name, img}));
    j["restriction_map"] = Json{{"source_gens", gens}, {"target_vars", p.restriction_targets}};
  }
  if (!p.relations.empty()) {
    Json c = Json::object();
    for (const auto& [k, v] : p.relations) c[k] = v;
    j["relations"] = c;
  }
  return j;
}

/// Inline representation: bases as {label, t, ts} objects; action as one list of
/// sparse [row, col, "value"] entries per Lie basis element.
inline LinearizedRep parse_inline_rep(const Json& j, const RootDatum& datum, const std::vector<std::string>& ts_names) {
  using namespace detail;
  LinearizedRep rep;
  rep.datum = datum;
  rep.ts_names = ts_names;
  rep.t_names = j.contains("t_names") ? string_list(j["t_names"], "$.rep.t_names") : default_t_names(datum);
  auto basis = [&](const char* key) {
    std::vector<BasisVector> out;
    const Json& arr = member(j, key, "$.rep");
    if (!arr.is_array()) schema_error(std::string("$.rep.") + key, "expected an array");
    for (const auto& b : arr) {
      std::string path = std::string("$.rep.") + key + "[]";
      auto t = int_list(member(b, "t", path), path + ".t");
      auto ts = b.contains("ts") ? int_list(b["ts"], path + ".ts") : std::vector<Exponent>(ts_names.size(), 0);
      out.push_back({string_value(member(b, "label", path), path + ".label"), ExponentVector(t, ts)});
    }
    return out;
  };
  rep.v_basis = basis("v_basis");
  rep.vstar_basis = basis("vstar_basis");
  rep.lie_basis = basis("lie_basis");
  const Json& act = member(j, "action", "$.rep");
  if (!act.is_array()) schema_error("$.rep.action", "expected an array");
  const std::size_t d = rep.v_basis.size();
  for (const auto& m : act) {
    RatMatrix a(d, d);
    if (!m.is_array()) schema_error("$.rep.action[]", "expected an array of entries");
    for (const auto& e : m) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
        schema_error("$.rep.action[][]", "expected [row, col, value]");
      auto row = e[0].get<long long>();
      auto col = e[1].get<long long>();
      if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= d || static_cast<std::size_t>(col) >= d)
        schema_error("$.rep.action[][]", "index out of range");
      Rational v = e[2].is_string() ? parse_rational(e[2].get<std::string>())
                                    : Rational(BigInt(int_value(e[2], "$.rep.action[][2]")));
      a(static_cast<std::size_t>(row), static_cast<std::size_t>(col)) = v;
    }
    rep.action.push_back(std::move(a));
  }
  rep.name = "inline";
  return rep;
}

/// Builds the representation and applies the T_s section.
inline LinearizedRep build_rep(const ProblemSpec& p) {
  RootDatum datum = build_root_datum(p.family, p.n);
  LinearizedRep rep;
  if (p.rep_kind == "adjoint" || p.rep_kind == "standard") {
    TsWeights w = p.ts_weights.value_or(TsWeights{});
    std::vector<std::string> names;
    if (p.ts_names) names = *p.ts_names;
    rep = p.rep_kind == "adjoint" ? adjoint_rep(datum, w, names) : standard_rep(datum, w, names);
  } else if (p.rep_kind == "gfold") {
    rep = g_fold_character_stack(datum, p.genus);
  } else if (p.rep_kind == "sym_power_sl2") {
    if (p.family != Family::SL || p.n != 2) throw InvalidArgument("sym_power_sl2 needs root_datum SL 2");
    SymTsWeights ts = p.sym_ts;
    if (p.ts_names) ts.names = *p.ts_names;
    rep = sym_power_sl2(p.sym_n, ts);
  } else {
    std::vector<std::string> names;
    if (p.ts_names) {
      names = *p.ts_names;
    } else {
      for (std::size_t i = 0; i < p.ts_rank.value_or(0); ++i) names.push_back("t" + std::to_string(i + 1));
    }
    rep = parse_inline_rep(p.inline_rep, datum, names);
  }
  if (p.ts_names) {
    require_same_size(p.ts_names->size(), rep.ts_rank(), "ts.names");
    rep.ts_names = *p.ts_names;
  }
  if (p.ts_rank) require_same_size(*p.ts_rank, rep.ts_rank(), "ts.rank");
  if (p.c1) rep.c1_direction = *p.c1;
  if (p.c2) rep.c2_direction = *p.c2;
  validate(rep);
  return rep;
}

/// Polynomial text: canonical form when it contains '|', otherwise an expression.
inline LaurentPoly parse_polynomial(const std::string& text, const LinearizedRep& rep) {
  if (text.find('|') != std::string::npos) return parse_canonical(text, rep.t_rank(), rep.ts_rank());
  return parse_expression(text, rep.variable_names(), rep.t_rank());
}

/// Two-space indented JSON with arrays of scalars kept on one line.
inline void render_json(const Json& j, std::string& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += inner + Json(it.key()).dump() + ": ";
      render_json(it.value(), out, indent + 2);
    }
    out += "\n" + pad + "}";
  } else if (j.is_array()) {
    bool flat = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (j.empty() || flat) {
      out += "[";
      bool first = true;
      for (const auto& x : j) {
        if (!first) out += ", ";
        first = false;
        out += x.dump();
      }
      out += "]";
      return;
    }
    out += "[\n";
    bool first = true;
    for (const auto& x : j) {
      if (!first) out += ",\n";
      first = false;
      out += inner;
      render_json(x, out, indent + 2);
    }
    out += "\n" + pad + "]";
  } else {
    out += j.dump();
  }
}

inline std::string render_json(const Json& j) {
  std::string out;
  render_json(j, out, 0);
  return out + "\n";
}

inline Json character_json(const ExponentVector& e) {
  return Json{{"t", detail::int_array(e.t_part())}, {"ts", detail::int_array(e.ts_part())}};
}

inline Json polynomial_json(const LaurentPoly& p, const std::vector<std::string>& names) {
  return Json{{"canonical", p.str()}, {"named", format_named(p, names)}};
}

}  // namespace hallwheels
