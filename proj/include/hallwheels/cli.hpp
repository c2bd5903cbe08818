#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hallwheels/error.hpp"
#include "hallwheels/json_io.hpp"
#include "hallwheels/reps.hpp"
#include "hallwheels/shuffle.hpp"
#include "hallwheels/torsion.hpp"
#include "hallwheels/wheels.hpp"

namespace hallwheels {

enum ExitCode : int { exit_ok = 0, exit_internal = 1, exit_parse = 2, exit_precondition = 3, exit_golden = 4 };

inline constexpr unsigned long long default_seed = 20240917;

inline Json reference_family_json(const ReferenceFamily& f) {
  Json ideals = Json::array();
  for (const auto& id : f.ideals)
    ideals.push_back(Json{{"family", id.family},
                          {"params", detail::int_array(id.params)},
                          {"printed", id.printed},
                          {"m1", character_json(id.m1)},
                          {"m2", character_json(id.m2)}});
  return Json{{"family", f.name}, {"ts_names", f.printed_ts_names}, {"ideals", ideals}};
}

namespace cli_detail {

struct Options {
  std::string command;
  std::string spec_path;
  std::string lambda, mu, nu, poly, compare, golden, write_golden;
  int degree = 4;
  unsigned long long seed = default_seed;
  bool seed_given = false;
};

inline Cocharacter lookup_cocharacter(const ProblemSpec& p, const LinearizedRep& rep, const std::string& name,
                                      const char* flag) {
  if (name.empty()) return Cocharacter::zero(rep.t_rank());
  auto it = p.cocharacters.find(name);
  if (it == p.cocharacters.end()) throw ParseError(std::string(flag) + ": no cocharacter named '" + name + "'");
  if (it->second.size() != rep.t_rank())
    throw DimensionMismatch("cocharacter '" + name + "' has length " + std::to_string(it->second.size()) +
                            ", expected " + std::to_string(rep.t_rank()));
  return Cocharacter(it->second);
}

inline LaurentPoly lookup_polynomial(const ProblemSpec& p, const LinearizedRep& rep, const std::string& name) {
  auto it = p.polynomials.find(name);
  if (it == p.polynomials.end()) throw ParseError("--poly: no polynomial named '" + name + "'");
  return parse_polynomial(it->second, rep);
}

inline void require_flag(const std::string& value, const char* flag, const std::string& command) {
  if (value.empty()) throw ParseError("command '" + command + "' needs " + flag);
}

inline Json roots_json(const RootDatum& d, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(detail::int_array(d.roots[i].t_part()));
  return a;
}

inline Json labels_json(const std::vector<BasisVector>& basis, const std::vector<std::size_t>& idx) {
  Json a = Json::array();
  for (std::size_t i : idx) a.push_back(basis[i].label);
  return a;
}

inline Json cochar_json(const Cocharacter& c) { return detail::int_array(c.coords); }

inline Json ideal_json(const WheelIdeal& id, std::size_t index, const LinearizedRep& rep) {
  auto [g1, g2] = id.generator_text(rep.variable_names());
  return Json{{"index", index},
              {"generators", Json::array({g1, g2})},
              {"chi_l", character_json(id.chi_l)},
              {"chi_lprime", character_json(id.chi_lprime)},
              {"source_count", id.sources.size()}};
}

inline Json run_split(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.lambda, "--lambda", o.command);
  Cocharacter l = lookup_cocharacter(p, rep, o.lambda, "--lambda");
  FixedSubspaces f = fixed_subspaces(rep, l);
  Json j;
  j["lambda"] = cochar_json(l);
  j["levi_roots"] = roots_json(rep.datum, f.levi.levi_roots);
  j["parabolic_roots"] = roots_json(rep.datum, f.levi.parabolic_roots);
  j["unipotent_roots"] = roots_json(rep.datum, f.levi.unipotent_roots);
  j["opposite_roots"] = roots_json(rep.datum, f.levi.opposite_roots);
  Json pattern = Json::array();
  for (auto s : levi_block_pattern(rep.datum, l)) pattern.push_back(s);
  j["levi_block_pattern"] = pattern;
  j["v_fixed"] = labels_json(rep.v_basis, f.v_fixed);
  j["v_nonneg"] = labels_json(rep.v_basis, f.v_nonneg);
  return j;
}

inline Json run_order(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.lambda, "--lambda", o.command);
  require_flag(o.nu, "--nu", o.command);
  Cocharacter l = lookup_cocharacter(p, rep, o.lambda, "--lambda");
  Cocharacter n = lookup_cocharacter(p, rep, o.nu, "--nu");
  Json j;
  j["lambda"] = cochar_json(l);
  j["nu"] = cochar_json(n);
  bool a = preceq(rep, l, n);
  bool b = preceq(rep, n, l);
  j["preceq"] = a;
  j["succeq"] = b;
  j["equivalent"] = a && b;
  return j;
}

inline Json run_kernel(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.lambda, "--lambda", o.command);
  Cocharacter l = lookup_cocharacter(p, rep, o.lambda, "--lambda");
  Cocharacter n = lookup_cocharacter(p, rep, o.nu, "--nu");
  InductionDatum d = induction_datum(rep, l, n);
  auto names = rep.variable_names();
  Json factors = Json::array();
  for (const auto& [f, k] : d.kernel.factors())
    factors.push_back(Json{{"factor", polynomial_json(f, names)}, {"multiplicity", k}});
  Json j;
  j["lambda"] = cochar_json(l);
  j["nu"] = cochar_json(n);
  j["numerator"] = polynomial_json(d.kernel.numerator(), names);
  j["denominator_factors"] = factors;
  j["denominator"] = polynomial_json(d.kernel.denominator(), names);
  j["dim_pi"] = d.dim_pi;
  j["dim_q"] = d.dim_q;
  j["signed_degree"] = signed_degree(d.kernel);
  j["coset_count"] = d.cosets.size();
  j["stabilizer_order"] = d.stabilizer.size();
  return j;
}

inline Json run_induct(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.lambda, "--lambda", o.command);
  require_flag(o.poly, "--poly", o.command);
  Cocharacter l = lookup_cocharacter(p, rep, o.lambda, "--lambda");
  Cocharacter n = lookup_cocharacter(p, rep, o.nu, "--nu");
  LaurentPoly f = lookup_polynomial(p, rep, o.poly);
  InductionDatum d = induction_datum(rep, l, n);
  LaurentPoly result = induct(rep, d, f);
  LaurentPoly full = induct_full_group(rep, l, n, f);
  std::mt19937_64 rng(o.seed);
  std::vector<WeylElement> shuffled;
  for (const auto& s : d.cosets) shuffled.push_back(s * d.stabilizer[rng() % d.stabilizer.size()]);
  LaurentPoly random_reps = induct_with_representatives(rep, d, f, shuffled);
  auto names = rep.variable_names();
  Json j;
  j["lambda"] = cochar_json(l);
  j["nu"] = cochar_json(n);
  j["input"] = polynomial_json(f, names);
  j["result"] = polynomial_json(result, names);
  j["full_group_agrees"] = full == result;
  j["random_representatives_agree"] = random_reps == result;
  return j;
}

inline Json run_assoc(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.lambda, "--lambda", o.command);
  require_flag(o.mu, "--mu", o.command);
  Cocharacter l = lookup_cocharacter(p, rep, o.lambda, "--lambda");
  Cocharacter m = lookup_cocharacter(p, rep, o.mu, "--mu");
  Cocharacter n = lookup_cocharacter(p, rep, o.nu, "--nu");
  if (o.degree < 0) throw InvalidArgument("--degree must be nonnegative");
  auto basis = orbit_sum_basis(weyl_subgroup(rep.datum, l), rep.t_rank(), rep.ts_rank(), o.degree);
  auto bad = associativity_mismatches(rep, l, m, n, basis);
  auto names = rep.variable_names();
  Json mism = Json::array();
  for (auto i : bad) mism.push_back(format_named(basis[i], names));
  Json j;
  j["lambda"] = cochar_json(l);
  j["mu"] = cochar_json(m);
  j["nu"] = cochar_json(n);
  j["degree"] = o.degree;
  j["basis_size"] = basis.size();
  j["mismatches"] = mism;
  j["associative"] = bad.empty();
  return j;
}

inline Json run_wheels(const ProblemSpec&, const LinearizedRep& rep, const Options& o) {
  auto pairs = cartesian_pairs(rep);
  auto ideals = wheel_ideals(rep, pairs);
  Json pj = Json::array();
  for (const auto& c : pairs)
    pj.push_back(Json{{"v", rep.v_basis[c.v_index].label},
                      {"vstar", rep.vstar_basis[c.vstar_index].label},
                      {"witness", rep.lie_basis[c.witness].label}});
  Json ij = Json::array();
  for (std::size_t k = 0; k < ideals.size(); ++k) ij.push_back(ideal_json(ideals[k], k, rep));
  Json j;
  j["pair_count"] = pairs.size();
  j["pairs"] = pj;
  j["ideal_count"] = ideals.size();
  j["ideals"] = ij;
  if (!o.compare.empty()) {
    ReferenceFamily fam = reference_family(o.compare);
    ComparisonReport r = compare_with_reference(rep, ideals, fam);
    auto entry = [&](std::size_t i) {
      return Json{{"params", detail::int_array(fam.ideals[i].params)},
                  {"family", fam.ideals[i].family},
                  {"printed", fam.ideals[i].printed}};
    };
    Json matched = Json::array(), missing = Json::array(), documented = Json::array(), extra = Json::array();
    for (auto [ri, k] : r.matched) {
      Json e = entry(ri);
      e["ideal"] = k;
      matched.push_back(e);
    }
    for (auto ri : r.missing) missing.push_back(entry(ri));
    for (auto ri : r.documented) {
      Json e = entry(ri);
      e["reason"] = "pairing coefficient vanishes on this pair of lines";
      documented.push_back(e);
    }
    for (auto k : r.extra) extra.push_back(k);
    j["comparison"] = Json{{"family", fam.name},  {"printed_count", fam.ideals.size()},
                           {"matched", matched},  {"missing", missing},
                           {"documented", documented}, {"extra_count", r.extra.size()},
                           {"extra", extra}};
  }
  return j;
}

inline Json run_member(const ProblemSpec& p, const LinearizedRep& rep, const Options& o) {
  require_flag(o.poly, "--poly", o.command);
  LaurentPoly r = lookup_polynomial(p, rep, o.poly);
  auto ideals = wheel_ideals(rep);
  MembershipVerdict v = membership_all(r, rep, ideals);
  Json failing = Json::array();
  for (auto k : v.failing_ideals) {
    auto [g1, g2] = ideals[k].generator_text(rep.variable_names());
    failing.push_back(Json{{"index", k}, {"generators", Json::array({g1, g2})}});
  }
  Json j;
  j["input"] = polynomial_json(r, rep.variable_names());
  j["ideal_count"] = ideals.size();
  j["in_intersection"] = v.in_intersection;
  j["w_symmetric"] = v.w_symmetric;
  j["failing_ideals"] = failing;
  return j;
}

inline Json run_assume(const ProblemSpec&, const LinearizedRep& rep, const Options&) {
  TsAssumptionReport r = check_ts_assumptions(rep);
  auto dir = [](const std::optional<std::vector<Exponent>>& d) -> Json {
    return d ? detail::int_array(*d) : Json(nullptr);
  };
  Json viol = Json::array();
  for (const auto& v : r.violations)
    viol.push_back(Json{{"v", rep.v_basis[v.v_index].label},
                        {"vstar", rep.vstar_basis[v.vstar_index].label},
                        {"lie", rep.lie_basis[v.lie_index].label}});
  Json j;
  j["ts_names"] = rep.ts_names;
  j["f_invariant"] = r.f_invariant;
  j["c1_weights_ok"] = r.c1_weights_ok;
  j["c2_weights_ok"] = r.c2_weights_ok;
  j["c1_direction"] = dir(r.c1_direction);
  j["c2_direction"] = dir(r.c2_direction);
  j["violation_count"] = r.violations.size();
  j["violations"] = viol;
  return j;
}

inline Json run_torsion(const ProblemSpec& p, const LinearizedRep& rep, const Options&) {
  Json j;
  j["c1_direction"] = rep.c1_direction ? detail::int_array(*rep.c1_direction) : Json(nullptr);
  j["c1_in_stabilizers"] = c1_in_stabilizers(rep);
  Json rels = Json::array();
  if (!p.relations.empty()) {
    if (p.restriction_gens.empty()) throw ParseError("schema: $.relations given without $.restriction_map");
    RestrictionMap map(p.restriction_gens, p.restriction_targets);
    for (const auto& [name, text] : p.relations) {
      LaurentPoly rel = parse_expression(text, map.source_names, map.source_names.size());
      LaurentPoly img = apply_restriction(map, rel);
      rels.push_back(Json{{"name", name},
                          {"relation", text},
                          {"image", format_named(img, map.target_vars)},
                          {"holds", img.is_zero()}});
    }
  }
  j["relations"] = rels;
  return j;
}

inline std::string golden_name(const Options& o) {
  std::string stem = std::filesystem::path(o.spec_path).stem().string();
  std::string name = stem + "." + o.command;
  for (const std::string* v : {&o.lambda, &o.mu, &o.nu, &o.poly, &o.compare})
    if (!v->empty()) name += "." + *v;
  if (o.command == "assoc") name += ".d" + std::to_string(o.degree);
  if (o.seed_given) name += ".s" + std::to_string(o.seed);
  return name + ".json";
}

inline int report_error(std::ostream& err, int code, const std::string& kind, const std::string& message) {
  Json e{{"error", kind}, {"exit_code", code}, {"message", message}};
  err << e.dump() << "\n";
  return code;
}

}  // namespace cli_detail

inline const std::vector<std::string>& cli_commands() {
  static const std::vector<std::string> c{"split", "order",  "kernel", "induct",  "assoc",
                                          "wheels", "member", "assume", "torsion", "canonical"};
  return c;
}

/// Runs one CLI invocation; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace cli_detail;
  Options o;
  CLI::App app{"Exact Hall induction and wheel-condition computations for cotangent representations", "hallwheels"};
  app.add_option("command", o.command, "split | order | kernel | induct | assoc | wheels | member | assume | torsion | canonical")
      ->required()
      ->check(CLI::IsMember(cli_commands()));
  app.add_option("spec", o.spec_path, "problem description (JSON)")->required();
  app.add_option("--lambda", o.lambda, "cocharacter name");
  app.add_option("--mu", o.mu, "intermediate cocharacter name (assoc)");
  app.add_option("--nu", o.nu, "cocharacter name (default: zero)");
  app.add_option("--poly", o.poly, "polynomial name");
  app.add_option("--compare", o.compare, "reference family: gl_<n>, sp4, sl2_sym<n>");
  app.add_option("--degree", o.degree, "maximal degree of the associativity basis");
  app.add_option("--golden", o.golden, "compare output with the stored file in this directory");
  app.add_option("--write-golden", o.write_golden, "store the output in this directory");
  auto* seed = app.add_option("--seed", o.seed, "seed for randomized representative checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    return report_error(err, exit_parse, "usage", e.what());
  }
  o.seed_given = seed->count() > 0;

  Json doc;
  try {
    ProblemSpec p = load_problem(o.spec_path);
    if (o.command == "canonical") {
      doc = serialize_problem(p);
    } else {
      LinearizedRep rep = build_rep(p);
      doc["command"] = o.command;
      doc["problem"] = std::filesystem::path(o.spec_path).stem().string();
      doc["rep"] = rep.name;
      Json body;
      if (o.command == "split") body = run_split(p, rep, o);
      else if (o.command == "order") body = run_order(p, rep, o);
      else if (o.command == "kernel") body = run_kernel(p, rep, o);
      else if (o.command == "induct") body = run_induct(p, rep, o);
      else if (o.command == "assoc") body = run_assoc(p, rep, o);
      else if (o.command == "wheels") body = run_wheels(p, rep, o);
      else if (o.command == "member") body = run_member(p, rep, o);
      else if (o.command == "assume") body = run_assume(p, rep, o);
      else body = run_torsion(p, rep, o);
      for (auto it = body.begin(); it != body.end(); ++it) doc[it.key()] = it.value();
    }
  } catch (const ParseError& e) {
    return report_error(err, exit_parse, to_string(e.kind()), e.what());
  } catch (const InternalError& e) {
    return report_error(err, exit_internal, to_string(e.kind()), e.what());
  } catch (const Error& e) {
    return report_error(err, exit_precondition, to_string(e.kind()), e.what());
  } catch (const std::exception& e) {
    return report_error(err, exit_internal, "internal", e.what());
  }

  const std::string text = render_json(doc);
  out << text;
  const std::string name = golden_name(o);
  if (!o.write_golden.empty()) {
    std::ofstream f(std::filesystem::path(o.write_golden) / name, std::ios::binary);
    f << text;
    if (!f) return report_error(err, exit_internal, "io", "cannot write golden file " + name);
  }
  if (!o.golden.empty()) {
    std::ifstream f(std::filesystem::path(o.golden) / name, std::ios::binary);
    if (!f) return report_error(err, exit_golden, "golden_mismatch", "golden file " + name + " not found");
    std::stringstream ss;
    ss << f.rdbuf();
    const std::string expected = ss.str();
    if (expected != text) {
      std::size_t line = 1;
      std::size_t i = 0;
      for (; i < std::min(expected.size(), text.size()) && expected[i] == text[i]; ++i)
        if (text[i] == '\n') ++line;
      return report_error(err, exit_golden, "golden_mismatch",
                          "output differs from " + name + " at line " + std::to_string(line));
    }
  }
  return exit_ok;
}

}  // namespace hallwheels
