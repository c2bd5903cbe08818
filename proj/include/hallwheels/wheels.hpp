#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/lattice.hpp"
#include "hallwheels/laurent.hpp"
#include "hallwheels/parallel.hpp"
#include "hallwheels/reps.hpp"

namespace hallwheels {

/// Lines C e_i in V and C e_j^* in V* whose plane meets the zero fiber of the
/// moment map in the two axes: some Lie basis element a has <e_j^*, a e_i> != 0.
struct CartesianPair {
  std::size_t v_index = 0;
  std::size_t vstar_index = 0;
  std::size_t witness = 0;
  friend bool operator==(const CartesianPair&, const CartesianPair&) = default;
};

inline std::vector<CartesianPair> cartesian_pairs(const LinearizedRep& rep) {
  std::vector<CartesianPair> out;
  for (std::size_t i = 0; i < rep.dim(); ++i)
    for (std::size_t j = 0; j < rep.dim(); ++j)
      for (std::size_t a = 0; a < rep.action.size(); ++a)
        if (rep.action[a](j, i) != 0) {
          out.push_back({i, j, a});
          break;
        }
  return out;
}

/// The ideal (1 - chi_l^{-1}, 1 - chi_l'^{-1}) of Z[X*(T x T_s)].
struct WheelIdeal {
  ExponentVector chi_l;
  ExponentVector chi_lprime;
  LatticeQuotient quotient;
  std::vector<CartesianPair> sources;  // every pair producing this ideal

  WheelIdeal(ExponentVector l, ExponentVector lp)
      : chi_l(std::move(l)),
        chi_lprime(std::move(lp)),
        quotient({chi_l, chi_lprime}, chi_l.t_rank(), chi_l.ts_rank()) {}

  const IntMatrix& key() const { return quotient.hermite_basis(); }

  /// Generators "1 - m" with m = chi^{-1}, written with variable names.
  std::pair<std::string, std::string> generator_text(const std::vector<std::string>& names) const {
    auto gen = [&](const ExponentVector& chi) {
      LaurentPoly g = LaurentPoly::constant(1, chi.t_rank(), chi.ts_rank()) - LaurentPoly::monomial(-chi);
      return format_named(g, names);
    };
    return {gen(chi_l), gen(chi_lprime)};
  }
};

namespace detail {

inline bool key_less(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
  return false;
}

}  // namespace detail

/// One ideal per Cartesian pair, deduplicated by generated sublattice; ordered by first source pair.
inline std::vector<WheelIdeal> wheel_ideals(const LinearizedRep& rep, const std::vector<CartesianPair>& pairs) {
  auto built = parallel_map(pairs.size(), [&](std::size_t k) {
    return WheelIdeal(rep.v_basis[pairs[k].v_index].character, rep.vstar_basis[pairs[k].vstar_index].character);
  });
  std::vector<WheelIdeal> out;
  std::vector<std::size_t> order;  // indices into out, sorted by key
  for (std::size_t k = 0; k < built.size(); ++k) {
    auto cmp = [&](std::size_t idx, const IntMatrix& key) { return detail::key_less(out[idx].key(), key); };
    auto it = std::lower_bound(order.begin(), order.end(), built[k].key(), cmp);
    if (it != order.end() && out[*it].key() == built[k].key()) {
      out[*it].sources.push_back(pairs[k]);
      continue;
    }
    built[k].sources.push_back(pairs[k]);
    out.push_back(std::move(built[k]));
    order.insert(it, out.size() - 1);
  }
  return out;
}

inline std::vector<WheelIdeal> wheel_ideals(const LinearizedRep& rep) { return wheel_ideals(rep, cartesian_pairs(rep)); }

/// R lies in (1 - m1, 1 - m2) iff its image in the group ring of Lambda / <m1, m2> vanishes.
inline bool membership(const LaurentPoly& r, const WheelIdeal& ideal) {
  if (!r.has_integer_coefficients()) throw InvalidArgument("membership needs integer coefficients");
  if (r.t_rank() != ideal.chi_l.t_rank() || r.ts_rank() != ideal.chi_l.ts_rank())
    throw DimensionMismatch("polynomial ring does not match the ideal's lattice");
  std::map<ClassLabel, Rational> sums;
  for (const auto& [e, c] : r.terms()) sums[ideal.quotient.label(e)] += c;
  return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

struct MembershipVerdict {
  bool in_intersection = true;
  bool w_symmetric = true;
  std::vector<std::size_t> failing_ideals;
};

inline MembershipVerdict membership_all(const LaurentPoly& r, const LinearizedRep& rep,
                                        const std::vector<WheelIdeal>& ideals) {
  if (!r.has_integer_coefficients()) throw InvalidArgument("membership needs integer coefficients");
  auto verdicts = parallel_map(ideals.size(), [&](std::size_t k) { return membership(r, ideals[k]) ? 1 : 0; });
  MembershipVerdict v;
  for (std::size_t k = 0; k < verdicts.size(); ++k)
    if (!verdicts[k]) v.failing_ideals.push_back(k);
  v.in_intersection = v.failing_ideals.empty();
  v.w_symmetric = is_invariant(weyl_group(rep.datum), r, Realization::multiplicative);
  return v;
}

inline MembershipVerdict membership_all(const LaurentPoly& r, const LinearizedRep& rep) {
  return membership_all(r, rep, wheel_ideals(rep));
}

/// A printed wheel ideal (1 - m1, 1 - m2), kept independent of the enumeration.
struct ReferenceIdeal {
  std::string family;
  std::vector<Exponent> params;  // (i,j,k) 1-based, or (k,l)
  std::string printed;
  ExponentVector m1;  // in the printed T_s basis
  ExponentVector m2;
  /// (V index, V* index) of the pair of lines, when the family names them.
  std::optional<std::pair<std::size_t, std::size_t>> lines;
};

struct ReferenceFamily {
  std::string name;
  std::vector<std::string> printed_ts_names;
  /// Printed T_s basis is (q, q') per slot, to be rewritten in the basis (q, t), q' = t q^{-1}.
  bool fold_coordinates = false;
  std::vector<ReferenceIdeal> ideals;

  ExponentVector to_rep_lattice(const ExponentVector& e) const {
    if (!fold_coordinates) return e;
    std::vector<Exponent> t(e.t_part().begin(), e.t_part().end());
    Exponent a = e[e.t_rank()];
    Exponent b = e[e.t_rank() + 1];
    return ExponentVector(t, {checked_add(a, -b), b});
  }
};

namespace detail {

inline std::string z(std::size_t i) { return "z" + std::to_string(i); }

inline ReferenceFamily gl_reference(int n) {
  if (n < 3) throw InvalidArgument("gl_n reference family needs n >= 3");
  ReferenceFamily f;
  f.name = "gl_" + std::to_string(n);
  f.printed_ts_names = {"q", "q'"};
  f.fold_coordinates = true;
  const std::size_t r = static_cast<std::size_t>(n);
  for (std::size_t i = 1; i <= r; ++i)
    for (std::size_t j = 1; j <= r; ++j)
      for (std::size_t k = 1; k <= r; ++k) {
        if (i == j || j == k || i == k) continue;
        ReferenceIdeal id;
        id.family = "gl";
        id.params = {static_cast<Exponent>(i), static_cast<Exponent>(j), static_cast<Exponent>(k)};
        id.printed = "(1 - q^{-1} " + z(j) + "/" + z(i) + ", 1 - q'^{-1} " + z(k) + "/" + z(j) + ")";
        std::vector<Exponent> a(r, 0), b(r, 0);
        a[j - 1] += 1;
        a[i - 1] -= 1;
        b[k - 1] += 1;
        b[j - 1] -= 1;
        id.m1 = ExponentVector(a, {-1, 0});
        id.m2 = ExponentVector(b, {0, -1});
        f.ideals.push_back(std::move(id));
      }
  return f;
}

inline ReferenceFamily sp4_reference() {
  ReferenceFamily f;
  f.name = "sp4";
  f.printed_ts_names = {"q1", "q2"};
  f.fold_coordinates = true;
  struct Row {
    const char* text;
    Exponent a1, a2, b1, b2;
  };
  static const Row rows[] = {
      {"(1-q_1^{-1}z_2/z_1, 1-q_2^{-1}1/(z_1z_2))", -1, 1, -1, -1},
      {"(1-q_1^{-1}z_1/z_2, 1-q_2^{-1}(z_1z_2))", 1, -1, 1, 1},
      {"(1-q_1^{-1}z_1^2, 1-q_2^{-1}1/(z_1z_2))", 2, 0, -1, -1},
      {"(1-q_1^{-1}z_1^{-2}, 1-q_2^{-1}(z_1z_2))", -2, 0, 1, 1},
      {"(1-q_1^{-1}z_2^2, 1-q_2^{-1}1/(z_1z_2))", 0, 2, -1, -1},
      {"(1-q_1^{-1}z_2^{-2}, 1-q_2^{-1}(z_1z_2))", 0, -2, 1, 1},
      {"(1-q_1^{-1}z_1/z_2, 1-q_2^{-1}1/(z_1z_2))", 1, -1, -1, -1},
      {"(1-q_1^{-1}z_2/z_1, 1-q_2^{-1}(z_1z_2))", -1, 1, 1, 1},
      {"(1-q_1^{-1}z_2^{-2}, 1-q_2^{-1}z_2/z_1)", 0, -2, -1, 1},
      {"(1-q_1^{-1}z_2^{2}, 1-q_2^{-1}z_1/z_2)", 0, 2, 1, -1},
      {"(1-q_1^{-1}z_1^{2}, 1-q_2^{-1}z_2/z_1)", 2, 0, -1, 1},
      {"(1-q_1^{-1}z_1^{-2}, 1-q_2^{-1}z_1/z_2)", -2, 0, 1, -1},
  };
  Exponent idx = 1;
  for (const auto& row : rows) {
    ReferenceIdeal id;
    id.family = "sp4";
    id.params = {idx++};
    id.printed = row.text;
    id.m1 = ExponentVector({row.a1, row.a2}, {-1, 0});
    id.m2 = ExponentVector({row.b1, row.b2}, {0, -1});
    f.ideals.push_back(std::move(id));
  }
  return f;
}

inline ReferenceFamily sl2_sym_reference(int n) {
  if (n < 1) throw InvalidArgument("sl2_sym reference family needs n >= 1");
  ReferenceFamily f;
  f.name = "sl2_sym" + std::to_string(n);
  f.printed_ts_names = {"q1", "q2"};
  auto index = [n](Exponent k) { return static_cast<std::size_t>(n - k); };
  auto mono = [](Exponent zexp, Exponent a, Exponent b) {
    auto part = [](const std::string& v, Exponent e) -> std::string {
      if (e == 0) return "";
      return v + (e == 1 ? "" : "^{" + std::to_string(e) + "}");
    };
    std::string s = part("z", zexp) + part("q_1", a) + part("q_2", b);
    return s.empty() ? std::string("1") : s;
  };
  auto add = [&](const std::string& fam, Exponent k, Exponent l, Exponent dk) {
    ReferenceIdeal id;
    id.family = fam;
    id.params = {k, l};
    Exponent k2 = k + dk;
    Exponent l2 = l - dk;
    id.m1 = ExponentVector({-(k - l)}, {-k, -l});
    id.m2 = ExponentVector({k2 - l2}, {k2, l2});
    id.printed = "(1-" + mono(-(k - l), -k, -l) + ", 1-" + mono(k2 - l2, k2, l2) + ")";
    id.lines = std::make_pair(index(k), index(k2));
    f.ideals.push_back(std::move(id));
  };
  for (Exponent k = 0; k <= n; ++k)
    if (n - k >= 1) add("A", k, n - k, 1);
  for (Exponent k = 1; k <= n; ++k) add("B", k, n - k, -1);
  for (Exponent k = 0; k <= n; ++k) add("C", k, n - k, 0);
  return f;
}

}  // namespace detail

/// Printed ideal families: "gl_<n>", "sp4", "sl2_sym<n>".
inline ReferenceFamily reference_family(const std::string& name) {
  auto number_after = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; }) || rest.size() > 3)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (name == "sp4") return detail::sp4_reference();
  if (auto n = number_after("gl_")) return detail::gl_reference(*n);
  if (auto n = number_after("gl")) return detail::gl_reference(*n);
  if (auto n = number_after("sl2_sym")) return detail::sl2_sym_reference(*n);
  throw InvalidArgument("unknown reference family '" + name + "'");
}

struct ComparisonReport {
  /// (reference index, enumerated ideal index)
  std::vector<std::pair<std::size_t, std::size_t>> matched;
  std::vector<std::size_t> missing;
  /// Missing entries explained by a vanishing pairing coefficient (SL2 family C with k = l).
  std::vector<std::size_t> documented;
  std::vector<std::size_t> extra;
};

/// True for printed entries whose pair of lines has a zero pairing in every Lie basis element.
inline bool pairing_vanishes(const LinearizedRep& rep, const ReferenceIdeal& id) {
  if (!id.lines) return false;
  auto [i, j] = *id.lines;
  if (i >= rep.dim() || j >= rep.dim()) return false;
  return std::all_of(rep.action.begin(), rep.action.end(), [&](const RatMatrix& m) { return m(j, i) == 0; });
}

inline ComparisonReport compare_with_reference(const LinearizedRep& rep, const std::vector<WheelIdeal>& ideals,
                                               const ReferenceFamily& family) {
  ComparisonReport report;
  std::vector<bool> used(ideals.size(), false);
  for (std::size_t r = 0; r < family.ideals.size(); ++r) {
    const ReferenceIdeal& id = family.ideals[r];
    WheelIdeal printed(-family.to_rep_lattice(id.m1), -family.to_rep_lattice(id.m2));
    if (printed.chi_l.t_rank() != rep.t_rank() || printed.chi_l.ts_rank() != rep.ts_rank())
      throw DimensionMismatch("reference family " + family.name + " does not fit the representation");
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < ideals.size() && !hit; ++k)
      if (ideals[k].key() == printed.key()) hit = k;
    if (hit) {
      report.matched.emplace_back(r, *hit);
      used[*hit] = true;
    } else if (pairing_vanishes(rep, id)) {
      report.documented.push_back(r);
    } else {
      report.missing.push_back(r);
    }
  }
  for (std::size_t k = 0; k < ideals.size(); ++k)
    if (!used[k]) report.extra.push_back(k);
  return report;
}

}  // namespace hallwheels
