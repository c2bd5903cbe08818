#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/expr.hpp"
#include "hallwheels/laurent.hpp"
#include "hallwheels/reps.hpp"

namespace hallwheels {

/// A ring map Q[source generators] -> Q[target variables] given on generators.
struct RestrictionMap {
  std::vector<std::string> source_names;
  std::vector<LaurentPoly> images;
  std::vector<std::string> target_vars;

  RestrictionMap() = default;

  /// Images are expressions in the target variables.
  RestrictionMap(const std::vector<std::pair<std::string, std::string>>& gens, std::vector<std::string> targets)
      : target_vars(std::move(targets)) {
    for (const auto& [name, expr] : gens) {
      if (std::find(source_names.begin(), source_names.end(), name) != source_names.end())
        throw InvalidArgument("generator '" + name + "' has two images");
      LaurentPoly img = parse_expression(expr, target_vars, target_vars.size());
      if (!img.is_polynomial()) throw InvalidArgument("image of '" + name + "' has negative exponents");
      source_names.push_back(name);
      images.push_back(std::move(img));
    }
  }
};

/// c1 -> A+B, c2 -> AB, xi -> C+B-A, eta -> C.
inline RestrictionMap gl2_restriction_map() {
  return RestrictionMap({{"c1", "A+B"}, {"c2", "A*B"}, {"xi", "C+B-A"}, {"eta", "C"}}, {"A", "B", "C"});
}

/// Image of a polynomial in the source generators.
inline LaurentPoly apply_restriction(const RestrictionMap& map, const LaurentPoly& relation) {
  require_same_size(relation.t_rank() + relation.ts_rank(), map.source_names.size(), "relation variables");
  if (!relation.is_polynomial()) throw InvalidArgument("relation has negative exponents");
  const std::size_t nt = map.target_vars.size();
  LaurentPoly out(nt, 0);
  for (const auto& [e, c] : relation.terms()) {
    LaurentPoly term = LaurentPoly::constant(c, nt, 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= map.images[i].pow(static_cast<unsigned>(e[i]));
    out += term;
  }
  return out;
}

inline bool verify_restriction_relation(const RestrictionMap& map, const LaurentPoly& relation) {
  return apply_restriction(map, relation).is_zero();
}

/// Relation given as an expression in the source generator names.
inline bool verify_restriction_relation(const RestrictionMap& map, const std::string& relation) {
  return verify_restriction_relation(
      map, parse_expression(relation, map.source_names, map.source_names.size()));
}

/// C*_1 pairs to zero with every T_s weight of the g factor, so it fixes every
/// point of g and lies in every stabilizer.
inline bool c1_in_stabilizers(const LinearizedRep& rep) {
  if (!rep.c1_direction) throw InvalidArgument("representation has no designated C*_1 direction");
  const auto& eta = *rep.c1_direction;
  require_same_size(eta.size(), rep.ts_rank(), "C*_1 direction");
  for (const auto& b : rep.lie_basis) {
    auto ts = b.character.ts_part();
    Exponent s = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) s = checked_add(s, checked_mul(eta[i], ts[i]));
    if (s != 0) return false;
  }
  return true;
}

/// GL_2 acting on gl_2 with (x, x*, a) -> (g x g^-1 t2, g x* g^-1 t1^-1, g a g^-1 t1/t2),
/// C*_1 = diag(t, t) and C*_2 = diag(1, t).
inline LinearizedRep gl2_example_rep() {
  LinearizedRep rep = adjoint_rep(build_root_datum(Family::GL, 2), {{0, 1}, {-1, 0}, {1, -1}}, {"t1", "t2"});
  rep.c1_direction = std::vector<Exponent>{1, 1};
  rep.c2_direction = std::vector<Exponent>{0, 1};
  rep.name = "GL(2) example with T_s = (C*)^2";
  return rep;
}

}  // namespace hallwheels
