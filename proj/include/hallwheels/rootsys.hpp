#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/lattice.hpp"

namespace hallwheels {

enum class Family { GL, SL, Sp, SO };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::GL: return "GL";
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SO: return "SO";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "GL") return Family::GL;
  if (s == "SL") return Family::SL;
  if (s == "Sp") return Family::Sp;
  if (s == "SO") return Family::SO;
  throw InvalidArgument("unsupported group family '" + s + "'");
}

/// An element of the Weyl group as a square integer matrix acting on X*(T)
/// (column vectors). T_s coordinates are never touched.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(std::size_t rank, std::vector<Exponent> entries)
      : rank_(rank), entries_(std::move(entries)) {
    require_same_size(entries_.size(), rank_ * rank_, "Weyl matrix entries");
  }

  static WeylElement identity(std::size_t rank) {
    std::vector<Exponent> e(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i) e[i * rank + i] = 1;
    return WeylElement(rank, std::move(e));
  }

  std::size_t rank() const noexcept { return rank_; }
  Exponent operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  const std::vector<Exponent>& entries() const noexcept { return entries_; }

  bool is_identity() const { return *this == identity(rank_); }

  /// Applies the matrix to the T block; the T_s block is copied.
  ExponentVector apply(const ExponentVector& x) const {
    require_same_size(rank_, x.t_rank(), "Weyl element acting on character");
    std::vector<Exponent> t(rank_, 0);
    auto xt = x.t_part();
    for (std::size_t i = 0; i < rank_; ++i)
      for (std::size_t j = 0; j < rank_; ++j)
        if (xt[j] != 0) t[i] = checked_add(t[i], checked_mul((*this)(i, j), xt[j]));
    auto ts = x.ts_part();
    return ExponentVector(std::move(t), std::vector<Exponent>(ts.begin(), ts.end()));
  }

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    require_same_size(a.rank_, b.rank_, "Weyl product");
    const std::size_t r = a.rank_;
    std::vector<Exponent> e(r * r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t k = 0; k < r; ++k) {
        Exponent x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < r; ++j) e[i * r + j] = checked_add(e[i * r + j], checked_mul(x, b(k, j)));
      }
    return WeylElement(r, std::move(e));
  }

  /// The transpose acts on cocharacters so that pairings are preserved:
  /// <w^T lambda, chi> = <lambda, w chi>.
  Cocharacter transpose_apply(const Cocharacter& lambda) const {
    require_same_size(rank_, lambda.rank(), "Weyl element acting on cocharacter");
    Cocharacter out = Cocharacter::zero(rank_);
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t i = 0; i < rank_; ++i)
        out.coords[j] = checked_add(out.coords[j], checked_mul((*this)(i, j), lambda.coords[i]));
    return out;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.entries_ <=> b.entries_; }

 private:
  std::size_t rank_ = 0;
  std::vector<Exponent> entries_;
};

struct RootDatum {
  Family family = Family::GL;
  int n = 1;  // matrix size of the defining representation
  std::size_t rank = 0;
  std::vector<ExponentVector> roots;  // sorted; T block only
  std::vector<Cocharacter> coroots;   // coroots[i] belongs to roots[i]
  std::vector<std::size_t> simple_roots;
  std::vector<WeylElement> weyl_generators;
  /// Weights of the standard basis of the defining representation.
  std::vector<ExponentVector> defining_weights;

  std::string name() const { return to_string(family) + "(" + std::to_string(n) + ")"; }

  std::optional<std::size_t> root_index(const ExponentVector& chi) const {
    auto it = std::lower_bound(roots.begin(), roots.end(), chi);
    if (it != roots.end() && *it == chi) return static_cast<std::size_t>(it - roots.begin());
    return std::nullopt;
  }

  /// s_alpha(x) = x - <alpha^vee, x> alpha
  WeylElement reflection(std::size_t root) const {
    const auto& a = roots.at(root);
    const auto& c = coroots.at(root);
    std::vector<Exponent> e(rank * rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j)
        e[i * rank + j] = (i == j ? 1 : 0) - checked_mul(a[i], c.coords[j]);
    return WeylElement(rank, std::move(e));
  }
};

namespace detail {

// Classical data is written in epsilon coordinates of size m and then mapped
// to the lattice coordinates of the family (identity except for SL).
struct EpsilonRoot {
  std::vector<Exponent> root;
  std::vector<Exponent> coroot;
};

inline std::vector<Exponent> eps(std::size_t m, std::initializer_list<std::pair<std::size_t, Exponent>> entries) {
  std::vector<Exponent> v(m, 0);
  for (auto [i, c] : entries) v[i] += c;
  return v;
}

}  // namespace detail

inline RootDatum build_root_datum(Family family, int n) {
  using detail::EpsilonRoot;
  using detail::eps;
  RootDatum d;
  d.family = family;
  d.n = n;
  std::size_t m = 0;  // number of epsilon coordinates
  std::vector<EpsilonRoot> all;
  std::vector<std::vector<Exponent>> simple;
  std::vector<std::vector<Exponent>> defining;

  switch (family) {
    case Family::GL:
    case Family::SL: {
      if (n < 1 || (family == Family::SL && n < 2)) throw InvalidArgument("unsupported rank for " + to_string(family));
      m = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) all.push_back({eps(m, {{i, 1}, {j, -1}}), eps(m, {{i, 1}, {j, -1}})});
      for (std::size_t i = 0; i + 1 < m; ++i) simple.push_back(eps(m, {{i, 1}, {i + 1, -1}}));
      for (std::size_t i = 0; i < m; ++i) defining.push_back(eps(m, {{i, 1}}));
      break;
    }
    case Family::Sp: {
      if (n < 2 || n % 2 != 0) throw InvalidArgument("Sp(n) needs even n >= 2");
      m = static_cast<std::size_t>(n / 2);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j)
          for (Exponent si : {1, -1})
            for (Exponent sj : {1, -1}) {
              auto v = eps(m, {{i, si}, {j, sj}});
              all.push_back({v, v});
            }
        for (Exponent s : {1, -1}) all.push_back({eps(m, {{i, 2 * s}}), eps(m, {{i, s}})});
      }
      for (std::size_t i = 0; i + 1 < m; ++i) simple.push_back(eps(m, {{i, 1}, {i + 1, -1}}));
      simple.push_back(eps(m, {{m - 1, 2}}));
      for (std::size_t i = 0; i < m; ++i) defining.push_back(eps(m, {{i, 1}}));
      for (std::size_t i = 0; i < m; ++i) defining.push_back(eps(m, {{i, -1}}));
      break;
    }
    case Family::SO: {
      if (n < 2) throw InvalidArgument("SO(n) needs n >= 2");
      m = static_cast<std::size_t>(n / 2);
      const bool odd = n % 2 == 1;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j)
          for (Exponent si : {1, -1})
            for (Exponent sj : {1, -1}) {
              auto v = eps(m, {{i, si}, {j, sj}});
              all.push_back({v, v});
            }
        if (odd)
          for (Exponent s : {1, -1}) all.push_back({eps(m, {{i, s}}), eps(m, {{i, 2 * s}})});
      }
      for (std::size_t i = 0; i + 1 < m; ++i) simple.push_back(eps(m, {{i, 1}, {i + 1, -1}}));
      if (odd) {
        simple.push_back(eps(m, {{m - 1, 1}}));
      } else if (m >= 2) {
        simple.push_back(eps(m, {{m - 2, 1}, {m - 1, 1}}));
      }
      for (std::size_t i = 0; i < m; ++i) defining.push_back(eps(m, {{i, 1}}));
      for (std::size_t i = 0; i < m; ++i) defining.push_back(eps(m, {{i, -1}}));
      if (odd) defining.push_back(std::vector<Exponent>(m, 0));
      break;
    }
  }

  // SL(n): X*(T) = Z^n / Z(1,...,1) with basis eps_1..eps_{n-1}; eps_n = -(sum).
  // Coroots live in {sum = 0} and are recorded by their pairings with eps_1..eps_{n-1}.
  auto to_lattice = [&](const std::vector<Exponent>& v) {
    if (family != Family::SL) return v;
    std::vector<Exponent> out(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) out[i] = v[i] - v[m - 1];
    return out;
  };
  auto coroot_to_lattice = [&](const std::vector<Exponent>& v) {
    if (family != Family::SL) return v;
    return std::vector<Exponent>(v.begin(), v.end() - 1);
  };
  d.rank = family == Family::SL ? m - 1 : m;

  std::vector<std::pair<ExponentVector, Cocharacter>> rc;
  for (const auto& r : all)
    rc.emplace_back(ExponentVector(to_lattice(r.root), {}), Cocharacter(coroot_to_lattice(r.coroot)));
  std::sort(rc.begin(), rc.end());
  for (auto& [r, c] : rc) {
    d.roots.push_back(r);
    d.coroots.push_back(c);
  }
  for (const auto& s : simple) {
    auto idx = d.root_index(ExponentVector(to_lattice(s), {}));
    if (!idx) throw InternalError("simple root missing from root list");
    d.simple_roots.push_back(*idx);
    d.weyl_generators.push_back(d.reflection(*idx));
  }
  for (const auto& w : defining) d.defining_weights.emplace_back(to_lattice(w), std::vector<Exponent>{});
  return d;
}

/// Roots partitioned by the sign of <lambda, alpha>; indices into datum.roots.
struct DynamicalSplit {
  std::vector<std::size_t> levi_roots;        // <lambda, alpha> = 0
  std::vector<std::size_t> parabolic_roots;   // >= 0
  std::vector<std::size_t> unipotent_roots;   // > 0
  std::vector<std::size_t> opposite_roots;    // < 0
};

inline DynamicalSplit dynamical_split(const RootDatum& datum, const Cocharacter& lambda) {
  require_same_size(lambda.rank(), datum.rank, "cocharacter rank");
  DynamicalSplit s;
  for (std::size_t i = 0; i < datum.roots.size(); ++i) {
    Exponent p = pair(lambda, datum.roots[i]);
    if (p == 0) s.levi_roots.push_back(i);
    if (p >= 0) s.parabolic_roots.push_back(i);
    if (p > 0) s.unipotent_roots.push_back(i);
    if (p < 0) s.opposite_roots.push_back(i);
  }
  return s;
}

/// Sizes of the diagonal blocks of the Levi for GL/SL, grouping coordinates of
/// the defining representation with equal lambda-weight in order of first
/// appearance. Empty for other families.
inline std::vector<std::size_t> levi_block_pattern(const RootDatum& datum, const Cocharacter& lambda) {
  if (datum.family != Family::GL && datum.family != Family::SL) return {};
  std::vector<Exponent> seen;
  std::vector<std::size_t> sizes;
  for (const auto& w : datum.defining_weights) {
    Exponent p = pair(lambda, w);
    auto it = std::find(seen.begin(), seen.end(), p);
    if (it == seen.end()) {
      seen.push_back(p);
      sizes.push_back(1);
    } else {
      ++sizes[static_cast<std::size_t>(it - seen.begin())];
    }
  }
  return sizes;
}

inline constexpr std::size_t default_enumeration_cap = 1'000'000;

/// Closure of a generating set; sorted.
inline std::vector<WeylElement> generate_group(std::size_t rank, const std::vector<WeylElement>& gens,
                                               std::size_t cap = default_enumeration_cap) {
  std::set<WeylElement> seen{WeylElement::identity(rank)};
  std::deque<WeylElement> queue{WeylElement::identity(rank)};
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement x = g * w;
      if (seen.insert(x).second) {
        if (seen.size() > cap) throw EnumerationCap("group order exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(x));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<WeylElement> weyl_group(const RootDatum& datum, std::size_t cap = default_enumeration_cap) {
  return generate_group(datum.rank, datum.weyl_generators, cap);
}

/// W_lambda: generated by the reflections in the Levi roots of lambda.
inline std::vector<WeylElement> weyl_subgroup(const RootDatum& datum, const Cocharacter& lambda,
                                              std::size_t cap = default_enumeration_cap) {
  DynamicalSplit s = dynamical_split(datum, lambda);
  std::vector<WeylElement> gens;
  for (std::size_t i : s.levi_roots) gens.push_back(datum.reflection(i));
  return generate_group(datum.rank, gens, cap);
}

inline std::vector<WeylElement> intersect_groups(const std::vector<WeylElement>& a, const std::vector<WeylElement>& b) {
  std::vector<WeylElement> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// One representative per left coset sigma * small: the smallest element of the coset.
/// Both inputs must be sorted (as returned by the enumeration functions).
inline std::vector<WeylElement> coset_representatives(const std::vector<WeylElement>& big,
                                                      const std::vector<WeylElement>& small) {
  for (const auto& h : small)
    if (!std::binary_search(big.begin(), big.end(), h))
      throw InvalidArgument("coset_representatives: subgroup is not contained in the group");
  if (small.empty() || big.size() % small.size() != 0)
    throw InvalidArgument("coset_representatives: subgroup order does not divide group order");
  std::vector<bool> covered(big.size(), false);
  std::vector<WeylElement> reps;
  for (std::size_t i = 0; i < big.size(); ++i) {
    if (covered[i]) continue;
    reps.push_back(big[i]);
    for (const auto& h : small) {
      auto it = std::lower_bound(big.begin(), big.end(), big[i] * h);
      if (it == big.end() || *it != big[i] * h) throw InvalidArgument("coset_representatives: not closed");
      covered[static_cast<std::size_t>(it - big.begin())] = true;
    }
  }
  return reps;
}

/// True when w maps the root set bijectively onto itself.
inline bool permutes_roots(const RootDatum& datum, const WeylElement& w) {
  std::vector<ExponentVector> image;
  for (const auto& r : datum.roots) image.push_back(w.apply(r));
  std::sort(image.begin(), image.end());
  return image == datum.roots;
}

}  // namespace hallwheels
