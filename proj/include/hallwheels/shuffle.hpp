#pragma once

#include <algorithm>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/laurent.hpp"
#include "hallwheels/parallel.hpp"
#include "hallwheels/reps.hpp"
#include "hallwheels/rootsys.hpp"

namespace hallwheels {

/// The character alpha as the linear form sum_i alpha_i z_i in the T variables.
inline LaurentPoly linear_form(const ExponentVector& alpha, std::size_t ts_rank) {
  const std::size_t r = alpha.t_rank();
  LaurentPoly p(r, ts_rank);
  for (std::size_t i = 0; i < r; ++i)
    if (alpha[i] != 0) p += LaurentPoly::variable(i, r, ts_rank) * Rational(alpha[i]);
  return p;
}

struct InductionDatum {
  Cocharacter lambda;
  Cocharacter nu;
  RationalFunction kernel;
  std::vector<WeylElement> w_nu;
  std::vector<WeylElement> stabilizer;  // W_nu cap W_lambda
  std::vector<WeylElement> cosets;      // W_nu / (W_nu cap W_lambda)
  Exponent dim_pi = 0;
  Exponent dim_q = 0;
};

inline void require_order(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu) {
  if (!preceq(rep, lambda, nu)) {
    auto show = [](const Cocharacter& c) {
      std::string s = "(";
      for (std::size_t i = 0; i < c.coords.size(); ++i) s += (i ? "," : "") + std::to_string(c.coords[i]);
      return s + ")";
    };
    throw OrderViolation("cocharacter " + show(lambda) + " is not below " + show(nu));
  }
}

/// k_{lambda,nu}: product of the V^nu weights with <lambda,alpha> > 0 over the
/// product of the l_nu roots with <lambda,alpha> > 0, as linear forms.
inline RationalFunction kernel(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu) {
  require_order(rep, lambda, nu);
  const std::size_t r = rep.t_rank();
  const std::size_t s = rep.ts_rank();
  FixedSubspaces fn = fixed_subspaces(rep, nu);
  LaurentPoly num = LaurentPoly::constant(1, r, s);
  for (std::size_t i : fn.v_fixed) {
    const ExponentVector& ch = rep.v_basis[i].character;
    if (pair(lambda, ch) > 0) num *= linear_form(ch, s);
  }
  RationalFunction k(num);
  for (std::size_t i : fn.levi.levi_roots) {
    const ExponentVector& a = rep.datum.roots[i];
    if (pair(lambda, a) > 0) k.add_factor(linear_form(a, s), 1);
  }
  return k;
}

/// -2 per linear factor in the numerator, +2 per linear factor in the denominator.
inline Exponent signed_degree(const RationalFunction& f) {
  if (f.numerator().is_zero()) throw InvalidArgument("degree of the zero function");
  if (!f.numerator().is_t_homogeneous()) throw InvalidArgument("numerator is not homogeneous");
  Exponent deg = f.numerator().t_degree();
  for (const auto& [g, k] : f.factors()) {
    if (!g.is_t_homogeneous()) throw InvalidArgument("denominator factor is not homogeneous");
    deg -= g.t_degree() * static_cast<Exponent>(k);
  }
  return -2 * deg;
}

inline InductionDatum induction_datum(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu) {
  InductionDatum d;
  d.lambda = lambda;
  d.nu = nu;
  d.kernel = kernel(rep, lambda, nu);
  d.w_nu = weyl_subgroup(rep.datum, nu);
  d.stabilizer = intersect_groups(d.w_nu, weyl_subgroup(rep.datum, lambda));
  d.cosets = coset_representatives(d.w_nu, d.stabilizer);
  FixedSubspaces fn = fixed_subspaces(rep, nu);
  for (std::size_t i : fn.v_fixed)
    if (pair(lambda, rep.v_basis[i].character) > 0) ++d.dim_pi;
  for (std::size_t i : fn.levi.levi_roots)
    if (pair(lambda, rep.datum.roots[i]) > 0) ++d.dim_q;
  return d;
}

namespace detail {

inline bool invariant_under(const RationalFunction& f, const std::vector<WeylElement>& group) {
  for (const auto& h : group) {
    RationalFunction g = f.act(h, Realization::additive);
    if (g.numerator() == f.numerator() && g.factors() == f.factors()) continue;
    if (!(g == f)) return false;
  }
  return true;
}

inline void check_induction_input(const LinearizedRep& rep, const InductionDatum& d, const LaurentPoly& f) {
  f.require_same_ring(LaurentPoly(rep.t_rank(), rep.ts_rank()));
  if (!is_invariant(weyl_subgroup(rep.datum, d.lambda), f, Realization::additive))
    throw NotInvariantInput("input polynomial is not invariant under W_lambda");
  if (!f.is_zero() && !invariant_under(d.kernel, d.stabilizer))
    throw NotInvariantInput("f * k is not invariant under W_nu cap W_lambda");
}

}  // namespace detail

/// Sum of sigma.(f k) over the given coset representatives.
inline LaurentPoly induct_with_representatives(const LinearizedRep& rep, const InductionDatum& d, const LaurentPoly& f,
                                               const std::vector<WeylElement>& representatives) {
  detail::check_induction_input(rep, d, f);
  RationalFunction fk = d.kernel * f;
  auto terms = parallel_map(representatives.size(),
                            [&](std::size_t i) { return fk.act(representatives[i], Realization::additive); });
  LaurentPoly out = rational_sum_to_poly(terms, rep.t_rank(), rep.ts_rank());
  if (!is_invariant(d.w_nu, out, Realization::additive))
    throw InternalError("induction output is not invariant under W_nu");
  return out;
}

inline LaurentPoly induct(const LinearizedRep& rep, const InductionDatum& d, const LaurentPoly& f) {
  return induct_with_representatives(rep, d, f, d.cosets);
}

inline LaurentPoly induct(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu,
                          const LaurentPoly& f) {
  return induct(rep, induction_datum(rep, lambda, nu), f);
}

/// Sum over all of W_nu divided by |W_nu cap W_lambda|.
inline LaurentPoly induct_full_group(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu,
                                     const LaurentPoly& f) {
  InductionDatum d = induction_datum(rep, lambda, nu);
  LaurentPoly out = induct_with_representatives(rep, d, f, d.w_nu);
  return out * (Rational(1) / Rational(static_cast<long long>(d.stabilizer.size())));
}

/// Indices of the polynomials on which Ind^mu_nu . Ind^lambda_mu and Ind^lambda_nu differ.
inline std::vector<std::size_t> associativity_mismatches(const LinearizedRep& rep, const Cocharacter& lambda,
                                                         const Cocharacter& mu, const Cocharacter& nu,
                                                         const std::vector<LaurentPoly>& basis) {
  require_order(rep, lambda, mu);
  require_order(rep, mu, nu);
  InductionDatum lm = induction_datum(rep, lambda, mu);
  InductionDatum mn = induction_datum(rep, mu, nu);
  InductionDatum ln = induction_datum(rep, lambda, nu);
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    LaurentPoly two_step = induct(rep, mn, induct(rep, lm, basis[i]));
    if (!(two_step == induct(rep, ln, basis[i]))) bad.push_back(i);
  }
  return bad;
}

inline bool check_associativity(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& mu,
                                const Cocharacter& nu, const std::vector<LaurentPoly>& basis) {
  return associativity_mismatches(rep, lambda, mu, nu, basis).empty();
}

/// Distinct nonzero orbit sums of the monomials of degree <= max_degree in the T variables.
inline std::vector<LaurentPoly> orbit_sum_basis(const std::vector<WeylElement>& group, std::size_t t_rank,
                                                std::size_t ts_rank, int max_degree) {
  std::vector<LaurentPoly> out;
  std::vector<Exponent> e(t_rank, 0);
  auto emit = [&] {
    LaurentPoly m = LaurentPoly::monomial(ExponentVector(e, std::vector<Exponent>(ts_rank, 0)));
    LaurentPoly s = symmetrize(group, m, Realization::additive);
    if (s.is_zero()) return;
    // scale so that the leading coefficient is 1, which makes duplicates compare equal
    s *= Rational(1) / s.terms().rbegin()->second;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  // enumerate exponent vectors with total degree <= max_degree
  auto rec = [&](auto&& self, std::size_t i, Exponent left) -> void {
    if (i == t_rank) {
      emit();
      return;
    }
    for (Exponent k = 0; k <= left; ++k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(rec, 0, max_degree);
  return out;
}

}  // namespace hallwheels
