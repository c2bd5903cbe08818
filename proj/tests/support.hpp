#pragma once

#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hallwheels/hallwheels.hpp"
#include "oracles.hpp"

namespace testing_support {

using namespace hallwheels;

inline std::string data_dir() { return HW_DATA_DIR; }
inline std::string problem_path(const std::string& stem) { return data_dir() + "/problems/" + stem + ".json"; }

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// HALLWHEELS_SEED overrides the fixed default.
inline unsigned long long seed() {
  if (const char* s = std::getenv("HALLWHEELS_SEED")) return std::stoull(s);
  return 20240917ULL;
}

inline Exponent uniform(std::mt19937_64& rng, Exponent lo, Exponent hi) {
  return std::uniform_int_distribution<Exponent>(lo, hi)(rng);
}

inline std::vector<Exponent> random_vector(std::mt19937_64& rng, std::size_t n, Exponent lo, Exponent hi) {
  std::vector<Exponent> v(n);
  for (auto& x : v) x = uniform(rng, lo, hi);
  return v;
}

inline ExponentVector random_exponent(std::mt19937_64& rng, std::size_t r, std::size_t s, Exponent lo, Exponent hi) {
  return ExponentVector(random_vector(rng, r, lo, hi), random_vector(rng, s, lo, hi));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t r, std::size_t s, std::size_t terms, Exponent lo,
                               Exponent hi, Exponent cmax = 5) {
  LaurentPoly p(r, s);
  for (std::size_t i = 0; i < terms; ++i) {
    Exponent c = uniform(rng, -cmax, cmax);
    if (c != 0) p.add_term(random_exponent(rng, r, s, lo, hi), Rational(c));
  }
  return p;
}

inline oracle::Vec to_vec(const ExponentVector& e) { return oracle::Vec(e.coords().begin(), e.coords().end()); }

inline std::map<oracle::Vec, Rational> to_map(const LaurentPoly& p) {
  std::map<oracle::Vec, Rational> m;
  for (const auto& [e, c] : p.terms()) m[to_vec(e)] = c;
  return m;
}

/// 1 - x^m
inline LaurentPoly one_minus(const ExponentVector& m) {
  return LaurentPoly::constant(1, m.t_rank(), m.ts_rank()) - LaurentPoly::monomial(m);
}

/// A random element of (1 - x^m1, 1 - x^m2): sum of monomial multiples of
/// 1 - x^(a m1 + b m2) with |a|, |b| <= 1.
inline LaurentPoly random_member(std::mt19937_64& rng, const ExponentVector& m1, const ExponentVector& m2,
                                 std::size_t terms) {
  LaurentPoly p(m1.t_rank(), m1.ts_rank());
  for (std::size_t i = 0; i < terms; ++i) {
    Exponent a = uniform(rng, -1, 1);
    Exponent b = uniform(rng, -1, 1);
    ExponentVector shift = m1.scaled(a);
    shift += m2.scaled(b);
    ExponentVector u = random_exponent(rng, m1.t_rank(), m1.ts_rank(), -3, 3);
    p += one_minus(shift).shifted(u) * Rational(uniform(rng, -3, 3));
  }
  return p;
}

/// Evaluates a LaurentPoly at a point given per variable.
inline Rational eval(const LaurentPoly& p, const std::vector<Rational>& x) { return p.evaluate(x); }

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> x;
  for (std::size_t i = 0; i < n; ++i) {
    Exponent num = uniform(rng, -40, 40);
    Exponent den = uniform(rng, 1, 9);
    if (num == 0) num = 1;
    x.emplace_back(Rational(num, den));
  }
  return x;
}

}  // namespace testing_support
