#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/lattice.hpp"
#include "hallwheels/numeric.hpp"
#include "hallwheels/rootsys.hpp"

namespace hallwheels {

/// Exact multivariate Laurent polynomial with rational coefficients.
///
/// Variables are the coordinates of an ExponentVector: the T block (z_1..z_r)
/// followed by the T_s block. Zero coefficients are never stored and terms
/// iterate in ascending lexicographic order of exponents.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  LaurentPoly() = default;
  LaurentPoly(std::size_t t_rank, std::size_t ts_rank) : t_rank_(t_rank), ts_rank_(ts_rank) {}

  static LaurentPoly constant(const Rational& c, std::size_t t_rank, std::size_t ts_rank) {
    LaurentPoly p(t_rank, ts_rank);
    p.add_term(ExponentVector(t_rank, ts_rank), c);
    return p;
  }
  static LaurentPoly monomial(const ExponentVector& e, const Rational& c = 1) {
    LaurentPoly p(e.t_rank(), e.ts_rank());
    p.add_term(e, c);
    return p;
  }
  /// The coordinate variable with index i (T block first).
  static LaurentPoly variable(std::size_t i, std::size_t t_rank, std::size_t ts_rank) {
    ExponentVector e(t_rank, ts_rank);
    e[i] = 1;
    return monomial(e);
  }

  std::size_t t_rank() const noexcept { return t_rank_; }
  std::size_t ts_rank() const noexcept { return ts_rank_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Rational coefficient(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ExponentVector& e, const Rational& c) {
    if (e.t_rank() != t_rank_ || e.ts_rank() != ts_rank_) {
      throw DimensionMismatch("monomial " + e.str() + " does not fit polynomial ring (" +
                              std::to_string(t_rank_) + "|" + std::to_string(ts_rank_) + ")");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void require_same_ring(const LaurentPoly& o) const {
    if (t_rank_ != o.t_rank_ || ts_rank_ != o.ts_rank_) {
      throw DimensionMismatch("polynomials over rings (" + std::to_string(t_rank_) + "|" +
                              std::to_string(ts_rank_) + ") and (" + std::to_string(o.t_rank_) +
                              "|" + std::to_string(o.ts_rank_) + ")");
    }
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    require_same_ring(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  LaurentPoly& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= k;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator-(LaurentPoly a) { return a *= Rational(-1); }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& k) { return a *= k; }
  friend LaurentPoly operator*(const Rational& k, LaurentPoly a) { return a *= k; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.require_same_ring(b);
    LaurentPoly r(a.t_rank_, a.ts_rank_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Multiplies every exponent by a monomial shift.
  LaurentPoly shifted(const ExponentVector& by) const {
    LaurentPoly r(t_rank_, ts_rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + by, c);
    return r;
  }

  LaurentPoly pow(unsigned k) const {
    LaurentPoly r = constant(1, t_rank_, ts_rank_);
    LaurentPoly base = *this;
    while (k) {
      if (k & 1u) r *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return r;
  }

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.t_rank_ != b.t_rank_) return a.t_rank_ < b.t_rank_;
    if (a.ts_rank_ != b.ts_rank_) return a.ts_rank_ < b.ts_rank_;
    return a.terms_ < b.terms_;
  }

  /// Componentwise minimum of the exponents (zero vector for the zero polynomial).
  ExponentVector min_exponents() const {
    ExponentVector m(t_rank_, ts_rank_);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (auto x : e.coords())
        if (x < 0) return false;
    return true;
  }

  bool has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return is_integral(t.second); });
  }

  /// Total degree in the T block of the highest term; -1 for zero.
  Exponent t_degree() const {
    Exponent best = -1;
    bool any = false;
    for (const auto& [e, c] : terms_) {
      Exponent s = 0;
      for (auto x : e.t_part()) s += x;
      if (!any || s > best) best = s;
      any = true;
    }
    return best;
  }

  /// True when every term has the same T-block total degree.
  bool is_t_homogeneous() const {
    std::optional<Exponent> deg;
    for (const auto& [e, c] : terms_) {
      Exponent s = 0;
      for (auto x : e.t_part()) s += x;
      if (deg && *deg != s) return false;
      deg = s;
    }
    return true;
  }

  /// Exact evaluation; negative exponents need nonzero coordinates.
  Rational evaluate(const std::vector<Rational>& point) const {
    require_same_size(point.size(), t_rank_ + ts_rank_, "evaluation point");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < e.size(); ++i) {
        Exponent k = e[i];
        if (k == 0) continue;
        if (k < 0 && point[i] == 0) throw InvalidArgument("evaluation at a pole");
        Rational base = k > 0 ? point[i] : Rational(1) / point[i];
        for (Exponent j = 0; j < (k > 0 ? k : -k); ++j) v *= base;
      }
      total += v;
    }
    return total;
  }

  /// Canonical text: "p/q*(e..|s..)" terms joined by " + ", ascending order; "0" if empty.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) s += " + ";
      first = false;
      s += format_rational(c);
      s += "*";
      s += e.str();
    }
    return s;
  }

 private:
  std::size_t t_rank_ = 0;
  std::size_t ts_rank_ = 0;
  Terms terms_;
};

/// Parses the canonical text produced by LaurentPoly::str().
inline LaurentPoly parse_canonical(const std::string& text, std::size_t t_rank, std::size_t ts_rank) {
  LaurentPoly p(t_rank, ts_rank);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "0") return p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto star = s.find('*', pos);
    if (star == std::string::npos) throw ParseError("canonical term without '*': " + text);
    Rational c = parse_rational(s.substr(pos, star - pos));
    if (star + 1 >= s.size() || s[star + 1] != '(') throw ParseError("expected '(' in " + text);
    auto close = s.find(')', star);
    if (close == std::string::npos) throw ParseError("unterminated exponent in " + text);
    std::string inner = s.substr(star + 2, close - star - 2);
    auto bar = inner.find('|');
    if (bar == std::string::npos) throw ParseError("missing '|' in exponent of " + text);
    auto split = [&](const std::string& part) {
      std::vector<Exponent> out;
      if (part.empty()) return out;
      std::size_t q = 0;
      while (q <= part.size()) {
        auto comma = part.find(',', q);
        if (comma == std::string::npos) comma = part.size();
        try {
          out.push_back(std::stoll(part.substr(q, comma - q)));
        } catch (const std::exception&) {
          throw ParseError("bad exponent in " + text);
        }
        q = comma + 1;
      }
      return out;
    };
    auto t = split(inner.substr(0, bar));
    auto ts = split(inner.substr(bar + 1));
    if (t.size() != t_rank || ts.size() != ts_rank) throw ParseError("exponent shape mismatch in " + text);
    p.add_term(ExponentVector(t, ts), c);
    pos = close + 1;
    if (pos < s.size()) {
      if (s[pos] != '+') throw ParseError("expected '+' between terms in " + text);
      ++pos;
    }
  }
  return p;
}

/// Human-readable form with variable names, e.g. "z1^2*z2 - 1/2*q1^-1".
inline std::string format_monomial(const ExponentVector& e, const std::vector<std::string>& names) {
  require_same_size(names.size(), e.size(), "variable names");
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string format_named(const LaurentPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = format_monomial(e, names);
    if (mono == "1") {
      s += format_rational_short(mag);
    } else if (mag == 1) {
      s += mono;
    } else {
      s += format_rational_short(mag) + "*" + mono;
    }
  }
  return s;
}

/// Exact quotient p / d in the Laurent ring, or nullopt when d does not divide p.
inline std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d) {
  p.require_same_ring(d);
  if (d.is_zero()) throw InvalidArgument("division by the zero polynomial");
  if (p.is_zero()) return p;
  ExponentVector dmin = d.min_exponents();
  ExponentVector pmin = p.min_exponents();
  LaurentPoly dd = d.shifted(-dmin);
  LaurentPoly r = p.shifted(-pmin);
  LaurentPoly q(p.t_rank(), p.ts_rank());
  const auto& [dlead, dcoef] = *dd.terms().rbegin();
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms().rbegin();
    ExponentVector e = rlead - dlead;
    for (auto x : e.coords())
      if (x < 0) return std::nullopt;
    Rational c = rcoef / dcoef;
    q.add_term(e, c);
    r -= dd.shifted(e) * c;
  }
  return q.shifted(pmin - dmin);
}

/// How a Weyl element acts on polynomials.
///
/// multiplicative: characters as monomials, z^e -> z^{w e} (K-theory side).
/// additive: characters as linear forms, z_j -> sum_i w_ij z_i (cohomology side).
enum class Realization { multiplicative, additive };

namespace detail {

/// Column j is +-e_{perm[j]}; returns nullopt for other matrices.
inline std::optional<std::vector<std::pair<std::size_t, Exponent>>> signed_permutation(const WeylElement& w) {
  std::vector<std::pair<std::size_t, Exponent>> cols(w.rank());
  for (std::size_t j = 0; j < w.rank(); ++j) {
    int hits = 0;
    for (std::size_t i = 0; i < w.rank(); ++i) {
      Exponent x = w(i, j);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || ++hits > 1) return std::nullopt;
      cols[j] = {i, x};
    }
    if (hits != 1) return std::nullopt;
  }
  return cols;
}

}  // namespace detail

inline LaurentPoly weyl_act(const WeylElement& w, const LaurentPoly& p,
                            Realization realization = Realization::multiplicative) {
  require_same_size(w.rank(), p.t_rank(), "Weyl element acting on polynomial");
  LaurentPoly out(p.t_rank(), p.ts_rank());
  if (realization == Realization::multiplicative) {
    for (const auto& [e, c] : p.terms()) out.add_term(w.apply(e), c);
    return out;
  }
  if (auto perm = detail::signed_permutation(w)) {
    for (const auto& [e, c] : p.terms()) {
      ExponentVector img = e;
      Rational coef = c;
      for (std::size_t j = 0; j < w.rank(); ++j) {
        auto [i, sign] = (*perm)[j];
        img[i] = e[j];
        if (sign < 0 && (e[j] % 2 != 0)) coef = -coef;
      }
      out.add_term(img, coef);
    }
    return out;
  }
  // general linear substitution; needs honest polynomials in the T block
  std::vector<LaurentPoly> images;
  for (std::size_t j = 0; j < w.rank(); ++j) {
    LaurentPoly form(p.t_rank(), p.ts_rank());
    for (std::size_t i = 0; i < w.rank(); ++i)
      if (w(i, j) != 0) form += LaurentPoly::variable(i, p.t_rank(), p.ts_rank()) * Rational(w(i, j));
    images.push_back(std::move(form));
  }
  for (const auto& [e, c] : p.terms()) {
    ExponentVector rest = e;
    LaurentPoly term = LaurentPoly::constant(c, p.t_rank(), p.ts_rank());
    for (std::size_t j = 0; j < w.rank(); ++j) {
      if (e[j] < 0) throw InvalidArgument("additive Weyl action needs nonnegative T exponents");
      if (e[j] > 0) term *= images[j].pow(static_cast<unsigned>(e[j]));
      rest[j] = 0;
    }
    out += term.shifted(rest);
  }
  return out;
}

/// Sum of w.p over the supplied elements (no normalization).
inline LaurentPoly symmetrize(const std::vector<WeylElement>& elements, const LaurentPoly& p,
                              Realization realization = Realization::multiplicative) {
  LaurentPoly out(p.t_rank(), p.ts_rank());
  for (const auto& w : elements) out += weyl_act(w, p, realization);
  return out;
}

inline bool is_invariant(const std::vector<WeylElement>& group, const LaurentPoly& p,
                         Realization realization = Realization::multiplicative) {
  return std::all_of(group.begin(), group.end(),
                     [&](const WeylElement& w) { return weyl_act(w, p, realization) == p; });
}

/// numerator / (product of denominator factors with multiplicities).
///
/// Factors are scaled so that their leading (lexicographically largest) term
/// has coefficient 1, the scalar being moved into the numerator; equal factors
/// are merged. Keeping the denominator factored makes common denominators of
/// many terms cheap to form.
class RationalFunction {
 public:
  using Factor = std::pair<LaurentPoly, unsigned>;

  RationalFunction() = default;
  explicit RationalFunction(LaurentPoly numerator) : num_(std::move(numerator)) {}
  RationalFunction(LaurentPoly numerator, const LaurentPoly& denominator) : num_(std::move(numerator)) {
    add_factor(denominator, 1);
  }

  const LaurentPoly& numerator() const noexcept { return num_; }
  const std::vector<Factor>& factors() const noexcept { return den_; }

  LaurentPoly denominator() const {
    LaurentPoly d = LaurentPoly::constant(1, num_.t_rank(), num_.ts_rank());
    for (const auto& [f, k] : den_) d *= f.pow(k);
    return d;
  }

  /// Number of denominator factors counted with multiplicity.
  unsigned factor_count() const {
    unsigned n = 0;
    for (const auto& f : den_) n += f.second;
    return n;
  }

  void add_factor(const LaurentPoly& f, unsigned mult) {
    num_.require_same_ring(f);
    if (f.is_zero()) throw InvalidArgument("zero denominator factor");
    if (mult == 0) return;
    Rational lead = f.terms().rbegin()->second;
    LaurentPoly normalized = f * (Rational(1) / lead);
    Rational scale = 1;
    for (unsigned i = 0; i < mult; ++i) scale *= lead;
    num_ *= Rational(1) / scale;
    if (normalized.size() == 1 && normalized.terms().begin()->first.is_zero()) return;  // constant
    auto it = std::lower_bound(den_.begin(), den_.end(), normalized,
                               [](const Factor& a, const LaurentPoly& b) { return a.first < b; });
    if (it != den_.end() && it->first == normalized) {
      it->second += mult;
    } else {
      den_.insert(it, Factor{std::move(normalized), mult});
    }
  }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    RationalFunction r(a.num_ * b.num_);
    for (const auto& [f, k] : a.den_) r.add_factor(f, k);
    for (const auto& [f, k] : b.den_) r.add_factor(f, k);
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const LaurentPoly& p) {
    RationalFunction r = a;
    r.num_ = r.num_ * p;
    return r;
  }

  RationalFunction act(const WeylElement& w, Realization realization) const {
    RationalFunction r(weyl_act(w, num_, realization));
    for (const auto& [f, k] : den_) r.add_factor(weyl_act(w, f, realization), k);
    return r;
  }

  /// Equality of the represented functions (cross multiplication).
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.denominator() == b.num_ * a.denominator();
  }

  Rational evaluate(const std::vector<Rational>& point) const {
    Rational d = denominator().evaluate(point);
    if (d == 0) throw InvalidArgument("evaluation at a pole");
    return num_.evaluate(point) / d;
  }

  /// Cancels the denominator when it divides the numerator.
  std::optional<LaurentPoly> as_polynomial() const {
    if (den_.empty()) return num_;
    return divide_exact(num_, denominator());
  }

 private:
  LaurentPoly num_;
  std::vector<Factor> den_;
};

/// Sum of rational terms that is certified to be a Laurent polynomial.
inline LaurentPoly rational_sum_to_poly(const std::vector<RationalFunction>& terms, std::size_t t_rank,
                                        std::size_t ts_rank) {
  // least common multiple of the factored denominators
  std::map<LaurentPoly, unsigned> lcm;
  for (const auto& t : terms) {
    t.numerator().require_same_ring(LaurentPoly(t_rank, ts_rank));
    for (const auto& [f, k] : t.factors()) {
      auto& m = lcm[f];
      m = std::max(m, k);
    }
  }
  LaurentPoly total(t_rank, ts_rank);
  for (const auto& t : terms) {
    if (t.numerator().is_zero()) continue;
    LaurentPoly cofactor = LaurentPoly::constant(1, t_rank, ts_rank);
    for (const auto& [f, k] : lcm) {
      unsigned have = 0;
      for (const auto& [g, j] : t.factors())
        if (g == f) have = j;
      if (k > have) cofactor *= f.pow(k - have);
    }
    total += t.numerator() * cofactor;
  }
  for (const auto& [f, k] : lcm) {
    for (unsigned i = 0; i < k; ++i) {
      auto q = divide_exact(total, f);
      if (!q) {
        throw NonPolynomialResult("sum of rational terms is not a Laurent polynomial (denominator factor " +
                                  f.str() + " survives)");
      }
      total = std::move(*q);
    }
  }
  return total;
}

}  // namespace hallwheels
