#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/lattice.hpp"
#include "hallwheels/numeric.hpp"
#include "hallwheels/rootsys.hpp"

namespace hallwheels {

/// Dense matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    RatMatrix m(n, n);
    m(i, j) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Rational>& data() const noexcept { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
  }

  RatMatrix& operator+=(const RatMatrix& o) {
    require_same_size(data_.size(), o.data_.size(), "matrix sum");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  RatMatrix& operator-=(const RatMatrix& o) {
    require_same_size(data_.size(), o.data_.size(), "matrix difference");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& k) {
    for (auto& x : a.data_) x *= k;
    return a;
  }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    require_same_size(a.cols_, b.rows_, "matrix product");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

/// Coordinates of a matrix in the span of a fixed list of matrices.
class SpanSolver {
 public:
  SpanSolver() = default;

  explicit SpanSolver(std::vector<RatMatrix> basis) : basis_(std::move(basis)) {
    const std::size_t d = basis_.size();
    if (d == 0) return;
    const std::size_t len = basis_.front().data().size();
    // pick d entry positions on which the basis is independent
    std::vector<std::vector<Rational>> rows;  // reduced copies, for independence testing
    std::vector<std::size_t> pivot_col;
    for (std::size_t pos = 0; pos < len && pivots_.size() < d; ++pos) {
      std::vector<Rational> row(d);
      for (std::size_t k = 0; k < d; ++k) row[k] = basis_[k].data()[pos];
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational f = row[pivot_col[r]];
        if (f == 0) continue;
        for (std::size_t k = 0; k < d; ++k) row[k] -= f * rows[r][k];
      }
      auto nz = std::find_if(row.begin(), row.end(), [](const Rational& x) { return x != 0; });
      if (nz == row.end()) continue;
      std::size_t c = static_cast<std::size_t>(nz - row.begin());
      Rational inv = Rational(1) / row[c];
      for (auto& x : row) x *= inv;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational f = rows[r][c];
        if (f == 0) continue;
        for (std::size_t k = 0; k < d; ++k) rows[r][k] -= f * row[k];
      }
      rows.push_back(std::move(row));
      pivot_col.push_back(c);
      pivots_.push_back(pos);
    }
    if (pivots_.size() != d) throw InvalidArgument("matrices are linearly dependent");
    // inverse of the d x d restriction via Gauss-Jordan on [S | I]
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d));
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) aug[r][k] = basis_[k].data()[pivots_[r]];
      aug[r][d + r] = 1;
    }
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = c;
      while (aug[p][c] == 0) ++p;
      std::swap(aug[p], aug[c]);
      Rational inv = Rational(1) / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || aug[r][c] == 0) continue;
        Rational f = aug[r][c];
        for (std::size_t k = 0; k < 2 * d; ++k) aug[r][k] -= f * aug[c][k];
      }
    }
    inverse_.assign(d, std::vector<Rational>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) inverse_[r][k] = aug[r][d + k];
  }

  std::size_t size() const noexcept { return basis_.size(); }
  const std::vector<RatMatrix>& basis() const noexcept { return basis_; }

  std::optional<std::vector<Rational>> coordinates(const RatMatrix& x) const {
    const std::size_t d = basis_.size();
    std::vector<Rational> c(d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k < d; ++k) c[r] += inverse_[r][k] * x.data()[pivots_[k]];
    RatMatrix check(x.rows(), x.cols());
    for (std::size_t k = 0; k < d; ++k)
      if (c[k] != 0) check += basis_[k] * c[k];
    if (!(check == x)) return std::nullopt;
    return c;
  }

 private:
  std::vector<RatMatrix> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Rational>> inverse_;
};

struct BasisVector {
  std::string label;
  ExponentVector character;  // T x T_s
};

/// A classical Lie algebra as explicit matrices in its defining representation.
struct ClassicalLieAlgebra {
  std::vector<std::string> labels;
  std::vector<RatMatrix> matrices;
  std::vector<ExponentVector> characters;  // T block only
};

namespace detail {

inline ExponentVector matrix_character(const RootDatum& datum, const RatMatrix& x) {
  std::optional<ExponentVector> ch;
  for (std::size_t p = 0; p < x.rows(); ++p)
    for (std::size_t q = 0; q < x.cols(); ++q) {
      if (x(p, q) == 0) continue;
      ExponentVector c = datum.defining_weights[p] - datum.defining_weights[q];
      if (ch && *ch != c) throw InternalError("basis matrix is not a weight vector");
      ch = c;
    }
  if (!ch) throw InternalError("zero basis matrix");
  return *ch;
}

inline std::string root_label(const ExponentVector& r) {
  std::string s = "X[";
  for (std::size_t i = 0; i < r.t_rank(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + "]";
}

}  // namespace detail

/// Cartan basis first (H1..Hr), then one root vector per root in datum order.
/// Characters are computed from the torus action on the matrices.
inline ClassicalLieAlgebra classical_lie_algebra(const RootDatum& datum) {
  const std::size_t n = static_cast<std::size_t>(datum.n);
  auto e = [n](std::size_t i, std::size_t j) { return RatMatrix::unit(n, i, j); };
  std::vector<RatMatrix> cartan;
  std::vector<RatMatrix> root_vectors;
  switch (datum.family) {
    case Family::GL:
      for (std::size_t i = 0; i < n; ++i) cartan.push_back(e(i, i));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) root_vectors.push_back(e(i, j));
      break;
    case Family::SL:
      for (std::size_t i = 0; i + 1 < n; ++i) cartan.push_back(e(i, i) - e(i + 1, i + 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) root_vectors.push_back(e(i, j));
      break;
    case Family::Sp: {
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) cartan.push_back(e(i, i) - e(m + i, m + i));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) root_vectors.push_back(e(i, j) - e(m + j, m + i));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          root_vectors.push_back(e(i, m + j) + e(j, m + i));
          root_vectors.push_back(e(m + i, j) + e(m + j, i));
        }
      for (std::size_t i = 0; i < m; ++i) {
        root_vectors.push_back(e(i, m + i));
        root_vectors.push_back(e(m + i, i));
      }
      break;
    }
    case Family::SO: {
      const std::size_t m = n / 2;
      for (std::size_t i = 0; i < m; ++i) cartan.push_back(e(i, i) - e(m + i, m + i));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          if (i != j) root_vectors.push_back(e(i, j) - e(m + j, m + i));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
          root_vectors.push_back(e(i, m + j) - e(j, m + i));
          root_vectors.push_back(e(m + i, j) - e(m + j, i));
        }
      if (n % 2 == 1) {
        const std::size_t u = 2 * m;
        for (std::size_t i = 0; i < m; ++i) {
          root_vectors.push_back(e(i, u) - e(u, m + i));
          root_vectors.push_back(e(u, i) - e(m + i, u));
        }
      }
      break;
    }
  }

  ClassicalLieAlgebra lie;
  for (std::size_t i = 0; i < cartan.size(); ++i) {
    lie.labels.push_back("H" + std::to_string(i + 1));
    lie.characters.emplace_back(datum.rank, 0);
    lie.matrices.push_back(std::move(cartan[i]));
  }
  std::vector<std::pair<ExponentVector, RatMatrix>> tagged;
  for (auto& x : root_vectors) tagged.emplace_back(detail::matrix_character(datum, x), std::move(x));
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (tagged.size() != datum.roots.size()) throw InternalError("root vector count mismatch");
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (tagged[i].first != datum.roots[i]) throw InternalError("root vector characters disagree with root list");
    lie.labels.push_back(detail::root_label(tagged[i].first));
    lie.characters.push_back(tagged[i].first);
    lie.matrices.push_back(std::move(tagged[i].second));
  }
  return lie;
}

/// V, V* and g with weight bases and the action matrices of a Lie-algebra basis.
///
/// action[a](j, i) = <e_j^*, a . e_i>. vstar_basis[j] is the dual vector of
/// v_basis[j]; its T_s character is independent data.
struct LinearizedRep {
  RootDatum datum;
  std::vector<std::string> t_names;
  std::vector<std::string> ts_names;
  std::vector<BasisVector> v_basis;
  std::vector<BasisVector> vstar_basis;
  std::vector<BasisVector> lie_basis;
  std::vector<RatMatrix> action;
  /// Lie basis in a faithful matrix realization (used for bracket checks); may be empty.
  std::vector<RatMatrix> lie_matrices;
  /// Designated directions of the subtori C*_1 and C*_2 in X_*(T_s).
  std::optional<std::vector<Exponent>> c1_direction;
  std::optional<std::vector<Exponent>> c2_direction;
  std::string name;

  std::size_t dim() const noexcept { return v_basis.size(); }
  std::size_t t_rank() const noexcept { return datum.rank; }
  std::size_t ts_rank() const noexcept { return ts_names.size(); }

  std::vector<std::string> variable_names() const {
    std::vector<std::string> v = t_names;
    v.insert(v.end(), ts_names.begin(), ts_names.end());
    return v;
  }
};

inline std::vector<std::string> default_t_names(const RootDatum& datum) {
  if (datum.family == Family::SL && datum.rank == 1) return {"z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < datum.rank; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

/// Checks the structural invariants; throws on violation.
inline void validate(const LinearizedRep& rep) {
  const std::size_t r = rep.t_rank();
  const std::size_t s = rep.ts_rank();
  require_same_size(rep.t_names.size(), r, "T variable names");
  require_same_size(rep.vstar_basis.size(), rep.v_basis.size(), "dual basis size");
  require_same_size(rep.action.size(), rep.lie_basis.size(), "action matrix count");
  auto check_shape = [&](const BasisVector& b) {
    if (b.character.t_rank() != r || b.character.ts_rank() != s)
      throw DimensionMismatch("character of '" + b.label + "' has the wrong shape");
  };
  for (const auto& b : rep.v_basis) check_shape(b);
  for (const auto& b : rep.vstar_basis) check_shape(b);
  for (const auto& b : rep.lie_basis) check_shape(b);
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    auto a = rep.v_basis[i].character.t_part();
    auto b = rep.vstar_basis[i].character.t_part();
    for (std::size_t k = 0; k < r; ++k)
      if (a[k] != -b[k])
        throw InvalidArgument("dual basis vector '" + rep.vstar_basis[i].label +
                              "' does not carry the negated T character");
  }
  for (std::size_t a = 0; a < rep.action.size(); ++a) {
    const RatMatrix& m = rep.action[a];
    if (m.rows() != rep.dim() || m.cols() != rep.dim()) throw DimensionMismatch("action matrix has the wrong size");
    for (std::size_t j = 0; j < rep.dim(); ++j)
      for (std::size_t i = 0; i < rep.dim(); ++i) {
        if (m(j, i) == 0) continue;
        for (std::size_t k = 0; k < r; ++k)
          if (rep.v_basis[j].character[k] != rep.lie_basis[a].character[k] + rep.v_basis[i].character[k])
            throw InvalidArgument("action of '" + rep.lie_basis[a].label + "' on '" + rep.v_basis[i].label +
                                  "' violates weight compatibility");
      }
  }
  if (!rep.lie_matrices.empty()) require_same_size(rep.lie_matrices.size(), rep.lie_basis.size(), "lie matrices");
  if (rep.c1_direction) require_same_size(rep.c1_direction->size(), s, "C*_1 direction");
  if (rep.c2_direction) require_same_size(rep.c2_direction->size(), s, "C*_2 direction");
}

/// A([a,b]) = [A(a), A(b)], with [a,b] computed in the matrix realization.
inline bool check_bracket(const LinearizedRep& rep, std::size_t a, std::size_t b) {
  if (rep.lie_matrices.empty()) throw InvalidArgument("representation has no matrix realization of its Lie algebra");
  SpanSolver solver(rep.lie_matrices);
  auto coords = solver.coordinates(commutator(rep.lie_matrices[a], rep.lie_matrices[b]));
  if (!coords) throw InvalidArgument("Lie basis is not closed under the bracket");
  RatMatrix lhs(rep.dim(), rep.dim());
  for (std::size_t k = 0; k < coords->size(); ++k)
    if ((*coords)[k] != 0) lhs += rep.action[k] * (*coords)[k];
  return lhs == commutator(rep.action[a], rep.action[b]);
}

/// T_s weights of one copy of V, of V*, and of the g factor.
struct TsWeights {
  std::vector<Exponent> v;
  std::vector<Exponent> vstar;
  std::vector<Exponent> g;
};

namespace detail {

inline std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i + 1));
  return out;
}

/// V = g^{slots}; slot k of V has T_s weight slot_v[k], slot k of V* has slot_vstar[k].
inline LinearizedRep fold_rep(const RootDatum& datum, const std::vector<std::vector<Exponent>>& slot_v,
                              const std::vector<std::vector<Exponent>>& slot_vstar, const std::vector<Exponent>& wg,
                              std::vector<std::string> ts_names) {
  const std::size_t s = ts_names.size();
  const std::size_t slots = slot_v.size();
  ClassicalLieAlgebra lie = classical_lie_algebra(datum);
  const std::size_t d = lie.matrices.size();
  SpanSolver solver(lie.matrices);

  LinearizedRep rep;
  rep.datum = datum;
  rep.t_names = default_t_names(datum);
  rep.ts_names = std::move(ts_names);
  rep.lie_matrices = lie.matrices;
  for (std::size_t a = 0; a < d; ++a) {
    require_same_size(wg.size(), s, "T_s weight of g");
    rep.lie_basis.push_back({lie.labels[a], lie.characters[a].with_ts(wg)});
  }
  for (std::size_t k = 0; k < slots; ++k) {
    require_same_size(slot_v[k].size(), s, "T_s weight of V");
    require_same_size(slot_vstar[k].size(), s, "T_s weight of V*");
    const std::string prefix = slots > 1 ? std::to_string(k + 1) + ":" : "";
    for (std::size_t a = 0; a < d; ++a) {
      rep.v_basis.push_back({prefix + lie.labels[a], lie.characters[a].with_ts(slot_v[k])});
      rep.vstar_basis.push_back({prefix + lie.labels[a] + "*", (-lie.characters[a]).with_ts(slot_vstar[k])});
    }
  }
  const std::size_t dim = slots * d;
  for (std::size_t a = 0; a < d; ++a) {
    RatMatrix m(dim, dim);
    for (std::size_t i = 0; i < d; ++i) {
      auto c = solver.coordinates(commutator(lie.matrices[a], lie.matrices[i]));
      if (!c) throw InternalError("Lie algebra not closed under the bracket");
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < slots; ++k) m(k * d + j, k * d + i) = (*c)[j];
    }
    rep.action.push_back(std::move(m));
  }
  return rep;
}

}  // namespace detail

/// Adjoint representation with V* identified through the dual basis.
inline LinearizedRep adjoint_rep(const RootDatum& datum, const TsWeights& ts,
                                 std::vector<std::string> ts_names = {}) {
  if (ts_names.empty()) ts_names = detail::numbered("t", ts.v.size());
  LinearizedRep rep = detail::fold_rep(datum, {ts.v}, {ts.vstar}, ts.g, std::move(ts_names));
  rep.name = "adjoint " + datum.name();
  validate(rep);
  return rep;
}

/// V = g^g, V* = g^g with T_s = {(q_i, q_i') : q_1 q_1' = ... = q_g q_g'}.
/// T_s lattice basis (q_1, ..., q_g, t) with q_i' = t q_i^{-1}; g scales by t^{-1}.
inline LinearizedRep g_fold_character_stack(const RootDatum& datum, int g) {
  if (g < 1) throw InvalidArgument("character stack genus must be >= 1");
  const std::size_t slots = static_cast<std::size_t>(g);
  const std::size_t s = slots + 1;
  std::vector<std::vector<Exponent>> sv, svs;
  for (std::size_t k = 0; k < slots; ++k) {
    std::vector<Exponent> q(s, 0), qp(s, 0);
    q[k] = 1;
    qp[k] = -1;
    qp[slots] = 1;
    sv.push_back(q);
    svs.push_back(qp);
  }
  std::vector<Exponent> wg(s, 0);
  wg[slots] = -1;
  auto names = detail::numbered("q", slots);
  names.push_back("t");
  LinearizedRep rep = detail::fold_rep(datum, sv, svs, wg, names);
  std::vector<Exponent> c1(s, 1), c2(s, 1);
  c1[slots] = 0;
  rep.c1_direction = c1;
  rep.c2_direction = c2;
  rep.name = "g-fold character stack " + datum.name() + " g=" + std::to_string(g);
  validate(rep);
  return rep;
}

/// Defining representation of a classical group.
inline LinearizedRep standard_rep(const RootDatum& datum, const TsWeights& ts,
                                  std::vector<std::string> ts_names = {}) {
  if (ts_names.empty()) ts_names = detail::numbered("t", ts.v.size());
  const std::size_t s = ts_names.size();
  require_same_size(ts.v.size(), s, "T_s weight of V");
  require_same_size(ts.vstar.size(), s, "T_s weight of V*");
  require_same_size(ts.g.size(), s, "T_s weight of g");
  ClassicalLieAlgebra lie = classical_lie_algebra(datum);
  LinearizedRep rep;
  rep.datum = datum;
  rep.t_names = default_t_names(datum);
  rep.ts_names = std::move(ts_names);
  rep.lie_matrices = lie.matrices;
  for (std::size_t a = 0; a < lie.matrices.size(); ++a)
    rep.lie_basis.push_back({lie.labels[a], lie.characters[a].with_ts(ts.g)});
  for (std::size_t i = 0; i < datum.defining_weights.size(); ++i) {
    rep.v_basis.push_back({"e" + std::to_string(i + 1), datum.defining_weights[i].with_ts(ts.v)});
    rep.vstar_basis.push_back({"e" + std::to_string(i + 1) + "*", (-datum.defining_weights[i]).with_ts(ts.vstar)});
  }
  rep.action = lie.matrices;
  rep.name = "standard " + datum.name();
  validate(rep);
  return rep;
}

/// T_s data for Sym^n(C^2): weights of e_1 and e_2 (extended to monomials), and of sl_2.
struct SymTsWeights {
  std::vector<Exponent> e1{1, 0};
  std::vector<Exponent> e2{0, 1};
  std::vector<Exponent> g{0, 0};
  std::vector<std::string> names{"q1", "q2"};
};

/// Sym^n(C^2) of SL_2 with basis e1^k e2^l (k + l = n) ordered by decreasing k,
/// and sl_2 basis (e, f, h):
///   e(e1^k e2^l) = l e1^{k+1} e2^{l-1}, f(e1^k e2^l) = k e1^{k-1} e2^{l+1},
///   h(e1^k e2^l) = (k-l) e1^k e2^l.
inline LinearizedRep sym_power_sl2(int n, const SymTsWeights& ts = {}) {
  if (n < 1) throw InvalidArgument("Sym^n needs n >= 1");
  const std::size_t s = ts.names.size();
  require_same_size(ts.e1.size(), s, "T_s weight of e1");
  require_same_size(ts.e2.size(), s, "T_s weight of e2");
  require_same_size(ts.g.size(), s, "T_s weight of sl2");
  LinearizedRep rep;
  rep.datum = build_root_datum(Family::SL, 2);
  rep.t_names = default_t_names(rep.datum);
  rep.ts_names = ts.names;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  auto index = [n](Exponent k) { return static_cast<std::size_t>(n - k); };
  for (Exponent k = n; k >= 0; --k) {
    Exponent l = n - k;
    std::vector<Exponent> w(s);
    for (std::size_t i = 0; i < s; ++i) w[i] = k * ts.e1[i] + l * ts.e2[i];
    ExponentVector ch({k - l}, w);
    std::string mono = "e1^" + std::to_string(k) + "e2^" + std::to_string(l);
    rep.v_basis.push_back({mono, ch});
    rep.vstar_basis.push_back({mono + "*", -ch});
  }
  rep.lie_basis = {{"e", ExponentVector({2}, ts.g)}, {"f", ExponentVector({-2}, ts.g)}, {"h", ExponentVector({0}, ts.g)}};
  RatMatrix ae(dim, dim), af(dim, dim), ah(dim, dim);
  for (Exponent k = n; k >= 0; --k) {
    Exponent l = n - k;
    if (l >= 1) ae(index(k + 1), index(k)) = l;
    if (k >= 1) af(index(k - 1), index(k)) = k;
    ah(index(k), index(k)) = k - l;
  }
  rep.action = {ae, af, ah};
  RatMatrix e2(2, 2), f2(2, 2), h2(2, 2);
  e2(0, 1) = 1;
  f2(1, 0) = 1;
  h2(0, 0) = 1;
  h2(1, 1) = -1;
  rep.lie_matrices = {e2, f2, h2};
  rep.name = "Sym^" + std::to_string(n) + " SL(2)";
  validate(rep);
  return rep;
}

struct FixedSubspaces {
  std::vector<std::size_t> v_fixed;   // <lambda, char(e_i)> = 0
  std::vector<std::size_t> v_nonneg;  // <lambda, char(e_i)> >= 0
  DynamicalSplit levi;
};

inline FixedSubspaces fixed_subspaces(const LinearizedRep& rep, const Cocharacter& lambda) {
  require_same_size(lambda.rank(), rep.t_rank(), "cocharacter rank");
  FixedSubspaces f;
  for (std::size_t i = 0; i < rep.dim(); ++i) {
    Exponent p = pair(lambda, rep.v_basis[i].character);
    if (p == 0) f.v_fixed.push_back(i);
    if (p >= 0) f.v_nonneg.push_back(i);
  }
  f.levi = dynamical_split(rep.datum, lambda);
  return f;
}

/// lambda <= nu iff V^lambda is inside V^nu and l_lambda inside l_nu.
inline bool preceq(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu) {
  FixedSubspaces a = fixed_subspaces(rep, lambda);
  FixedSubspaces b = fixed_subspaces(rep, nu);
  return std::includes(b.v_fixed.begin(), b.v_fixed.end(), a.v_fixed.begin(), a.v_fixed.end()) &&
         std::includes(b.levi.levi_roots.begin(), b.levi.levi_roots.end(), a.levi.levi_roots.begin(),
                       a.levi.levi_roots.end());
}

inline bool equivalent(const LinearizedRep& rep, const Cocharacter& lambda, const Cocharacter& nu) {
  return preceq(rep, lambda, nu) && preceq(rep, nu, lambda);
}

struct TsViolation {
  std::size_t v_index;
  std::size_t vstar_index;
  std::size_t lie_index;
  friend bool operator==(const TsViolation&, const TsViolation&) = default;
};

struct TsAssumptionReport {
  bool f_invariant = true;
  bool c1_weights_ok = false;
  bool c2_weights_ok = false;
  std::vector<TsViolation> violations;
  /// The direction that was verified (designated) or found (searched).
  std::optional<std::vector<Exponent>> c1_direction;
  std::optional<std::vector<Exponent>> c2_direction;
};

/// True when eta acts on V, V*, g with the given weights.
inline bool acts_with_weights(const LinearizedRep& rep, const std::vector<Exponent>& eta,
                              std::tuple<Exponent, Exponent, Exponent> weights) {
  require_same_size(eta.size(), rep.ts_rank(), "T_s direction");
  auto pairing = [&](const ExponentVector& ch) {
    Exponent s = 0;
    auto ts = ch.ts_part();
    for (std::size_t i = 0; i < ts.size(); ++i) s = checked_add(s, checked_mul(eta[i], ts[i]));
    return s;
  };
  auto [wv, wvs, wg] = weights;
  for (const auto& b : rep.v_basis)
    if (pairing(b.character) != wv) return false;
  for (const auto& b : rep.vstar_basis)
    if (pairing(b.character) != wvs) return false;
  for (const auto& b : rep.lie_basis)
    if (pairing(b.character) != wg) return false;
  return true;
}

/// An integral direction of T_s acting with the given weights, if any.
inline std::optional<std::vector<Exponent>> find_direction(const LinearizedRep& rep,
                                                           std::tuple<Exponent, Exponent, Exponent> weights) {
  const std::size_t s = rep.ts_rank();
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> rhs;
  auto add = [&](const std::vector<BasisVector>& basis, Exponent target) {
    for (const auto& b : basis) {
      auto ts = b.character.ts_part();
      rows.emplace_back(ts.begin(), ts.end());
      rhs.emplace_back(target);
    }
  };
  auto [wv, wvs, wg] = weights;
  add(rep.v_basis, wv);
  add(rep.vstar_basis, wvs);
  add(rep.lie_basis, wg);
  if (s == 0) {
    if (std::all_of(rhs.begin(), rhs.end(), [](const BigInt& x) { return x == 0; }))
      return std::vector<Exponent>{};
    return std::nullopt;
  }
  IntMatrix a(rows.size(), s);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < s; ++j) a(i, j) = rows[i][j];
  auto x = solve_integer_system(a, rhs);
  if (!x) return std::nullopt;
  std::vector<Exponent> out;
  for (const auto& v : *x) out.push_back(to_exponent(v));
  return out;
}

inline TsAssumptionReport check_ts_assumptions(const LinearizedRep& rep) {
  TsAssumptionReport report;
  const std::size_t s = rep.ts_rank();
  for (std::size_t a = 0; a < rep.action.size(); ++a)
    for (std::size_t j = 0; j < rep.dim(); ++j)
      for (std::size_t i = 0; i < rep.dim(); ++i) {
        if (rep.action[a](j, i) == 0) continue;
        auto x = rep.v_basis[i].character.ts_part();
        auto y = rep.vstar_basis[j].character.ts_part();
        auto z = rep.lie_basis[a].character.ts_part();
        for (std::size_t k = 0; k < s; ++k)
          if (x[k] + y[k] + z[k] != 0) {
            report.violations.push_back({i, j, a});
            break;
          }
      }
  report.f_invariant = report.violations.empty();

  auto resolve = [&](const std::optional<std::vector<Exponent>>& designated,
                     std::tuple<Exponent, Exponent, Exponent> w, bool& ok, std::optional<std::vector<Exponent>>& dir) {
    if (designated) {
      ok = acts_with_weights(rep, *designated, w);
      dir = designated;
    } else {
      dir = find_direction(rep, w);
      ok = dir.has_value();
    }
  };
  resolve(rep.c1_direction, {1, -1, 0}, report.c1_weights_ok, report.c1_direction);
  resolve(rep.c2_direction, {1, 0, -1}, report.c2_weights_ok, report.c2_direction);
  return report;
}

}  // namespace hallwheels
