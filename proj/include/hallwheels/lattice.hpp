#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hallwheels/error.hpp"
#include "hallwheels/numeric.hpp"

namespace hallwheels {

/// A point of the character lattice X*(T) x X*(T_s).
///
/// Coordinates are stored contiguously with the T block first. Ordering is
/// lexicographic on the concatenated coordinates, which is also the canonical
/// order of monomials in a LaurentPoly.
class ExponentVector {
 public:
  ExponentVector() = default;

  ExponentVector(std::size_t t_rank, std::size_t ts_rank)
      : coords_(t_rank + ts_rank, 0), t_rank_(t_rank) {}

  ExponentVector(std::vector<Exponent> t_part, const std::vector<Exponent>& ts_part)
      : coords_(std::move(t_part)), t_rank_(coords_.size()) {
    coords_.insert(coords_.end(), ts_part.begin(), ts_part.end());
  }

  static ExponentVector from_coords(std::vector<Exponent> coords, std::size_t t_rank) {
    if (t_rank > coords.size()) {
      throw DimensionMismatch("T rank exceeds coordinate count");
    }
    ExponentVector v;
    v.coords_ = std::move(coords);
    v.t_rank_ = t_rank;
    return v;
  }

  std::size_t t_rank() const noexcept { return t_rank_; }
  std::size_t ts_rank() const noexcept { return coords_.size() - t_rank_; }
  std::size_t size() const noexcept { return coords_.size(); }

  std::span<const Exponent> coords() const noexcept { return coords_; }
  std::span<const Exponent> t_part() const noexcept {
    return std::span<const Exponent>(coords_).first(t_rank_);
  }
  std::span<const Exponent> ts_part() const noexcept {
    return std::span<const Exponent>(coords_).subspan(t_rank_);
  }

  Exponent operator[](std::size_t i) const { return coords_[i]; }
  Exponent& operator[](std::size_t i) { return coords_[i]; }

  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](Exponent e) { return e == 0; });
  }

  bool same_shape(const ExponentVector& o) const noexcept {
    return t_rank_ == o.t_rank_ && coords_.size() == o.coords_.size();
  }

  void require_shape(const ExponentVector& o) const {
    if (!same_shape(o)) {
      throw DimensionMismatch("exponent vectors of shape (" + std::to_string(t_rank()) + "|" +
                              std::to_string(ts_rank()) + ") and (" +
                              std::to_string(o.t_rank()) + "|" + std::to_string(o.ts_rank()) +
                              ")");
    }
  }

  ExponentVector& operator+=(const ExponentVector& o) {
    require_shape(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = checked_add(coords_[i], o.coords_[i]);
    return *this;
  }
  ExponentVector& operator-=(const ExponentVector& o) { return *this += -o; }

  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) { return a += b; }
  friend ExponentVector operator-(ExponentVector a, const ExponentVector& b) { return a -= b; }
  friend ExponentVector operator-(ExponentVector a) {
    for (auto& c : a.coords_) c = checked_mul(c, -1);
    return a;
  }

  ExponentVector scaled(Exponent k) const {
    ExponentVector r = *this;
    for (auto& c : r.coords_) c = checked_mul(c, k);
    return r;
  }

  /// Same T block, T_s block replaced.
  ExponentVector with_ts(const std::vector<Exponent>& ts) const {
    return ExponentVector(std::vector<Exponent>(t_part().begin(), t_part().end()), ts);
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
    if (auto c = a.coords_ <=> b.coords_; c != 0) return c;
    return a.t_rank_ <=> b.t_rank_;
  }

  /// "(a,b,c|d,e)"
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i == t_rank_) s += "|";
      else if (i > 0) s += ",";
      s += std::to_string(coords_[i]);
    }
    if (t_rank_ == coords_.size()) s += "|";
    s += ")";
    return s;
  }

 private:
  std::vector<Exponent> coords_;
  std::size_t t_rank_ = 0;
};

/// A point of the cocharacter lattice X_*(T).
struct Cocharacter {
  std::vector<Exponent> coords;

  Cocharacter() = default;
  explicit Cocharacter(std::vector<Exponent> c) : coords(std::move(c)) {}
  static Cocharacter zero(std::size_t rank) { return Cocharacter(std::vector<Exponent>(rank, 0)); }

  std::size_t rank() const noexcept { return coords.size(); }
  bool is_zero() const noexcept {
    return std::all_of(coords.begin(), coords.end(), [](Exponent e) { return e == 0; });
  }

  friend Cocharacter operator+(const Cocharacter& a, const Cocharacter& b) {
    require_same_size(a.rank(), b.rank(), "cocharacter addition");
    Cocharacter r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] = checked_add(r.coords[i], b.coords[i]);
    return r;
  }
  friend Cocharacter operator-(const Cocharacter& a) {
    Cocharacter r = a;
    for (auto& c : r.coords) c = checked_mul(c, -1);
    return r;
  }
  friend bool operator==(const Cocharacter&, const Cocharacter&) = default;
  friend auto operator<=>(const Cocharacter&, const Cocharacter&) = default;
};

/// <lambda, chi> using the T block of chi only.
inline Exponent pair(const Cocharacter& lambda, const ExponentVector& chi) {
  require_same_size(lambda.rank(), chi.t_rank(), "pair(cocharacter, character)");
  Exponent s = 0;
  auto t = chi.t_part();
  for (std::size_t i = 0; i < t.size(); ++i) s = checked_add(s, checked_mul(lambda.coords[i], t[i]));
  return s;
}

/// Dense integer matrix with arbitrary-precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_same_size(rows[i].size(), cols, "matrix row length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  /// One row per vector (full coordinates).
  static IntMatrix from_vectors(const std::vector<ExponentVector>& vs, std::size_t cols) {
    IntMatrix m(vs.size(), cols);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      require_same_size(vs[i].size(), cols, "lattice generator length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = vs[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  /// row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += k * (*this)(src, j);
  }
  /// col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    if (k == 0) return;
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += k * (*this)(i, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require_same_size(a.cols_, b.rows_, "matrix product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// U * M * V = diag(d_1, d_2, ...) with d_i | d_{i+1} and U, V unimodular.
struct SnfDecomposition {
  IntMatrix left_unimodular;
  std::vector<BigInt> diagonal;  // length min(rows, cols); trailing zeros past rank
  IntMatrix right_unimodular;
  std::size_t rank = 0;
};

inline SnfDecomposition smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t diag = std::min(rows, cols);
  std::size_t rank = 0;

  auto row_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_row(dst, src, k);
    u.add_row(dst, src, k);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const BigInt& k) {
    a.add_col(dst, src, k);
    v.add_col(dst, src, k);
  };
  auto row_swap = [&](std::size_t x, std::size_t y) {
    a.swap_rows(x, y);
    u.swap_rows(x, y);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    a.swap_cols(x, y);
    v.swap_cols(x, y);
  };

  for (std::size_t t = 0; t < diag; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (a(i, j) != 0 && (!best || abs(a(i, j)) < abs(a(best->first, best->second))))
          best = std::make_pair(i, j);
    if (!best) break;
    row_swap(t, best->first);
    col_swap(t, best->second);

    for (;;) {
      bool restart = false;
      for (std::size_t i = t + 1; i < rows && !restart; ++i) {
        if (a(i, t) == 0) continue;
        BigInt q = a(i, t) / a(t, t);
        row_op(i, t, -q);
        if (a(i, t) != 0) {
          row_swap(i, t);
          restart = true;
        }
      }
      if (restart) continue;
      for (std::size_t j = t + 1; j < cols && !restart; ++j) {
        if (a(t, j) == 0) continue;
        BigInt q = a(t, j) / a(t, t);
        col_op(j, t, -q);
        if (a(t, j) != 0) {
          col_swap(j, t);
          restart = true;
        }
      }
      if (restart) continue;
      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_op(t, i, 1);
            fixed = true;
          }
      if (!fixed) break;
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++rank;
  }

  SnfDecomposition out;
  out.diagonal.resize(diag);
  for (std::size_t i = 0; i < diag; ++i) out.diagonal[i] = a(i, i);
  out.left_unimodular = std::move(u);
  out.right_unimodular = std::move(v);
  out.rank = rank;
  return out;
}

/// Reduced row Hermite normal form; zero rows dropped. Canonical for the row lattice.
inline IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (!best || abs(a(i, col)) < abs(a(*best, col)))) best = i;
      if (!best) break;
      a.swap_rows(row, *best);
      bool others = false;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        a.add_row(i, row, -(a(i, col) / a(row, col)));
        if (a(i, col) != 0) others = true;
      }
      if (!others) break;
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) a.negate_row(row);
    for (std::size_t i = 0; i < row; ++i) {
      BigInt r = floor_mod(a(i, col), a(row, col));
      a.add_row(i, row, -((a(i, col) - r) / a(row, col)));
    }
    ++row;
  }
  IntMatrix out(row, a.cols());
  for (std::size_t i = 0; i < row; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Label of a coset u + L. Equal labels iff the vectors differ by an element of L.
using ClassLabel = std::vector<BigInt>;

/// Precomputed quotient Lambda -> Lambda / L for a sublattice L given by generators.
///
/// Generators are first brought to Hermite normal form so that labels depend
/// only on L, not on the order or presentation of the generators.
class LatticeQuotient {
 public:
  LatticeQuotient() = default;

  LatticeQuotient(const std::vector<ExponentVector>& generators, std::size_t t_rank,
                  std::size_t ts_rank)
      : t_rank_(t_rank), ts_rank_(ts_rank) {
    for (const auto& g : generators) {
      if (g.t_rank() != t_rank || g.ts_rank() != ts_rank) {
        throw DimensionMismatch("sublattice generator " + g.str() + " has the wrong shape");
      }
    }
    hermite_ = hermite_normal_form(IntMatrix::from_vectors(generators, t_rank + ts_rank));
    snf_ = smith_normal_form(hermite_);
  }

  std::size_t ambient_rank() const noexcept { return t_rank_ + ts_rank_; }
  const IntMatrix& hermite_basis() const noexcept { return hermite_; }
  const SnfDecomposition& snf() const noexcept { return snf_; }

  ClassLabel label(const ExponentVector& u) const {
    if (u.t_rank() != t_rank_ || u.ts_rank() != ts_rank_) {
      throw DimensionMismatch("vector " + u.str() + " not in the ambient lattice");
    }
    const IntMatrix& v = snf_.right_unimodular;
    const std::size_t n = ambient_rank();
    ClassLabel out;
    for (std::size_t j = 0; j < n; ++j) {
      BigInt y = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (u[i] != 0) y += u[i] * v(i, j);
      if (j < snf_.rank) {
        const BigInt& d = snf_.diagonal[j];
        if (d != 1) out.push_back(floor_mod(y, d));
      } else {
        out.push_back(std::move(y));
      }
    }
    return out;
  }

  bool contains(const ExponentVector& u) const { return label(u) == label(ExponentVector(t_rank_, ts_rank_)); }

  /// Same sublattice (reduced HNF equality).
  bool same_sublattice(const LatticeQuotient& o) const { return hermite_ == o.hermite_; }

 private:
  std::size_t t_rank_ = 0;
  std::size_t ts_rank_ = 0;
  IntMatrix hermite_;
  SnfDecomposition snf_;
};

inline ClassLabel lattice_quotient_class(const std::vector<ExponentVector>& sublattice_gens,
                                         const ExponentVector& u) {
  return LatticeQuotient(sublattice_gens, u.t_rank(), u.ts_rank()).label(u);
}

/// An integer solution x of A x = b, if one exists.
inline std::optional<std::vector<BigInt>> solve_integer_system(const IntMatrix& a,
                                                               const std::vector<BigInt>& b) {
  require_same_size(a.rows(), b.size(), "integer system right-hand side");
  SnfDecomposition snf = smith_normal_form(a);
  std::vector<BigInt> ub(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.rows(); ++k) ub[i] += snf.left_unimodular(i, k) * b[k];
  std::vector<BigInt> y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i < snf.rank) {
      if (ub[i] % snf.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / snf.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  std::vector<BigInt> x(a.cols());
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) x[i] += snf.right_unimodular(i, k) * y[k];
  return x;
}

}  // namespace hallwheels
