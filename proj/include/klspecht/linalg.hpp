#pragma once

// Exact linear algebra over A = Z[q,q^-1] and its fraction field.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "klspecht/hecke.hpp"
#include "klspecht/laurent.hpp"

namespace klspecht {

using LaurentVector = std::vector<LaurentInt>;

/// Dense matrix over A, row-major. Column j of an action matrix holds the
/// image of basis vector j.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  LaurentMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static LaurentMatrix identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LaurentInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const LaurentInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LaurentVector column(std::size_t c) const {
    LaurentVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const LaurentVector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const LaurentInt& a) { return a.is_zero(); });
  }

  LaurentMatrix& operator+=(const LaurentMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  LaurentMatrix& operator-=(const LaurentMatrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) { return a += b; }
  friend LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) { return a -= b; }
  friend LaurentMatrix operator*(const LaurentInt& a, LaurentMatrix m) {
    for (auto& x : m.data_) x = a * x;
    return m;
  }
  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::SizeMismatch, "matrix product shape mismatch");
    LaurentMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const LaurentInt& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }
  friend LaurentVector operator*(const LaurentMatrix& a, const LaurentVector& v) {
    if (a.cols_ != v.size()) throw Error(ErrorKind::SizeMismatch, "matrix-vector shape mismatch");
    LaurentVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
    return r;
  }
  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Reorders rows and columns: result(i,j) = this(perm[i], perm[j]).
  LaurentMatrix permuted(const std::vector<std::size_t>& perm) const {
    LaurentMatrix r(perm.size(), perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = 0; j < perm.size(); ++j) r(i, j) = (*this)(perm[i], perm[j]);
    return r;
  }

  bool is_upper_unitriangular() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        if (i == j && !((*this)(i, j) == LaurentInt(1))) return false;
        if (i != j && !(*this)(i, j).is_zero()) return false;
      }
    return true;
  }

  /// Inverse of an upper unitriangular matrix, by back substitution.
  LaurentMatrix unitriangular_inverse() const {
    if (!is_upper_unitriangular()) throw Error(ErrorKind::InvalidArgument, "matrix is not upper unitriangular");
    const std::size_t n = rows_;
    LaurentMatrix inv = identity(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t ii = j; ii-- > 0;) {
        LaurentInt sum;
        for (std::size_t k = ii + 1; k <= j; ++k)
          if (!(*this)(ii, k).is_zero()) sum += (*this)(ii, k) * inv(k, j);
        inv(ii, j) = -sum;
      }
    return inv;
  }

 private:
  void check_same_shape(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::SizeMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LaurentInt> data_;
};

inline LaurentVector to_dense(const HeckeVector& h, std::size_t dim) {
  LaurentVector v(dim);
  for (const auto& [w, a] : h.coords()) {
    if (w >= dim) throw Error(ErrorKind::SizeMismatch, "vector index outside dimension");
    v[w] = a;
  }
  return v;
}

inline bool is_zero_vector(const LaurentVector& v) {
  return std::all_of(v.begin(), v.end(), [](const LaurentInt& a) { return a.is_zero(); });
}

/// Subspace of Frac(A)^dim kept as an echelon basis with entries in A.
///
/// Rows are reduced in insertion order; row k vanishes on the pivots of
/// rows 0..k-1. Elimination against a unit pivot stays inside A; otherwise
/// a fraction-free step is taken and the row is divided by the gcd of its
/// entries.
class LaurentSpan {
 public:
  explicit LaurentSpan(std::size_t dim = 0) : dim_(dim), pivot_limit_(dim) {}
  /// Pivots are taken only among the first pivot_limit coordinates.
  LaurentSpan(std::size_t dim, std::size_t pivot_limit) : dim_(dim), pivot_limit_(std::min(dim, pivot_limit)) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }

  LaurentVector reduce(LaurentVector v) const {
    LaurentInt num = 1, den = 1;
    return reduce_scaled(std::move(v), num, den);
  }

  /// As reduce, also returning num/den with result = (num/den) v - (span element).
  LaurentVector reduce_scaled(LaurentVector v, LaurentInt& num, LaurentInt& den) const {
    if (v.size() != dim_) throw Error(ErrorKind::SizeMismatch, "vector length does not match span dimension");
    num = 1;
    den = 1;
    for (const auto& row : rows_) {
      const LaurentInt& b = v[row.pivot];
      if (b.is_zero()) continue;
      const LaurentInt& a = row.v[row.pivot];
      if (a.is_unit()) {
        const LaurentInt f = b.divided_by_unit(a);
        for (std::size_t i = 0; i < dim_; ++i)
          if (!row.v[i].is_zero()) v[i] -= f * row.v[i];
      } else {
        const LaurentInt g = gcd(a, b);
        const LaurentInt aa = exact_divide(a, g), bb = exact_divide(b, g);
        for (std::size_t i = 0; i < dim_; ++i) {
          LaurentInt x = aa * v[i];
          if (!row.v[i].is_zero()) x -= bb * row.v[i];
          v[i] = std::move(x);
        }
        num *= aa;
        den *= normalize(v);
        const LaurentInt c = gcd(num, den);
        num = exact_divide(num, c);
        den = exact_divide(den, c);
      }
    }
    return v;
  }

  bool contains(const LaurentVector& v) const { return is_zero_vector(reduce(v)); }
  bool contains(const HeckeVector& h) const { return contains(to_dense(h, dim_)); }

  /// Adds v; returns true when the rank grew.
  bool insert(LaurentVector v) {
    v = reduce(std::move(v));
    if (is_zero_vector(v)) return false;
    normalize(v);
    std::size_t best = dim_;
    for (std::size_t i = 0; i < pivot_limit_; ++i) {
      if (v[i].is_zero()) continue;
      if (best == dim_ || better_pivot(v[i], v[best])) best = i;
    }
    if (best == dim_) throw Error(ErrorKind::InvalidArgument, "vector has no admissible pivot");
    rows_.push_back({std::move(v), best});
    return true;
  }
  bool insert(const HeckeVector& h) { return insert(to_dense(h, dim_)); }

 private:
  struct Row {
    LaurentVector v;
    std::size_t pivot;
  };

  static bool better_pivot(const LaurentInt& a, const LaurentInt& b) {
    if (a.is_unit() != b.is_unit()) return a.is_unit();
    if (a.term_count() != b.term_count()) return a.term_count() < b.term_count();
    return (a.max_degree() - a.min_degree()) < (b.max_degree() - b.min_degree());
  }

  // Divides by the gcd of all entries, so rows stay primitive in Z[q];
  // returns the divisor.
  static LaurentInt normalize(LaurentVector& v) {
    LaurentInt g;
    for (const auto& x : v) {
      if (x.is_zero()) continue;
      g = gcd(g, x);
      if (g == LaurentInt(1)) break;
    }
    if (g.is_zero() || g == LaurentInt(1)) return 1;
    for (auto& x : v)
      if (!x.is_zero()) x = exact_divide(x, g);
    return g;
  }

  std::size_t dim_;
  std::size_t pivot_limit_;
  std::vector<Row> rows_;
};

/// Coordinates of vectors modulo a subspace U with respect to generators
/// g_1..g_k that are independent modulo U: h = sum c_i g_i + u.
class QuotientSolver {
 public:
  QuotientSolver(std::size_t dim, const std::vector<LaurentVector>& ideal, const std::vector<LaurentVector>& gens)
      : dim_(dim), k_(gens.size()), span_(dim + gens.size(), dim) {
    for (const auto& u : ideal) span_.insert(pad(u, -1));
    for (std::size_t i = 0; i < k_; ++i)
      if (!span_.insert(pad(gens[i], static_cast<long>(i))))
        throw Error(ErrorKind::InvalidArgument, "generators are dependent modulo the subspace");
  }

  std::size_t ideal_rank() const { return span_.rank() - k_; }

  /// Throws when h is outside U + span(g) or the coordinates leave A.
  LaurentVector coordinates(const LaurentVector& h) const {
    LaurentInt num, den;
    const LaurentVector r = span_.reduce_scaled(pad(h, -1), num, den);
    for (std::size_t i = 0; i < dim_; ++i)
      if (!r[i].is_zero()) throw Error(ErrorKind::InvalidArgument, "vector outside the generated span");
    LaurentVector c(k_);
    for (std::size_t i = 0; i < k_; ++i)
      if (!r[dim_ + i].is_zero()) c[i] = exact_divide(-r[dim_ + i] * den, num);
    return c;
  }

 private:
  LaurentVector pad(const LaurentVector& v, long unit) const {
    if (v.size() != dim_) throw Error(ErrorKind::SizeMismatch, "vector length does not match dimension");
    LaurentVector out(v);
    out.resize(dim_ + k_);
    if (unit >= 0) out[dim_ + static_cast<std::size_t>(unit)] = 1;
    return out;
  }

  std::size_t dim_, k_;
  LaurentSpan span_;
};

/// Rank over the fraction field of A.
inline std::size_t rank_of(const std::vector<HeckeVector>& vectors, std::size_t dim) {
  LaurentSpan span(dim);
  for (const auto& h : vectors) span.insert(h);
  return span.rank();
}

}  // namespace klspecht
