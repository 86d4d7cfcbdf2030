#pragma once

// Dense vectors/matrices over an exact field, and the incremental reduced
// echelon form that every other linear-algebra routine is built on.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "radlie/field.hpp"
#include "radlie/kernels.hpp"

namespace radlie {

template <class K>
using Vec = std::vector<typename K::Elem>;

// ---- row primitives -------------------------------------------------------
// Field-specific so that GF(p) rows go through the SIMD kernels.

inline void row_axpy(const Rationals&, mpq_class* y, const mpq_class* x, const mpq_class& a, std::size_t n) {
  if (sgn(a) == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) y[i] += a * x[i];
}
inline void row_axpy(const PrimeField& f, std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n) {
  simd::axpy_mod(y, x, a, n, f.modulus());
}

inline void row_scale(const Rationals&, mpq_class* y, const mpq_class& a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}
inline void row_scale(const PrimeField& f, std::uint32_t* y, std::uint32_t a, std::size_t n) {
  simd::scale_mod(y, a, n, f.modulus());
}

inline mpq_class row_dot(const Rationals&, const mpq_class* x, const mpq_class* y, std::size_t n) {
  mpq_class acc(0);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0 && sgn(y[i]) != 0) acc += x[i] * y[i];
  return acc;
}
inline std::uint32_t row_dot(const PrimeField& f, const std::uint32_t* x, const std::uint32_t* y, std::size_t n) {
  return simd::dot_mod(x, y, n, f.modulus());
}

template <class K>
Vec<K> zero_vec(const K& f, std::size_t n) {
  return Vec<K>(n, f.zero());
}

template <class K>
Vec<K> unit_vec(const K& f, std::size_t n, std::size_t i) {
  Vec<K> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class K>
bool is_zero_vec(const K& f, const Vec<K>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& a) { return f.is_zero(a); });
}

template <class K>
void axpy(const K& f, Vec<K>& y, const typename K::Elem& a, const Vec<K>& x) {
  row_axpy(f, y.data(), x.data(), a, y.size());
}

template <class K>
Vec<K> scaled(const K& f, const typename K::Elem& a, Vec<K> v) {
  row_scale(f, v.data(), a, v.size());
  return v;
}

template <class K>
Vec<K> vec_add(const K& f, Vec<K> a, const Vec<K>& b) {
  axpy(f, a, f.one(), b);
  return a;
}

template <class K>
Vec<K> vec_sub(const K& f, Vec<K> a, const Vec<K>& b) {
  axpy(f, a, f.neg(f.one()), b);
  return a;
}

template <class K>
typename K::Elem dot(const K& f, const Vec<K>& a, const Vec<K>& b) {
  return row_dot(f, a.data(), b.data(), a.size());
}

template <class K>
Vec<K> random_vec(const K& f, std::size_t n, Rng& rng) {
  Vec<K> v(n);
  for (auto& a : v) a = f.random(rng);
  return v;
}

// ---- Matrix ---------------------------------------------------------------

template <class K>
class Matrix {
 public:
  using Elem = typename K::Elem;

  Matrix(K f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const K& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }

  static Matrix from_rows(const K& f, const std::vector<Vec<K>>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  static Matrix from_columns(const K& f, const std::vector<Vec<K>>& cols, std::size_t rows) {
    Matrix m(f, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Elem& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Elem* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const Elem* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }

  Vec<K> row(std::size_t i) const { return Vec<K>(row_ptr(i), row_ptr(i) + cols_); }
  Vec<K> column(std::size_t j) const {
    Vec<K> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  std::vector<Vec<K>> row_list() const {
    std::vector<Vec<K>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<K> apply(const Vec<K>& v) const {
    Vec<K> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row_dot(field_, row_ptr(i), v.data(), cols_);
    return out;
  }

  Matrix operator*(const Matrix& b) const {
    Matrix out(field_, rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        row_axpy(field_, out.row_ptr(i), b.row_ptr(k), a, b.cols_);
      }
    return out;
  }

  Matrix operator+(const Matrix& b) const {
    Matrix out = *this;
    row_axpy(field_, out.data_.data(), b.data_.data(), field_.one(), data_.size());
    return out;
  }

  Matrix operator-(const Matrix& b) const {
    Matrix out = *this;
    row_axpy(field_, out.data_.data(), b.data_.data(), field_.neg(field_.one()), data_.size());
    return out;
  }

  Matrix scaled(const Elem& a) const {
    Matrix out = *this;
    row_scale(field_, out.data_.data(), a, data_.size());
    return out;
  }

  void add_scaled(const Elem& a, const Matrix& b) {
    row_axpy(field_, data_.data(), b.data_.data(), a, data_.size());
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [&](const Elem& a) { return field_.is_zero(a); });
  }

  Elem trace() const {
    Elem t = field_.zero();
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t = field_.add(t, (*this)(i, i));
    return t;
  }

  /// Flattened entries, row-major.
  const std::vector<Elem>& entries() const { return data_; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  K field_;
  std::size_t rows_, cols_;
  std::vector<Elem> data_;
};

// ---- Echelon --------------------------------------------------------------

/// Rows kept in fully reduced echelon form, sorted by pivot column.  Each
/// pivot entry is 1 and every other row is 0 in that column.
template <class K>
class Echelon {
 public:
  using Elem = typename K::Elem;

  Echelon(K f, std::size_t n) : field_(std::move(f)), n_(n) {}

  const K& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Vec<K>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Reduce v in place against the stored rows.
  void reduce(Vec<K>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Elem& c = v[pivots_[r]];
      if (field_.is_zero(c)) continue;
      const Elem m = field_.neg(c);
      row_axpy(field_, v.data(), rows_[r].data(), m, n_);
    }
  }

  Vec<K> reduced(Vec<K> v) const {
    reduce(v);
    return v;
  }

  bool contains(const Vec<K>& v) const {
    Vec<K> w = v;
    reduce(w);
    return is_zero_vec(field_, w);
  }

  /// Insert v; returns false if it was already in the span.
  bool insert(Vec<K> v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < n_ && field_.is_zero(v[piv])) ++piv;
    if (piv == n_) return false;
    row_scale(field_, v.data(), field_.inv(v[piv]), n_);
    for (auto& row : rows_) {
      const Elem& c = row[piv];
      if (field_.is_zero(c)) continue;
      const Elem m = field_.neg(c);
      row_axpy(field_, row.data(), v.data(), m, n_);
    }
    const auto pos = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin());
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
  }

 private:
  K field_;
  std::size_t n_;
  std::vector<Vec<K>> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row echelon form of m (zero rows dropped) and its pivot columns.
template <class K>
std::pair<Matrix<K>, std::vector<std::size_t>> rref(const Matrix<K>& m) {
  Echelon<K> e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return {Matrix<K>::from_rows(m.field(), e.rows(), m.cols()), e.pivots()};
}

template <class K>
std::size_t rank(const Matrix<K>& m) {
  Echelon<K> e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e.rank();
}

/// Basis of {x : m x = 0}, one vector per free column, in canonical order.
template <class K>
std::vector<Vec<K>> kernel_basis(const Matrix<K>& m) {
  const K& f = m.field();
  Echelon<K> e(f, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots()) is_pivot[p] = true;
  std::vector<Vec<K>> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<K> v = unit_vec(f, m.cols(), free);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots()[r]] = f.neg(e.rows()[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

/// One solution of m x = b, or nullopt if inconsistent.
template <class K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  const K& f = m.field();
  const std::size_t c = m.cols();
  Echelon<K> e(f, c + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec<K> row = m.row(i);
    row.push_back(b[i]);
    e.insert(std::move(row));
  }
  Vec<K> x(c, f.zero());
  for (std::size_t r = 0; r < e.rank(); ++r) {
    const std::size_t p = e.pivots()[r];
    if (p == c) return std::nullopt;
    x[p] = e.rows()[r][c];
  }
  return x;
}

template <class K>
Matrix<K> inverse(const Matrix<K>& m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("inverse of a non-square matrix");
  Echelon<K> e(f, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec<K> row = m.row(i);
    row.resize(2 * n, f.zero());
    row[n + i] = f.one();
    e.insert(std::move(row));
  }
  if (e.rank() < n || e.pivots()[n - 1] >= n) throw std::domain_error("singular matrix");
  Matrix<K> inv(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j < n; ++j) inv(r, j) = e.rows()[r][n + j];
  return inv;
}

}  // namespace radlie
