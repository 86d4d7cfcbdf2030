#pragma once

// Canonical subspaces of K^n.  Two Subspace values are equal as sets iff their
// basis matrices (RREF rows) are identical, so equality is a plain compare.

#include <string>
#include <vector>

#include "radlie/matrix.hpp"

namespace radlie {

template <class K>
class Subspace {
 public:
  using Elem = typename K::Elem;

  Subspace(K f, std::size_t n) : ech_(std::move(f), n) {}

  static Subspace zero(const K& f, std::size_t n) { return Subspace(f, n); }

  static Subspace full(const K& f, std::size_t n) {
    Subspace s(f, n);
    for (std::size_t i = 0; i < n; ++i) s.ech_.insert(unit_vec(f, n, i));
    return s;
  }

  static Subspace span(const K& f, std::size_t n, const std::vector<Vec<K>>& vectors) {
    Subspace s(f, n);
    for (const auto& v : vectors) {
      if (v.size() != n) throw InputError("span: vector length does not match ambient dimension");
      s.ech_.insert(v);
    }
    return s;
  }

  const K& field() const { return ech_.field(); }
  std::size_t ambient() const { return ech_.ambient(); }
  std::size_t dim() const { return ech_.rank(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }
  const std::vector<Vec<K>>& basis() const { return ech_.rows(); }
  const std::vector<std::size_t>& pivots() const { return ech_.pivots(); }
  Matrix<K> basis_matrix() const { return Matrix<K>::from_rows(field(), basis(), ambient()); }

  bool contains(const Vec<K>& v) const { return ech_.contains(v); }
  bool contains(const Subspace& o) const {
    check_same(o);
    for (const auto& v : o.basis())
      if (!contains(v)) return false;
    return true;
  }

  /// Remainder of v after reduction (zero iff v is in the subspace).
  Vec<K> reduce(const Vec<K>& v) const { return ech_.reduced(v); }

  /// Coordinates of v (assumed to lie in the subspace) w.r.t. basis().
  Vec<K> coords(const Vec<K>& v) const {
    Vec<K> c(dim());
    for (std::size_t r = 0; r < dim(); ++r) c[r] = v[pivots()[r]];
    return c;
  }

  Vec<K> combine(const Vec<K>& c) const {
    Vec<K> v = zero_vec(field(), ambient());
    for (std::size_t r = 0; r < dim(); ++r) row_axpy(field(), v.data(), basis()[r].data(), c[r], ambient());
    return v;
  }

  /// Insert a vector in place; returns true if the dimension grew.
  bool add(const Vec<K>& v) { return ech_.insert(v); }

  Subspace operator+(const Subspace& o) const {
    check_same(o);
    Subspace s = *this;
    for (const auto& v : o.basis()) s.ech_.insert(v);
    return s;
  }

  /// Zassenhaus: row-reduce [[u, u], [v, 0]]; rows whose left half vanishes
  /// carry a basis of the intersection in their right half.
  Subspace intersect(const Subspace& o) const {
    check_same(o);
    const K& f = field();
    const std::size_t n = ambient();
    if (is_zero() || o.is_zero()) return Subspace(f, n);
    if (contains(o)) return o;
    if (o.contains(*this)) return *this;
    Echelon<K> big(f, 2 * n);
    for (const auto& u : basis()) {
      Vec<K> row(2 * n);
      std::copy(u.begin(), u.end(), row.begin());
      std::copy(u.begin(), u.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
      big.insert(std::move(row));
    }
    for (const auto& v : o.basis()) {
      Vec<K> row(2 * n, f.zero());
      std::copy(v.begin(), v.end(), row.begin());
      big.insert(std::move(row));
    }
    Subspace out(f, n);
    for (std::size_t r = 0; r < big.rank(); ++r) {
      if (big.pivots()[r] < n) continue;
      const auto& row = big.rows()[r];
      out.ech_.insert(Vec<K>(row.begin() + static_cast<std::ptrdiff_t>(n), row.end()));
    }
    return out;
  }

  bool operator==(const Subspace& o) const {
    return ambient() == o.ambient() && pivots() == o.pivots() && basis() == o.basis();
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Lexicographic order on (dim, pivots, rows); any strict total order works,
  /// it only serves map keys.
  bool operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    if (pivots() != o.pivots()) return pivots() < o.pivots();
    return basis() < o.basis();
  }

  /// Standard basis vectors at non-pivot columns: a complement.
  std::vector<std::size_t> non_pivots() const {
    std::vector<std::size_t> out;
    std::size_t r = 0;
    for (std::size_t j = 0; j < ambient(); ++j) {
      if (r < dim() && pivots()[r] == j) {
        ++r;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

 private:
  void check_same(const Subspace& o) const {
    if (o.ambient() != ambient()) throw InputError("subspaces live in different ambient spaces");
  }

  Echelon<K> ech_;
};

/// Annihilator {x : <w, x> = 0 for all w in s}.
template <class K>
Subspace<K> annihilator(const Subspace<K>& s) {
  if (s.is_zero()) return Subspace<K>::full(s.field(), s.ambient());
  return Subspace<K>::span(s.field(), s.ambient(), kernel_basis(s.basis_matrix()));
}

template <class K>
Subspace<K> kernel(const Matrix<K>& m) {
  return Subspace<K>::span(m.field(), m.cols(), kernel_basis(m));
}

/// Column space of m, as a subspace of K^rows.
template <class K>
Subspace<K> image(const Matrix<K>& m) {
  Subspace<K> s(m.field(), m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) s.add(m.column(j));
  return s;
}

/// The pair B ⊆ A viewed as the quotient space A/B.  The basis of A/B is the
/// RREF basis of (A mod B), lifted to representatives inside A.
template <class K>
class Subquotient {
 public:
  Subquotient(Subspace<K> upper, Subspace<K> lower) : upper_(std::move(upper)), lower_(std::move(lower)), reps_(upper_.field(), upper_.ambient()) {
    if (!upper_.contains(lower_)) throw InputError("subquotient: lower space is not contained in upper");
    for (const auto& v : upper_.basis()) {
      Vec<K> w = lower_.reduce(v);
      if (!is_zero_vec(upper_.field(), w)) reps_.add(w);
    }
  }

  const Subspace<K>& upper() const { return upper_; }
  const Subspace<K>& lower() const { return lower_; }
  std::size_t dim() const { return reps_.dim(); }
  std::size_t ambient() const { return upper_.ambient(); }
  const K& field() const { return upper_.field(); }

  /// Representatives (in the ambient space) of the quotient basis.
  const std::vector<Vec<K>>& lifts() const { return reps_.basis(); }

  /// Coordinates of the coset v + B, for v in A.
  Vec<K> coords(const Vec<K>& v) const { return reps_.coords(lower_.reduce(v)); }

  Vec<K> lift(const Vec<K>& c) const { return reps_.combine(c); }

  /// Image in A/B of a subspace X with B ⊆ X ⊆ A (or any X ⊆ A).
  Subspace<K> push(const Subspace<K>& x) const {
    Subspace<K> out(field(), dim());
    for (const auto& v : x.basis()) out.add(coords(v));
    return out;
  }

  /// Preimage in A of a subspace of A/B.
  Subspace<K> pull(const Subspace<K>& y) const {
    Subspace<K> out = lower_;
    for (const auto& c : y.basis()) out.add(lift(c));
    return out;
  }

 private:
  Subspace<K> upper_, lower_;
  Subspace<K> reps_;
};

}  // namespace radlie
