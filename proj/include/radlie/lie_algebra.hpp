#pragma once

// Lie algebras given by structure constants on a basis e_0..e_{n-1}, plus the
// subspace calculus built on the bracket: products, series, centralisers,
// ideal closure, cores, quotients, restrictions and direct sums.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "radlie/subspace.hpp"

namespace radlie {

template <class K>
class LieAlgebra {
 public:
  using Elem = typename K::Elem;

  /// Abelian algebra of dimension n; fill in brackets with set_bracket.
  LieAlgebra(K f, std::size_t n, std::vector<std::string> labels = {});

  const K& field() const { return field_; }
  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }

  /// Set [e_i, e_j] = v (and [e_j, e_i] = -v).  Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, const Vec<K>& v);

  Vec<K> basis_bracket(std::size_t i, std::size_t j) const { return ad_[i].column(j); }
  Vec<K> bracket(const Vec<K>& x, const Vec<K>& y) const;

  /// Matrix of ad e_i acting on column vectors.
  const Matrix<K>& ad_basis(std::size_t i) const { return ad_[i]; }
  const std::vector<Matrix<K>>& ad_all() const { return ad_; }
  Matrix<K> ad(const Vec<K>& x) const;

  struct JacobiFailure {
    std::array<std::size_t, 3> triple;  // 0-based, i < j < k
    Vec<K> residual;                    // [[x,y],z] + [[y,z],x] + [[z,x],y]
  };
  /// First basis triple whose Jacobi sum is nonzero.
  std::optional<JacobiFailure> jacobi_violation() const;

  Vec<K> zero_vector() const { return zero_vec(field_, n_); }
  Vec<K> basis_vector(std::size_t i) const { return unit_vec(field_, n_, i); }
  Subspace<K> zero_space() const { return Subspace<K>::zero(field_, n_); }
  Subspace<K> full_space() const { return Subspace<K>::full(field_, n_); }
  Subspace<K> span(const std::vector<Vec<K>>& vs) const { return Subspace<K>::span(field_, n_, vs); }

  /// Structural equality: same field, dimension and structure constants.
  bool same_table(const LieAlgebra& o) const;

 private:
  K field_;
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<Matrix<K>> ad_;
};

// ---- subspace calculus ----------------------------------------------------

template <class K>
Subspace<K> product_space(const LieAlgebra<K>& L, const Subspace<K>& u, const Subspace<K>& v);

template <class K>
bool is_subalgebra(const LieAlgebra<K>& L, const Subspace<K>& u);
template <class K>
bool is_ideal(const LieAlgebra<K>& L, const Subspace<K>& u);
template <class K>
bool is_perfect(const LieAlgebra<K>& L, const Subspace<K>& u);

/// S^1 = S, S^{k+1} = [S, S^k], stopping at the first repeat.
template <class K>
std::vector<Subspace<K>> lower_central_series(const LieAlgebra<K>& L, const Subspace<K>& s);
/// S^(0) = S, S^(k+1) = [S^(k), S^(k)], stopping at the first repeat.
template <class K>
std::vector<Subspace<K>> derived_series(const LieAlgebra<K>& L, const Subspace<K>& s);

/// Largest c with S^c != 0 when the lower central series reaches 0 (zero
/// algebra: 0, abelian: 1); nullopt if S is not nilpotent.
template <class K>
std::optional<std::size_t> nilpotency_class(const LieAlgebra<K>& L, const Subspace<K>& s);
/// Number of nonzero derived terms when the series reaches 0; nullopt if S is
/// not solvable.
template <class K>
std::optional<std::size_t> derived_length(const LieAlgebra<K>& L, const Subspace<K>& s);

template <class K>
Subspace<K> centre(const LieAlgebra<K>& L);
/// C_L(S) = {x : [x, S] = 0}.
template <class K>
Subspace<K> centraliser(const LieAlgebra<K>& L, const Subspace<K>& s);
/// C_L(A/B) = {x : [x, A] ⊆ B}.
template <class K>
Subspace<K> factor_centraliser(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b);

/// Smallest ideal containing the given vectors.
template <class K>
Subspace<K> spin(const LieAlgebra<K>& L, const std::vector<Vec<K>>& vs);
template <class K>
Subspace<K> ideal_closure(const LieAlgebra<K>& L, const Subspace<K>& s);

/// Largest ideal of L inside the subspace s.
template <class K>
Subspace<K> core(const LieAlgebra<K>& L, const Subspace<K>& s);

/// Gram matrix of the Killing form tr(ad x ad y) on the standard basis.
template <class K>
Matrix<K> killing_matrix(const LieAlgebra<K>& L);

/// Surjection L -> L/I.  The quotient basis is the images of the standard
/// basis vectors at the non-pivot columns of I.
template <class K>
struct Quotient {
  LieAlgebra<K> algebra;
  Subspace<K> kernel;
  std::vector<std::size_t> complement;

  Vec<K> push(const Vec<K>& v) const;
  Subspace<K> push(const Subspace<K>& s) const;
  Vec<K> lift(const Vec<K>& c) const;
  Subspace<K> pull(const Subspace<K>& s) const;
};

template <class K>
Quotient<K> quotient(const LieAlgebra<K>& L, const Subspace<K>& ideal);

/// Injection U -> L of a subalgebra, with U carrying its RREF basis.
template <class K>
struct Restriction {
  LieAlgebra<K> algebra;
  Subspace<K> image;

  /// Child coordinates of a vector of L lying in U.
  Vec<K> push(const Vec<K>& v) const { return image.coords(v); }
  Subspace<K> push(const Subspace<K>& s) const;
  Vec<K> lift(const Vec<K>& c) const { return image.combine(c); }
  Subspace<K> pull(const Subspace<K>& s) const;
};

template <class K>
Restriction<K> restrict_to(const LieAlgebra<K>& L, const Subspace<K>& subalgebra);

/// Block-diagonal sum; L1's basis first.
template <class K>
LieAlgebra<K> direct_sum(const LieAlgebra<K>& a, const LieAlgebra<K>& b);

/// Same algebra on the basis given by the columns of an invertible p.
template <class K>
LieAlgebra<K> change_basis(const LieAlgebra<K>& L, const Matrix<K>& p);

/// Human-readable vector, e.g. "e1 + 2*e3".
template <class K>
std::string format_vector(const LieAlgebra<K>& L, const Vec<K>& v);
template <class K>
std::string format_subspace(const LieAlgebra<K>& L, const Subspace<K>& s);

}  // namespace radlie
