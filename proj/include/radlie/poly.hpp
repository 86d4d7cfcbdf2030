#pragma once

// Univariate polynomials over K (coefficients low degree first, no trailing
// zeros), characteristic/minimal polynomials of matrices, and factoring:
// complete over GF(p), rational roots only over Q.

#include <vector>

#include "radlie/matrix.hpp"

namespace radlie {

template <class K>
struct Poly {
  std::vector<typename K::Elem> c;  // c[i] is the coefficient of x^i

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool operator==(const Poly&) const = default;
};

template <class K>
Poly<K> poly_trim(const K& f, Poly<K> p);
template <class K>
Poly<K> poly_monic(const K& f, Poly<K> p);
template <class K>
Poly<K> poly_add(const K& f, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_sub(const K& f, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_mul(const K& f, const Poly<K>& a, const Poly<K>& b);
/// Quotient and remainder; b must be nonzero.
template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const K& f, const Poly<K>& a, const Poly<K>& b);
template <class K>
Poly<K> poly_gcd(const K& f, Poly<K> a, Poly<K> b);
template <class K>
Poly<K> poly_derivative(const K& f, const Poly<K>& p);

/// p(m) for a square matrix m.
template <class K>
Matrix<K> poly_eval(const Poly<K>& p, const Matrix<K>& m);

/// Monic characteristic polynomial via Hessenberg reduction.
template <class K>
Poly<K> charpoly(const Matrix<K>& m);

/// Monic minimal polynomial (smallest linear relation among powers of m).
template <class K>
Poly<K> minpoly(const Matrix<K>& m);

/// Distinct monic irreducible factors of a nonzero polynomial over GF(p),
/// sorted by degree then coefficients.  Deterministic given the rng state.
std::vector<Poly<PrimeField>> irreducible_factors(const PrimeField& f, const Poly<PrimeField>& p, Rng& rng);

/// Distinct rational roots of a nonzero polynomial over Q, or nullopt when
/// the coefficients are too large for divisor enumeration.
std::optional<std::vector<mpq_class>> rational_roots(const Poly<Rationals>& p);

}  // namespace radlie
