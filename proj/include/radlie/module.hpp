#pragma once

// Finite-dimensional modules given by generator matrices acting on column
// vectors, and the submodule machinery used for chief series and socles:
// spinning, sub/quotient/transposed actions, homomorphisms from a simple
// module, commutants, and the splitting test (MeatAxe over GF(p), trace-form
// radical plus commutant over Q).

#include <string>
#include <vector>

#include "radlie/lie_algebra.hpp"

namespace radlie {

template <class K>
struct Module {
  K field;
  std::size_t dim = 0;
  std::vector<Matrix<K>> gens;

  Subspace<K> zero_space() const { return Subspace<K>::zero(field, dim); }
  Subspace<K> full_space() const { return Subspace<K>::full(field, dim); }
};

/// L acting by ad on the subquotient A/B (A, B ideals).
template <class K>
Module<K> adjoint_module(const LieAlgebra<K>& L, const Subquotient<K>& q);
/// Same, with only the given elements acting (each must preserve A and B).
template <class K>
Module<K> adjoint_module(const LieAlgebra<K>& L, const Subquotient<K>& q, const std::vector<Vec<K>>& acting);

template <class K>
Subspace<K> spin(const Module<K>& m, const std::vector<Vec<K>>& vs);
template <class K>
bool is_submodule(const Module<K>& m, const Subspace<K>& u);
/// Action on the submodule u in the coordinates of u's basis.
template <class K>
Module<K> submodule_action(const Module<K>& m, const Subspace<K>& u);
/// Action on m/u in the coordinates of the non-pivot columns of u.
template <class K>
Module<K> quotient_action(const Module<K>& m, const Subspace<K>& u);
/// Vector of m/u coordinates -> representative in m, and back.
template <class K>
Vec<K> quotient_lift(const Subspace<K>& u, const Vec<K>& c);
template <class K>
Vec<K> quotient_coords(const Subspace<K>& u, const Vec<K>& v);
/// Generators transposed.  Its submodules are the annihilators of submodules
/// of m.
template <class K>
Module<K> transposed(const Module<K>& m);

/// Basis of End_A(m) = {X : X g = g X for all generators}.
template <class K>
std::vector<Matrix<K>> commutant(const Module<K>& m);

/// Basis of the unital associative algebra generated by the generators.
template <class K>
std::vector<Matrix<K>> enveloping_algebra(const Module<K>& m);

/// Common kernel of the trace-form radical of the enveloping algebra.  In
/// characteristic 0 this is the socle of m.
template <class K>
Subspace<K> trace_radical_socle(const Module<K>& m);

/// Hom(t, m) for a simple module t.  A homomorphism is fixed by the image m0
/// of e_0; seeds is a basis of the admissible m0, and image(m0) = span of
/// words applied to m0.
template <class K>
struct HomSpace {
  std::vector<Matrix<K>> words;
  std::vector<Vec<K>> seeds;
  Subspace<K> image(const Vec<K>& m0) const;
};

template <class K>
HomSpace<K> hom_space(const Module<K>& t, const Module<K>& m);

/// Images of a basis of Hom(t, m); each is a simple submodule isomorphic to t.
template <class K>
std::vector<Subspace<K>> hom_images(const Module<K>& t, const Module<K>& m);

template <class K>
bool isomorphic_simple(const Module<K>& a, const Module<K>& b);

enum class Verdict { irreducible, reducible, unknown };

template <class K>
struct SplitResult {
  Verdict verdict = Verdict::unknown;
  Subspace<K> sub;        // proper nonzero submodule when reducible
  std::string certificate;
};

struct SplitOptions {
  std::size_t attempts = 64;        // random algebra elements tried
  std::uint64_t enum_cap = 1u << 16;  // projective points enumerated at most
};

SplitResult<PrimeField> split_module(const Module<PrimeField>& m, const SplitOptions& opt, Rng& rng);
SplitResult<Rationals> split_module(const Module<Rationals>& m, const SplitOptions& opt, Rng& rng);

template <class K>
struct CompositionSeries {
  std::vector<Subspace<K>> chain;  // 0 = chain[0] < ... < chain.back() = m
  bool certified = true;           // every factor proved irreducible
};

/// Composition series refined through the given chain of submodules (each
/// containing the previous; 0 and m are added if missing).
template <class K>
CompositionSeries<K> composition_series(const Module<K>& m, const std::vector<Subspace<K>>& through,
                                        const SplitOptions& opt, Rng& rng);

/// A simple submodule of m (m nonzero); certified flag as above.
template <class K>
std::pair<Subspace<K>, bool> simple_submodule(const Module<K>& m, const SplitOptions& opt, Rng& rng);

template <class K>
struct SocleDecomposition {
  Subspace<K> socle;
  /// One entry per isomorphism type: simple submodules spanning the
  /// homogeneous component (a single entry when the type has multiplicity 1).
  std::vector<std::vector<Subspace<K>>> components;
  /// Hom(type, m) for each entry of components, in the same order.
  std::vector<HomSpace<K>> homs;
  bool certified = true;
};

template <class K>
SocleDecomposition<K> socle(const Module<K>& m, const SplitOptions& opt, Rng& rng);

/// Enumerate nonzero vectors of span(basis) up to scalars (first nonzero
/// coefficient 1).  The callback returns false to stop early.
template <class F>
void for_each_projective_point(const PrimeField& f, const std::vector<Vec<PrimeField>>& basis, std::size_t n, F&& fn) {
  const std::size_t k = basis.size();
  const std::uint32_t q = f.modulus();
  std::vector<std::uint32_t> c(k, 0);
  for (std::size_t lead = k; lead-- > 0;) {
    // Coefficient vectors with c[lead] = 1 and zeros before it.
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      Vec<PrimeField> v(n, 0);
      for (std::size_t i = 0; i < k; ++i)
        if (c[i]) row_axpy(f, v.data(), basis[i].data(), c[i], n);
      if (!fn(v)) return;
      std::size_t i = lead + 1;
      while (i < k && c[i] == q - 1) c[i++] = 0;
      if (i >= k) break;
      ++c[i];
    }
  }
}

/// Number of projective points of a k-dimensional space over GF(q), or
/// UINT64_MAX on overflow.
std::uint64_t projective_count(std::uint64_t q, std::size_t k);

}  // namespace radlie
