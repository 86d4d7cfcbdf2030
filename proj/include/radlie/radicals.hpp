#pragma once

// Classical radicals and the ideal-level module theory: chief series and
// factor types, nilradical, solvable radical, derivations, characteristic
// radical, regularity, Frattini ideal, L-socles and inner derivations on
// chief factors.

#include <optional>
#include <string>
#include <vector>

#include "radlie/module.hpp"

namespace radlie {

struct Settings {
  std::uint64_t enum_cap = 1u << 16;          // projective points enumerated per test
  std::uint64_t subspace_cap = 5'000'000;     // full subspace enumeration
  std::uint64_t exhaustive_cap = 1u << 18;    // lattice used by exhaustive theorem checks
  std::size_t spin_seeds = 64;                // random algebra elements per splitting test
  std::uint64_t seed = 1;
  std::size_t derivation_dim_cap = 24;

  SplitOptions split() const { return {spin_seeds, enum_cap}; }
};

enum class FactorType { abelian, simple, irregular };
const char* factor_type_name(FactorType t);

template <class K>
struct ChiefFactor {
  Subspace<K> lower, upper;
  FactorType type;
  bool certified;           // minimality and type both proved
  std::string certificate;
};

template <class K>
struct ChiefSeries {
  std::vector<Subspace<K>> chain;
  std::vector<ChiefFactor<K>> factors;
  bool certified = true;
};

/// Chief series refined through an ascending chain of ideals.
template <class K>
ChiefSeries<K> chief_series(const LieAlgebra<K>& L, const std::vector<Subspace<K>>& through, const Settings& s, Rng& rng);

/// Type of the chief factor A/B; second is false when simplicity of a
/// non-abelian factor could not be decided.
template <class K>
std::pair<FactorType, bool> factor_type(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b,
                                        const Settings& s, Rng& rng);

/// Whether the nonzero ideal i is a minimal ideal; nullopt if undecided.
template <class K>
std::optional<bool> is_minimal_ideal(const LieAlgebra<K>& L, const Subspace<K>& i, const Settings& s, Rng& rng);

/// Largest nilpotent ideal.  Throws CapacityError when a chief series cannot
/// be certified.
template <class K>
Subspace<K> nilradical(const LieAlgebra<K>& L, const Settings& s, Rng& rng);

/// Largest solvable ideal.
template <class K>
Subspace<K> solvable_radical(const LieAlgebra<K>& L, const Settings& s, Rng& rng);

/// Basis of Der(L).  Throws CapacityError above the dimension cap.
template <class K>
std::vector<Matrix<K>> derivations(const LieAlgebra<K>& L, const Settings& s);

template <class K>
bool is_derivation(const LieAlgebra<K>& L, const Matrix<K>& d);

template <class K>
bool is_invariant(const Subspace<K>& i, const std::vector<Matrix<K>>& ops);

/// Largest subspace of s mapped into itself by every operator.
template <class K>
Subspace<K> invariant_core(const Subspace<K>& s, const std::vector<Matrix<K>>& ops);

template <class K>
struct CharRadical {
  Subspace<K> of_s;                  // largest solvable Der(S)-invariant ideal of S
  std::optional<Subspace<K>> of_l;   // largest Der(L)-invariant subspace of R(S)
};

template <class K>
CharRadical<K> characteristic_radical(const LieAlgebra<K>& L, const Subspace<K>& s, const Settings& st, Rng& rng);

struct Regularity {
  bool nilregular = true, solregular = true, regular = true;
  std::optional<std::size_t> nil_class, derived_length;  // of N(U), R(U)
};

/// Regularity of the subalgebra u.
template <class K>
Regularity regularity(const LieAlgebra<K>& L, const Subspace<K>& u, const Settings& s, Rng& rng);

/// C_L(N)^2; characteristic 0 only (RegimeError otherwise).
template <class K>
Subspace<K> max_semisimple_ideal(const LieAlgebra<K>& L, const Settings& s, Rng& rng);

/// A subalgebra complementing the abelian ideal i, if L splits over it.
template <class K>
std::optional<Subspace<K>> abelian_complement(const LieAlgebra<K>& L, const Subspace<K>& i);

template <class K>
struct FrattiniResult {
  Subspace<K> ideal;
  std::string method;
  std::optional<Subspace<K>> subalgebra;  // intersection of maximal subalgebras, when enumerated
};

/// Frattini ideal.  Throws RegimeError or CapacityError when no route applies.
template <class K>
FrattiniResult<K> frattini(const LieAlgebra<K>& L, const Settings& s, Rng& rng);

template <class K>
struct SocleReport {
  std::vector<Subspace<K>> minimal_ideals;
  Subspace<K> socle, abelian_socle;
  bool complete = true;   // minimal_ideals lists every minimal ideal inside s
  bool certified = true;  // socle itself proved
};

/// Minimal ideals of L contained in the ideal s, and their sum.
template <class K>
SocleReport<K> l_socle(const LieAlgebra<K>& L, const Subspace<K>& s, const Settings& st, Rng& rng);

/// Whether ad x induces an inner derivation of A/B, i.e. x ∈ A + C_L(A/B),
/// decided by solving (ad x - ad a)(A) ⊆ B for a ∈ A.
template <class K>
bool induces_inner(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b, const Vec<K>& x);

}  // namespace radlie
