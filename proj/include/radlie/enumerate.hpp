#pragma once

// Brute-force enumeration of every subspace of a Lie algebra over GF(p).
// This is the reference the structured algorithms are compared against, and
// the route for maximal subalgebras.

#include <functional>
#include <vector>

#include "radlie/lie_algebra.hpp"

namespace radlie {

/// Number of subspaces of GF(q)^n (all dimensions), saturating at UINT64_MAX.
std::uint64_t subspace_count(std::uint64_t q, std::size_t n);

/// Visit every subspace of GF(p)^n in RREF order; throws CapacityError when
/// the count exceeds cap.  Return false from fn to stop.
void for_each_subspace(const PrimeField& f, std::size_t n, std::uint64_t cap,
                       const std::function<bool(const Subspace<PrimeField>&)>& fn);

struct SubspaceLattice {
  std::vector<Subspace<PrimeField>> subalgebras;  // all, including 0 and L
  std::vector<Subspace<PrimeField>> ideals;       // all, including 0 and L
};

SubspaceLattice enumerate_lattice(const LieAlgebra<PrimeField>& L, std::uint64_t cap);

/// Maximal proper subalgebras (an empty list only for the zero algebra).
std::vector<Subspace<PrimeField>> maximal_subalgebras(const LieAlgebra<PrimeField>& L, const SubspaceLattice& lat);

/// Quantities recomputed from the lattice alone.
struct OracleValues {
  Subspace<PrimeField> nilradical, radical, frattini_subalgebra, frattini, socle;
  std::vector<Subspace<PrimeField>> minimal_ideals;
};

OracleValues oracle_values(const LieAlgebra<PrimeField>& L, const SubspaceLattice& lat);

}  // namespace radlie
