#pragma once

// Named constructions and the on-disk algebra document (schema
// "radlie-algebra/1").  Documents are canonical: brackets sorted by (i, j),
// terms by k, keys sorted, so save(load(x)) is byte-stable.

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "radlie/lie_algebra.hpp"

namespace radlie {

using AnyAlgebra = std::variant<LieAlgebra<Rationals>, LieAlgebra<PrimeField>>;

inline constexpr const char* kSchema = "radlie-algebra/1";

struct AlgebraDoc {
  std::string name;
  AnyAlgebra algebra;
  nlohmann::json expectations = nlohmann::json::object();
  nlohmann::json hints = nlohmann::json::object();
};

/// Parses and validates (index ranges, coefficients, Jacobi).  Throws
/// InputError with a location on any problem.
AlgebraDoc load_doc(std::string_view text);
AlgebraDoc load_file(const std::string& path);
std::string save_doc(const AlgebraDoc& doc);

std::size_t dim_of(const AnyAlgebra& a);
std::uint32_t characteristic_of(const AnyAlgebra& a);

/// Subspace <-> JSON list of coefficient-string vectors.
template <class K>
nlohmann::json subspace_to_json(const Subspace<K>& s);
template <class K>
Subspace<K> subspace_from_json(const LieAlgebra<K>& L, const nlohmann::json& j);

// ---- builders -------------------------------------------------------------

template <class K>
LieAlgebra<K> build_abelian(const K& f, std::size_t n);
/// [e1, e2] = e2.
template <class K>
LieAlgebra<K> build_r2(const K& f);
/// x, y, z with [x, y] = z.
template <class K>
LieAlgebra<K> build_heisenberg(const K& f);
/// [e1, e_i] = e_{i+1} for 2 <= i <= n-1.
template <class K>
LieAlgebra<K> build_filiform(const K& f, std::size_t n);
/// e, f, h with [e, f] = h, [h, e] = 2e, [h, f] = -2f.
template <class K>
LieAlgebra<K> build_sl2(const K& f);
/// Matrix units E11, E12, E21, E22.
template <class K>
LieAlgebra<K> build_gl2(const K& f);
/// [e1, e2] = e3 and cyclic.
template <class K>
LieAlgebra<K> build_so3(const K& f);
/// Seven-dimensional nine-product bracket table over GF(7).  As written it
/// violates Jacobi at (e1, e2, e3) and (e1, e2, e5); lower central series
/// has length 4, derived length 3.
LieAlgebra<PrimeField> build_bokut7();
/// S ⊗ O_m over GF(p), O_m = F[x_1..x_m]/(x_i^p), basis s_a x^alpha.
LieAlgebra<PrimeField> build_trunc_tensor(const LieAlgebra<PrimeField>& s, std::size_t m);
/// sl2 ⊗ O_1 + F (1 ⊗ D) over GF(p) with D = (1 + x) d/dx; m must be 1.
LieAlgebra<PrimeField> build_pasha(std::uint32_t p, std::size_t m = 1);

/// The shipped fixtures, with expectations and hints.
std::vector<AlgebraDoc> builtin_corpus();
/// bokut7 with its advertised invariants; kept apart from the corpus since
/// load_doc rejects it.
AlgebraDoc bokut7_doc();

}  // namespace radlie
