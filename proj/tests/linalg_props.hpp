#pragma once

// Randomized linear-algebra properties shared by the unit tests and the
// acceptance binary.  Each round draws random matrices/subspaces and checks
// RREF canonicity, the Grassmann dimension formula and kernel/rank facts.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "radlie/subspace.hpp"

namespace radlie::test {

struct PropertyStats {
  std::size_t checks = 0;
  std::vector<std::string> violations;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && violations.size() < 10) violations.push_back(what);
  }
};

template <class K>
Vec<K> random_sparse_vec(const K& f, std::size_t n, Rng& rng) {
  Vec<K> v = random_vec(f, n, rng);
  // Zero out some entries so that low-rank and dependent families are common.
  std::bernoulli_distribution drop(0.4);
  for (auto& x : v)
    if (drop(rng)) x = f.zero();
  return v;
}

template <class K>
Subspace<K> random_subspace(const K& f, std::size_t n, Rng& rng) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n + 1)(rng);
  std::vector<Vec<K>> vs;
  for (std::size_t i = 0; i < k; ++i) vs.push_back(random_sparse_vec(f, n, rng));
  return Subspace<K>::span(f, n, vs);
}

/// One round performs 4 checks; rounds = checks / 4.
template <class K>
PropertyStats run_linalg_properties(const K& f, std::size_t checks, std::uint64_t seed) {
  PropertyStats st;
  Rng rng(seed);
  const std::size_t rounds = (checks + 3) / 4;
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const Subspace<K> u = random_subspace(f, n, rng);
    const Subspace<K> v = random_subspace(f, n, rng);

    // Canonicity: the same span from a shuffled, recombined generating set
    // yields identical RREF rows.
    std::vector<Vec<K>> gens = u.basis();
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j) axpy(f, gens[i], f.random(rng), gens[j]);
    std::shuffle(gens.begin(), gens.end(), rng);
    gens.push_back(zero_vec(f, n));
    if (!gens.empty()) gens.push_back(gens.front());
    const Subspace<K> u2 = Subspace<K>::span(f, n, gens);
    st.expect(u2 == u && u2.pivots() == u.pivots(), "rref not canonical");

    // Grassmann: dim(U + V) + dim(U ∩ V) = dim U + dim V, and U ∩ V lies in both.
    const Subspace<K> s = u + v, i = u.intersect(v);
    st.expect(s.dim() + i.dim() == u.dim() + v.dim() && u.contains(i) && v.contains(i) && s.contains(u) && s.contains(v),
              "Grassmann formula");

    // Rank-nullity and kernel correctness for a random matrix.
    const std::size_t rows = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<Vec<K>> mrows;
    for (std::size_t k = 0; k < rows; ++k) mrows.push_back(random_sparse_vec(f, n, rng));
    const Matrix<K> m = Matrix<K>::from_rows(f, mrows, n);
    const auto ker = kernel_basis(m);
    bool annihilated = true;
    for (const auto& k : ker) annihilated = annihilated && is_zero_vec(f, m.apply(k));
    st.expect(annihilated && rank(m) + ker.size() == n && Subspace<K>::span(f, n, ker).dim() == ker.size(),
              "rank-nullity / kernel");

    // Annihilators reverse inclusion and are involutive.
    const Subspace<K> au = annihilator(u);
    st.expect(au.dim() + u.dim() == n && annihilator(au) == u && annihilator(s) == au.intersect(annihilator(v)),
              "annihilator duality");
  }
  return st;
}

}  // namespace radlie::test
