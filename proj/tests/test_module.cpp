#include <doctest.h>

#include "radlie/module.hpp"
#include "radlie/corpus.hpp"

using namespace radlie;

namespace {

template <class K>
Module<K> adjoint(const LieAlgebra<K>& L) {
  return adjoint_module(L, Subquotient<K>(L.full_space(), L.zero_space()));
}

// Natural module of sl2 on K^2.
template <class K>
Module<K> natural_sl2(const K& f) {
  Module<K> m{f, 2, {}};
  m.gens.push_back(Matrix<K>::from_rows(f, {{0, 1}, {0, 0}}, 2));
  m.gens.push_back(Matrix<K>::from_rows(f, {{0, 0}, {1, 0}}, 2));
  return m;
}

// Random block upper-triangular generators: K^a is a submodule.
Module<PrimeField> block_triangular(const PrimeField& f, std::size_t a, std::size_t b, Rng& rng) {
  Module<PrimeField> m{f, a + b, {}};
  for (int g = 0; g < 2; ++g) {
    Matrix<PrimeField> x(f, a + b, a + b);
    for (std::size_t i = 0; i < a + b; ++i)
      for (std::size_t j = 0; j < a + b; ++j)
        if (!(i >= a && j < a)) x(i, j) = f.random(rng);
    m.gens.push_back(x);
  }
  return m;
}

}  // namespace

TEST_SUITE("module") {
  TEST_CASE("adjoint module of a simple algebra is irreducible") {
    Rng rng(1);
    const SplitOptions opt;
    CHECK(split_module(adjoint(build_sl2(Rationals{})), opt, rng).verdict == Verdict::irreducible);
    CHECK(split_module(adjoint(build_sl2(PrimeField(5))), opt, rng).verdict == Verdict::irreducible);
    CHECK(split_module(adjoint(build_so3(PrimeField(3))), opt, rng).verdict == Verdict::irreducible);
  }

  TEST_CASE("natural sl2 module") {
    Rng rng(2);
    CHECK(split_module(natural_sl2(PrimeField(7)), {}, rng).verdict == Verdict::irreducible);
    CHECK(split_module(natural_sl2(Rationals{}), {}, rng).verdict == Verdict::irreducible);
  }

  TEST_CASE("reducible modules yield a genuine submodule") {
    Rng rng(3);
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const PrimeField f(p);
      for (int t = 0; t < 10; ++t) {
        const auto m = block_triangular(f, 1 + t % 3, 1 + t % 2, rng);
        const auto r = split_module(m, {}, rng);
        REQUIRE(r.verdict == Verdict::reducible);
        CHECK(is_submodule(m, r.sub));
        CHECK_FALSE(r.sub.is_zero());
        CHECK(r.sub.dim() < m.dim);
      }
    }
  }

  TEST_CASE("adjoint module of r2 is reducible over Q") {
    Rng rng(4);
    const auto m = adjoint(build_r2(Rationals{}));
    const auto r = split_module(m, {}, rng);
    REQUIRE(r.verdict == Verdict::reducible);
    CHECK(is_submodule(m, r.sub));
  }

  TEST_CASE("composition series of the adjoint module of a filiform algebra") {
    Rng rng(5);
    const auto L = build_filiform(PrimeField(5), 5);
    const auto cs = composition_series(adjoint(L), {}, {}, rng);
    CHECK(cs.certified);
    CHECK(cs.chain.size() == 6);  // five one-dimensional factors
    for (std::size_t i = 0; i + 1 < cs.chain.size(); ++i) CHECK(cs.chain[i + 1].dim() == cs.chain[i].dim() + 1);
  }

  TEST_CASE("socle of a semisimple module") {
    Rng rng(6);
    const auto L = direct_sum(build_sl2(Rationals{}), build_sl2(Rationals{}));
    const auto soc = socle(adjoint(L), {}, rng);
    CHECK(soc.certified);
    CHECK(soc.socle.dim() == 6);
    CHECK(soc.components.size() == 2);
  }

  TEST_CASE("commutant and isomorphism of simple modules") {
    const auto m = natural_sl2(PrimeField(5));
    CHECK(commutant(m).size() == 1);
    CHECK(isomorphic_simple(m, m));
    CHECK_FALSE(isomorphic_simple(m, adjoint(build_sl2(PrimeField(5)))));
    CHECK(enveloping_algebra(m).size() == 4);
  }

  TEST_CASE("projective point count") {
    CHECK(projective_count(2, 3) == 7);
    CHECK(projective_count(7, 2) == 8);
    std::size_t seen = 0;
    const PrimeField f(3);
    for_each_projective_point(f, {{1, 0, 0}, {0, 1, 0}}, 3, [&](const Vec<PrimeField>&) {
      ++seen;
      return true;
    });
    CHECK(seen == 4);
  }
}
