#include <doctest.h>

#include <set>

#include "radlie/enumerate.hpp"
#include "radlie/radicals.hpp"
#include "support.hpp"

using namespace radlie;
using test::fixture_algebra;
using test::span_of;

namespace {

template <class K>
bool nilpotent_matrix(const Matrix<K>& m) {
  Matrix<K> p = m;
  for (std::size_t i = 0; i < m.rows(); ++i) p = p * m;
  return p.is_zero();
}

}  // namespace

TEST_SUITE("radicals") {
  TEST_CASE("nilradical and radical over Q on hand-computed cases") {
    Settings s;
    Rng rng(1);
    const auto g = build_gl2(Rationals{});
    CHECK(nilradical(g, s, rng) == span_of(g, {{1, 0, 0, 1}}));
    CHECK(solvable_radical(g, s, rng) == span_of(g, {{1, 0, 0, 1}}));
    const auto r2 = build_r2(Rationals{});
    CHECK(nilradical(r2, s, rng) == span_of(r2, {{0, 1}}));
    CHECK(solvable_radical(r2, s, rng) == r2.full_space());
    const auto sr = fixture_algebra<Rationals>("sl2+r2-q");
    CHECK(nilradical(sr, s, rng) == span_of(sr, {{0, 0, 0, 0, 1}}));
    CHECK(solvable_radical(sr, s, rng) == span_of(sr, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}));
    const auto sh = fixture_algebra<Rationals>("sl2.heis-q");
    const auto n = nilradical(sh, s, rng);
    CHECK(n == span_of(sh, {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}}));
    for (const auto& v : n.basis()) CHECK(nilpotent_matrix(sh.ad(v)));
  }

  TEST_CASE("nilradical over GF(p) against the lattice oracle") {
    Settings s;
    Rng rng(2);
    for (const auto& d : builtin_corpus()) {
      const auto* L = std::get_if<LieAlgebra<PrimeField>>(&d.algebra);
      if (!L || subspace_count(L->field().modulus(), L->dim()) > 200000) continue;
      const auto lat = enumerate_lattice(*L, s.subspace_cap);
      const auto ov = oracle_values(*L, lat);
      CHECK_MESSAGE(nilradical(*L, s, rng) == ov.nilradical, d.name);
      CHECK_MESSAGE(solvable_radical(*L, s, rng) == ov.radical, d.name);
      CHECK_MESSAGE(frattini(*L, s, rng).ideal == ov.frattini, d.name);
      const auto soc = l_socle(*L, L->full_space(), s, rng);
      CHECK_MESSAGE(soc.socle == ov.socle, d.name);
      if (soc.complete && L->dim() <= 4) {
        std::set<Subspace<PrimeField>> mine(soc.minimal_ideals.begin(), soc.minimal_ideals.end());
        std::set<Subspace<PrimeField>> brute(ov.minimal_ideals.begin(), ov.minimal_ideals.end());
        CHECK_MESSAGE(mine == brute, d.name);
      }
    }
  }

  TEST_CASE("truncated tensor algebras") {
    Settings s;
    Rng rng(3);
    for (std::uint32_t p : {5u, 7u}) {
      const auto L = build_trunc_tensor(build_sl2(PrimeField(p)), 1);
      const auto n = nilradical(L, s, rng);
      CHECK(n.dim() == 3 * (p - 1));
      CHECK(solvable_radical(L, s, rng) == n);
      CHECK(nilpotency_class(L, n) == p - 1);
      CHECK(derived_length(L, n) == 3u);
      const auto reg = regularity(L, L.full_space(), s, rng);
      CHECK_FALSE(reg.nilregular);
      CHECK_FALSE(reg.solregular);
    }
  }

  TEST_CASE("regularity thresholds on filiform algebras over GF(5)") {
    Settings s;
    Rng rng(4);
    for (std::size_t n = 5; n <= 8; ++n) {
      const auto L = build_filiform(PrimeField(5), n);
      const auto reg = regularity(L, L.full_space(), s, rng);
      CHECK(reg.nilregular == (n - 1 < 4));
      CHECK(reg.solregular);
    }
    const auto r2 = build_r2(PrimeField(3));
    const auto reg = regularity(r2, r2.full_space(), s, rng);
    CHECK(reg.nilregular);
    CHECK_FALSE(reg.solregular);
  }

  TEST_CASE("derivation algebras") {
    Settings s;
    CHECK(derivations(build_sl2(Rationals{}), s).size() == 3);
    CHECK(derivations(build_abelian(Rationals{}, 3), s).size() == 9);
    CHECK(derivations(build_heisenberg(Rationals{}), s).size() == 6);
    CHECK(derivations(build_r2(Rationals{}), s).size() == 2);
    const auto L = build_filiform(PrimeField(5), 5);
    for (const auto& d : derivations(L, s)) CHECK(is_derivation(L, d));
  }

  TEST_CASE("characteristic radical") {
    Settings s;
    Rng rng(5);
    const auto r2 = build_r2(Rationals{});
    CHECK(characteristic_radical(r2, span_of(r2, {{0, 1}}), s, rng).of_s == span_of(r2, {{0, 1}}));
    const auto g = build_gl2(Rationals{});
    CHECK(characteristic_radical(g, g.full_space(), s, rng).of_s == span_of(g, {{1, 0, 0, 1}}));
    const auto a = build_abelian(Rationals{}, 3);
    CHECK(characteristic_radical(a, a.full_space(), s, rng).of_s == a.full_space());
  }

  TEST_CASE("frattini ideals") {
    Settings s;
    Rng rng(6);
    const auto h = build_heisenberg(Rationals{});
    CHECK(frattini(h, s, rng).ideal == centre(h));
    const auto f = build_filiform(Rationals{}, 5);
    CHECK(frattini(f, s, rng).ideal == product_space(f, f.full_space(), f.full_space()));
    CHECK(frattini(build_sl2(Rationals{}), s, rng).ideal.is_zero());
    const auto sh = fixture_algebra<Rationals>("sl2.heis-q");
    CHECK(frattini(sh, s, rng).ideal == span_of(sh, {{0, 0, 1, 0, 0, 0}}));
  }

  TEST_CASE("chief series and minimal ideals") {
    Settings s;
    Rng rng(7);
    const auto L = direct_sum(build_sl2(Rationals{}), build_sl2(Rationals{}));
    const auto soc = l_socle(L, L.full_space(), s, rng);
    CHECK(soc.certified);
    CHECK(soc.complete);
    CHECK(soc.minimal_ideals.size() == 2);
    CHECK(soc.abelian_socle.is_zero());
    const auto cs = chief_series(L, {}, s, rng);
    REQUIRE(cs.factors.size() == 2);
    for (const auto& f : cs.factors) CHECK(f.type == FactorType::simple);
    const auto a = build_abelian(PrimeField(2), 2);
    CHECK(l_socle(a, a.full_space(), s, rng).minimal_ideals.size() == 3);
    const auto h = build_heisenberg(PrimeField(3));
    CHECK(is_minimal_ideal(h, centre(h), s, rng) == true);
    CHECK(is_minimal_ideal(h, h.full_space(), s, rng) == false);
  }

  TEST_CASE("factor types") {
    Settings s;
    Rng rng(8);
    const auto L = build_trunc_tensor(build_sl2(PrimeField(5)), 1);
    const auto [t, certain] = factor_type(L, L.full_space(), nilradical(L, s, rng), s, rng);
    CHECK(certain);
    CHECK(t == FactorType::simple);
    const auto P = build_pasha(7);
    std::vector<Vec<PrimeField>> a;
    for (std::size_t i = 0; i + 1 < P.dim(); ++i) a.push_back(P.basis_vector(i));
    const auto [tp, cp] = factor_type(P, P.span(a), P.zero_space(), s, rng);
    CHECK(cp);
    CHECK(tp == FactorType::irregular);
  }

  TEST_CASE("maximal semisimple ideal and complements in characteristic 0") {
    Settings s;
    Rng rng(9);
    const auto g = build_gl2(Rationals{});
    CHECK(max_semisimple_ideal(g, s, rng).dim() == 3);
    CHECK_THROWS_AS(max_semisimple_ideal(build_sl2(PrimeField(5)), s, rng), RegimeError);
    const auto r2 = build_r2(Rationals{});
    const auto c = abelian_complement(r2, span_of(r2, {{0, 1}}));
    REQUIRE(c.has_value());
    CHECK((*c + span_of(r2, {{0, 1}})).is_full());
    const auto h = build_heisenberg(Rationals{});
    CHECK_FALSE(abelian_complement(h, centre(h)).has_value());
  }

  TEST_CASE("inner derivations on chief factors") {
    const auto L = build_gl2(Rationals{});
    const auto sl = span_of(L, {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}});
    CHECK(induces_inner(L, sl, L.zero_space(), L.basis_vector(0)));
    const auto r2 = build_r2(Rationals{});
    CHECK_FALSE(induces_inner(r2, span_of(r2, {{0, 1}}), r2.zero_space(), r2.basis_vector(0)));
  }
}

namespace {

template <class K>
Matrix<K> random_invertible(const K& f, std::size_t n, Rng& rng) {
  for (;;) {
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(random_vec(f, n, rng));
    auto m = Matrix<K>::from_rows(f, rows, n);
    if (rank(m) == n) return m;
  }
}

template <class K>
std::multiset<std::pair<std::size_t, int>> factor_profile(const LieAlgebra<K>& L, const Settings& s, Rng& rng) {
  const auto cs = chief_series(L, {}, s, rng);
  std::multiset<std::pair<std::size_t, int>> out;
  for (const auto& f : cs.factors) out.insert({f.upper.dim() - f.lower.dim(), static_cast<int>(f.type)});
  return out;
}

}  // namespace

TEST_SUITE("radicals") {
  TEST_CASE("factor types, class and derived length survive a random change of basis") {
    Settings s;
    Rng rng(2024);
    std::size_t compared = 0;
    for (const auto& doc : builtin_corpus()) {
      std::visit(
          [&](const auto& L) {
            if (L.dim() == 0 || L.dim() > 6) return;
            const auto M = change_basis(L, random_invertible(L.field(), L.dim(), rng));
            INFO(doc.name);
            CHECK(nilpotency_class(M, M.full_space()) == nilpotency_class(L, L.full_space()));
            CHECK(derived_length(M, M.full_space()) == derived_length(L, L.full_space()));
            try {
              Rng r1(5), r2(5);
              CHECK(factor_profile(M, s, r2) == factor_profile(L, s, r1));
              ++compared;
            } catch (const CapacityError&) {
            }
          },
          doc.algebra);
    }
    CHECK(compared >= 10);
  }
}
