#include <doctest.h>

#include "radlie/genrad.hpp"
#include "support.hpp"

using namespace radlie;
using test::fixture;
using test::fixture_algebra;
using test::span_of;

namespace {

Subspace<PrimeField> pasha_a(const LieAlgebra<PrimeField>& L) {
  std::vector<Vec<PrimeField>> a;
  for (std::size_t i = 0; i + 1 < L.dim(); ++i) a.push_back(L.basis_vector(i));
  return L.span(a);
}

}  // namespace

TEST_SUITE("genrad") {
  TEST_CASE("quasi-minimal and quasi-simple predicates") {
    Settings s;
    Rng rng(1);
    const auto g = build_gl2(Rationals{});
    const auto sl = span_of(g, {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}});
    CHECK(is_quasi_minimal(g, sl, s, rng));
    CHECK(is_quasi_simple(g, sl, s, rng));
    CHECK_FALSE(is_quasi_minimal(g, centre(g), s, rng));
    CHECK_THROWS_AS(is_quasi_minimal(g, g.zero_space(), s, rng), InputError);
    CHECK_THROWS_AS(is_quasi_minimal(g, span_of(g, {{0, 1, 0, 0}}), s, rng), InputError);
    const auto P = build_pasha(7);
    CHECK(is_quasi_minimal(P, pasha_a(P), s, rng));
    CHECK_FALSE(is_quasi_simple(P, pasha_a(P), s, rng));
  }

  TEST_CASE("generalised radicals of small algebras") {
    Settings s;
    Analysis<Rationals> r2(build_r2(Rationals{}), s);
    const auto e2 = span_of(r2.algebra(), {{0, 1}});
    CHECK(r2.n_dagger() == e2);
    CHECK(r2.n_star().value == e2);
    CHECK(r2.n_hat() == e2);
    CHECK(r2.n_tilde() == e2);
    CHECK(r2.mcomp().components.empty());

    Analysis<Rationals> g(build_gl2(Rationals{}), s);
    CHECK(g.n_star().value.is_full());
    CHECK(g.mcomp().components.size() == 1);
    CHECK(g.scomp().components.size() == 1);
    CHECK(g.n_tilde().is_full());

    Analysis<Rationals> sh(fixture_algebra<Rationals>("sl2.heis-q"), s);
    CHECK(sh.n_star().value == sh.nilradical());
    CHECK(sh.n_tilde() == sh.nilradical());
    CHECK(sh.zn() == sh.centre());
    CHECK(sh.cn() == sh.centre());
  }

  TEST_CASE("pasha example") {
    const auto d = fixture("pasha7");
    Analysis<PrimeField> a(std::get<LieAlgebra<PrimeField>>(d.algebra), Settings{}, d.hints);
    const auto A = pasha_a(a.algebra());
    CHECK(a.nilradical().is_zero());
    CHECK(a.quasi_minimal(A));
    CHECK_FALSE(a.quasi_simple(A));
    REQUIRE(a.mcomp().components.size() == 1);
    CHECK(a.mcomp().components[0] == A);
    CHECK(a.n_dagger() == A);
    CHECK(a.scomp().span.is_zero());
    CHECK(a.n_hat().is_zero());
    CHECK(centraliser(a.algebra(), a.n_hat()).is_full());
    const auto& star = a.series(SeriesKind::star);
    CHECK(star.fixpoint.dim() == 18);
  }

  TEST_CASE("truncated tensor over GF(5)") {
    Analysis<PrimeField> a(build_trunc_tensor(build_sl2(PrimeField(5)), 1), Settings{});
    CHECK(a.nilradical().dim() == 12);
    CHECK(a.n_star().value.dim() == 12);
    CHECK(a.frattini().ideal.dim() == 9);
    CHECK(a.n_tilde().dim() == 12);
  }

  TEST_CASE("hints are verified") {
    auto d = fixture("r2-gf3");
    const auto& L = std::get<LieAlgebra<PrimeField>>(d.algebra);
    d.hints = {{"minimal_ideals", nlohmann::json::array({subspace_to_json(L.full_space())})}};
    Analysis<PrimeField> a(L, Settings{}, d.hints);
    CHECK_THROWS_AS(a.verified_hint_ideals(), CertificateError);
  }

  TEST_CASE("child analyses are cached and consistent") {
    Analysis<Rationals> a(fixture_algebra<Rationals>("sl2+r2-q"), Settings{});
    const auto n = a.nilradical();
    auto& c1 = a.sub(a.radical());
    auto& c2 = a.sub(a.radical());
    CHECK(&c1 == &c2);
    CHECK(a.restriction(a.radical()).pull(c1.nilradical()) == n);
    auto& q = a.quot(n);
    CHECK(q.algebra().dim() == 4);
    CHECK(a.quotient_map(n).pull(q.nilradical()) == a.radical());
  }

  TEST_CASE("iterated series end in a repeated term") {
    for (const char* name : {"gl2-q", "sl2+r2-q", "heis+sl2-q", "abelian3-q"}) {
      Analysis<Rationals> a(fixture_algebra<Rationals>(name), Settings{});
      for (auto kind : {SeriesKind::star, SeriesKind::tilde}) {
        const auto& s = a.series(kind);
        REQUIRE(s.terms.size() >= 2);
        CHECK(s.terms.front().is_full());
        CHECK(s.terms.back() == s.terms[s.terms.size() - 2]);
        CHECK(s.fixpoint == s.terms.back());
        for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) CHECK(s.terms[i].contains(s.terms[i + 1]));
      }
    }
  }
}
