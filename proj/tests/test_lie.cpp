#include <doctest.h>

#include "radlie/corpus.hpp"
#include "support.hpp"

using namespace radlie;
using test::span_of;

TEST_SUITE("lie") {
  TEST_CASE("builders satisfy Jacobi") {
    const Rationals q;
    const PrimeField f5(5), f7(7);
    CHECK_FALSE(build_sl2(q).jacobi_violation());
    CHECK_FALSE(build_gl2(q).jacobi_violation());
    CHECK_FALSE(build_so3(q).jacobi_violation());
    CHECK_FALSE(build_filiform(f5, 8).jacobi_violation());
    CHECK_FALSE(build_trunc_tensor(build_sl2(f5), 1).jacobi_violation());
    CHECK_FALSE(build_trunc_tensor(build_sl2(f5), 2).jacobi_violation());
    CHECK_FALSE(build_pasha(7).jacobi_violation());
    CHECK_FALSE(build_pasha(5).jacobi_violation());
    for (const auto& d : builtin_corpus())
      std::visit([&](const auto& L) { CHECK_MESSAGE(!L.jacobi_violation(), d.name); }, d.algebra);
  }

  TEST_CASE("bokut table violates Jacobi at the recorded triples") {
    const auto L = build_bokut7();
    const auto v = L.jacobi_violation();
    REQUIRE(v.has_value());
    CHECK(v->triple == std::array<std::size_t, 3>{0, 1, 2});
  }

  TEST_CASE("bracket is bilinear and antisymmetric") {
    const auto L = build_gl2(Rationals{});
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const auto x = random_vec(L.field(), 4, rng), y = random_vec(L.field(), 4, rng);
      CHECK(vec_add(L.field(), L.bracket(x, y), L.bracket(y, x)) == L.zero_vector());
      CHECK(L.ad(x).apply(y) == L.bracket(x, y));
    }
  }

  TEST_CASE("series, centres and centralisers") {
    const Rationals q;
    const auto h = build_heisenberg(q);
    CHECK(centre(h) == span_of(h, {{0, 0, 1}}));
    CHECK(nilpotency_class(h, h.full_space()) == 2u);
    CHECK(derived_length(h, h.full_space()) == 2u);
    const auto s = build_sl2(q);
    CHECK(centre(s).is_zero());
    CHECK(is_perfect(s, s.full_space()));
    CHECK_FALSE(nilpotency_class(s, s.full_space()).has_value());
    CHECK_FALSE(derived_length(s, s.full_space()).has_value());
    for (std::size_t n = 3; n <= 8; ++n) {
      const auto f = build_filiform(PrimeField(5), n);
      CHECK(nilpotency_class(f, f.full_space()) == n - 1);
      CHECK(lower_central_series(f, f.full_space()).size() == n);
    }
    const auto r2 = build_r2(q);
    CHECK(centraliser(r2, span_of(r2, {{0, 1}})) == span_of(r2, {{0, 1}}));
    CHECK(factor_centraliser(r2, r2.full_space(), span_of(r2, {{0, 1}})).is_full());
    CHECK(factor_centraliser(r2, span_of(r2, {{0, 1}}), r2.zero_space()) == span_of(r2, {{0, 1}}));
  }

  TEST_CASE("ideal closure and core") {
    const auto s = build_sl2(Rationals{});
    CHECK(spin(s, {s.basis_vector(0)}) == s.full_space());
    CHECK(core(s, span_of(s, {{1, 0, 0}, {0, 0, 1}})).is_zero());
    const auto h = build_heisenberg(Rationals{});
    CHECK(ideal_closure(h, span_of(h, {{1, 0, 0}})) == span_of(h, {{1, 0, 0}, {0, 0, 1}}));
    CHECK(is_ideal(h, span_of(h, {{1, 0, 0}, {0, 0, 1}})));
  }

  TEST_CASE("killing form") {
    const auto k = killing_matrix(build_sl2(Rationals{}));
    CHECK(rank(k) == 3);
    CHECK(killing_matrix(build_heisenberg(Rationals{})).is_zero());
  }

  TEST_CASE("quotients, restrictions, direct sums") {
    const Rationals q;
    const auto h = build_heisenberg(q);
    const auto qu = quotient(h, centre(h));
    CHECK(qu.algebra.dim() == 2);
    CHECK(nilpotency_class(qu.algebra, qu.algebra.full_space()) == 1u);
    CHECK(qu.pull(qu.algebra.zero_space()) == centre(h));
    CHECK(qu.push(h.full_space()) == qu.algebra.full_space());
    const auto g = build_gl2(q);
    const auto sl = span_of(g, {{0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, -1}});
    const auto r = restrict_to(g, sl);
    CHECK(r.algebra.dim() == 3);
    CHECK(centre(r.algebra).is_zero());
    CHECK(r.pull(r.algebra.full_space()) == sl);
    const auto ds = direct_sum(build_sl2(q), build_r2(q));
    CHECK(ds.dim() == 5);
    CHECK(ds.basis_bracket(0, 3) == ds.zero_vector());
  }

  TEST_CASE("change of basis preserves invariants") {
    const auto L = build_filiform(Rationals{}, 5);
    auto p = Matrix<Rationals>::identity(L.field(), 5);
    p(0, 1) = 2;
    p(3, 2) = -1;
    const auto M = change_basis(L, p);
    CHECK_FALSE(M.jacobi_violation());
    CHECK(nilpotency_class(M, M.full_space()) == 4u);
    CHECK(centre(M).dim() == centre(L).dim());
  }

  TEST_CASE("rendering") {
    const auto L = build_heisenberg(Rationals{});
    CHECK(format_vector(L, test::vec_of(L.field(), {1, 0, -2})) == "x - 2*z");
    CHECK(format_subspace(L, L.zero_space()) == "0");
  }
}
