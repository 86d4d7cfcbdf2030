#include <doctest.h>

#include "linalg_props.hpp"
#include "radlie/matrix.hpp"

using namespace radlie;

TEST_SUITE("linalg") {
  TEST_CASE("randomized properties over Q") {
    const auto st = test::run_linalg_properties(Rationals{}, 1000, 17);
    CHECK(st.checks >= 1000);
    CHECK(st.violations.empty());
  }

  TEST_CASE("randomized properties over GF(p)") {
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const auto st = test::run_linalg_properties(PrimeField(p), 1000, 29 + p);
      CHECK(st.checks >= 1000);
      CHECK(st.violations.empty());
    }
  }

  TEST_CASE("kernel, solve and inverse on a fixed matrix") {
    const Rationals q;
    const auto m = Matrix<Rationals>::from_rows(q, {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    CHECK(rank(m) == 2);
    const auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(is_zero_vec(q, m.apply(ker[0])));
    const auto x = solve(m, Vec<Rationals>{6, 12, 2});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == Vec<Rationals>{6, 12, 2});
    CHECK_FALSE(solve(m, Vec<Rationals>{1, 0, 0}).has_value());
    const auto a = Matrix<Rationals>::from_rows(q, {{2, 1}, {1, 1}}, 2);
    CHECK(a * inverse(a) == Matrix<Rationals>::identity(q, 2));
  }

  TEST_CASE("subquotient coordinates") {
    const PrimeField f(5);
    const auto upper = Subspace<PrimeField>::full(f, 3);
    const auto lower = Subspace<PrimeField>::span(f, 3, {{1, 1, 0}});
    const Subquotient<PrimeField> sq(upper, lower);
    CHECK(sq.dim() == 2);
    CHECK(is_zero_vec(f, sq.coords({2, 2, 0})));
    const auto img = sq.push(Subspace<PrimeField>::span(f, 3, {{1, 0, 0}}));
    CHECK(sq.pull(img) == Subspace<PrimeField>::span(f, 3, {{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(Subquotient<PrimeField>(lower, upper), InputError);
  }

  TEST_CASE("zassenhaus intersection on a known pair") {
    const Rationals q;
    const auto u = Subspace<Rationals>::span(q, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}});
    const auto v = Subspace<Rationals>::span(q, 4, {{1, 1, 0, 0}, {0, 0, 1, 0}});
    CHECK(u.intersect(v) == Subspace<Rationals>::span(q, 4, {{1, 1, 0, 0}}));
  }
}
