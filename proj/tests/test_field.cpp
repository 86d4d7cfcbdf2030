#include <doctest.h>

#include "radlie/field.hpp"

using namespace radlie;

TEST_SUITE("field") {
  TEST_CASE("prime field inverses") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u, 65521u}) {
      const PrimeField f(p);
      for (std::uint32_t a = 1; a < std::min<std::uint32_t>(p, 500); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }

  TEST_CASE("prime field arithmetic wraps") {
    const PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.sub(2, 5) == 4);
    CHECK(f.neg(0) == 0);
    CHECK(f.from_int(-1) == 6);
    CHECK(f.from_int(-15) == 6);
  }

  TEST_CASE("prime field parsing") {
    const PrimeField f(7);
    CHECK(f.parse("3") == 3u);
    CHECK(f.parse("-1") == 6u);
    CHECK(f.parse("3/4") == f.mul(3, f.inv(4)));
    CHECK(f.parse("10") == 3u);
    CHECK_FALSE(f.parse("1/7").has_value());
    CHECK_FALSE(f.parse("x").has_value());
    CHECK_FALSE(f.parse("").has_value());
  }

  TEST_CASE("rational parsing and formatting") {
    const Rationals q;
    CHECK(q.parse("-3/6") == mpq_class(-1, 2));
    CHECK(q.parse("+5") == mpq_class(5));
    CHECK_FALSE(q.parse("1/0").has_value());
    CHECK_FALSE(q.parse("1.5").has_value());
    mpq_class x(-4, 6);
    x.canonicalize();
    CHECK(q.format(x) == "-2/3");
    CHECK(q.inv(mpq_class(-2, 3)) == mpq_class(-3, 2));
  }

  TEST_CASE("primality and field specs") {
    CHECK(is_prime(2));
    CHECK(is_prime(2147483647));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(561));
    CHECK_FALSE(is_prime(3215031751ull));
    CHECK(FieldSpec::checked(0).characteristic == 0);
    CHECK(FieldSpec::checked(7).characteristic == 7);
    CHECK_THROWS_AS(FieldSpec::checked(4), InputError);
    CHECK_THROWS_AS(FieldSpec::checked(1), InputError);
    CHECK_THROWS_AS(FieldSpec::checked(4294967311ull), InputError);
  }
}
