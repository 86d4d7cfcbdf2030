#include <doctest.h>

#include <random>
#include <vector>

#include "radlie/kernels.hpp"

using namespace radlie::simd;

namespace {

std::vector<std::uint32_t> residues(std::size_t n, std::uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  std::vector<std::uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels against a plain loop") {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 7u, 65521u, 2147483647u}) {
      auto x = residues(37, p, rng), y = residues(37, p, rng);
      const std::uint32_t a = p - 1;
      auto want = y;
      std::uint64_t dot = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        want[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
        dot = (dot + static_cast<std::uint64_t>(x[i]) * y[i]) % p;
      }
      CHECK(scalar::dot_mod(x.data(), y.data(), x.size(), p) == dot);
      scalar::axpy_mod(y.data(), x.data(), a, y.size(), p);
      CHECK(y == want);
    }
  }

#ifdef RADLIE_HAVE_AVX2_KERNELS
  TEST_CASE("avx2 kernels agree with scalar bit for bit") {
    if (!isa_available(Isa::avx2)) return;
    std::mt19937_64 rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 251u, 4099u, 32749u}) {
      for (std::size_t n = 0; n <= 70; ++n) {
        const auto x = residues(n, p, rng), y0 = residues(n, p, rng);
        const std::uint32_t a = static_cast<std::uint32_t>(rng() % p);
        auto ys = y0, yv = y0;
        scalar::axpy_mod(ys.data(), x.data(), a, n, p);
        avx2::axpy_mod(yv.data(), x.data(), a, n, p);
        REQUIRE(ys == yv);
        scalar::scale_mod(ys.data(), a, n, p);
        avx2::scale_mod(yv.data(), a, n, p);
        REQUIRE(ys == yv);
        REQUIRE(scalar::dot_mod(x.data(), y0.data(), n, p) == avx2::dot_mod(x.data(), y0.data(), n, p));
      }
    }
  }

  TEST_CASE("dispatcher routes large moduli to scalar") {
    if (!isa_available(Isa::avx2)) return;
    set_isa(Isa::avx2);
    std::mt19937_64 rng(5);
    const std::uint32_t p = 65521;
    const auto x = residues(40, p, rng);
    auto y = residues(40, p, rng), ref = y;
    axpy_mod(y.data(), x.data(), 12345, 40, p);
    scalar::axpy_mod(ref.data(), x.data(), 12345, 40, p);
    CHECK(y == ref);
    set_isa(Isa::scalar);
    CHECK(active_isa() == Isa::scalar);
    set_isa(Isa::avx2);
  }
#endif

  TEST_CASE("isa names") {
    CHECK(std::string(isa_name(Isa::scalar)) == "scalar");
    CHECK(isa_available(Isa::scalar));
  }
}
