#include "radlie/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace radlie::simd {

namespace scalar {

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
  if (a == 0) return;
  for (std::size_t i = 0; i < n; ++i)
    y[i] = static_cast<std::uint32_t>((y[i] + static_cast<std::uint64_t>(a) * x[i]) % p);
}

void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) y[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * y[i] % p);
}

std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc = (acc + static_cast<std::uint64_t>(x[i]) * y[i]) % p;
  return static_cast<std::uint32_t>(acc);
}

}  // namespace scalar

namespace {

Isa detect() {
  if (const char* env = std::getenv("RADLIE_SIMD"); env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "?";
}

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#ifdef RADLIE_HAVE_AVX2_KERNELS
  static const bool has_avx2 = __builtin_cpu_supports("avx2");
  return has_avx2;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw std::invalid_argument(std::string("ISA not available: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p) {
#ifdef RADLIE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::avx2 && p < kVectorModulusLimit) return avx2::axpy_mod(y, x, a, n, p);
#endif
  scalar::axpy_mod(y, x, a, n, p);
}

void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
#ifdef RADLIE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::avx2 && p < kVectorModulusLimit) return avx2::scale_mod(y, a, n, p);
#endif
  scalar::scale_mod(y, a, n, p);
}

std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p) {
#ifdef RADLIE_HAVE_AVX2_KERNELS
  if (active_isa() == Isa::avx2 && p < kVectorModulusLimit) return avx2::dot_mod(x, y, n, p);
#endif
  return scalar::dot_mod(x, y, n, p);
}

}  // namespace radlie::simd
