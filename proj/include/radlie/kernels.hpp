#pragma once

// Row kernels for GF(p) elimination.  Residues are uint32 in [0, p).
// The scalar versions are the reference; vector versions must agree with them
// bit for bit and are picked at runtime.

#include <cstddef>
#include <cstdint>

namespace radlie::simd {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);

/// Currently selected instruction set.  Defaults to the best available one;
/// RADLIE_SIMD=scalar in the environment forces the reference path.
Isa active_isa();

/// Override the selection (tests use this).  Throws std::invalid_argument if
/// the requested ISA is not available on this machine.
void set_isa(Isa isa);

// y[i] = y[i] + a * x[i]  (mod p)
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
// y[i] = a * y[i]  (mod p)
void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
// sum x[i] * y[i]  (mod p)
std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p);

namespace scalar {
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define RADLIE_HAVE_AVX2_KERNELS 1
namespace avx2 {
// Only valid for p < 2^15; the dispatcher routes larger moduli to scalar.
void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n, std::uint32_t p);
void scale_mod(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
std::uint32_t dot_mod(const std::uint32_t* x, const std::uint32_t* y, std::size_t n, std::uint32_t p);
}  // namespace avx2
#endif

inline constexpr std::uint32_t kVectorModulusLimit = 1u << 15;

}  // namespace radlie::simd
