#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields GF(p).
//
// Every algorithm in the library is a template over a field class K with a
// nested Elem type.  Field objects are small values; they are copied freely
// into matrices and subspaces so that every value knows its own field.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace radlie {

// Error taxonomy shared by the whole library.  The CLI maps these onto exit
// codes (input -> 2, capacity -> 3).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A quantity has no algorithm in the requested regime (e.g. Frattini ideal of
// a non-nilpotent algebra over Q).
class RegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A supplied hint or computed certificate failed verification.
class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

/// Deterministic primality test for 64-bit integers (Miller-Rabin with a
/// fixed witness set that is exact below 2^64).
bool is_prime(std::uint64_t n);

/// Characteristic of a field: 0 or a prime.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  /// Throws InputError unless the characteristic is 0 or a prime below 2^31.
  static FieldSpec checked(std::uint64_t characteristic);
  bool operator==(const FieldSpec&) const = default;
};

class Rationals {
 public:
  using Elem = mpq_class;

  static constexpr std::uint32_t characteristic() { return 0; }
  FieldSpec spec() const { return {0}; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(std::int64_t v) const { return Elem(static_cast<long>(v)); }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;

  /// Accepts "a" or "a/b" with optional sign; returns nullopt on malformed
  /// text or zero denominator.
  std::optional<Elem> parse(std::string_view text) const;
  std::string format(const Elem& a) const { return a.get_str(); }

  /// Small random rational: numerator in [-bound, bound], denominator in
  /// {1, 2, 3}.  Keeps randomized tests exact without blowing up heights.
  Elem random(Rng& rng, int bound = 3) const;

  bool operator==(const Rationals&) const { return true; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return {p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    auto r = v % m;
    return static_cast<Elem>(r < 0 ? r + m : r);
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;

  /// Accepts integers and "a/b" fractions whose denominator is a unit mod p.
  std::optional<Elem> parse(std::string_view text) const;
  std::string format(Elem a) const { return std::to_string(a); }

  Elem random(Rng& rng) const {
    return static_cast<Elem>(std::uniform_int_distribution<std::uint32_t>(0, p_ - 1)(rng));
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

template <class K>
concept ExactField = requires(const K& f, const typename K::Elem& a, std::string_view s) {
  typename K::Elem;
  { f.zero() } -> std::same_as<typename K::Elem>;
  { f.one() } -> std::same_as<typename K::Elem>;
  { f.is_zero(a) } -> std::same_as<bool>;
  { f.add(a, a) } -> std::same_as<typename K::Elem>;
  { f.sub(a, a) } -> std::same_as<typename K::Elem>;
  { f.mul(a, a) } -> std::same_as<typename K::Elem>;
  { f.neg(a) } -> std::same_as<typename K::Elem>;
  { f.inv(a) } -> std::same_as<typename K::Elem>;
  { f.parse(s) } -> std::same_as<std::optional<typename K::Elem>>;
  { f.format(a) } -> std::same_as<std::string>;
  { f.characteristic() } -> std::convertible_to<std::uint32_t>;
};

static_assert(ExactField<Rationals>);
static_assert(ExactField<PrimeField>);

/// Number of elements of a finite field, or nullopt for Q.
inline std::optional<std::uint64_t> field_order(const Rationals&) { return std::nullopt; }
inline std::optional<std::uint64_t> field_order(const PrimeField& f) { return f.modulus(); }

}  // namespace radlie
