#include "radlie/field.hpp"

#include <array>
#include <charconv>

namespace radlie {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::checked(std::uint64_t characteristic) {
  if (characteristic == 0) return {0};
  if (characteristic >= (1ull << 31) || !is_prime(characteristic))
    throw InputError("characteristic " + std::to_string(characteristic) +
                     " is neither 0 nor a prime below 2^31");
  return {static_cast<std::uint32_t>(characteristic)};
}

mpq_class Rationals::inv(const mpq_class& a) const {
  if (sgn(a) == 0) throw std::domain_error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), a.get_mpq_t());
  return r;
}

std::optional<mpq_class> Rationals::parse(std::string_view text) const {
  text = trim(text);
  const auto slash = text.find('/');
  const std::string_view num = slash == std::string_view::npos ? text : text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_text(num)) return std::nullopt;
  if (slash != std::string_view::npos && (!is_integer_text(den) || den.front() == '-' || den.front() == '+'))
    return std::nullopt;
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(1);
  if (slash != std::string_view::npos) zd = mpz_class(std::string(den), 10);
  if (zd == 0) return std::nullopt;
  mpq_class q(zn, zd);
  q.canonicalize();
  return q;
}

mpq_class Rationals::random(Rng& rng, int bound) const {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, 3);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InputError("GF(p) requires a prime p below 2^31, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += p_;
  return static_cast<std::uint32_t>(t);
}

std::optional<std::uint32_t> PrimeField::parse(std::string_view text) const {
  text = trim(text);
  const auto slash = text.find('/');
  auto parse_int = [this](std::string_view s) -> std::optional<std::uint32_t> {
    if (!is_integer_text(s)) return std::nullopt;
    mpz_class z(std::string(s.front() == '+' ? s.substr(1) : s), 10);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return static_cast<std::uint32_t>(r.get_ui());
  };
  if (slash == std::string_view::npos) return parse_int(text);
  auto n = parse_int(text.substr(0, slash));
  auto d = parse_int(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return mul(*n, inv(*d));
}

}  // namespace radlie
