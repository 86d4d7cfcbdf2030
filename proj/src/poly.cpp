#include "radlie/poly.hpp"

#include <algorithm>
#include <numeric>

namespace radlie {

template <class K>
Poly<K> poly_trim(const K& f, Poly<K> p) {
  while (!p.c.empty() && f.is_zero(p.c.back())) p.c.pop_back();
  return p;
}

template <class K>
Poly<K> poly_monic(const K& f, Poly<K> p) {
  p = poly_trim(f, std::move(p));
  if (p.is_zero()) return p;
  const auto inv = f.inv(p.c.back());
  for (auto& a : p.c) a = f.mul(a, inv);
  return p;
}

template <class K>
Poly<K> poly_add(const K& f, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  r.c.assign(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.add(r.c[i], b.c[i]);
  return poly_trim(f, std::move(r));
}

template <class K>
Poly<K> poly_sub(const K& f, const Poly<K>& a, const Poly<K>& b) {
  Poly<K> r;
  r.c.assign(std::max(a.c.size(), b.c.size()), f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = f.sub(r.c[i], b.c[i]);
  return poly_trim(f, std::move(r));
}

template <class K>
Poly<K> poly_mul(const K& f, const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Poly<K> r;
  r.c.assign(a.c.size() + b.c.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (f.is_zero(a.c[i])) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = f.add(r.c[i + j], f.mul(a.c[i], b.c[j]));
  }
  return poly_trim(f, std::move(r));
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divmod(const K& f, const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly<K> r = poly_trim(f, a);
  Poly<K> q;
  if (r.degree() < b.degree()) return {q, r};
  q.c.assign(static_cast<std::size_t>(r.degree() - b.degree() + 1), f.zero());
  const auto lead_inv = f.inv(b.c.back());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const auto coef = f.mul(r.c.back(), lead_inv);
    q.c[shift] = coef;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[shift + j] = f.sub(r.c[shift + j], f.mul(coef, b.c[j]));
    r = poly_trim(f, std::move(r));
  }
  return {poly_trim(f, std::move(q)), r};
}

template <class K>
Poly<K> poly_gcd(const K& f, Poly<K> a, Poly<K> b) {
  a = poly_trim(f, std::move(a));
  b = poly_trim(f, std::move(b));
  while (!b.is_zero()) {
    auto r = poly_divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, std::move(a));
}

template <class K>
Poly<K> poly_derivative(const K& f, const Poly<K>& p) {
  Poly<K> d;
  for (std::size_t i = 1; i < p.c.size(); ++i) d.c.push_back(f.mul(f.from_int(static_cast<std::int64_t>(i)), p.c[i]));
  return poly_trim(f, std::move(d));
}

template <class K>
Matrix<K> poly_eval(const Poly<K>& p, const Matrix<K>& m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  Matrix<K> acc(f, n, n);
  for (std::size_t i = p.c.size(); i-- > 0;) {
    acc = acc * m;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = f.add(acc(d, d), p.c[i]);
  }
  return acc;
}

template <class K>
Poly<K> charpoly(const Matrix<K>& m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InputError("charpoly of a non-square matrix");
  Matrix<K> h = m;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t col = 0; col + 2 < n; ++col) {
    const std::size_t piv_row = col + 1;
    std::size_t i = piv_row;
    while (i < n && f.is_zero(h(i, col))) ++i;
    if (i == n) continue;
    if (i != piv_row) {
      h.swap_rows(i, piv_row);
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, piv_row));
    }
    const auto t_inv = f.inv(h(piv_row, col));
    for (std::size_t r = piv_row + 1; r < n; ++r) {
      if (f.is_zero(h(r, col))) continue;
      const auto u = f.mul(h(r, col), t_inv);
      for (std::size_t c = 0; c < n; ++c) h(r, c) = f.sub(h(r, c), f.mul(u, h(piv_row, c)));
      for (std::size_t c = 0; c < n; ++c) h(c, piv_row) = f.add(h(c, piv_row), f.mul(u, h(c, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1..k} h_{j,j-1}) p_{i-1}   (1-based)
  std::vector<Poly<K>> p(n + 1);
  p[0].c = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly<K> lin;
    lin.c = {f.neg(h(k - 1, k - 1)), f.one()};
    Poly<K> pk = poly_mul(f, lin, p[k - 1]);
    auto t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      if (f.is_zero(t)) break;
      const auto coef = f.mul(t, h(k - i - 1, k - 1));
      if (f.is_zero(coef)) continue;
      Poly<K> term = p[k - i - 1];
      for (auto& a : term.c) a = f.mul(a, coef);
      pk = poly_sub(f, pk, term);
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

template <class K>
Poly<K> minpoly(const Matrix<K>& m) {
  const K& f = m.field();
  const std::size_t n = m.rows();
  std::vector<Vec<K>> powers;
  Echelon<K> ech(f, n * n);
  Matrix<K> cur = Matrix<K>::identity(f, n);
  while (true) {
    const Vec<K>& flat = cur.entries();
    if (!ech.insert(flat)) {
      Matrix<K> cols = Matrix<K>::from_columns(f, powers, n * n);
      auto sol = solve(cols, flat);
      Poly<K> out;
      out.c.resize(powers.size() + 1);
      for (std::size_t i = 0; i < powers.size(); ++i) out.c[i] = f.neg((*sol)[i]);
      out.c.back() = f.one();
      return out;
    }
    powers.push_back(flat);
    cur = cur * m;
  }
}

#define RADLIE_INST(K)                                                                               \
  template Poly<K> poly_trim(const K&, Poly<K>);                                                     \
  template Poly<K> poly_monic(const K&, Poly<K>);                                                    \
  template Poly<K> poly_add(const K&, const Poly<K>&, const Poly<K>&);                               \
  template Poly<K> poly_sub(const K&, const Poly<K>&, const Poly<K>&);                               \
  template Poly<K> poly_mul(const K&, const Poly<K>&, const Poly<K>&);                               \
  template std::pair<Poly<K>, Poly<K>> poly_divmod(const K&, const Poly<K>&, const Poly<K>&);        \
  template Poly<K> poly_gcd(const K&, Poly<K>, Poly<K>);                                             \
  template Poly<K> poly_derivative(const K&, const Poly<K>&);                                        \
  template Matrix<K> poly_eval(const Poly<K>&, const Matrix<K>&);                                    \
  template Poly<K> charpoly(const Matrix<K>&);                                                       \
  template Poly<K> minpoly(const Matrix<K>&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

// ---- GF(p) factoring ------------------------------------------------------

namespace {

using PF = Poly<PrimeField>;

PF poly_x(const PrimeField& f) {
  PF x;
  x.c = {f.zero(), f.one()};
  return x;
}

PF mulmod(const PrimeField& f, const PF& a, const PF& b, const PF& m) {
  return poly_divmod(f, poly_mul(f, a, b), m).second;
}

PF powmod(const PrimeField& f, PF base, const mpz_class& e, const PF& m) {
  PF result;
  result.c = {f.one()};
  result = poly_divmod(f, result, m).second;
  base = poly_divmod(f, base, m).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mulmod(f, result, result, m);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mulmod(f, result, base, m);
  }
  return result;
}

PF exact_div(const PrimeField& f, const PF& a, const PF& b) { return poly_divmod(f, a, b).first; }

void equal_degree(const PrimeField& f, const PF& g, int d, Rng& rng, std::vector<PF>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == d) {
    out.push_back(poly_monic(f, g));
    return;
  }
  const std::uint32_t p = f.modulus();
  mpz_class qd;
  mpz_ui_pow_ui(qd.get_mpz_t(), p, static_cast<unsigned long>(d));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PF a;
    for (int i = 0; i < g.degree(); ++i) a.c.push_back(f.random(rng));
    a = poly_trim(f, std::move(a));
    if (a.degree() < 1) continue;
    PF b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      PF t = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        t = mulmod(f, t, t, g);
        b = poly_add(f, b, t);
      }
    } else {
      b = powmod(f, a, (qd - 1) / 2, g);
      PF one;
      one.c = {f.one()};
      b = poly_sub(f, b, one);
    }
    PF h = poly_gcd(f, g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(f, h, d, rng, out);
      equal_degree(f, exact_div(f, g, h), d, rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree factorisation did not split");
}

void squarefree_factors(const PrimeField& f, PF s, Rng& rng, std::vector<PF>& out) {
  s = poly_monic(f, std::move(s));
  const PF x = poly_x(f);
  PF h = x;
  mpz_class p(f.modulus());
  for (int i = 1; s.degree() >= 2 * i; ++i) {
    h = powmod(f, h, p, s);
    PF g = poly_gcd(f, s, poly_sub(f, h, x));
    if (g.degree() > 0) {
      equal_degree(f, g, i, rng, out);
      s = exact_div(f, s, g);
      h = poly_divmod(f, h, s).second;
    }
  }
  if (s.degree() > 0) out.push_back(poly_monic(f, s));
}

void all_factors(const PrimeField& f, PF a, Rng& rng, std::vector<PF>& out) {
  a = poly_monic(f, std::move(a));
  if (a.degree() <= 0) return;
  PF d = poly_derivative(f, a);
  if (d.is_zero()) {
    // a(x) = b(x^p) = b(x)^p over GF(p).
    const std::size_t p = f.modulus();
    PF root;
    for (std::size_t i = 0; i < a.c.size(); i += p) root.c.push_back(a.c[i]);
    all_factors(f, root, rng, out);
    return;
  }
  PF g = poly_gcd(f, a, d);
  squarefree_factors(f, exact_div(f, a, g), rng, out);
  all_factors(f, g, rng, out);
}

}  // namespace

std::vector<Poly<PrimeField>> irreducible_factors(const PrimeField& f, const Poly<PrimeField>& p, Rng& rng) {
  std::vector<PF> out;
  all_factors(f, p, rng, out);
  std::sort(out.begin(), out.end(), [](const PF& a, const PF& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.c < b.c;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- rational roots -------------------------------------------------------

namespace {

std::optional<std::vector<mpz_class>> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 60) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::optional<std::vector<mpq_class>> rational_roots(const Poly<Rationals>& p) {
  Rationals q;
  Poly<Rationals> a = poly_trim(q, p);
  if (a.is_zero()) throw std::domain_error("roots of the zero polynomial");
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (sgn(a.c[low]) == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  // Integer polynomial with the nonzero roots of a.
  mpz_class lcm = 1;
  for (const auto& c : a.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (std::size_t i = low; i < a.c.size(); ++i) z.push_back(mpz_class(a.c[i] * lcm));
  if (z.size() > 1) {
    auto num = positive_divisors(z.front());
    auto den = positive_divisors(z.back());
    if (!num || !den) return std::nullopt;
    for (const auto& r : *num)
      for (const auto& s : *den)
        for (int sign : {1, -1}) {
          mpq_class cand(sign * r, s);
          cand.canonicalize();
          mpq_class val = 0;
          for (std::size_t i = a.c.size(); i-- > 0;) val = val * cand + a.c[i];
          if (val == 0) roots.push_back(cand);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace radlie
