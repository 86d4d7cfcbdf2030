#include "radlie/radicals.hpp"

#include <set>
#include <type_traits>

#include <fmt/format.h>

#include "radlie/enumerate.hpp"

namespace radlie {

const char* factor_type_name(FactorType t) {
  switch (t) {
    case FactorType::abelian: return "abelian";
    case FactorType::simple: return "simple";
    case FactorType::irregular: return "irregular";
  }
  return "?";
}

template <class K>
std::pair<FactorType, bool> factor_type(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b,
                                        const Settings& s, Rng& rng) {
  if (b.contains(product_space(L, a, a))) return {FactorType::abelian, true};
  const Module<K> m = adjoint_module(L, Subquotient<K>(a, b), a.basis());
  const auto r = split_module(m, s.split(), rng);
  if (r.verdict == Verdict::irreducible) return {FactorType::simple, true};
  return {FactorType::irregular, r.verdict == Verdict::reducible};
}

template <class K>
ChiefSeries<K> chief_series(const LieAlgebra<K>& L, const std::vector<Subspace<K>>& through, const Settings& s,
                            Rng& rng) {
  for (const auto& t : through)
    if (!is_ideal(L, t)) throw InputError("chief series: seed subspace is not an ideal");
  const Module<K> m = adjoint_module(L, Subquotient<K>(L.full_space(), L.zero_space()));
  auto cs = composition_series(m, through, s.split(), rng);
  ChiefSeries<K> out;
  out.chain = cs.chain;
  out.certified = cs.certified;
  for (std::size_t k = 1; k < cs.chain.size(); ++k) {
    auto [type, ok] = factor_type(L, cs.chain[k], cs.chain[k - 1], s, rng);
    out.factors.push_back({cs.chain[k - 1], cs.chain[k], type, ok && cs.certified,
                           cs.certified ? "composition series" : "uncertified split"});
    out.certified = out.certified && ok;
  }
  return out;
}

template <class K>
std::optional<bool> is_minimal_ideal(const LieAlgebra<K>& L, const Subspace<K>& i, const Settings& s, Rng& rng) {
  if (i.is_zero()) throw InputError("minimality test of the zero ideal");
  if (!is_ideal(L, i)) return false;
  const Module<K> m = adjoint_module(L, Subquotient<K>(i, L.zero_space()));
  const auto r = split_module(m, s.split(), rng);
  if (r.verdict == Verdict::unknown) return std::nullopt;
  return r.verdict == Verdict::irreducible;
}

template <class K>
Subspace<K> nilradical(const LieAlgebra<K>& L, const Settings& s, Rng& rng) {
  const K& f = L.field();
  if (nilpotency_class(L, L.full_space())) return L.full_space();
  Subspace<K> n = L.zero_space();
  if constexpr (std::is_same_v<K, Rationals>) {
    // x ∈ N iff ad x lies in the radical of the enveloping algebra of ad L,
    // which in characteristic 0 is the radical of the trace form.
    (void)s;
    (void)rng;
    const Module<K> m = adjoint_module(L, Subquotient<K>(L.full_space(), L.zero_space()));
    const auto alg = enveloping_algebra(m);
    std::vector<Vec<K>> rows;
    for (const auto& b : alg) {
      Vec<K> row(L.dim());
      for (std::size_t i = 0; i < L.dim(); ++i) row[i] = (L.ad_basis(i) * b).trace();
      rows.push_back(std::move(row));
    }
    n = kernel(Matrix<K>::from_rows(f, rows, L.dim()));
  } else {
    const auto cs = chief_series(L, {}, s, rng);
    if (!cs.certified) throw CapacityError("nilradical: chief series could not be certified within the spin budget");
    n = L.full_space();
    for (const auto& fac : cs.factors) n = n.intersect(factor_centraliser(L, fac.upper, fac.lower));
  }
  if (!is_ideal(L, n) || !nilpotency_class(L, n)) throw std::logic_error("nilradical: result is not a nilpotent ideal");
  return n;
}

template <class K>
Subspace<K> solvable_radical(const LieAlgebra<K>& L, const Settings& s, Rng& rng) {
  const K& f = L.field();
  if (derived_length(L, L.full_space())) return L.full_space();
  Subspace<K> r = L.zero_space();
  if constexpr (std::is_same_v<K, Rationals>) {
    const Matrix<K> kill = killing_matrix(L);
    const Subspace<K> l2 = product_space(L, L.full_space(), L.full_space());
    std::vector<Vec<K>> rows;
    for (const auto& y : l2.basis()) rows.push_back(kill.apply(y));
    r = rows.empty() ? L.full_space() : kernel(Matrix<K>::from_rows(f, rows, L.dim()));
  } else {
    while (true) {
      const Quotient<K> q = quotient(L, r);
      const Subspace<K> nq = nilradical(q.algebra, s, rng);
      if (nq.is_zero()) break;
      r = q.pull(nq);
    }
  }
  if (!is_ideal(L, r) || !derived_length(L, r)) throw std::logic_error("solvable radical: result is not a solvable ideal");
  return r;
}

template <class K>
std::vector<Matrix<K>> derivations(const LieAlgebra<K>& L, const Settings& s) {
  const std::size_t n = L.dim();
  if (n > s.derivation_dim_cap)
    throw CapacityError(fmt::format("derivation algebra of a {}-dimensional algebra exceeds the cap {}", n,
                                    s.derivation_dim_cap));
  const K& f = L.field();
  Echelon<K> eqs(f, n * n);
  // Unknown D(r, c) at index r*n + c; D e_c = sum_r D(r, c) e_r.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        Vec<K> row = zero_vec(f, n * n);
        for (std::size_t k = 0; k < n; ++k) {
          const auto& c = L.ad_basis(i)(k, j);
          if (!f.is_zero(c)) row[r * n + k] = f.add(row[r * n + k], c);
        }
        for (std::size_t t = 0; t < n; ++t) {
          // [D e_i, e_j]_r = sum_t D(t, i) ad_t(r, j)
          const auto& a = L.ad_basis(t)(r, j);
          if (!f.is_zero(a)) row[t * n + i] = f.sub(row[t * n + i], a);
          // [e_i, D e_j]_r = sum_t D(t, j) ad_i(r, t)
          const auto& b = L.ad_basis(i)(r, t);
          if (!f.is_zero(b)) row[t * n + j] = f.sub(row[t * n + j], b);
        }
        eqs.insert(std::move(row));
      }
  std::vector<Matrix<K>> out;
  for (const auto& v : kernel_basis(Matrix<K>::from_rows(f, eqs.rows(), n * n))) {
    Matrix<K> d(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) d(r, c) = v[r * n + c];
    out.push_back(std::move(d));
  }
  return out;
}

template <class K>
bool is_derivation(const LieAlgebra<K>& L, const Matrix<K>& d) {
  const K& f = L.field();
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) {
      Vec<K> lhs = d.apply(L.basis_bracket(i, j));
      Vec<K> rhs = vec_add(f, L.bracket(d.column(i), L.basis_vector(j)), L.bracket(L.basis_vector(i), d.column(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

template <class K>
bool is_invariant(const Subspace<K>& i, const std::vector<Matrix<K>>& ops) {
  for (const auto& d : ops)
    for (const auto& v : i.basis())
      if (!i.contains(d.apply(v))) return false;
  return true;
}

template <class K>
Subspace<K> invariant_core(const Subspace<K>& s, const std::vector<Matrix<K>>& ops) {
  const std::size_t n = s.ambient();
  Subspace<K> x = s;
  while (!x.is_zero()) {
    const std::size_t k = x.dim();
    Matrix<K> m(s.field(), n * ops.size(), k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t o = 0; o < ops.size(); ++o) {
        Vec<K> r = x.reduce(ops[o].apply(x.basis()[a]));
        for (std::size_t t = 0; t < n; ++t) m(o * n + t, a) = r[t];
      }
    Subspace<K> next = Subspace<K>::zero(s.field(), n);
    for (const auto& c : kernel_basis(m)) next.add(x.combine(c));
    if (next.dim() == x.dim()) return x;
    x = std::move(next);
  }
  return x;
}

template <class K>
CharRadical<K> characteristic_radical(const LieAlgebra<K>& L, const Subspace<K>& s, const Settings& st, Rng& rng) {
  const Restriction<K> res = restrict_to(L, s);
  const Subspace<K> rs = solvable_radical(res.algebra, st, rng);
  const Subspace<K> inner = invariant_core(rs, derivations(res.algebra, st));
  CharRadical<K> out{res.pull(inner), std::nullopt};
  try {
    out.of_l = invariant_core(res.pull(rs), derivations(L, st));
  } catch (const CapacityError&) {
  }
  return out;
}

template <class K>
Regularity regularity(const LieAlgebra<K>& L, const Subspace<K>& u, const Settings& s, Rng& rng) {
  Regularity out;
  const Restriction<K> res = restrict_to(L, u);
  const Subspace<K> nu = nilradical(res.algebra, s, rng);
  const Subspace<K> ru = solvable_radical(res.algebra, s, rng);
  out.nil_class = nilpotency_class(res.algebra, nu);
  out.derived_length = derived_length(res.algebra, ru);
  const std::uint64_t p = L.field().characteristic();
  if (p == 0) return out;
  out.nilregular = *out.nil_class + 1 < p;
  out.solregular = *out.derived_length < 64 && (std::uint64_t{1} << *out.derived_length) < p;
  out.regular = out.nilregular || out.solregular;
  return out;
}

template <class K>
Subspace<K> max_semisimple_ideal(const LieAlgebra<K>& L, const Settings& s, Rng& rng) {
  if (L.field().characteristic() != 0) throw RegimeError("maximal semisimple ideal is only available in characteristic 0");
  const Subspace<K> c = centraliser(L, nilradical(L, s, rng));
  return product_space(L, c, c);
}

template <class K>
std::optional<Subspace<K>> abelian_complement(const LieAlgebra<K>& L, const Subspace<K>& i) {
  const K& f = L.field();
  const Quotient<K> q = quotient(L, i);
  const std::size_t m = q.complement.size(), k = i.dim(), n = L.dim();
  if (m == 0) return L.zero_space();
  // Section x_a -> e_{comp[a]} + d_a with d_a = sum_t D(a, t) i_t; require
  // [s x_a, s x_b] = s [x_a, x_b] for a < b.  Unknown D(a, t) at a*k + t.
  std::vector<Vec<K>> sec;
  for (auto c : q.complement) sec.push_back(L.basis_vector(c));
  std::vector<Vec<K>> rows;
  Vec<K> rhs;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const Vec<K> br = L.bracket(sec[a], sec[b]);
      const Vec<K> qc = q.push(br);
      // constant term: br - s(qc); must be cancelled by the linear part.
      Vec<K> cst = vec_sub(f, br, q.lift(qc));
      std::vector<Vec<K>> cols(m * k, zero_vec(f, n));
      for (std::size_t t = 0; t < k; ++t) {
        const Vec<K>& it = i.basis()[t];
        cols[b * k + t] = vec_add(f, cols[b * k + t], L.bracket(sec[a], it));
        cols[a * k + t] = vec_add(f, cols[a * k + t], L.bracket(it, sec[b]));
        for (std::size_t c = 0; c < m; ++c)
          if (!f.is_zero(qc[c])) axpy(f, cols[c * k + t], f.neg(qc[c]), it);
      }
      for (std::size_t r = 0; r < n; ++r) {
        Vec<K> row(m * k);
        for (std::size_t u = 0; u < m * k; ++u) row[u] = cols[u][r];
        rows.push_back(std::move(row));
        rhs.push_back(f.neg(cst[r]));
      }
    }
  std::optional<Vec<K>> d;
  if (rows.empty())
    d = zero_vec(f, m * k);
  else
    d = solve(Matrix<K>::from_rows(f, rows, m * k), rhs);
  if (!d) return std::nullopt;
  Subspace<K> u = L.zero_space();
  for (std::size_t a = 0; a < m; ++a) {
    Vec<K> v = sec[a];
    for (std::size_t t = 0; t < k; ++t) axpy(f, v, (*d)[a * k + t], i.basis()[t]);
    u.add(v);
  }
  if (!is_subalgebra(L, u)) throw std::logic_error("abelian complement: solution is not a subalgebra");
  return u;
}

template <class K>
SocleReport<K> l_socle(const LieAlgebra<K>& L, const Subspace<K>& s, const Settings& st, Rng& rng) {
  if (!is_ideal(L, s)) throw InputError("L-socle: subspace is not an ideal");
  SocleReport<K> out{{}, L.zero_space(), L.zero_space(), true, true};
  if (s.is_zero()) return out;
  const Subquotient<K> sq(s, L.zero_space());
  const Module<K> m = adjoint_module(L, sq);
  const auto dec = socle(m, st.split(), rng);
  out.certified = dec.certified;
  out.complete = dec.certified;
  auto to_l = [&](const Subspace<K>& x) {
    Subspace<K> y = L.zero_space();
    for (const auto& c : x.basis()) y.add(sq.lift(c));
    return y;
  };
  for (std::size_t t = 0; t < dec.components.size(); ++t) {
    const auto& imgs = dec.components[t];
    const Subspace<K> first = to_l(imgs.front());
    const bool abelian = product_space(L, first, first).is_zero();
    Subspace<K> comp = L.zero_space();
    for (const auto& x : imgs) comp = comp + to_l(x);
    out.socle = out.socle + comp;
    if (abelian) out.abelian_socle = out.abelian_socle + comp;
    if (imgs.size() == 1) {
      out.minimal_ideals.push_back(first);
      continue;
    }
    bool listed = false;
    if constexpr (std::is_same_v<K, PrimeField>) {
      const auto& h = dec.homs[t];
      if (projective_count(L.field().modulus(), h.seeds.size()) <= st.enum_cap) {
        std::set<Subspace<K>> seen;
        for_each_projective_point(L.field(), h.seeds, m.dim, [&](const Vec<K>& m0) {
          seen.insert(to_l(h.image(m0)));
          return true;
        });
        for (const auto& x : seen) out.minimal_ideals.push_back(x);
        listed = true;
      }
    }
    if (!listed) {
      for (const auto& x : imgs) out.minimal_ideals.push_back(to_l(x));
      out.complete = false;
    }
  }
  return out;
}

template <class K>
FrattiniResult<K> frattini(const LieAlgebra<K>& L, const Settings& s, Rng& rng) {
  // phi contains N(Q)^2 for every quotient Q = L/B with B ⊆ phi, so climb
  // until the nilradical of the quotient is abelian.  An abelian, completely
  // reducible, complemented nilradical makes the quotient phi-free.
  Subspace<K> b = L.zero_space();
  while (true) {
    const Quotient<K> q = quotient(L, b);
    const Subspace<K> nq = nilradical(q.algebra, s, rng);
    const Subspace<K> nq2 = product_space(q.algebra, nq, nq);
    if (!nq2.is_zero()) {
      b = q.pull(nq2);
      continue;
    }
    if (nq.is_zero()) return {b, "nilradical", std::nullopt};
    const auto soc = l_socle(q.algebra, nq, s, rng);
    if (soc.certified && soc.socle == nq && abelian_complement(q.algebra, nq)) return {b, "split abelian socle", std::nullopt};
    break;
  }
  if constexpr (std::is_same_v<K, PrimeField>) {
    const SubspaceLattice lat = enumerate_lattice(L, s.subspace_cap);
    Subspace<K> fs = L.full_space();
    for (const auto& m : maximal_subalgebras(L, lat)) fs = fs.intersect(m);
    return {core(L, fs), "maximal subalgebras", fs};
  } else {
    throw RegimeError("Frattini ideal: the nilradical bound does not close and no enumeration exists over Q");
  }
}

template <class K>
bool induces_inner(const LieAlgebra<K>& L, const Subspace<K>& a, const Subspace<K>& b, const Vec<K>& x) {
  const K& f = L.field();
  const std::size_t k = a.dim(), n = L.dim();
  if (k == 0) return true;
  Matrix<K> sys(f, k * n, k);
  Vec<K> rhs(k * n);
  for (std::size_t t = 0; t < k; ++t) {
    const Vec<K> target = b.reduce(L.bracket(x, a.basis()[t]));
    for (std::size_t r = 0; r < n; ++r) rhs[t * n + r] = target[r];
    for (std::size_t u = 0; u < k; ++u) {
      const Vec<K> col = b.reduce(L.bracket(a.basis()[u], a.basis()[t]));
      for (std::size_t r = 0; r < n; ++r) sys(t * n + r, u) = col[r];
    }
  }
  return solve(sys, rhs).has_value();
}

#define RADLIE_INST(K)                                                                                         \
  template std::pair<FactorType, bool> factor_type(const LieAlgebra<K>&, const Subspace<K>&, const Subspace<K>&, \
                                                   const Settings&, Rng&);                                     \
  template ChiefSeries<K> chief_series(const LieAlgebra<K>&, const std::vector<Subspace<K>>&, const Settings&, \
                                       Rng&);                                                                  \
  template std::optional<bool> is_minimal_ideal(const LieAlgebra<K>&, const Subspace<K>&, const Settings&, Rng&); \
  template Subspace<K> nilradical(const LieAlgebra<K>&, const Settings&, Rng&);                                \
  template Subspace<K> solvable_radical(const LieAlgebra<K>&, const Settings&, Rng&);                          \
  template std::vector<Matrix<K>> derivations(const LieAlgebra<K>&, const Settings&);                          \
  template bool is_derivation(const LieAlgebra<K>&, const Matrix<K>&);                                         \
  template bool is_invariant(const Subspace<K>&, const std::vector<Matrix<K>>&);                               \
  template Subspace<K> invariant_core(const Subspace<K>&, const std::vector<Matrix<K>>&);                      \
  template CharRadical<K> characteristic_radical(const LieAlgebra<K>&, const Subspace<K>&, const Settings&,     \
                                                 Rng&);                                                        \
  template Regularity regularity(const LieAlgebra<K>&, const Subspace<K>&, const Settings&, Rng&);             \
  template Subspace<K> max_semisimple_ideal(const LieAlgebra<K>&, const Settings&, Rng&);                      \
  template std::optional<Subspace<K>> abelian_complement(const LieAlgebra<K>&, const Subspace<K>&);            \
  template SocleReport<K> l_socle(const LieAlgebra<K>&, const Subspace<K>&, const Settings&, Rng&);            \
  template FrattiniResult<K> frattini(const LieAlgebra<K>&, const Settings&, Rng&);                            \
  template bool induces_inner(const LieAlgebra<K>&, const Subspace<K>&, const Subspace<K>&, const Vec<K>&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
