#include "radlie/module.hpp"

#include <deque>

#include <fmt/format.h>

#include "radlie/poly.hpp"

namespace radlie {

std::uint64_t projective_count(std::uint64_t q, std::size_t k) {
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > UINT64_MAX - pw) return UINT64_MAX;
    total += pw;
    if (pw > UINT64_MAX / q) {
      if (i + 1 < k) return UINT64_MAX;
    } else {
      pw *= q;
    }
  }
  return total;
}

template <class K>
Module<K> adjoint_module(const LieAlgebra<K>& L, const Subquotient<K>& q, const std::vector<Vec<K>>& acting) {
  Module<K> m{L.field(), q.dim(), {}};
  for (const auto& x : acting) {
    Matrix<K> g(L.field(), q.dim(), q.dim());
    for (std::size_t c = 0; c < q.dim(); ++c) {
      Vec<K> col = q.coords(L.bracket(x, q.lifts()[c]));
      for (std::size_t r = 0; r < q.dim(); ++r) g(r, c) = col[r];
    }
    m.gens.push_back(std::move(g));
  }
  return m;
}

template <class K>
Module<K> adjoint_module(const LieAlgebra<K>& L, const Subquotient<K>& q) {
  std::vector<Vec<K>> all;
  for (std::size_t i = 0; i < L.dim(); ++i) all.push_back(L.basis_vector(i));
  return adjoint_module(L, q, all);
}

template <class K>
Subspace<K> spin(const Module<K>& m, const std::vector<Vec<K>>& vs) {
  Subspace<K> s = m.zero_space();
  std::deque<Vec<K>> todo;
  for (const auto& v : vs)
    if (s.add(v)) todo.push_back(v);
  while (!todo.empty() && !s.is_full()) {
    Vec<K> w = std::move(todo.front());
    todo.pop_front();
    for (const auto& g : m.gens) {
      Vec<K> u = g.apply(w);
      if (s.add(u)) todo.push_back(std::move(u));
    }
  }
  return s;
}

template <class K>
bool is_submodule(const Module<K>& m, const Subspace<K>& u) {
  for (const auto& g : m.gens)
    for (const auto& v : u.basis())
      if (!u.contains(g.apply(v))) return false;
  return true;
}

template <class K>
Module<K> submodule_action(const Module<K>& m, const Subspace<K>& u) {
  Module<K> out{m.field, u.dim(), {}};
  for (const auto& g : m.gens) {
    Matrix<K> h(m.field, u.dim(), u.dim());
    for (std::size_t c = 0; c < u.dim(); ++c) {
      Vec<K> col = u.coords(g.apply(u.basis()[c]));
      for (std::size_t r = 0; r < u.dim(); ++r) h(r, c) = col[r];
    }
    out.gens.push_back(std::move(h));
  }
  return out;
}

template <class K>
Vec<K> quotient_lift(const Subspace<K>& u, const Vec<K>& c) {
  Vec<K> v = zero_vec(u.field(), u.ambient());
  const auto comp = u.non_pivots();
  for (std::size_t a = 0; a < comp.size(); ++a) v[comp[a]] = c[a];
  return v;
}

template <class K>
Vec<K> quotient_coords(const Subspace<K>& u, const Vec<K>& v) {
  Vec<K> r = u.reduce(v);
  const auto comp = u.non_pivots();
  Vec<K> out(comp.size());
  for (std::size_t a = 0; a < comp.size(); ++a) out[a] = r[comp[a]];
  return out;
}

template <class K>
Module<K> quotient_action(const Module<K>& m, const Subspace<K>& u) {
  const auto comp = u.non_pivots();
  const std::size_t d = comp.size();
  Module<K> out{m.field, d, {}};
  for (const auto& g : m.gens) {
    Matrix<K> h(m.field, d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Vec<K> r = u.reduce(g.column(comp[c]));
      for (std::size_t a = 0; a < d; ++a) h(a, c) = r[comp[a]];
    }
    out.gens.push_back(std::move(h));
  }
  return out;
}

template <class K>
Module<K> transposed(const Module<K>& m) {
  Module<K> out{m.field, m.dim, {}};
  for (const auto& g : m.gens) out.gens.push_back(g.transpose());
  return out;
}

template <class K>
std::vector<Matrix<K>> commutant(const Module<K>& m) {
  const std::size_t n = m.dim;
  const K& f = m.field;
  Echelon<K> eqs(f, n * n);
  for (const auto& g : m.gens) {
    // (Xg - gX)(r, c) = sum_k X(r,k) g(k,c) - g(r,k) X(k,c)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Vec<K> row = zero_vec(f, n * n);
        for (std::size_t k = 0; k < n; ++k) {
          row[r * n + k] = f.add(row[r * n + k], g(k, c));
          row[k * n + c] = f.sub(row[k * n + c], g(r, k));
        }
        eqs.insert(std::move(row));
      }
    if (eqs.rank() == n * n - 1) break;
  }
  Matrix<K> sys = Matrix<K>::from_rows(f, eqs.rows(), n * n);
  std::vector<Matrix<K>> out;
  for (const auto& v : kernel_basis(sys)) {
    Matrix<K> x(f, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) x(r, c) = v[r * n + c];
    out.push_back(std::move(x));
  }
  return out;
}

template <class K>
std::vector<Matrix<K>> enveloping_algebra(const Module<K>& m) {
  const std::size_t n = m.dim;
  Echelon<K> span(m.field, n * n);
  std::vector<Matrix<K>> basis;
  std::deque<std::size_t> todo;
  auto push = [&](Matrix<K> x) {
    if (span.insert(x.entries())) {
      basis.push_back(std::move(x));
      todo.push_back(basis.size() - 1);
    }
  };
  push(Matrix<K>::identity(m.field, n));
  while (!todo.empty() && span.rank() < n * n) {
    const std::size_t b = todo.front();
    todo.pop_front();
    for (const auto& g : m.gens) push(g * basis[b]);
  }
  return basis;
}

template <class K>
Subspace<K> trace_radical_socle(const Module<K>& m) {
  const K& f = m.field;
  const auto alg = enveloping_algebra(m);
  const std::size_t d = alg.size();
  Matrix<K> form(f, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      auto t = (alg[i] * alg[j]).trace();
      form(i, j) = t;
      form(j, i) = t;
    }
  std::vector<Vec<K>> rows;
  for (const auto& c : kernel_basis(form)) {
    Matrix<K> x(f, m.dim, m.dim);
    for (std::size_t i = 0; i < d; ++i)
      if (!f.is_zero(c[i])) x.add_scaled(c[i], alg[i]);
    for (auto& r : x.row_list()) rows.push_back(std::move(r));
  }
  if (rows.empty()) return m.full_space();
  return kernel(Matrix<K>::from_rows(f, rows, m.dim));
}

template <class K>
Subspace<K> HomSpace<K>::image(const Vec<K>& m0) const {
  Subspace<K> img = Subspace<K>::zero(words.front().field(), m0.size());
  for (const auto& w : words) img.add(w.apply(m0));
  return img;
}

template <class K>
HomSpace<K> hom_space(const Module<K>& t, const Module<K>& m) {
  const K& f = m.field;
  if (t.gens.size() != m.gens.size()) throw InputError("hom: modules for different generator sets");
  HomSpace<K> out;
  if (t.dim == 0) return out;
  // Spin up a standard basis of t from e_0, remembering the word for each
  // basis vector, then impose the relations it satisfies on a vector of m.
  Echelon<K> ech(f, t.dim);
  std::vector<Vec<K>> tb;
  tb.push_back(unit_vec(f, t.dim, 0));
  ech.insert(tb[0]);
  out.words.push_back(Matrix<K>::identity(f, m.dim));
  for (std::size_t j = 0; j < tb.size(); ++j)
    for (std::size_t g = 0; g < t.gens.size(); ++g) {
      Vec<K> v = t.gens[g].apply(tb[j]);
      if (ech.insert(v)) {
        tb.push_back(v);
        out.words.push_back(m.gens[g] * out.words[j]);
      }
    }
  if (tb.size() != t.dim) throw InputError("hom: source module is not cyclic on e_0, so not simple");
  const Matrix<K> binv = inverse(Matrix<K>::from_columns(f, tb, t.dim));
  Echelon<K> eqs(f, m.dim);
  for (std::size_t j = 0; j < tb.size(); ++j)
    for (std::size_t g = 0; g < t.gens.size(); ++g) {
      Vec<K> c = binv.apply(t.gens[g].apply(tb[j]));
      Matrix<K> r = m.gens[g] * out.words[j];
      for (std::size_t l = 0; l < c.size(); ++l)
        if (!f.is_zero(c[l])) r.add_scaled(f.neg(c[l]), out.words[l]);
      for (std::size_t i = 0; i < m.dim; ++i) eqs.insert(r.row(i));
      if (eqs.rank() == m.dim) return out;
    }
  out.seeds = kernel_basis(Matrix<K>::from_rows(f, eqs.rows(), m.dim));
  return out;
}

template <class K>
std::vector<Subspace<K>> hom_images(const Module<K>& t, const Module<K>& m) {
  const HomSpace<K> h = hom_space(t, m);
  std::vector<Subspace<K>> out;
  for (const auto& m0 : h.seeds) out.push_back(h.image(m0));
  return out;
}

template <class K>
bool isomorphic_simple(const Module<K>& a, const Module<K>& b) {
  return a.dim == b.dim && !hom_images(a, b).empty();
}

namespace {

template <class K>
std::optional<Subspace<K>> proper_basis_spin(const Module<K>& m) {
  for (std::size_t i = 0; i < m.dim; ++i) {
    Subspace<K> s = spin(m, {unit_vec(m.field, m.dim, i)});
    if (!s.is_full()) return s;
  }
  return std::nullopt;
}

// Spin every projective point of span(basis) under m; returns a proper
// submodule if one appears.
std::optional<Subspace<PrimeField>> proper_point_spin(const Module<PrimeField>& m,
                                                      const std::vector<Vec<PrimeField>>& basis) {
  std::optional<Subspace<PrimeField>> found;
  for_each_projective_point(m.field, basis, m.dim, [&](const Vec<PrimeField>& v) {
    Subspace<PrimeField> s = spin(m, {v});
    if (s.is_full()) return true;
    found = std::move(s);
    return false;
  });
  return found;
}

}  // namespace

SplitResult<PrimeField> split_module(const Module<PrimeField>& m, const SplitOptions& opt, Rng& rng) {
  using K = PrimeField;
  const K& f = m.field;
  SplitResult<K> res{Verdict::unknown, m.zero_space(), ""};
  if (m.dim <= 1) {
    res.verdict = Verdict::irreducible;
    res.certificate = "dimension";
    return res;
  }
  if (auto s = proper_basis_spin(m)) return {Verdict::reducible, *s, "basis spin"};

  const std::uint64_t points = projective_count(f.modulus(), m.dim);
  std::vector<Vec<K>> std_basis;
  for (std::size_t i = 0; i < m.dim; ++i) std_basis.push_back(unit_vec(f, m.dim, i));
  if (points <= 256) {
    if (auto s = proper_point_spin(m, std_basis)) return {Verdict::reducible, *s, "enumeration"};
    return {Verdict::irreducible, m.zero_space(), "enumeration"};
  }

  const Module<K> mt = transposed(m);
  std::vector<Matrix<K>> pool;
  for (const auto& g : m.gens)
    if (!g.is_zero()) pool.push_back(g);
  const std::size_t base = pool.size();
  struct Candidate {
    std::uint64_t cost;
    std::vector<Vec<K>> ker, kert;
  };
  std::optional<Candidate> best;
  for (std::size_t attempt = 0; attempt < opt.attempts; ++attempt) {
    if (pool.size() < base + 48) {
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      pool.push_back(pool[pick(rng)] * pool[pick(rng)]);
    }
    Matrix<K> a(f, m.dim, m.dim);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int t = 0; t < 4; ++t) a.add_scaled(f.random(rng), pool[pick(rng)]);
    if (a.is_zero()) continue;
    for (const auto& fac : irreducible_factors(f, charpoly(a), rng)) {
      const Matrix<K> b = poly_eval(fac, a);
      const auto ker = kernel_basis(b);
      Subspace<K> s = spin(m, {ker.front()});
      if (!s.is_full()) return {Verdict::reducible, s, "kernel spin"};
      const auto kert = kernel_basis(b.transpose());
      if (ker.size() == static_cast<std::size_t>(fac.degree())) {
        Subspace<K> st = spin(mt, {kert.front()});
        if (!st.is_full()) return {Verdict::reducible, annihilator(st), "dual kernel spin"};
        return {Verdict::irreducible, m.zero_space(), "Norton"};
      }
      const std::uint64_t cost = projective_count(f.modulus(), ker.size()) + projective_count(f.modulus(), kert.size());
      if (cost <= opt.enum_cap && (!best || cost < best->cost)) best = Candidate{cost, ker, kert};
    }
  }
  if (best) {
    if (auto s2 = proper_point_spin(m, best->ker)) return {Verdict::reducible, *s2, "kernel enumeration"};
    if (auto st = proper_point_spin(mt, best->kert)) return {Verdict::reducible, annihilator(*st), "dual kernel enumeration"};
    return {Verdict::irreducible, m.zero_space(), "kernel enumeration"};
  }
  if (points <= opt.enum_cap) {
    if (auto s = proper_point_spin(m, std_basis)) return {Verdict::reducible, *s, "enumeration"};
    return {Verdict::irreducible, m.zero_space(), "enumeration"};
  }
  return res;
}

SplitResult<Rationals> split_module(const Module<Rationals>& m, const SplitOptions& opt, Rng& rng) {
  using K = Rationals;
  const K& f = m.field;
  SplitResult<K> res{Verdict::unknown, m.zero_space(), ""};
  if (m.dim <= 1) {
    res.verdict = Verdict::irreducible;
    res.certificate = "dimension";
    return res;
  }
  if (auto s = proper_basis_spin(m)) return {Verdict::reducible, *s, "basis spin"};
  Subspace<K> soc = trace_radical_socle(m);
  if (!soc.is_full()) return {Verdict::reducible, soc, "trace radical"};
  const auto e = commutant(m);
  if (e.size() == 1) return {Verdict::irreducible, m.zero_space(), "scalar commutant"};
  for (std::size_t attempt = 0; attempt < opt.attempts; ++attempt) {
    Matrix<K> x(f, m.dim, m.dim);
    for (const auto& b : e) x.add_scaled(f.random(rng), b);
    const Subspace<K> kx = kernel(x);
    if (!kx.is_zero() && !kx.is_full()) return {Verdict::reducible, kx, "singular endomorphism"};
    const Poly<K> mp = minpoly(x);
    if (mp.degree() <= 1) continue;
    const auto roots = rational_roots(mp);
    if (!roots) continue;
    if (!roots->empty()) {
      Matrix<K> y = x - Matrix<K>::identity(f, m.dim).scaled(roots->front());
      return {Verdict::reducible, kernel(y), "rational eigenvalue"};
    }
    if (static_cast<std::size_t>(mp.degree()) == e.size() && mp.degree() <= 3)
      return {Verdict::irreducible, m.zero_space(), "commutant is a field"};
  }
  return res;
}

template <class K>
std::pair<Subspace<K>, bool> simple_submodule(const Module<K>& m, const SplitOptions& opt, Rng& rng) {
  auto r = split_module(m, opt, rng);
  if (r.verdict == Verdict::irreducible) return {m.full_space(), true};
  if (r.verdict == Verdict::unknown) return {m.full_space(), false};
  const Module<K> sub = submodule_action(m, r.sub);
  auto [inner, ok] = simple_submodule(sub, opt, rng);
  Subspace<K> out = m.zero_space();
  for (const auto& c : inner.basis()) out.add(r.sub.combine(c));
  return {out, ok};
}

template <class K>
CompositionSeries<K> composition_series(const Module<K>& m, const std::vector<Subspace<K>>& through,
                                        const SplitOptions& opt, Rng& rng) {
  std::vector<Subspace<K>> marks{m.zero_space()};
  for (const auto& s : through) {
    if (!s.contains(marks.back())) throw InputError("composition series: seed chain is not ascending");
    if (s != marks.back()) marks.push_back(s);
  }
  if (!marks.back().is_full()) marks.push_back(m.full_space());
  CompositionSeries<K> out;
  out.chain.push_back(marks[0]);
  for (std::size_t k = 1; k < marks.size(); ++k) {
    const Subspace<K>& top = marks[k];
    const Module<K> mt = submodule_action(m, top);
    while (out.chain.back() != top) {
      const Subspace<K>& cur = out.chain.back();
      Subspace<K> cur_in_top = Subspace<K>::zero(m.field, top.dim());
      for (const auto& v : cur.basis()) cur_in_top.add(top.coords(v));
      const Module<K> q = quotient_action(mt, cur_in_top);
      auto [s, ok] = simple_submodule(q, opt, rng);
      out.certified = out.certified && ok;
      Subspace<K> next = cur;
      for (const auto& c : s.basis()) next.add(top.combine(quotient_lift(cur_in_top, c)));
      out.chain.push_back(std::move(next));
    }
  }
  return out;
}

template <class K>
SocleDecomposition<K> socle(const Module<K>& m, const SplitOptions& opt, Rng& rng) {
  SocleDecomposition<K> out{m.zero_space(), {}, {}, true};
  if (m.dim == 0) return out;
  // Every simple submodule is isomorphic to some composition factor.
  std::vector<Module<K>> types;
  const auto cs = composition_series(m, {}, opt, rng);
  out.certified = cs.certified;
  for (std::size_t k = 1; k < cs.chain.size(); ++k) {
    const Subspace<K>& top = cs.chain[k];
    const Module<K> mt = submodule_action(m, top);
    Subspace<K> low = Subspace<K>::zero(m.field, top.dim());
    for (const auto& v : cs.chain[k - 1].basis()) low.add(top.coords(v));
    Module<K> factor = quotient_action(mt, low);
    bool seen = false;
    for (const auto& t : types)
      if (isomorphic_simple(t, factor)) {
        seen = true;
        break;
      }
    if (!seen) types.push_back(std::move(factor));
  }
  for (const auto& t : types) {
    HomSpace<K> h = hom_space(t, m);
    if (h.seeds.empty()) continue;
    std::vector<Subspace<K>> imgs;
    for (const auto& m0 : h.seeds) {
      imgs.push_back(h.image(m0));
      out.socle = out.socle + imgs.back();
    }
    out.components.push_back(std::move(imgs));
    out.homs.push_back(std::move(h));
  }
  return out;
}

#define RADLIE_INST(K)                                                                                   \
  template struct HomSpace<K>;                                                                            \
  template HomSpace<K> hom_space(const Module<K>&, const Module<K>&);                                    \
  template Module<K> adjoint_module(const LieAlgebra<K>&, const Subquotient<K>&);                        \
  template Module<K> adjoint_module(const LieAlgebra<K>&, const Subquotient<K>&, const std::vector<Vec<K>>&); \
  template Subspace<K> spin(const Module<K>&, const std::vector<Vec<K>>&);                               \
  template bool is_submodule(const Module<K>&, const Subspace<K>&);                                      \
  template Module<K> submodule_action(const Module<K>&, const Subspace<K>&);                             \
  template Module<K> quotient_action(const Module<K>&, const Subspace<K>&);                              \
  template Vec<K> quotient_lift(const Subspace<K>&, const Vec<K>&);                                      \
  template Vec<K> quotient_coords(const Subspace<K>&, const Vec<K>&);                                    \
  template Module<K> transposed(const Module<K>&);                                                       \
  template std::vector<Matrix<K>> commutant(const Module<K>&);                                           \
  template std::vector<Matrix<K>> enveloping_algebra(const Module<K>&);                                  \
  template Subspace<K> trace_radical_socle(const Module<K>&);                                            \
  template std::vector<Subspace<K>> hom_images(const Module<K>&, const Module<K>&);                      \
  template bool isomorphic_simple(const Module<K>&, const Module<K>&);                                   \
  template std::pair<Subspace<K>, bool> simple_submodule(const Module<K>&, const SplitOptions&, Rng&);   \
  template CompositionSeries<K> composition_series(const Module<K>&, const std::vector<Subspace<K>>&,    \
                                                   const SplitOptions&, Rng&);                           \
  template SocleDecomposition<K> socle(const Module<K>&, const SplitOptions&, Rng&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
