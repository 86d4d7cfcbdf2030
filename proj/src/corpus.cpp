#include "radlie/corpus.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <fmt/format.h>

namespace radlie {

using nlohmann::json;

std::size_t dim_of(const AnyAlgebra& a) {
  return std::visit([](const auto& L) { return L.dim(); }, a);
}

std::uint32_t characteristic_of(const AnyAlgebra& a) {
  return std::visit([](const auto& L) -> std::uint32_t { return L.field().characteristic(); }, a);
}

template <class K>
json subspace_to_json(const Subspace<K>& s) {
  json out = json::array();
  for (const auto& v : s.basis()) {
    json row = json::array();
    for (const auto& c : v) row.push_back(s.field().format(c));
    out.push_back(std::move(row));
  }
  return out;
}

template <class K>
Subspace<K> subspace_from_json(const LieAlgebra<K>& L, const json& j) {
  if (!j.is_array()) throw InputError("subspace must be a list of vectors");
  std::vector<Vec<K>> vs;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != L.dim())
      throw InputError(fmt::format("subspace vector must have {} coefficients", L.dim()));
    Vec<K> v;
    for (const auto& c : row) {
      const std::string text = c.is_string() ? c.get<std::string>() : c.dump();
      auto e = L.field().parse(text);
      if (!e) throw InputError(fmt::format("bad coefficient '{}'", text));
      v.push_back(*e);
    }
    vs.push_back(std::move(v));
  }
  return L.span(vs);
}

namespace {

template <class K>
AnyAlgebra parse_table(const K& f, const json& doc) {
  const auto n = doc.at("dim").get<std::size_t>();
  std::vector<std::string> labels;
  if (doc.contains("basis")) labels = doc.at("basis").get<std::vector<std::string>>();
  LieAlgebra<K> L(f, n, labels);
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;
  std::size_t idx = 0;
  for (const auto& br : doc.at("brackets")) {
    const std::string where = fmt::format("brackets[{}]", idx++);
    const auto i = br.at("i").get<std::size_t>(), j = br.at("j").get<std::size_t>();
    if (i >= n || j >= n) throw InputError(fmt::format("{}: index out of range for dimension {}", where, n));
    if (i >= j) throw InputError(fmt::format("{}: brackets must have i < j", where));
    if (seen[{i, j}]) throw InputError(fmt::format("{}: duplicate bracket ({}, {})", where, i, j));
    seen[{i, j}] = true;
    Vec<K> v = L.zero_vector();
    for (const auto& t : br.at("terms")) {
      const auto k = t.at("k").get<std::size_t>();
      if (k >= n) throw InputError(fmt::format("{}: term index {} out of range", where, k));
      const std::string text = t.at("coeff").is_string() ? t.at("coeff").get<std::string>() : t.at("coeff").dump();
      auto c = f.parse(text);
      if (!c) throw InputError(fmt::format("{}: bad coefficient '{}'", where, text));
      v[k] = f.add(v[k], *c);
    }
    L.set_bracket(i, j, v);
  }
  if (auto bad = L.jacobi_violation()) {
    throw InputError(fmt::format("Jacobi identity fails for basis triple ({}, {}, {}): residual {}", bad->triple[0] + 1,
                                 bad->triple[1] + 1, bad->triple[2] + 1, format_vector(L, bad->residual)));
  }
  return L;
}

}  // namespace

AlgebraDoc load_doc(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("JSON parse error at byte {}: {}", e.byte, e.what()));
  }
  try {
    if (doc.contains("schema") && doc.at("schema") != kSchema)
      throw InputError(fmt::format("unsupported schema '{}'", doc.at("schema").dump()));
    const auto ch = doc.at("field").at("characteristic").get<std::uint64_t>();
    const FieldSpec spec = FieldSpec::checked(ch);
    AlgebraDoc out{doc.value("name", std::string("unnamed")),
                   spec.characteristic == 0 ? parse_table(Rationals{}, doc)
                                            : parse_table(PrimeField(spec.characteristic), doc),
                   doc.value("expectations", json::object()), doc.value("hints", json::object())};
    return out;
  } catch (const json::exception& e) {
    throw InputError(fmt::format("malformed algebra document: {}", e.what()));
  }
}

AlgebraDoc load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return load_doc(ss.str());
}

std::string save_doc(const AlgebraDoc& doc) {
  json out;
  out["schema"] = kSchema;
  out["name"] = doc.name;
  out["expectations"] = doc.expectations;
  out["hints"] = doc.hints;
  std::visit(
      [&](const auto& L) {
        const auto& f = L.field();
        out["field"] = {{"characteristic", f.characteristic()}};
        out["dim"] = L.dim();
        out["basis"] = L.labels();
        json brs = json::array();
        for (std::size_t i = 0; i < L.dim(); ++i)
          for (std::size_t j = i + 1; j < L.dim(); ++j) {
            const auto v = L.basis_bracket(i, j);
            json terms = json::array();
            for (std::size_t k = 0; k < v.size(); ++k)
              if (!f.is_zero(v[k])) terms.push_back({{"k", k}, {"coeff", f.format(v[k])}});
            if (!terms.empty()) brs.push_back({{"i", i}, {"j", j}, {"terms", terms}});
          }
        out["brackets"] = brs;
      },
      doc.algebra);
  return out.dump(2) + "\n";
}

// ---- builders -------------------------------------------------------------

namespace {

template <class K>
Vec<K> vec_of(const K& f, std::size_t n, std::initializer_list<std::pair<std::size_t, std::int64_t>> terms) {
  Vec<K> v = zero_vec(f, n);
  for (auto [k, c] : terms) v[k] = f.add(v[k], f.from_int(c));
  return v;
}

}  // namespace

template <class K>
LieAlgebra<K> build_abelian(const K& f, std::size_t n) {
  return LieAlgebra<K>(f, n);
}

template <class K>
LieAlgebra<K> build_r2(const K& f) {
  LieAlgebra<K> L(f, 2);
  L.set_bracket(0, 1, vec_of(f, 2, {{1, 1}}));
  return L;
}

template <class K>
LieAlgebra<K> build_heisenberg(const K& f) {
  LieAlgebra<K> L(f, 3, {"x", "y", "z"});
  L.set_bracket(0, 1, vec_of(f, 3, {{2, 1}}));
  return L;
}

template <class K>
LieAlgebra<K> build_filiform(const K& f, std::size_t n) {
  if (n < 3) throw InputError("filiform algebras need dimension at least 3");
  LieAlgebra<K> L(f, n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    Vec<K> v = zero_vec(f, n);
    v[i + 1] = f.one();
    L.set_bracket(0, i, v);
  }
  return L;
}

template <class K>
LieAlgebra<K> build_sl2(const K& f) {
  LieAlgebra<K> L(f, 3, {"e", "f", "h"});
  L.set_bracket(0, 1, vec_of(f, 3, {{2, 1}}));   // [e, f] = h
  L.set_bracket(0, 2, vec_of(f, 3, {{0, -2}}));  // [e, h] = -2e
  L.set_bracket(1, 2, vec_of(f, 3, {{1, 2}}));   // [f, h] = 2f
  return L;
}

template <class K>
LieAlgebra<K> build_gl2(const K& f) {
  // index 2*(i-1) + (j-1) for E_ij
  LieAlgebra<K> L(f, 4, {"E11", "E12", "E21", "E22"});
  auto idx = [](int i, int j) { return static_cast<std::size_t>(2 * i + j); };
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const int i = a / 2, j = a % 2, k = b / 2, l = b % 2;
      Vec<K> v = zero_vec(f, 4);
      if (j == k) v[idx(i, l)] = f.add(v[idx(i, l)], f.one());
      if (l == i) v[idx(k, j)] = f.sub(v[idx(k, j)], f.one());
      L.set_bracket(static_cast<std::size_t>(a), static_cast<std::size_t>(b), v);
    }
  return L;
}

template <class K>
LieAlgebra<K> build_so3(const K& f) {
  LieAlgebra<K> L(f, 3);
  L.set_bracket(0, 1, vec_of(f, 3, {{2, 1}}));
  L.set_bracket(1, 2, vec_of(f, 3, {{0, 1}}));
  L.set_bracket(0, 2, vec_of(f, 3, {{1, -1}}));
  return L;
}

LieAlgebra<PrimeField> build_bokut7() {
  const PrimeField f(7);
  LieAlgebra<PrimeField> L(f, 7);
  auto set = [&](std::size_t a, std::size_t b, std::size_t k, std::int64_t c) {
    // given [e_a, e_b] = c e_k with 1-based labels
    L.set_bracket(a - 1, b - 1, vec_of(f, 7, {{k - 1, c}}));
  };
  set(2, 1, 4, 1);
  set(3, 1, 5, 1);
  set(3, 2, 5, 1);
  set(4, 3, 6, -1);
  set(5, 1, 7, 1);
  set(5, 2, 6, 2);
  set(5, 4, 7, 1);
  set(6, 1, 7, 1);
  set(6, 2, 7, 1);
  return L;
}

namespace {

// Exponent tuples of O_m in lexicographic order.
std::vector<std::vector<std::uint32_t>> monomials(std::uint32_t p, std::size_t m) {
  std::vector<std::vector<std::uint32_t>> out{{}};
  for (std::size_t v = 0; v < m; ++v) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& a : out)
      for (std::uint32_t e = 0; e < p; ++e) {
        auto b = a;
        b.push_back(e);
        next.push_back(std::move(b));
      }
    out = std::move(next);
  }
  return out;
}

std::string monomial_label(const std::vector<std::uint32_t>& a) {
  std::string s;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] == 0) continue;
    s += a.size() == 1 ? "x" : fmt::format("x{}", v + 1);
    if (a[v] > 1) s += fmt::format("^{}", a[v]);
  }
  return s;
}

}  // namespace

LieAlgebra<PrimeField> build_trunc_tensor(const LieAlgebra<PrimeField>& s, std::size_t m) {
  const PrimeField& f = s.field();
  const std::uint32_t p = f.modulus();
  if (m == 0 || m > 3) throw InputError("truncated tensor: m must be 1, 2 or 3");
  const auto mons = monomials(p, m);
  const std::size_t ds = s.dim(), n = ds * mons.size();
  if (n > 400) throw CapacityError("truncated tensor product too large");
  std::map<std::vector<std::uint32_t>, std::size_t> pos;
  for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = i;
  std::vector<std::string> labels;
  for (const auto& a : mons)
    for (std::size_t k = 0; k < ds; ++k) {
      const std::string x = monomial_label(a);
      labels.push_back(x.empty() ? s.label(k) : s.label(k) + "*" + x);
    }
  LieAlgebra<PrimeField> L(f, n, labels);
  for (std::size_t u = 0; u < mons.size(); ++u)
    for (std::size_t w = u; w < mons.size(); ++w) {
      std::vector<std::uint32_t> sum(m);
      bool zero = false;
      for (std::size_t v = 0; v < m; ++v) {
        sum[v] = mons[u][v] + mons[w][v];
        if (sum[v] >= p) zero = true;
      }
      if (zero) continue;
      const std::size_t target = pos[sum];
      for (std::size_t a = 0; a < ds; ++a)
        for (std::size_t b = 0; b < ds; ++b) {
          const std::size_t i = u * ds + a, j = w * ds + b;
          if (i >= j) continue;
          const Vec<PrimeField> br = s.basis_bracket(a, b);
          Vec<PrimeField> v(n, 0);
          for (std::size_t k = 0; k < ds; ++k) v[target * ds + k] = br[k];
          L.set_bracket(i, j, v);
        }
    }
  return L;
}

LieAlgebra<PrimeField> build_pasha(std::uint32_t p, std::size_t m) {
  if (m != 1) throw InputError("pasha: only m = 1 is constructed (D = (1 + x) d/dx)");
  if (p < 5) throw InputError("pasha: characteristic must be at least 5");
  const PrimeField f(p);
  const LieAlgebra<PrimeField> a = build_trunc_tensor(build_sl2(f), 1);
  const std::size_t n = a.dim() + 1;
  std::vector<std::string> labels = a.labels();
  labels.push_back("D");
  LieAlgebra<PrimeField> L(f, n, labels);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vec<PrimeField> v = a.basis_bracket(i, j);
      v.push_back(0);
      L.set_bracket(i, j, v);
    }
  // [s x^k, D] = -D(x^k) s = -k (x^(k-1) + x^k) s
  for (std::uint32_t k = 1; k < p; ++k)
    for (std::size_t c = 0; c < 3; ++c) {
      Vec<PrimeField> v(n, 0);
      const auto kk = f.from_int(k);
      v[(k - 1) * 3 + c] = f.neg(kk);
      v[k * 3 + c] = f.neg(kk);
      L.set_bracket(k * 3 + c, n - 1, v);
    }
  return L;
}

// ---- shipped fixtures -----------------------------------------------------

namespace {

template <class K>
json vecs(const LieAlgebra<K>& L, std::initializer_list<std::initializer_list<std::pair<std::size_t, std::int64_t>>> vs) {
  std::vector<Vec<K>> out;
  for (auto terms : vs) out.push_back(vec_of(L.field(), L.dim(), terms));
  return subspace_to_json(L.span(out));
}

template <class K>
json full(const LieAlgebra<K>& L) {
  return subspace_to_json(L.full_space());
}

template <class K>
json zero(const LieAlgebra<K>& L) {
  return subspace_to_json(L.zero_space());
}

}  // namespace

std::vector<AlgebraDoc> builtin_corpus() {
  std::vector<AlgebraDoc> out;
  const Rationals q;
  const PrimeField f2(2), f3(3), f5(5), f7(7);

  auto add = [&](std::string name, AnyAlgebra alg, json exp = json::object(), json hints = json::object()) {
    out.push_back({std::move(name), std::move(alg), std::move(exp), std::move(hints)});
  };

  // characteristic 0
  {
    auto L = build_r2(q);
    add("r2-q", L, {{"nilradical", vecs(L, {{{1, 1}}})}, {"solvable_radical", full(L)}, {"frattini", zero(L)}});
  }
  {
    auto L = build_heisenberg(q);
    add("heis-q", L,
        {{"centre", vecs(L, {{{2, 1}}})}, {"nilradical", full(L)}, {"nilpotency_class", 2}, {"derivation_dim", 6}});
  }
  {
    auto L = build_sl2(q);
    add("sl2-q", L,
        {{"nilradical", zero(L)}, {"solvable_radical", zero(L)}, {"n_star", full(L)}, {"derivation_dim", 3}});
  }
  {
    auto L = build_gl2(q);
    add("gl2-q", L,
        {{"nilradical", vecs(L, {{{0, 1}, {3, 1}}})},
         {"n_star", full(L)},
         {"n_dagger", full(L)},
         {"n_hat", full(L)},
         {"n_tilde", full(L)},
         {"frattini", zero(L)},
         {"max_semisimple", vecs(L, {{{1, 1}}, {{2, 1}}, {{0, 1}, {3, -1}}})}});
  }
  {
    auto L = build_abelian(q, 3);
    add("abelian3-q", L, {{"nilradical", full(L)}, {"n_star", full(L)}, {"n_tilde", full(L)}, {"derivation_dim", 9}});
  }
  {
    auto L = direct_sum(build_sl2(q), build_r2(q));
    add("sl2+r2-q", L, {{"nilradical", vecs(L, {{{4, 1}}})}, {"max_semisimple", vecs(L, {{{0, 1}}, {{1, 1}}, {{2, 1}}})}});
  }
  {
    auto L = direct_sum(build_heisenberg(q), build_sl2(q));
    add("heis+sl2-q", L, {{"solvable_radical", vecs(L, {{{0, 1}}, {{1, 1}}, {{2, 1}}})}});
  }
  add("sl2+sl2-q", direct_sum(build_sl2(q), build_sl2(q)));
  {
    // sl2 acting on the Heisenberg algebra through its natural module on <x, y>.
    LieAlgebra<Rationals> L(q, 6, {"x", "y", "z", "e", "f", "h"});
    auto set = [&](std::size_t i, std::size_t j, std::size_t k, std::int64_t c) { L.set_bracket(i, j, vec_of(q, 6, {{k, c}})); };
    set(0, 1, 2, 1);
    set(3, 1, 0, 1);
    set(4, 0, 1, 1);
    set(5, 0, 0, 1);
    set(5, 1, 1, -1);
    set(3, 4, 5, 1);
    set(5, 3, 3, 2);
    set(5, 4, 4, -2);
    const json n = vecs(L, {{{0, 1}}, {{1, 1}}, {{2, 1}}});
    add("sl2.heis-q", L,
        {{"nilradical", n},
         {"solvable_radical", n},
         {"centre", vecs(L, {{{2, 1}}})},
         {"frattini", vecs(L, {{{2, 1}}})},
         {"n_star", n},
         {"n_tilde", n},
         {"max_semisimple", zero(L)}});
  }
  {
    auto L = build_filiform(q, 4);
    add("filiform4-q", L, {{"nilpotency_class", 3}, {"derived_length", 2}});
  }

  // GF(2)
  {
    auto L = build_abelian(f2, 2);
    add("abelian2-gf2", L, {{"minimal_ideal_count", 3}, {"frattini", zero(L)}});
  }
  {
    auto L = build_r2(f2);
    add("r2-gf2", L, {{"nilradical", vecs(L, {{{1, 1}}})}});
  }
  {
    auto L = build_heisenberg(f2);
    add("heis-gf2", L, {{"frattini", vecs(L, {{{2, 1}}})}, {"n_tilde", full(L)}, {"maximal_subalgebra_count", 3}});
  }
  add("heis+r2-gf2", direct_sum(build_heisenberg(f2), build_r2(f2)));

  // GF(3)
  {
    auto L = build_r2(f3);
    add("r2-gf3", L,
        {{"nilradical", vecs(L, {{{1, 1}}})},
         {"solvable_radical", full(L)},
         {"nilregular", true},
         {"solregular", false},
         {"frattini", zero(L)},
         {"minimal_ideal_count", 1},
         {"n_tilde", vecs(L, {{{1, 1}}})}});
  }
  add("heis-gf3", build_heisenberg(f3));
  {
    auto L = build_sl2(f3);
    add("sl2-gf3", L, {{"nilradical", zero(L)}, {"n_star", full(L)}});
  }
  add("gl2-gf3", build_gl2(f3));
  add("so3-gf3", build_so3(f3));

  // GF(5)
  for (std::size_t n = 5; n <= 8; ++n) {
    auto L = build_filiform(f5, n);
    add(fmt::format("filiform{}-gf5", n), L,
        {{"nilpotency_class", n - 1}, {"derived_length", 2}, {"nilregular", n - 1 < 4}, {"solregular", true}});
  }
  {
    auto L = build_trunc_tensor(build_sl2(f5), 1);
    add("sl2xO1-gf5", L, {{"nilradical_class", 4}, {"radical_derived_length", 3}});
  }

  // GF(7)
  {
    auto L = build_trunc_tensor(build_sl2(f7), 1);
    add("sl2xO1-gf7", L, {{"nilradical_class", 6}, {"radical_derived_length", 3}});
  }
  {
    auto L = build_pasha(7, 1);
    std::vector<Vec<PrimeField>> a;
    for (std::size_t i = 0; i + 1 < L.dim(); ++i) a.push_back(L.basis_vector(i));
    json aj = subspace_to_json(L.span(a));
    add("pasha7", L, {{"nilradical", zero(L)}, {"n_dagger", aj}, {"n_hat", zero(L)}, {"dim", 22}},
        {{"minimal_ideals", json::array({aj})}});
  }
  return out;
}

AlgebraDoc bokut7_doc() {
  return {"bokut7", build_bokut7(),
          {{"nilpotency_class", 5}, {"derived_length", 3}, {"nilregular", true}, {"solregular", false}},
          json::object()};
}

#define RADLIE_INST(K)                                                  \
  template json subspace_to_json(const Subspace<K>&);                   \
  template Subspace<K> subspace_from_json(const LieAlgebra<K>&, const json&); \
  template LieAlgebra<K> build_abelian(const K&, std::size_t);          \
  template LieAlgebra<K> build_r2(const K&);                            \
  template LieAlgebra<K> build_heisenberg(const K&);                    \
  template LieAlgebra<K> build_filiform(const K&, std::size_t);         \
  template LieAlgebra<K> build_sl2(const K&);                           \
  template LieAlgebra<K> build_gl2(const K&);                           \
  template LieAlgebra<K> build_so3(const K&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
