#include "radlie/theorems.hpp"

#include <chrono>
#include <functional>
#include <set>
#include <type_traits>

#include <fmt/format.h>

namespace radlie {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
    case Status::capacity_skipped: return "capacity_skipped";
  }
  return "?";
}

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> reg = {
      {"l:char", "perfect ideals are invariant under Der(L)"},
      {"l:char0", "char 0: quasi-simple ideals are exactly the simple ideals"},
      {"t:nil", "nilregular ideal I: N(I) ⊆ N(L)"},
      {"t:solv", "solregular ideal I: R(I) ⊆ R(L)"},
      {"t:minp", "non-abelian minimal ideal: simple, or N(I) class >= p-1 and R(I) length >= log2 p"},
      {"c:minp", "every minimal ideal is abelian, simple or irregular"},
      {"t:block", "irregular minimal ideal: N(I) = R(I), class p-1, derived length ceil(log2 p)"},
      {"c:equiv", "regular ideal: quasi-minimal iff quasi-simple"},
      {"t:rad", "R_c(C_L(N)) = Z(N); R(C_L(N)) = Z(N) when C_L(N) is regular"},
      {"c:cent0", "C_L(N) regular: C_L(N) = Z(N) + semisimple part under the stated φ conditions"},
      {"l:centre", "ideal K ⊆ C_L(N): Z(K) = Z(N) ∩ K"},
      {"l:phi", "perfect ideal A: Z(A) ⊆ φ(L); quasi-minimal A: Z(A) = A ∩ φ(L)"},
      {"l:mchar", "quasi-minimal ideals are invariant under Der(L)"},
      {"l:irred", "A/Z(A) non-abelian minimal in L/Z(A): A = A² + Z(A), A² quasi-minimal"},
      {"p:sub", "quasi-minimal A, ideal B: A ⊆ B or [A, B] = 0"},
      {"c:cent", "E† ⊆ C_L(R)"},
      {"c:comp", "distinct quasi-minimal components commute and meet inside Z(R)"},
      {"l:sub", "MComp(B) ⊆ MComp(L) ∩ B, equality for regular B"},
      {"p:soc", "C_L(N) regular: E† = S², S = E† + Z(N) for S/Z(N) = Soc(C_L(N)/Z(N))"},
      {"t:gennil", "C_L(N†) = Z(N)"},
      {"p:double", "N† regular: N†(N†) = N†"},
      {"p:quotient", "(N† + I)/I ⊆ N†(L/I)"},
      {"p:sum", "N†(I ⊕ J) = N†(I) ⊕ N†(J)"},
      {"p:ideal2", "nilregular ideal I: N†(I) ⊆ N†(L)"},
      {"p:idealdagger", "ideal A ⊆ E†: A = sum of the components inside A + Z(A)"},
      {"t:cent", "N† = ∩ (A + C_L(A/B)) over chief factors"},
      {"c:der", "x ∈ N† iff x induces inner derivations on every chief factor"},
      {"t:centgnil", "N* = N†"},
      {"t:der-rep", "C_L(N*) = Z(N); each factor of N*/N is simple or irregular"},
      {"p:gensoc", "C_L(N) nilregular: N*/N = Soc((N + C_L(N))/N)"},
      {"p:char0", "N* = N ⊕ S; in char 0 also N* = N + C_L(N)"},
      {"p:phistar", "char 0, ideal I ⊆ N*: N*(L)/I ⊆ N*(L/I)"},
      {"p:starseries", "N*_n: characteristic terms, quotient inclusion, direct sums"},
      {"c:starseries", "N*_∞: characteristic, quotient inclusion, direct sums"},
      {"l:nirred", "A/Z(A) simple: A = A² + Z(A), A² quasi-simple"},
      {"l:sub1", "quasi-simple A, ideal B: A ⊆ B or [A, B] = 0"},
      {"l:sub2", "SComp(B) = SComp(L) ∩ B"},
      {"p:comp", "P ∈ SComp(L), ideal B: P ∈ SComp(B) or [P, B] = 0"},
      {"c:scomp", "distinct quasi-simple components commute and meet inside Z(R)"},
      {"t:equiv", "E† regular: Ê = E†"},
      {"c:ssoc", "E†, C_L(N) regular: Ê = S², S = Ê + Z(N)"},
      {"c:gennil2", "N† regular: C_L(N̂) = Z(N)"},
      {"p:hideal", "nilregular ideal B: N̂(B) ⊆ N̂"},
      {"p:hdouble", "N̂(N̂) = N̂"},
      {"p:phihat", "(N̂ + I)/I ⊆ N̂(L/I)"},
      {"t:centhat", "C_L(Ñ) ⊆ Z(N) ⊆ Ñ"},
      {"t:phifree", "φ-free, Ñ nilregular: Der(Ñ) preserves N and each simple minimal ideal"},
      {"p:equal", "N* ⊆ Ñ"},
      {"p:factor", "(Ñ + I)/I ⊆ Ñ(L/I), equality when I ⊆ φ(L)"},
      {"p:phifactor3", "Ñ/φ = N*(L/φ)"},
      {"p:tildesum", "Ñ(I ⊕ J) = Ñ(I) ⊕ Ñ(J)"},
      {"p:prop-i", "I ⊆ φ(Ñ_{n-1}): Ñ_n(L/I) = Ñ_n(L)/I"},
      {"p:prop-ii", "N(Ñ_n) ⊆ N(Ñ_{n+1})"},
      {"p:prop-iii", "Ñ_∞ nilregular: φ(Ñ_{n+1}) ⊆ φ(Ñ_n)"},
      {"p:prop-iv", "Ñ_∞ nilregular: N(Ñ_n) = N(L) and Ñ_n ⊴ L"},
      {"p:prop-v", "N* nilregular: N* ⊆ Ñ_n"},
      {"p:prop-vi", "Ñ_n nilregular and φ-free: Ñ_{n+1} = N*"},
      {"p:prop-vii", "N* nilregular: C_L(Ñ_n) = Z(N) for n >= 1"},
      {"p:prop-viii", "char 0: Ñ_n(I) ⊆ Ñ_n(L)"},
      {"p:prop-ix", "char 0: (Ñ_n(L) + I)/I ⊆ Ñ_n(L/I)"},
      {"p:prop-x", "Ñ_n(I ⊕ J) = Ñ_n(I) ⊕ Ñ_n(J)"},
      {"c:tildeinf", "Ñ_∞: quotient, nilregular consequences, char 0 inclusions, direct sums"},
      {"t:phi", "core of ∩{M maximal : L = M + Ñ} = φ(L)"},
  };
  return reg;
}

bool is_theorem_id(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return true;
  return false;
}

namespace {

Outcome ok(std::string d = "") { return {Status::pass, std::move(d)}; }
Outcome bad(std::string d) { return {Status::fail, std::move(d)}; }
Outcome na(std::string d) { return {Status::not_applicable, std::move(d)}; }

// Collects the instances a check evaluated and the first failure.
struct Tally {
  std::size_t checked = 0;
  std::string failure;

  void expect(bool cond, const std::function<std::string()>& why) {
    ++checked;
    if (!cond && failure.empty()) failure = why();
  }
  Outcome result(const std::string& none_reason) const {
    if (!failure.empty()) return bad(failure);
    if (checked == 0) return na(none_reason);
    return ok(fmt::format("{} instance(s)", checked));
  }
};

template <class K>
using An = Analysis<K>;

template <class K>
std::string show(An<K>& a, const Subspace<K>& s) {
  return format_subspace(a.algebra(), s);
}

template <class K>
Subspace<K> centre_of(An<K>& a, const Subspace<K>& x) {
  return x.intersect(centraliser(a.algebra(), x));
}

template <class K>
Subspace<K> bracket(An<K>& a, const Subspace<K>& x, const Subspace<K>& y) {
  return product_space(a.algebra(), x, y);
}

template <class K>
const Subspace<K>& term(const IteratedSeries<K>& s, std::size_t n) {
  return n < s.terms.size() ? s.terms[n] : s.fixpoint;
}

template <class K>
std::vector<Subspace<K>> components(An<K>& a, ComponentKind kind) {
  const auto& cs = kind == ComponentKind::mcomp ? a.mcomp() : a.scomp();
  std::vector<Subspace<K>> out;
  for (std::size_t i = 0; i < cs.components.size(); ++i)
    if (cs.verified[i]) out.push_back(cs.components[i]);
  return out;
}

// Known ideals plus quasi-minimal components; the population for statements
// about ideals of a given kind.
template <class K>
std::vector<Subspace<K>> ideal_pool(An<K>& a) {
  std::set<Subspace<K>> s;
  for (const auto& i : a.known_ideals()) s.insert(i);
  try {
    for (const auto& p : a.mcomp().components) s.insert(p);
  } catch (const CapacityError&) {
  }
  return {s.begin(), s.end()};
}

template <class K>
std::optional<std::pair<Subspace<K>, Subspace<K>>> summands(An<K>& a) {
  if (!a.summand_split) return std::nullopt;
  const std::size_t k = *a.summand_split, n = a.algebra().dim();
  std::vector<Vec<K>> i, j;
  for (std::size_t t = 0; t < n; ++t) (t < k ? i : j).push_back(a.algebra().basis_vector(t));
  auto out = std::make_pair(a.algebra().span(i), a.algebra().span(j));
  if (!is_ideal(a.algebra(), out.first) || !is_ideal(a.algebra(), out.second))
    throw InputError(fmt::format("summand split at {} is not a decomposition into ideals", k));
  return out;
}

template <class K>
Subspace<K> pull(An<K>& a, const Subspace<K>& u, const Subspace<K>& inner) {
  return a.restriction(u).pull(inner);
}

template <class K>
bool nilregular(An<K>& a, const Subspace<K>& u) {
  return a.regularity_of(u).nilregular;
}

template <class K>
bool regular(An<K>& a, const Subspace<K>& u) {
  return a.regularity_of(u).regular;
}

template <class K>
std::vector<Matrix<K>> derivations_of(An<K>& a) {
  return derivations(a.algebra(), a.settings());
}

template <class K>
bool irreducible(An<K>& a, const Module<K>& m) {
  const auto r = split_module(m, a.settings().split(), a.rng());
  if (r.verdict == Verdict::unknown) throw CapacityError("irreducibility undecided");
  return r.verdict == Verdict::irreducible;
}

// A simple as an algebra.
template <class K>
bool is_simple_ideal(An<K>& a, const Subspace<K>& x) {
  if (x.is_zero() || bracket(a, x, x).is_zero()) return false;
  return irreducible(a, adjoint_module(a.algebra(), Subquotient<K>(x, a.algebra().zero_space()), x.basis()));
}

// Chief factors of L read off the subspace lattice: B ⊂ A ideals with no
// ideal strictly between.
std::vector<std::pair<Subspace<PrimeField>, Subspace<PrimeField>>> lattice_chief_factors(const SubspaceLattice& lat) {
  std::vector<std::pair<Subspace<PrimeField>, Subspace<PrimeField>>> out;
  for (const auto& a : lat.ideals)
    for (const auto& b : lat.ideals) {
      if (b.dim() >= a.dim() || !a.contains(b)) continue;
      bool between = false;
      for (const auto& c : lat.ideals)
        if (c.dim() > b.dim() && c.dim() < a.dim() && a.contains(c) && c.contains(b)) {
          between = true;
          break;
        }
      if (!between) out.emplace_back(a, b);
    }
  return out;
}

// S with S/Z(N) = Soc(X/Z(N)) computed inside the ideal X ⊇ Z(N).
template <class K>
Subspace<K> socle_over(An<K>& a, const Subspace<K>& x, const Subspace<K>& bottom) {
  An<K>& cx = a.sub(x);
  const auto& r = a.restriction(x);
  const Quotient<K>& q = cx.quotient_map(r.push(bottom));
  const SocleReport<K> soc = l_socle(q.algebra, q.algebra.full_space(), a.settings(), a.rng());
  if (!soc.certified) throw CapacityError("socle could not be certified");
  return r.pull(q.pull(soc.socle));
}

// ---- checks ----------------------------------------------------------------

template <class K>
using CheckFn = Outcome (*)(An<K>&);

template <class K>
Outcome c_lchar(An<K>& a) {
  std::vector<Subspace<K>> perfect;
  for (const auto& i : ideal_pool(a))
    if (is_perfect(a.algebra(), i)) perfect.push_back(i);
  if (perfect.empty()) return na("no nonzero perfect ideal");
  const auto ders = derivations_of(a);
  Tally t;
  for (const auto& i : perfect)
    t.expect(is_invariant(i, ders), [&] { return "perfect ideal not characteristic: " + show(a, i); });
  return t.result("");
}

template <class K>
Outcome c_lchar0(An<K>& a) {
  if (a.characteristic() != 0) return na("characteristic is not 0");
  Tally t;
  const auto sc = components(a, ComponentKind::scomp);
  for (const auto& p : sc)
    t.expect(centre_of(a, p).is_zero() && is_simple_ideal(a, p),
             [&] { return "quasi-simple component is not simple: " + show(a, p); });
  for (const auto& m : a.minimal_ideals().minimal_ideals) {
    if (!is_simple_ideal(a, m)) continue;
    bool found = false;
    for (const auto& p : sc) found = found || p == m;
    t.expect(found, [&] { return "simple ideal missing from SComp: " + show(a, m); });
  }
  return t.result("no simple or quasi-simple ideal");
}

template <class K>
Outcome c_tnil(An<K>& a) {
  Tally t;
  for (const auto& i : a.known_ideals()) {
    if (!nilregular(a, i)) continue;
    const Subspace<K> ni = pull(a, i, a.sub(i).nilradical());
    t.expect(a.nilradical().contains(ni), [&] { return "N(I) not in N(L) for I = " + show(a, i); });
  }
  return t.result("no nilregular proper ideal");
}

template <class K>
Outcome c_tsolv(An<K>& a) {
  Tally t;
  for (const auto& i : a.known_ideals()) {
    if (!a.regularity_of(i).solregular) continue;
    const Subspace<K> ri = pull(a, i, a.sub(i).radical());
    t.expect(a.radical().contains(ri), [&] { return "R(I) not in R(L) for I = " + show(a, i); });
  }
  return t.result("no solregular proper ideal");
}

template <class K>
Outcome c_tminp(An<K>& a) {
  Tally t;
  for (const auto& m : a.minimal_ideals().minimal_ideals) {
    if (bracket(a, m, m).is_zero()) continue;
    const bool simple = is_simple_ideal(a, m);
    const Regularity r = a.regularity_of(m);
    t.expect(simple || (a.characteristic() != 0 && !r.nilregular && !r.solregular),
             [&] { return "non-abelian minimal ideal neither simple nor irregular: " + show(a, m); });
  }
  return t.result("no non-abelian minimal ideal");
}

template <class K>
Outcome c_cminp(An<K>& a) {
  Tally t;
  for (const auto& m : a.minimal_ideals().minimal_ideals) {
    const auto [type, certain] = factor_type(a.algebra(), m, a.algebra().zero_space(), a.settings(), a.rng());
    if (!certain) throw CapacityError("minimal ideal type undecided");
    const bool abelian = bracket(a, m, m).is_zero();
    const Regularity r = a.regularity_of(m);
    bool consistent = false;
    switch (type) {
      case FactorType::abelian: consistent = abelian; break;
      case FactorType::simple: consistent = !abelian && is_simple_ideal(a, m); break;
      case FactorType::irregular: consistent = !abelian && !r.regular; break;
    }
    t.expect(consistent, [&, type = type] {
      return fmt::format("minimal ideal {} typed {} inconsistently", show(a, m), factor_type_name(type));
    });
  }
  return t.result("no minimal ideal");
}

template <class K>
Outcome c_tblock(An<K>& a) {
  Tally t;
  const std::uint64_t p = a.characteristic();
  if (p == 0) return na("characteristic 0");
  for (const auto& m : a.minimal_ideals().minimal_ideals) {
    if (bracket(a, m, m).is_zero() || is_simple_ideal(a, m) || a.regularity_of(m).regular) continue;
    An<K>& c = a.sub(m);
    const auto cls = nilpotency_class(c.algebra(), c.nilradical());
    const auto dl = derived_length(c.algebra(), c.radical());
    std::size_t ceil_log = 0;
    while ((std::uint64_t{1} << ceil_log) < p) ++ceil_log;
    std::size_t ratio = c.algebra().dim() / (c.algebra().dim() - c.nilradical().dim());
    bool power = c.algebra().dim() % (c.algebra().dim() - c.nilradical().dim()) == 0;
    while (power && ratio > 1) {
      if (ratio % p != 0) power = false;
      ratio /= p;
    }
    t.expect(c.nilradical() == c.radical() && cls && *cls + 1 == p && dl && *dl == ceil_log && power, [&] {
      return fmt::format("irregular minimal ideal {}: class {}, derived length {}, dim {} over N(I) dim {}", show(a, m),
                         cls ? *cls : 0, dl ? *dl : 0, c.algebra().dim(), c.nilradical().dim());
    });
  }
  return t.result("no irregular minimal ideal");
}

template <class K>
Outcome c_cequiv(An<K>& a) {
  Tally t;
  for (const auto& i : ideal_pool(a)) {
    if (!regular(a, i)) continue;
    const bool qm = a.quasi_minimal(i), qs = a.quasi_simple(i);
    t.expect(qm == qs, [&] {
      return fmt::format("regular ideal {}: quasi-minimal {} but quasi-simple {}", show(a, i), qm, qs);
    });
  }
  return t.result("no regular proper ideal");
}

template <class K>
Outcome c_trad(An<K>& a) {
  const Subspace<K>& c = a.cn();
  const CharRadical<K> rc = characteristic_radical(a.algebra(), c, a.settings(), a.rng());
  Tally t;
  t.expect(rc.of_s == a.zn(), [&] { return "R_c(C_L(N)) = " + show(a, rc.of_s) + " but Z(N) = " + show(a, a.zn()); });
  if (regular(a, c)) {
    const Subspace<K> rcn = pull(a, c, a.sub(c).radical());
    t.expect(rcn == a.zn(), [&] { return "C_L(N) regular but R(C_L(N)) = " + show(a, rcn); });
  }
  Outcome o = t.result("");
  // The reading with L-derivations is reported, not judged.
  if (o.status == Status::pass && rc.of_l && *rc.of_l != a.zn())
    o.detail = "Der(L)-invariant reading differs: " + show(a, *rc.of_l);
  return o;
}

template <class K>
Outcome c_ccent0(An<K>& a) {
  const Subspace<K>& c = a.cn();
  const Subspace<K>& z = a.zn();
  if (!regular(a, c)) return na("C_L(N) is not regular");
  Tally t;
  std::vector<std::string> parts;
  auto semisimple = [&](const Subspace<K>& b) { return a.sub(b).radical().is_zero(); };
  if (a.characteristic() == 0) {
    const Subspace<K> cr = centraliser(a.algebra(), a.radical());
    const Subspace<K> s = bracket(a, cr, cr);
    t.expect(c == z + s && z.intersect(s).is_zero() && is_ideal(a.algebra(), s) && semisimple(s),
             [&] { return "C_L(N) is not Z(N) ⊕ S with S = " + show(a, s); });
    parts.push_back("iii");
  }
  bool phi_known = true;
  Subspace<K> phi = a.algebra().zero_space();
  try {
    phi = a.frattini().ideal;
  } catch (const RegimeError&) {
    phi_known = false;
  }
  if (phi_known && phi.intersect(z).is_zero()) {
    const Subspace<K> b = z.is_zero() ? c : bracket(a, c, c);
    if (z.intersect(b).is_zero() && z + b == c) {
      t.expect(is_ideal(a.algebra(), b) && semisimple(b), [&] { return "complement " + show(a, b) + " not a semisimple ideal"; });
      parts.push_back("ii");
    }
  }
  An<K>& cc = a.sub(c);
  const auto& rc = a.restriction(c);
  bool phic_known = true;
  Subspace<K> phic = a.algebra().zero_space();
  try {
    phic = rc.pull(cc.frattini().ideal);
  } catch (const RegimeError&) {
    phic_known = false;
  }
  if (phic_known && phic.intersect(z).is_zero()) {
    const auto comp = abelian_complement(cc.algebra(), rc.push(z));
    t.expect(comp.has_value(), [&] { return std::string("Z(N) has no complement in C_L(N)"); });
    if (comp) {
      const Subspace<K> b = rc.pull(*comp);
      t.expect(semisimple(b) && is_ideal(a.algebra(), bracket(a, b, b)),
               [&] { return "complement " + show(a, b) + " is not semisimple with B² ⊴ L"; });
    }
    parts.push_back("i");
  }
  if (t.checked == 0) return na("φ conditions fail and characteristic is not 0");
  Outcome o = t.result("");
  if (o.status == Status::pass) o.detail = "parts evaluated: " + fmt::format("{}", fmt::join(parts, ","));
  return o;
}

template <class K>
Outcome c_lcentre(An<K>& a) {
  Tally t;
  for (const auto& k : ideal_pool(a)) {
    if (!a.cn().contains(k)) continue;
    t.expect(centre_of(a, k) == a.zn().intersect(k), [&] { return "Z(K) != Z(N) ∩ K for K = " + show(a, k); });
  }
  return t.result("no ideal inside C_L(N)");
}

template <class K>
Outcome c_lphi(An<K>& a) {
  std::vector<Subspace<K>> perfect;
  for (const auto& i : ideal_pool(a))
    if (is_perfect(a.algebra(), i)) perfect.push_back(i);
  if (perfect.empty()) return na("no nonzero perfect ideal");
  const Subspace<K>& phi = a.frattini().ideal;
  Tally t;
  for (const auto& p : perfect) {
    const Subspace<K> z = centre_of(a, p);
    t.expect(phi.contains(z), [&] { return "Z(A) not in φ(L) for A = " + show(a, p); });
    if (a.quasi_minimal(p)) t.expect(z == p.intersect(phi), [&] { return "Z(A) != A ∩ φ(L) for A = " + show(a, p); });
  }
  return t.result("");
}

template <class K>
Outcome c_lmchar(An<K>& a) {
  const auto mc = components(a, ComponentKind::mcomp);
  if (mc.empty()) return na("no quasi-minimal component");
  const auto ders = derivations_of(a);
  Tally t;
  for (const auto& p : mc) t.expect(is_invariant(p, ders), [&] { return "component not characteristic: " + show(a, p); });
  return t.result("");
}

// A/Z(A) a non-abelian minimal ideal of L/Z(A) (with_l) or simple algebra.
template <class K>
bool minimal_over_centre(An<K>& a, const Subspace<K>& x, bool with_l) {
  const Subspace<K> z = centre_of(a, x);
  if (z.contains(bracket(a, x, x))) return false;
  const Subquotient<K> q(x, z);
  return irreducible(a, with_l ? adjoint_module(a.algebra(), q) : adjoint_module(a.algebra(), q, x.basis()));
}

template <class K>
Outcome c_lirred(An<K>& a) {
  Tally t;
  auto pool = ideal_pool(a);
  pool.push_back(a.algebra().full_space());
  for (const auto& x : pool) {
    if (!minimal_over_centre(a, x, true)) continue;
    const Subspace<K> x2 = bracket(a, x, x);
    t.expect(x == x2 + centre_of(a, x) && a.quasi_minimal(x2), [&] { return "fails for A = " + show(a, x); });
  }
  return t.result("no ideal with A/Z(A) non-abelian minimal");
}

template <class K>
Outcome sub_or_centralise(An<K>& a, ComponentKind kind) {
  const auto comps = components(a, kind);
  if (comps.empty()) return na("no components");
  Tally t;
  for (const auto& p : comps)
    for (const auto& b : ideal_pool(a))
      t.expect(b.contains(p) || bracket(a, p, b).is_zero(),
               [&] { return "component " + show(a, p) + " neither inside nor centralising " + show(a, b); });
  return t.result("no ideals to test");
}

template <class K>
Outcome c_psub(An<K>& a) {
  return sub_or_centralise(a, ComponentKind::mcomp);
}

template <class K>
Outcome c_ccent(An<K>& a) {
  const Subspace<K> cr = centraliser(a.algebra(), a.radical());
  if (cr.contains(a.mcomp().span)) return ok();
  return bad("E† = " + show(a, a.mcomp().span) + " not inside C_L(R) = " + show(a, cr));
}

template <class K>
Outcome components_commute(An<K>& a, ComponentKind kind) {
  const auto comps = components(a, kind);
  const auto& cs = kind == ComponentKind::mcomp ? a.mcomp() : a.scomp();
  Tally t;
  t.expect(is_subalgebra(a.algebra(), cs.span), [&] { return std::string("sum of components is not closed"); });
  const Subspace<K>& r = a.radical();
  const Subspace<K> zr = r.intersect(centraliser(a.algebra(), r));
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (std::size_t j = i + 1; j < comps.size(); ++j) {
      t.expect(bracket(a, comps[i], comps[j]).is_zero(), [&] { return "components do not commute: " + show(a, comps[i]); });
      t.expect(zr.contains(comps[i].intersect(comps[j])), [&] { return "P ∩ Q not inside Z(R)"; });
    }
  return t.result("");
}

template <class K>
Outcome c_ccomp(An<K>& a) {
  return components_commute(a, ComponentKind::mcomp);
}

template <class K>
std::vector<Subspace<K>> child_components(An<K>& a, const Subspace<K>& b, ComponentKind kind) {
  std::vector<Subspace<K>> out;
  for (const auto& p : components(a.sub(b), kind)) out.push_back(pull(a, b, p));
  return out;
}

template <class K>
Outcome c_lsub(An<K>& a) {
  Tally t;
  const auto mine = components(a, ComponentKind::mcomp);
  for (const auto& b : a.known_ideals()) {
    const auto theirs = child_components(a, b, ComponentKind::mcomp);
    std::set<Subspace<K>> inside;
    for (const auto& p : mine)
      if (b.contains(p)) inside.insert(p);
    for (const auto& p : theirs)
      t.expect(inside.count(p) > 0, [&] { return "MComp(B) has " + show(a, p) + " outside MComp(L) for B = " + show(a, b); });
    if (regular(a, b))
      t.expect(theirs.size() == inside.size(), [&] { return "regular B = " + show(a, b) + " loses components"; });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_psoc(An<K>& a) {
  const Subspace<K>& c = a.cn();
  if (!regular(a, c)) return na("C_L(N) is not regular");
  const Subspace<K> s = socle_over(a, c, a.zn());
  const Subspace<K>& e = a.mcomp().span;
  if (bracket(a, s, s) == e && s == e + a.zn()) return ok();
  return bad("S = " + show(a, s) + ", E† = " + show(a, e));
}

template <class K>
Outcome c_tgennil(An<K>& a) {
  const Subspace<K> c = centraliser(a.algebra(), a.n_dagger());
  if (c == a.zn()) return ok();
  return bad("C_L(N†) = " + show(a, c) + " but Z(N) = " + show(a, a.zn()));
}

template <class K>
Outcome c_pdouble(An<K>& a) {
  const Subspace<K>& nd = a.n_dagger();
  if (!regular(a, nd)) return na("N† is not regular");
  const Subspace<K> inner = pull(a, nd, a.sub(nd).n_dagger());
  if (inner == nd) return ok();
  return bad("N†(N†) = " + show(a, inner));
}

template <class K>
Outcome quotient_inclusion(An<K>& a, const Subspace<K>& (An<K>::*rad)(), const char* name) {
  Tally t;
  const Subspace<K> mine = (a.*rad)();
  for (const auto& i : a.known_ideals()) {
    const Quotient<K>& q = a.quotient_map(i);
    const Subspace<K> theirs = (a.quot(i).*rad)();
    t.expect(theirs.contains(q.push(mine + i)), [&] { return fmt::format("{} image not inside {}(L/I) for I = {}", name, name, show(a, i)); });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_pquotient(An<K>& a) {
  return quotient_inclusion(a, &An<K>::n_dagger, "N†");
}

template <class K>
Outcome direct_sum_split(An<K>& a, const std::function<Subspace<K>(An<K>&)>& rad) {
  const auto parts = summands(a);
  if (!parts) return na("not a constructed direct sum");
  const auto& [i, j] = *parts;
  const Subspace<K> whole = rad(a);
  const Subspace<K> split = pull(a, i, rad(a.sub(i))) + pull(a, j, rad(a.sub(j)));
  if (whole == split) return ok();
  return bad("L: " + show(a, whole) + ", I ⊕ J: " + show(a, split));
}

template <class K>
Outcome c_psum(An<K>& a) {
  return direct_sum_split<K>(a, [](An<K>& x) { return x.n_dagger(); });
}

template <class K>
Outcome ideal_inclusion(An<K>& a, const Subspace<K>& (An<K>::*rad)(), const char* name) {
  Tally t;
  const Subspace<K> mine = (a.*rad)();
  for (const auto& i : a.known_ideals()) {
    if (!nilregular(a, i)) continue;
    const Subspace<K> theirs = pull(a, i, (a.sub(i).*rad)());
    t.expect(mine.contains(theirs), [&] { return fmt::format("{}(I) not inside {}(L) for I = {}", name, name, show(a, i)); });
  }
  return t.result("no nilregular proper ideal");
}

template <class K>
Outcome c_pideal2(An<K>& a) {
  return ideal_inclusion(a, &An<K>::n_dagger, "N†");
}

template <class K>
Outcome c_pidealdagger(An<K>& a) {
  const Subspace<K>& e = a.mcomp().span;
  const auto comps = components(a, ComponentKind::mcomp);
  std::set<Subspace<K>> pool;
  for (const auto& i : ideal_pool(a))
    if (!i.is_zero() && e.contains(i)) pool.insert(i);
  if (!e.is_zero()) pool.insert(e);
  for (std::size_t x = 0; x < comps.size(); ++x)
    for (std::size_t y = x + 1; y < comps.size(); ++y) pool.insert(comps[x] + comps[y]);
  Tally t;
  for (const auto& i : pool) {
    Subspace<K> rebuilt = centre_of(a, i);
    for (const auto& p : comps)
      if (i.contains(p)) rebuilt = rebuilt + p;
    t.expect(rebuilt == i, [&] { return "A = " + show(a, i) + " rebuilt as " + show(a, rebuilt); });
  }
  return t.result("no nonzero ideal inside E†");
}

template <class K>
Outcome c_tcent(An<K>& a) {
  const Subspace<K>& nd = a.n_dagger();
  const Subspace<K>& ref = a.cent_intersection();
  if (!ref.contains(nd)) return bad("refined-series intersection " + show(a, ref) + " misses N†");
  if (ref != nd) return bad("refined-series intersection " + show(a, ref) + " exceeds N† = " + show(a, nd));
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (const SubspaceLattice* lat = a.lattice()) {
      Subspace<K> all = a.algebra().full_space();
      const auto factors = lattice_chief_factors(*lat);
      for (const auto& [up, low] : factors)
        all = all.intersect(up + factor_centraliser(a.algebra(), up, low));
      if (all != nd) return bad("intersection over all chief factors " + show(a, all) + " != N†");
      return ok(fmt::format("exhaustive over {} chief factors", factors.size()));
    }
  }
  return ok("refined chief series");
}

template <class K>
Outcome c_cder(An<K>& a) {
  const auto& cs = a.refined_chief_series();
  const Subspace<K>& nd = a.n_dagger();
  std::vector<Vec<K>> probes;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) probes.push_back(a.algebra().basis_vector(i));
  for (const auto& v : nd.basis()) probes.push_back(v);
  for (const auto& v : nd.basis())
    for (std::size_t i = 0; i < a.algebra().dim(); ++i) probes.push_back(vec_add(a.field(), v, a.algebra().basis_vector(i)));
  Tally t;
  for (const auto& x : probes) {
    bool inner = true;
    for (const auto& f : cs.factors)
      if (!induces_inner(a.algebra(), f.upper, f.lower, x)) {
        inner = false;
        break;
      }
    t.expect(inner == nd.contains(x), [&] {
      return fmt::format("{}: in N† = {}, inner on all factors = {}", format_vector(a.algebra(), x), nd.contains(x), inner);
    });
  }
  return t.result("");
}

template <class K>
Outcome c_tcentgnil(An<K>& a) {
  const auto& mc = a.mcomp();
  for (std::size_t i = 0; i < mc.components.size(); ++i)
    if (!mc.verified[i]) return bad("component " + show(a, mc.components[i]) + " is not quasi-minimal");
  if (a.n_star().value == a.n_dagger()) return ok();
  return bad("N* = " + show(a, a.n_star().value) + ", N† = " + show(a, a.n_dagger()));
}

template <class K>
Outcome c_tderrep(An<K>& a) {
  const auto& ns = a.n_star();
  const Subspace<K> kernel = centraliser(a.algebra(), ns.value);
  if (kernel != a.zn()) return bad("kernel of L -> Der(N*) is " + show(a, kernel));
  for (std::size_t i = 0; i < ns.types.size(); ++i)
    if (ns.types[i] == FactorType::abelian) return bad("abelian factor in N*/N: " + show(a, ns.witnesses[i]));
  return ok(fmt::format("{} factor(s)", ns.types.size()));
}

template <class K>
Outcome c_pgensoc(An<K>& a) {
  const Subspace<K>& c = a.cn();
  if (!nilregular(a, c)) return na("C_L(N) is not nilregular");
  const Subspace<K> d = a.nilradical() + c;
  const Subspace<K> s = socle_over(a, d, a.nilradical());
  if (s == a.n_star().value) return ok();
  return bad("Soc((N + C)/N) lifts to " + show(a, s) + ", N* = " + show(a, a.n_star().value));
}

template <class K>
Outcome c_pchar0(An<K>& a) {
  Tally t;
  const Subspace<K>& n = a.nilradical();
  const Subspace<K>& ns = a.n_star().value;
  if (a.characteristic() == 0) {
    const Subspace<K> cr = centraliser(a.algebra(), a.radical());
    const Subspace<K> s = bracket(a, cr, cr);
    t.expect(ns == n + a.cn(), [&] { return "N* != N + C_L(N)"; });
    t.expect(ns == n + s && n.intersect(s).is_zero() && a.sub(s).radical().is_zero(),
             [&] { return "N* != N ⊕ S for S = " + show(a, s); });
  }
  bool phi_known = true;
  Subspace<K> phi = a.algebra().zero_space();
  try {
    phi = a.frattini().ideal;
  } catch (const RegimeError&) {
    phi_known = false;
  }
  if (regular(a, a.cn()) && phi_known && phi.intersect(a.zn()).is_zero()) {
    // S: the non-abelian minimal ideals of L inside C_L(N).
    Subspace<K> s = a.algebra().zero_space();
    for (const auto& m : a.minimal_ideals().minimal_ideals)
      if (a.cn().contains(m) && !bracket(a, m, m).is_zero()) s = s + m;
    t.expect(ns == n + s && n.intersect(s).is_zero(), [&] { return "N* != N ⊕ S for S = " + show(a, s); });
  }
  return t.result("hypotheses fail");
}

template <class K>
Outcome c_pphistar(An<K>& a) {
  if (a.characteristic() != 0) return na("characteristic is not 0");
  Tally t;
  const Subspace<K>& ns = a.n_star().value;
  for (const auto& i : a.known_ideals()) {
    if (!ns.contains(i)) continue;
    const Subspace<K> image = a.quotient_map(i).push(ns);
    t.expect(a.quot(i).n_star().value.contains(image), [&] { return "fails for I = " + show(a, i); });
  }
  return t.result("no proper ideal inside N*");
}

// Shared by the star and tilde series statements: the n-th term of the
// series of a child ideal / quotient, mapped back.
template <class K>
const IteratedSeries<K>& series_of(An<K>& a, SeriesKind kind) {
  return a.series(kind);
}

template <class K>
void series_characteristic(An<K>& a, SeriesKind kind, bool only_fixpoint, Tally& t) {
  const auto& mine = series_of(a, kind);
  for (const auto& i : a.known_ideals()) {
    const auto& theirs = series_of(a.sub(i), kind);
    const std::size_t len = std::max(mine.terms.size(), theirs.terms.size());
    for (std::size_t k = only_fixpoint ? len : 0; k <= len; ++k) {
      const Subspace<K> ik = pull(a, i, only_fixpoint ? theirs.fixpoint : term(theirs, k));
      const Subspace<K>& lk = only_fixpoint ? mine.fixpoint : term(mine, k);
      if (!lk.contains(ik) || !is_ideal(a.algebra(), lk)) continue;
      An<K>& host = a.sub(lk);
      const Subspace<K> ik_in_host = a.restriction(lk).push(ik);
      if (!is_ideal(host.algebra(), ik_in_host) || !host.regularity_of(ik_in_host).nilregular) continue;
      const Subspace<K> next = only_fixpoint ? ik : pull(a, i, term(theirs, k + 1));
      const Subspace<K> next_in_host = a.restriction(lk).push(next);
      t.expect(is_ideal(host.algebra(), next_in_host),
               [&] { return fmt::format("term {} of the series of {} is not an ideal", k + 1, show(a, i)); });
      const auto ders = derivations(host.algebra(), host.settings());
      if (!is_invariant(ik_in_host, ders)) continue;
      t.expect(is_invariant(next_in_host, ders),
               [&] { return fmt::format("term {} of the series of {} is not characteristic", k + 1, show(a, i)); });
    }
  }
}

template <class K>
void series_quotient(An<K>& a, SeriesKind kind, bool only_fixpoint, Tally& t) {
  const auto& mine = series_of(a, kind);
  for (const auto& i : a.known_ideals()) {
    const Quotient<K>& q = a.quotient_map(i);
    const auto& theirs = series_of(a.quot(i), kind);
    if (only_fixpoint) {
      if (!mine.fixpoint.contains(i)) continue;
      t.expect(theirs.fixpoint.contains(q.push(mine.fixpoint)), [&] { return "fixpoint fails for I = " + show(a, i); });
      continue;
    }
    for (std::size_t n = 0; n + 1 < mine.terms.size(); ++n) {
      if (!term(mine, n).contains(i)) continue;
      t.expect(term(theirs, n + 1).contains(q.push(term(mine, n + 1))),
               [&] { return fmt::format("term {} fails for I = {}", n + 1, show(a, i)); });
    }
  }
}

template <class K>
void series_sum(An<K>& a, SeriesKind kind, bool only_fixpoint, Tally& t) {
  const auto parts = summands(a);
  if (!parts) return;
  const auto& [i, j] = *parts;
  const auto& mine = series_of(a, kind);
  const auto& si = series_of(a.sub(i), kind);
  const auto& sj = series_of(a.sub(j), kind);
  const std::size_t len = std::max({mine.terms.size(), si.terms.size(), sj.terms.size()});
  for (std::size_t k = only_fixpoint ? len : 0; k <= len; ++k) {
    const Subspace<K> split = pull(a, i, term(si, k)) + pull(a, j, term(sj, k));
    t.expect(term(mine, k) == split, [&] { return fmt::format("term {} does not split over the summands", k); });
  }
}

template <class K>
Outcome c_pstarseries(An<K>& a) {
  Tally t;
  series_characteristic(a, SeriesKind::star, false, t);
  series_quotient(a, SeriesKind::star, false, t);
  series_sum(a, SeriesKind::star, false, t);
  return t.result("no instance");
}

template <class K>
Outcome c_cstarseries(An<K>& a) {
  Tally t;
  series_characteristic(a, SeriesKind::star, true, t);
  series_quotient(a, SeriesKind::star, true, t);
  series_sum(a, SeriesKind::star, true, t);
  return t.result("no instance");
}

template <class K>
Outcome c_lnirred(An<K>& a) {
  Tally t;
  auto pool = ideal_pool(a);
  pool.push_back(a.algebra().full_space());
  for (const auto& x : pool) {
    if (!minimal_over_centre(a, x, false)) continue;
    const Subspace<K> x2 = bracket(a, x, x);
    t.expect(x == x2 + centre_of(a, x) && a.quasi_simple(x2), [&] { return "fails for A = " + show(a, x); });
  }
  return t.result("no ideal with A/Z(A) simple");
}

template <class K>
Outcome c_lsub1(An<K>& a) {
  return sub_or_centralise(a, ComponentKind::scomp);
}

template <class K>
Outcome c_lsub2(An<K>& a) {
  Tally t;
  const auto mine = components(a, ComponentKind::scomp);
  for (const auto& b : a.known_ideals()) {
    const auto theirs = child_components(a, b, ComponentKind::scomp);
    std::set<Subspace<K>> lhs(theirs.begin(), theirs.end()), rhs;
    for (const auto& p : mine)
      if (b.contains(p)) rhs.insert(p);
    t.expect(lhs == rhs, [&] { return "SComp(B) != SComp(L) ∩ B for B = " + show(a, b); });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_pcomp(An<K>& a) {
  const auto mine = components(a, ComponentKind::scomp);
  if (mine.empty()) return na("no quasi-simple component");
  Tally t;
  for (const auto& b : a.known_ideals()) {
    const auto theirs = child_components(a, b, ComponentKind::scomp);
    for (const auto& p : mine) {
      bool member = false;
      for (const auto& q : theirs) member = member || q == p;
      t.expect(member || bracket(a, p, b).is_zero(), [&] { return "fails for P = " + show(a, p) + ", B = " + show(a, b); });
    }
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_cscomp(An<K>& a) {
  return components_commute(a, ComponentKind::scomp);
}

template <class K>
Outcome c_tequiv(An<K>& a) {
  const Subspace<K>& e = a.mcomp().span;
  if (!regular(a, e)) return na("E† is not regular");
  if (a.scomp().span == e) return ok();
  return bad("Ê = " + show(a, a.scomp().span) + ", E† = " + show(a, e));
}

template <class K>
Outcome c_cssoc(An<K>& a) {
  if (!regular(a, a.mcomp().span) || !regular(a, a.cn())) return na("E† or C_L(N) is not regular");
  const Subspace<K> s = socle_over(a, a.cn(), a.zn());
  const Subspace<K>& e = a.scomp().span;
  if (bracket(a, s, s) == e && s == e + a.zn()) return ok();
  return bad("S = " + show(a, s) + ", Ê = " + show(a, e));
}

template <class K>
Outcome c_cgennil2(An<K>& a) {
  if (!regular(a, a.n_dagger())) return na("N† is not regular");
  const Subspace<K> c = centraliser(a.algebra(), a.n_hat());
  if (c == a.zn()) return ok();
  return bad("C_L(N̂) = " + show(a, c));
}

template <class K>
Outcome c_phideal(An<K>& a) {
  return ideal_inclusion(a, &An<K>::n_hat, "N̂");
}

template <class K>
Outcome c_phdouble(An<K>& a) {
  const Subspace<K>& nh = a.n_hat();
  const Subspace<K> inner = pull(a, nh, a.sub(nh).n_hat());
  if (inner == nh) return ok();
  return bad("N̂(N̂) = " + show(a, inner) + ", N̂ = " + show(a, nh));
}

template <class K>
Outcome c_pphihat(An<K>& a) {
  return quotient_inclusion(a, &An<K>::n_hat, "N̂");
}

template <class K>
Outcome c_tcenthat(An<K>& a) {
  const Subspace<K>& nt = a.n_tilde();
  const Subspace<K> c = centraliser(a.algebra(), nt);
  if (a.zn().contains(c) && nt.contains(a.zn())) return ok();
  return bad("C_L(Ñ) = " + show(a, c) + ", Z(N) = " + show(a, a.zn()) + ", Ñ = " + show(a, nt));
}

template <class K>
Outcome c_tphifree(An<K>& a) {
  if (!a.frattini().ideal.is_zero()) return na("L is not φ-free");
  const Subspace<K>& nt = a.n_tilde();
  if (!nilregular(a, nt)) return na("Ñ is not nilregular");
  const auto& r = a.restriction(nt);
  const auto ders = derivations(a.sub(nt).algebra(), a.settings());
  Tally t;
  Subspace<K> rebuilt = a.nilradical();
  t.expect(is_invariant(r.push(a.nilradical()), ders), [&] { return std::string("Der(Ñ) does not preserve N"); });
  for (const auto& m : a.minimal_ideals().minimal_ideals) {
    if (bracket(a, m, m).is_zero()) continue;
    rebuilt = rebuilt + m;
    t.expect(is_simple_ideal(a, m), [&] { return "non-abelian minimal ideal not simple: " + show(a, m); });
    t.expect(is_invariant(r.push(m), ders), [&] { return "Der(Ñ) moves " + show(a, m); });
  }
  t.expect(rebuilt == nt, [&] { return "Ñ != N ⊕ simple minimal ideals"; });
  return t.result("");
}

template <class K>
Outcome c_pequal(An<K>& a) {
  if (a.n_tilde().contains(a.n_star().value))
    return ok(a.n_tilde() == a.n_star().value ? "equal" : "strict");
  return bad("N* = " + show(a, a.n_star().value) + " not inside Ñ = " + show(a, a.n_tilde()));
}

template <class K>
Outcome c_pfactor(An<K>& a) {
  Tally t;
  const Subspace<K>& nt = a.n_tilde();
  const Subspace<K>& phi = a.frattini().ideal;
  for (const auto& i : a.known_ideals()) {
    const Quotient<K>& q = a.quotient_map(i);
    const Subspace<K>& theirs = a.quot(i).n_tilde();
    t.expect(theirs.contains(q.push(nt + i)), [&] { return "inclusion fails for I = " + show(a, i); });
    if (phi.contains(i)) t.expect(theirs == q.push(nt), [&] { return "equality fails for I = " + show(a, i); });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_pphifactor3(An<K>& a) {
  const Subspace<K>& phi = a.frattini().ideal;
  const Subspace<K> lhs = a.quotient_map(phi).push(a.n_tilde());
  const Subspace<K>& rhs = a.quot(phi).n_star().value;
  if (lhs == rhs) return ok();
  return bad("Ñ/φ and N*(L/φ) differ");
}

template <class K>
Outcome c_ptildesum(An<K>& a) {
  return direct_sum_split<K>(a, [](An<K>& x) { return x.n_tilde(); });
}

template <class K>
Subspace<K> nil_of(An<K>& a, const Subspace<K>& u) {
  return pull(a, u, a.sub(u).nilradical());
}

template <class K>
Subspace<K> phi_of(An<K>& a, const Subspace<K>& u) {
  return pull(a, u, a.sub(u).frattini().ideal);
}

template <class K>
Outcome c_prop_i(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  Tally t;
  for (std::size_t n = 1; n < s.terms.size(); ++n) {
    const Subspace<K> bound = phi_of(a, s.terms[n - 1]);
    for (const auto& i : a.known_ideals()) {
      if (!bound.contains(i)) continue;
      const auto& theirs = a.quot(i).series(SeriesKind::tilde);
      t.expect(term(theirs, n) == a.quotient_map(i).push(s.terms[n]),
               [&] { return fmt::format("n = {}, I = {}", n, show(a, i)); });
    }
  }
  return t.result("no ideal inside φ(Ñ_{n-1})");
}

template <class K>
Outcome c_prop_ii(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  Tally t;
  for (std::size_t n = 0; n + 1 < s.terms.size(); ++n)
    t.expect(nil_of(a, s.terms[n + 1]).contains(nil_of(a, s.terms[n])), [&] { return fmt::format("n = {}", n); });
  return t.result("");
}

template <class K>
Outcome c_prop_iii(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  if (!nilregular(a, s.fixpoint)) return na("Ñ_∞ is not nilregular");
  Tally t;
  for (std::size_t n = 0; n + 1 < s.terms.size(); ++n)
    t.expect(phi_of(a, s.terms[n]).contains(phi_of(a, s.terms[n + 1])), [&] { return fmt::format("n = {}", n); });
  return t.result("");
}

template <class K>
Outcome c_prop_iv(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  if (!nilregular(a, s.fixpoint)) return na("Ñ_∞ is not nilregular");
  Tally t;
  for (std::size_t n = 0; n < s.terms.size(); ++n) {
    t.expect(nil_of(a, s.terms[n]) == a.nilradical(), [&] { return fmt::format("N(Ñ_{}) != N(L)", n); });
    t.expect(is_ideal(a.algebra(), s.terms[n]), [&] { return fmt::format("Ñ_{} is not an ideal", n); });
  }
  return t.result("");
}

template <class K>
Outcome c_prop_v(An<K>& a) {
  const Subspace<K>& ns = a.n_star().value;
  if (!nilregular(a, ns)) return na("N* is not nilregular");
  const auto& s = a.series(SeriesKind::tilde);
  Tally t;
  for (std::size_t n = 0; n < s.terms.size(); ++n)
    t.expect(s.terms[n].contains(ns), [&] { return fmt::format("N* not inside Ñ_{}", n); });
  return t.result("");
}

template <class K>
Outcome c_prop_vi(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  Tally t;
  for (std::size_t n = 0; n + 1 < s.terms.size(); ++n) {
    if (!nilregular(a, s.terms[n]) || !phi_of(a, s.terms[n]).is_zero()) continue;
    t.expect(s.terms[n + 1] == a.n_star().value, [&] { return fmt::format("Ñ_{} != N*", n + 1); });
  }
  return t.result("no nilregular φ-free term");
}

template <class K>
Outcome c_prop_vii(An<K>& a) {
  if (!nilregular(a, a.n_star().value)) return na("N* is not nilregular");
  const auto& s = a.series(SeriesKind::tilde);
  Tally t;
  for (std::size_t n = 1; n < s.terms.size(); ++n) {
    const Subspace<K> c = centraliser(a.algebra(), s.terms[n]);
    t.expect(c == a.zn(), [&] { return fmt::format("C_L(Ñ_{}) = {}", n, show(a, c)); });
  }
  return t.result("");
}

template <class K>
Outcome c_prop_viii(An<K>& a) {
  if (a.characteristic() != 0) return na("characteristic is not 0");
  const auto& mine = a.series(SeriesKind::tilde);
  Tally t;
  for (const auto& i : a.known_ideals()) {
    const auto& theirs = a.sub(i).series(SeriesKind::tilde);
    const std::size_t len = std::max(mine.terms.size(), theirs.terms.size());
    for (std::size_t n = 0; n <= len; ++n)
      t.expect(term(mine, n).contains(pull(a, i, term(theirs, n))),
               [&] { return fmt::format("n = {}, I = {}", n, show(a, i)); });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_prop_ix(An<K>& a) {
  if (a.characteristic() != 0) return na("characteristic is not 0");
  const auto& mine = a.series(SeriesKind::tilde);
  Tally t;
  for (const auto& i : a.known_ideals()) {
    const auto& theirs = a.quot(i).series(SeriesKind::tilde);
    const std::size_t len = std::max(mine.terms.size(), theirs.terms.size());
    for (std::size_t n = 0; n <= len; ++n)
      t.expect(term(theirs, n).contains(a.quotient_map(i).push(term(mine, n) + i)),
               [&] { return fmt::format("n = {}, I = {}", n, show(a, i)); });
  }
  return t.result("no proper ideal");
}

template <class K>
Outcome c_prop_x(An<K>& a) {
  Tally t;
  series_sum(a, SeriesKind::tilde, false, t);
  return t.result("not a constructed direct sum");
}

template <class K>
Outcome c_ctildeinf(An<K>& a) {
  const auto& s = a.series(SeriesKind::tilde);
  const Subspace<K>& inf = s.fixpoint;
  const Subspace<K>& ns = a.n_star().value;
  Tally t;
  // (i)
  const Subspace<K> phi_inf = phi_of(a, inf);
  for (const auto& i : a.known_ideals()) {
    if (!phi_inf.contains(i)) continue;
    t.expect(a.quot(i).series(SeriesKind::tilde).fixpoint == a.quotient_map(i).push(inf),
             [&] { return "(i) fails for I = " + show(a, i); });
  }
  // (ii), (iv)
  if (nilregular(a, inf)) {
    t.expect(nil_of(a, inf) == a.nilradical() && is_ideal(a.algebra(), inf), [&] { return std::string("(ii) fails"); });
    if (phi_inf.is_zero()) t.expect(inf == ns, [&] { return std::string("(iv) fails"); });
  }
  // (iii), (v)
  if (nilregular(a, ns)) {
    t.expect(inf.contains(ns), [&] { return std::string("(iii) fails"); });
    t.expect(centraliser(a.algebra(), inf) == a.zn(), [&] { return std::string("(v) fails"); });
  }
  // (vi), (vii)
  if (a.characteristic() == 0)
    for (const auto& i : a.known_ideals()) {
      t.expect(inf.contains(pull(a, i, a.sub(i).series(SeriesKind::tilde).fixpoint)),
               [&] { return "(vi) fails for I = " + show(a, i); });
      t.expect(a.quot(i).series(SeriesKind::tilde).fixpoint.contains(a.quotient_map(i).push(inf + i)),
               [&] { return "(vii) fails for I = " + show(a, i); });
    }
  // (viii)
  series_sum(a, SeriesKind::tilde, true, t);
  return t.result("no part applies");
}

template <class K>
Outcome c_tphi(An<K>& a) {
  if constexpr (std::is_same_v<K, PrimeField>) {
    const SubspaceLattice* lat = a.lattice();
    if (!lat) throw CapacityError(fmt::format("subspace lattice exceeds the exhaustive cap {}", a.settings().exhaustive_cap));
    const Subspace<K>& nt = a.n_tilde();
    Subspace<K> p = a.algebra().full_space();
    std::size_t used = 0;
    for (const auto& m : maximal_subalgebras(a.algebra(), *lat))
      if ((m + nt).is_full()) {
        p = p.intersect(m);
        ++used;
      }
    const Subspace<K> c = core(a.algebra(), p);
    if (c == a.frattini().ideal) return ok(fmt::format("{} maximal subalgebras supplement Ñ", used));
    return bad("core = " + show(a, c) + ", φ = " + show(a, a.frattini().ideal));
  } else {
    return na("needs maximal subalgebras over a finite field");
  }
}

template <class K>
const std::vector<std::pair<std::string, CheckFn<K>>>& check_table() {
  static const std::vector<std::pair<std::string, CheckFn<K>>> table = {
      {"l:char", c_lchar<K>},         {"l:char0", c_lchar0<K>},
      {"t:nil", c_tnil<K>},           {"t:solv", c_tsolv<K>},
      {"t:minp", c_tminp<K>},         {"c:minp", c_cminp<K>},
      {"t:block", c_tblock<K>},       {"c:equiv", c_cequiv<K>},
      {"t:rad", c_trad<K>},           {"c:cent0", c_ccent0<K>},
      {"l:centre", c_lcentre<K>},     {"l:phi", c_lphi<K>},
      {"l:mchar", c_lmchar<K>},       {"l:irred", c_lirred<K>},
      {"p:sub", c_psub<K>},           {"c:cent", c_ccent<K>},
      {"c:comp", c_ccomp<K>},         {"l:sub", c_lsub<K>},
      {"p:soc", c_psoc<K>},           {"t:gennil", c_tgennil<K>},
      {"p:double", c_pdouble<K>},     {"p:quotient", c_pquotient<K>},
      {"p:sum", c_psum<K>},           {"p:ideal2", c_pideal2<K>},
      {"p:idealdagger", c_pidealdagger<K>}, {"t:cent", c_tcent<K>},
      {"c:der", c_cder<K>},           {"t:centgnil", c_tcentgnil<K>},
      {"t:der-rep", c_tderrep<K>},    {"p:gensoc", c_pgensoc<K>},
      {"p:char0", c_pchar0<K>},       {"p:phistar", c_pphistar<K>},
      {"p:starseries", c_pstarseries<K>}, {"c:starseries", c_cstarseries<K>},
      {"l:nirred", c_lnirred<K>},     {"l:sub1", c_lsub1<K>},
      {"l:sub2", c_lsub2<K>},         {"p:comp", c_pcomp<K>},
      {"c:scomp", c_cscomp<K>},       {"t:equiv", c_tequiv<K>},
      {"c:ssoc", c_cssoc<K>},         {"c:gennil2", c_cgennil2<K>},
      {"p:hideal", c_phideal<K>},     {"p:hdouble", c_phdouble<K>},
      {"p:phihat", c_pphihat<K>},     {"t:centhat", c_tcenthat<K>},
      {"t:phifree", c_tphifree<K>},   {"p:equal", c_pequal<K>},
      {"p:factor", c_pfactor<K>},     {"p:phifactor3", c_pphifactor3<K>},
      {"p:tildesum", c_ptildesum<K>}, {"p:prop-i", c_prop_i<K>},
      {"p:prop-ii", c_prop_ii<K>},    {"p:prop-iii", c_prop_iii<K>},
      {"p:prop-iv", c_prop_iv<K>},    {"p:prop-v", c_prop_v<K>},
      {"p:prop-vi", c_prop_vi<K>},    {"p:prop-vii", c_prop_vii<K>},
      {"p:prop-viii", c_prop_viii<K>}, {"p:prop-ix", c_prop_ix<K>},
      {"p:prop-x", c_prop_x<K>},      {"c:tildeinf", c_ctildeinf<K>},
      {"t:phi", c_tphi<K>},
  };
  return table;
}

}  // namespace

template <class K>
Outcome check_theorem(Analysis<K>& a, const std::string& id) {
  for (const auto& [name, fn] : check_table<K>()) {
    if (name != id) continue;
    try {
      return fn(a);
    } catch (const CapacityError& e) {
      return {Status::capacity_skipped, e.what()};
    } catch (const RegimeError& e) {
      return {Status::not_applicable, e.what()};
    }
  }
  throw InputError("unknown theorem id: " + id);
}

// ---- expectations ------------------------------------------------------------

template <class K>
std::vector<std::pair<std::string, Outcome>> check_expectations(Analysis<K>& a, const nlohmann::json& exp) {
  std::vector<std::pair<std::string, Outcome>> out;
  const LieAlgebra<K>& L = a.algebra();
  auto subspace = [&](const std::string& key, const Subspace<K>& got) {
    const Subspace<K> want = subspace_from_json(L, exp.at(key));
    if (got == want) return ok(show(a, got));
    return bad("expected " + show(a, want) + ", got " + show(a, got));
  };
  auto integer = [&](const std::string& key, std::optional<std::size_t> got) {
    const auto want = exp.at(key).template get<std::size_t>();
    if (got && *got == want) return ok(std::to_string(want));
    return bad(fmt::format("expected {}, got {}", want, got ? std::to_string(*got) : std::string("none")));
  };
  auto boolean = [&](const std::string& key, bool got) {
    const bool want = exp.at(key).template get<bool>();
    if (got == want) return ok(got ? "true" : "false");
    return bad(fmt::format("expected {}, got {}", want, got));
  };
  for (const auto& [key, _] : exp.items()) {
    Outcome o{Status::fail, "unknown expectation key"};
    try {
      if (key == "nilradical") o = subspace(key, a.nilradical());
      else if (key == "solvable_radical") o = subspace(key, a.radical());
      else if (key == "frattini") o = subspace(key, a.frattini().ideal);
      else if (key == "centre") o = subspace(key, a.centre());
      else if (key == "n_star") o = subspace(key, a.n_star().value);
      else if (key == "n_dagger") o = subspace(key, a.n_dagger());
      else if (key == "n_hat") o = subspace(key, a.n_hat());
      else if (key == "n_tilde") o = subspace(key, a.n_tilde());
      else if (key == "max_semisimple") o = subspace(key, max_semisimple_ideal(L, a.settings(), a.rng()));
      else if (key == "nilpotency_class") o = integer(key, nilpotency_class(L, L.full_space()));
      else if (key == "derived_length") o = integer(key, derived_length(L, L.full_space()));
      else if (key == "derivation_dim") o = integer(key, derivations(L, a.settings()).size());
      else if (key == "nilradical_class") o = integer(key, nilpotency_class(L, a.nilradical()));
      else if (key == "radical_derived_length") o = integer(key, derived_length(L, a.radical()));
      else if (key == "dim") o = integer(key, L.dim());
      else if (key == "nilregular") o = boolean(key, a.regularity_of(L.full_space()).nilregular);
      else if (key == "solregular") o = boolean(key, a.regularity_of(L.full_space()).solregular);
      else if (key == "minimal_ideal_count") {
        const auto& m = a.minimal_ideals();
        if (!m.complete) throw CapacityError("minimal ideal list incomplete");
        o = integer(key, m.minimal_ideals.size());
      } else if (key == "maximal_subalgebra_count") {
        if constexpr (std::is_same_v<K, PrimeField>) {
          const SubspaceLattice* lat = a.lattice();
          if (!lat) throw CapacityError("lattice over the exhaustive cap");
          o = integer(key, maximal_subalgebras(L, *lat).size());
        } else {
          o = na("needs a finite field");
        }
      }
    } catch (const CapacityError& e) {
      o = {Status::capacity_skipped, e.what()};
    } catch (const RegimeError& e) {
      o = {Status::not_applicable, e.what()};
    }
    out.emplace_back("expect:" + key, o);
  }
  return out;
}

// ---- suite -------------------------------------------------------------------

namespace {

struct Member {
  std::string name;
  AnyAlgebra algebra;
  nlohmann::json expectations, hints;
  std::optional<std::size_t> split;
};

template <class K>
void run_member(const Member& m, const LieAlgebra<K>& L, const Settings& s, const SuiteOptions& opt, SuiteReport& rep) {
  Analysis<K> a(L, s, m.hints);
  a.summand_split = m.split;
  auto record = [&](const std::string& id, Outcome o, double secs) {
    switch (o.status) {
      case Status::pass: ++rep.pass; break;
      case Status::fail: ++rep.fail; break;
      case Status::not_applicable: ++rep.not_applicable; break;
      case Status::capacity_skipped: ++rep.capacity_skipped; break;
    }
    rep.entries.push_back({m.name, id, std::move(o), secs});
  };
  for (const auto& t : theorem_registry()) {
    if (!opt.ids.empty() && std::find(opt.ids.begin(), opt.ids.end(), t.id) == opt.ids.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = check_theorem(a, t.id);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (t.id == "p:equal" && o.status == Status::pass && o.detail == "strict") rep.strict_equal_witnesses.push_back(m.name);
    record(t.id, std::move(o), secs);
  }
  if (opt.expectations && opt.ids.empty())
    for (auto& [id, o] : check_expectations(a, m.expectations)) record(id, std::move(o), 0);
}

template <class K>
void add_generated(const std::vector<Member>& base, const Settings& s, const SuiteOptions& opt, std::vector<Member>& out) {
  std::vector<const Member*> small;
  for (const auto& m : base)
    if (const auto* L = std::get_if<LieAlgebra<K>>(&m.algebra); L && L->dim() <= opt.sum_max_dim && !m.split)
      small.push_back(&m);
  for (std::size_t i = 0; i < small.size(); ++i)
    for (std::size_t j = i; j < small.size(); ++j) {
      const auto& a = std::get<LieAlgebra<K>>(small[i]->algebra);
      const auto& b = std::get<LieAlgebra<K>>(small[j]->algebra);
      if (a.field().characteristic() != b.field().characteristic()) continue;
      out.push_back({small[i]->name + "(+)" + small[j]->name, direct_sum(a, b), nlohmann::json::object(),
                     nlohmann::json::object(), a.dim()});
    }
  for (const auto& m : base) {
    const auto* L = std::get_if<LieAlgebra<K>>(&m.algebra);
    if (!L || L->dim() > opt.quotient_max_dim) continue;
    Analysis<K> a(*L, s);
    std::size_t k = 0;
    for (const auto& i : a.known_ideals())
      out.push_back({fmt::format("{}/I{}[{}]", m.name, k++, i.dim()), quotient(*L, i).algebra, nlohmann::json::object(),
                     nlohmann::json::object(), std::nullopt});
  }
}

}  // namespace

SuiteReport run_suite(const std::vector<AlgebraDoc>& docs, const Settings& s, const SuiteOptions& opt) {
  for (const auto& id : opt.ids)
    if (!is_theorem_id(id)) throw InputError("unknown theorem id: " + id);
  std::vector<Member> members;
  for (const auto& d : docs) members.push_back({d.name, d.algebra, d.expectations, d.hints, std::nullopt});
  if (opt.generate) {
    std::vector<Member> extra;
    add_generated<Rationals>(members, s, opt, extra);
    add_generated<PrimeField>(members, s, opt, extra);
    for (auto& e : extra) members.push_back(std::move(e));
  }
  SuiteReport rep;
  rep.seed = s.seed;
  rep.algebras = members.size();
  for (const auto& m : members)
    std::visit([&](const auto& L) { run_member(m, L, s, opt, rep); }, m.algebra);
  return rep;
}

nlohmann::json suite_to_json(const SuiteReport& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"algebra", e.algebra},
                       {"id", e.id},
                       {"status", status_name(e.outcome.status)},
                       {"detail", e.outcome.detail},
                       {"seconds", e.seconds}});
  nlohmann::json strict = nlohmann::json::object();
  strict["id"] = "p:equal";
  strict["claim"] = "N* strictly inside Ñ";
  strict["status"] = r.strict_equal_witnesses.empty() ? "unverified-by-example" : "witnessed";
  strict["witnesses"] = r.strict_equal_witnesses;
  return {{"seed", r.seed},
          {"algebras", r.algebras},
          {"summary",
           {{"pass", r.pass}, {"fail", r.fail}, {"not_applicable", r.not_applicable}, {"capacity_skipped", r.capacity_skipped}}},
          {"strict_inclusion", strict},
          {"entries", entries}};
}

#define RADLIE_INST(K)                                                   \
  template Outcome check_theorem(Analysis<K>&, const std::string&);      \
  template std::vector<std::pair<std::string, Outcome>> check_expectations(Analysis<K>&, const nlohmann::json&);
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
