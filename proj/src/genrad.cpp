#include "radlie/genrad.hpp"

#include <set>
#include <type_traits>

#include <fmt/format.h>

#include "radlie/corpus.hpp"

namespace radlie {

namespace {

template <class K>
bool irreducible_or_throw(const Module<K>& m, const Settings& s, Rng& rng, const char* what) {
  const auto r = split_module(m, s.split(), rng);
  if (r.verdict == Verdict::unknown)
    throw CapacityError(fmt::format("{}: irreducibility undecided within {} spin seeds", what, s.spin_seeds));
  return r.verdict == Verdict::irreducible;
}

template <class K>
Subspace<K> centre_of(const LieAlgebra<K>& L, const Subspace<K>& a) {
  return a.intersect(centraliser(L, a));
}

template <class K>
void check_nonzero_ideal(const LieAlgebra<K>& L, const Subspace<K>& a, const char* what) {
  if (a.is_zero()) throw InputError(fmt::format("{}: the zero ideal is excluded", what));
  if (!is_ideal(L, a)) throw InputError(fmt::format("{}: subspace is not an ideal", what));
}

}  // namespace

template <class K>
bool is_quasi_minimal(const LieAlgebra<K>& L, const Subspace<K>& a, const Settings& s, Rng& rng) {
  check_nonzero_ideal(L, a, "quasi-minimal test");
  if (product_space(L, a, a) != a) return false;
  const Module<K> m = adjoint_module(L, Subquotient<K>(a, centre_of(L, a)));
  return irreducible_or_throw(m, s, rng, "quasi-minimal test");
}

template <class K>
bool is_quasi_simple(const LieAlgebra<K>& L, const Subspace<K>& a, const Settings& s, Rng& rng) {
  check_nonzero_ideal(L, a, "quasi-simple test");
  if (product_space(L, a, a) != a) return false;
  const Module<K> m = adjoint_module(L, Subquotient<K>(a, centre_of(L, a)), a.basis());
  return irreducible_or_throw(m, s, rng, "quasi-simple test");
}

template <class K>
Analysis<K>::Analysis(LieAlgebra<K> L, Settings s, nlohmann::json hints)
    : L_(std::move(L)), s_(s), rng_(s.seed), hints_(std::move(hints)) {}

template <class K>
const Subspace<K>& Analysis<K>::centre() {
  return centre_.get([&] { return radlie::centre(L_); });
}

template <class K>
const Subspace<K>& Analysis<K>::nilradical() {
  return nil_.get([&] { return radlie::nilradical(L_, s_, rng_); });
}

template <class K>
const Subspace<K>& Analysis<K>::radical() {
  return rad_.get([&] { return radlie::solvable_radical(L_, s_, rng_); });
}

template <class K>
const Subspace<K>& Analysis<K>::cn() {
  return cn_.get([&] { return centraliser(L_, nilradical()); });
}

template <class K>
const Subspace<K>& Analysis<K>::zn() {
  return zn_.get([&] { return nilradical().intersect(cn()); });
}

template <class K>
const FrattiniResult<K>& Analysis<K>::frattini() {
  return frattini_.get([&] { return radlie::frattini(L_, s_, rng_); });
}

template <class K>
std::vector<Subspace<K>> Analysis<K>::verified_hint_ideals() {
  return hint_ideals_.get([&] {
    std::vector<Subspace<K>> out;
    if (!hints_.contains("minimal_ideals")) return out;
    for (const auto& j : hints_.at("minimal_ideals")) {
      Subspace<K> x = subspace_from_json(L_, j);
      if (x.is_zero() || !is_ideal(L_, x))
        throw CertificateError("hinted minimal ideal is not a nonzero ideal: " + format_subspace(L_, x));
      const auto minimal = is_minimal_ideal(L_, x, s_, rng_);
      if (!minimal) throw CertificateError("hinted minimal ideal: minimality undecided: " + format_subspace(L_, x));
      if (!*minimal) throw CertificateError("hinted ideal is not minimal: " + format_subspace(L_, x));
      out.push_back(std::move(x));
    }
    return out;
  });
}

template <class K>
const SocleReport<K>& Analysis<K>::minimal_ideals() {
  return minimal_.get([&] {
    SocleReport<K> rep = l_socle(L_, L_.full_space(), s_, rng_);
    const auto hinted = verified_hint_ideals();
    for (const auto& h : hinted) {
      bool found = false;
      for (const auto& x : rep.minimal_ideals) found = found || x == h;
      if (!found) {
        if (rep.complete)
          throw CertificateError("hinted minimal ideal missing from the computed socle: " + format_subspace(L_, h));
        rep.minimal_ideals.push_back(h);
        rep.socle = rep.socle + h;
      }
    }
    return rep;
  });
}

template <class K>
const NStar<K>& Analysis<K>::n_star() {
  return nstar_.get([&] {
    const Subspace<K>& n = nilradical();
    const Quotient<K>& q = quotient_map(n);
    const Subspace<K> d = q.push(n + cn());
    const SocleReport<K> soc = l_socle(q.algebra, d, s_, rng_);
    if (!soc.certified) throw CapacityError("N*: the L/N-socle of (N + C_L(N))/N could not be certified");
    NStar<K> out{q.pull(soc.socle), {}, {}, soc.certified};
    for (const auto& x : soc.minimal_ideals) {
      Subspace<K> w = q.pull(x);
      out.types.push_back(factor_type(L_, w, n, s_, rng_).first);
      out.witnesses.push_back(std::move(w));
    }
    return out;
  });
}

template <class K>
const ComponentSet<K>& Analysis<K>::mcomp() {
  return mcomp_.get([&] {
    ComponentSet<K> out{ComponentKind::mcomp, {}, {}, L_.zero_space()};
    const Subspace<K>& c = cn();
    for (const auto& x : n_star().witnesses) {
      const Subspace<K> xc = x.intersect(c);
      Subspace<K> p = product_space(L_, xc, xc);
      if (p.is_zero()) continue;
      bool dup = false;
      for (const auto& q : out.components) dup = dup || q == p;
      if (dup) continue;
      out.verified.push_back(is_ideal(L_, p) && quasi_minimal(p));
      out.span = out.span + p;
      out.components.push_back(std::move(p));
    }
    return out;
  });
}

template <class K>
const ComponentSet<K>& Analysis<K>::scomp() {
  return scomp_.get([&] {
    ComponentSet<K> out{ComponentKind::scomp, {}, {}, L_.zero_space()};
    const auto& m = mcomp();
    for (std::size_t i = 0; i < m.components.size(); ++i) {
      if (!m.verified[i] || !quasi_simple(m.components[i])) continue;
      out.components.push_back(m.components[i]);
      out.verified.push_back(true);
      out.span = out.span + m.components[i];
    }
    return out;
  });
}

template <class K>
const Subspace<K>& Analysis<K>::n_dagger() {
  return ndagger_.get([&] { return nilradical() + mcomp().span; });
}

template <class K>
const Subspace<K>& Analysis<K>::n_hat() {
  return nhat_.get([&] { return nilradical() + scomp().span; });
}

template <class K>
const Subspace<K>& Analysis<K>::n_tilde() {
  return ntilde_.get([&] {
    const Quotient<K>& q = quotient_map(frattini().ideal);
    const SocleReport<K> soc = l_socle(q.algebra, q.algebra.full_space(), s_, rng_);
    if (!soc.certified) throw CapacityError("Ñ: the socle of L/φ(L) could not be certified");
    return q.pull(soc.socle);
  });
}

template <class K>
const IteratedSeries<K>& Analysis<K>::series(SeriesKind kind) {
  auto build = [&] {
    const Subspace<K> first = kind == SeriesKind::star ? n_star().value : n_tilde();
    IteratedSeries<K> out{{L_.full_space()}, L_.full_space()};
    if (first.is_full()) {
      out.terms.push_back(first);
      return out;
    }
    const Restriction<K>& r = restriction(first);
    const IteratedSeries<K>& inner = sub(first).series(kind);
    for (const auto& t : inner.terms) out.terms.push_back(r.pull(t));
    out.fixpoint = out.terms.back();
    return out;
  };
  return kind == SeriesKind::star ? star_.get(build) : tilde_.get(build);
}

template <class K>
const ChiefSeries<K>& Analysis<K>::refined_chief_series() {
  return refined_.get([&] {
    const std::vector<Subspace<K>> through{zn(), nilradical(), n_dagger(), nilradical() + cn()};
    ChiefSeries<K> cs = chief_series(L_, through, s_, rng_);
    if (!cs.certified) throw CapacityError("refined chief series could not be certified");
    return cs;
  });
}

template <class K>
const Subspace<K>& Analysis<K>::cent_intersection() {
  return cent_int_.get([&] {
    Subspace<K> out = L_.full_space();
    for (const auto& f : refined_chief_series().factors)
      out = out.intersect(f.upper + factor_centraliser(L_, f.upper, f.lower));
    return out;
  });
}

template <class K>
Regularity Analysis<K>::regularity_of(const Subspace<K>& u) {
  Analysis& c = sub(u);
  Regularity out;
  out.nil_class = nilpotency_class(c.algebra(), c.nilradical());
  out.derived_length = derived_length(c.algebra(), c.radical());
  const std::uint64_t p = characteristic();
  if (p == 0) return out;
  out.nilregular = *out.nil_class + 1 < p;
  out.solregular = *out.derived_length < 64 && (std::uint64_t{1} << *out.derived_length) < p;
  out.regular = out.nilregular || out.solregular;
  return out;
}

template <class K>
std::vector<Subspace<K>> Analysis<K>::known_ideals() {
  std::set<Subspace<K>> pool;
  auto add = [&](const Subspace<K>& x) {
    if (!x.is_zero() && !x.is_full() && is_ideal(L_, x)) pool.insert(x);
  };
  auto attempt = [&](auto&& f) {
    try {
      f();
    } catch (const CapacityError&) {
    } catch (const RegimeError&) {
    }
  };
  add(centre());
  attempt([&] {
    add(nilradical());
    add(zn());
    add(nilradical() + cn());
    add(cn());
  });
  attempt([&] { add(radical()); });
  add(product_space(L_, L_.full_space(), L_.full_space()));
  attempt([&] {
    add(n_dagger());
    add(n_hat());
    for (const auto& p : mcomp().components) add(p);
  });
  attempt([&] { add(frattini().ideal); });
  attempt([&] { add(n_tilde()); });
  attempt([&] {
    for (const auto& m : minimal_ideals().minimal_ideals) add(m);
  });
  return {pool.begin(), pool.end()};
}

template <class K>
const SubspaceLattice* Analysis<K>::lattice() {
  if constexpr (std::is_same_v<K, PrimeField>) {
    if (!lattice_done_) {
      lattice_done_ = true;
      if (subspace_count(L_.field().modulus(), L_.dim()) <= s_.exhaustive_cap)
        lattice_ = enumerate_lattice(L_, s_.exhaustive_cap);
    }
    return lattice_ ? &*lattice_ : nullptr;
  } else {
    return nullptr;
  }
}

template <class K>
const Restriction<K>& Analysis<K>::restriction(const Subspace<K>& u) {
  auto it = subs_.find(u);
  if (it == subs_.end()) it = subs_.emplace(u, SubChild{restrict_to(L_, u), nullptr}).first;
  return it->second.map;
}

template <class K>
Analysis<K>& Analysis<K>::sub(const Subspace<K>& u) {
  restriction(u);
  auto& entry = subs_.at(u);
  if (!entry.child) entry.child = std::make_unique<Analysis>(entry.map.algebra, s_);
  return *entry.child;
}

template <class K>
const Quotient<K>& Analysis<K>::quotient_map(const Subspace<K>& i) {
  auto it = quots_.find(i);
  if (it == quots_.end()) it = quots_.emplace(i, QuotChild{radlie::quotient(L_, i), nullptr}).first;
  return it->second.map;
}

template <class K>
Analysis<K>& Analysis<K>::quot(const Subspace<K>& i) {
  quotient_map(i);
  auto& entry = quots_.at(i);
  if (!entry.child) entry.child = std::make_unique<Analysis>(entry.map.algebra, s_);
  return *entry.child;
}

#define RADLIE_INST(K)                                                                              \
  template bool is_quasi_minimal(const LieAlgebra<K>&, const Subspace<K>&, const Settings&, Rng&); \
  template bool is_quasi_simple(const LieAlgebra<K>&, const Subspace<K>&, const Settings&, Rng&);  \
  template class Analysis<K>;
RADLIE_INST(Rationals)
RADLIE_INST(PrimeField)
#undef RADLIE_INST

}  // namespace radlie
