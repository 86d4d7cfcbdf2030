#pragma once

// Generalised nilradicals.  Analysis<K> computes, on demand and once each,
// the classical radicals of L together with
//   N*  preimage of Soc_{L/N}((N + C_L(N))/N),
//   MComp / E† / N†  quasi-minimal components, their sum, N + E†,
//   SComp / Ê / N̂    quasi-simple components, their sum, N + Ê,
//   Ñ   preimage of Soc(L/φ(L)),
// the iterated series N*_n, Ñ_n, and the chief-factor intersection
// ∩ (A + C_L(A/B)).  Sub-ideals and quotients are analysed as standalone
// algebras through child analyses, cached by subspace.

#include <exception>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radlie/enumerate.hpp"
#include "radlie/radicals.hpp"

namespace radlie {

/// A ⊴ L quasi-minimal: A² = A and A/Z(A) is a minimal ideal of L/Z(A).
/// Throws InputError for the zero subspace or a non-ideal, CapacityError
/// when irreducibility cannot be decided.
template <class K>
bool is_quasi_minimal(const LieAlgebra<K>& L, const Subspace<K>& a, const Settings& s, Rng& rng);

/// A ⊴ L quasi-simple: A² = A and A/Z(A) is simple as an algebra.
template <class K>
bool is_quasi_simple(const LieAlgebra<K>& L, const Subspace<K>& a, const Settings& s, Rng& rng);

enum class ComponentKind { mcomp, scomp };

template <class K>
struct ComponentSet {
  ComponentKind kind;
  std::vector<Subspace<K>> components;
  std::vector<bool> verified;  // component passed the quasi-minimal (resp. quasi-simple) test
  Subspace<K> span;            // E† or Ê
};

template <class K>
struct NStar {
  Subspace<K> value;
  std::vector<Subspace<K>> witnesses;  // X with X/N a minimal ideal of L/N inside (N + C)/N
  std::vector<FactorType> types;       // type of each X/N
  bool certified = true;
};

template <class K>
struct IteratedSeries {
  std::vector<Subspace<K>> terms;  // terms[0] = L, ending with a repeated term
  Subspace<K> fixpoint;
};

enum class SeriesKind { star, tilde };

template <class K>
class Analysis {
 public:
  Analysis(LieAlgebra<K> L, Settings s, nlohmann::json hints = nlohmann::json::object());
  Analysis(const Analysis&) = delete;
  Analysis& operator=(const Analysis&) = delete;

  const LieAlgebra<K>& algebra() const { return L_; }
  const Settings& settings() const { return s_; }
  Rng& rng() { return rng_; }
  const K& field() const { return L_.field(); }
  std::uint64_t characteristic() const { return L_.field().characteristic(); }

  const Subspace<K>& centre();
  const Subspace<K>& nilradical();
  const Subspace<K>& radical();
  /// Z(N) and C_L(N).
  const Subspace<K>& zn();
  const Subspace<K>& cn();
  const FrattiniResult<K>& frattini();
  const SocleReport<K>& minimal_ideals();

  const NStar<K>& n_star();
  const ComponentSet<K>& mcomp();
  const ComponentSet<K>& scomp();
  const Subspace<K>& n_dagger();
  const Subspace<K>& n_hat();
  const Subspace<K>& n_tilde();

  const IteratedSeries<K>& series(SeriesKind kind);

  /// Chief series refined through Z(N) ⊆ N ⊆ N† ⊆ N + C_L(N).
  const ChiefSeries<K>& refined_chief_series();
  /// ∩ (A + C_L(A/B)) over the factors of refined_chief_series().
  const Subspace<K>& cent_intersection();

  Regularity regularity_of(const Subspace<K>& u);
  bool quasi_minimal(const Subspace<K>& a) { return is_quasi_minimal(L_, a, s_, rng_); }
  bool quasi_simple(const Subspace<K>& a) { return is_quasi_simple(L_, a, s_, rng_); }

  /// Proper nonzero ideals already computed or cheaply derived; the test
  /// population for statements quantified over ideals.
  std::vector<Subspace<K>> known_ideals();

  /// Subspace lattice when the field is finite and the count is within
  /// exhaustive_cap; null otherwise.
  const SubspaceLattice* lattice();

  /// Child analysis of the subalgebra u as a standalone algebra.
  Analysis& sub(const Subspace<K>& u);
  const Restriction<K>& restriction(const Subspace<K>& u);
  /// Child analysis of L/I.
  Analysis& quot(const Subspace<K>& i);
  const Quotient<K>& quotient_map(const Subspace<K>& i);

  /// Dimension of the first summand when L was built as a direct sum.
  std::optional<std::size_t> summand_split;

  /// Minimal ideals named in the hints, verified (ideal, minimal).  Throws
  /// CertificateError if one fails.
  std::vector<Subspace<K>> verified_hint_ideals();

 private:
  LieAlgebra<K> L_;
  Settings s_;
  Rng rng_;
  nlohmann::json hints_;

  // A computed value, or the error that computing it raised.
  template <class T>
  struct Memo {
    std::optional<T> value;
    std::exception_ptr error;
    template <class F>
    const T& get(F&& f) {
      if (value) return *value;
      if (error) std::rethrow_exception(error);
      try {
        value = f();
      } catch (...) {
        error = std::current_exception();
        throw;
      }
      return *value;
    }
  };

  Memo<Subspace<K>> centre_, nil_, rad_, zn_, cn_, ndagger_, nhat_, ntilde_, cent_int_;
  Memo<FrattiniResult<K>> frattini_;
  Memo<SocleReport<K>> minimal_;
  Memo<NStar<K>> nstar_;
  Memo<ComponentSet<K>> mcomp_, scomp_;
  Memo<IteratedSeries<K>> star_, tilde_;
  Memo<ChiefSeries<K>> refined_;
  Memo<std::vector<Subspace<K>>> hint_ideals_;
  bool lattice_done_ = false;
  std::optional<SubspaceLattice> lattice_;

  struct SubChild {
    Restriction<K> map;
    std::unique_ptr<Analysis> child;  // created on first use
  };
  struct QuotChild {
    Quotient<K> map;
    std::unique_ptr<Analysis> child;
  };
  std::map<Subspace<K>, SubChild> subs_;
  std::map<Subspace<K>, QuotChild> quots_;
};

}  // namespace radlie
