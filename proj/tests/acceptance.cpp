// Acceptance run: one pass/fail line per criterion.
//
//   radlie_acceptance [--only N] [--skip N]...
//
// Exit status is 0 iff every criterion that ran passed.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>

#include <fmt/format.h>

#include "linalg_props.hpp"
#include "radlie/enumerate.hpp"
#include "radlie/theorems.hpp"

using namespace radlie;

namespace {

struct Result {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  double limit_seconds;
  std::function<Result()> run;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string opt_str(std::optional<std::size_t> v) { return v ? std::to_string(*v) : "none"; }

std::size_t ceil_log2(std::uint64_t p) {
  std::size_t k = 0;
  while ((std::uint64_t{1} << k) < p) ++k;
  return k;
}

Result bokut() {
  const auto L = build_bokut7();
  Settings s;
  Rng rng(s.seed);
  const auto cls = nilpotency_class(L, L.full_space());
  const auto dl = derived_length(L, L.full_space());
  const auto reg = regularity(L, L.full_space(), s, rng);
  const bool ok = cls == 5u && dl == 3u && reg.nilregular && !reg.solregular;
  const bool jacobi = !L.jacobi_violation();
  return {ok, fmt::format("bokut7/GF(7): class {} (want 5), derived length {} (want 3), nilregular {}, solregular {}; "
                          "Jacobi {}",
                          opt_str(cls), opt_str(dl), yes_no(reg.nilregular), yes_no(reg.solregular),
                          jacobi ? "holds" : "fails on the table")};
}

Result r2() {
  const auto L = build_r2(PrimeField(3));
  Settings s;
  Rng rng(s.seed);
  const auto n = nilradical(L, s, rng);
  const auto r = solvable_radical(L, s, rng);
  const auto reg = regularity(L, L.full_space(), s, rng);
  const bool ok = n == L.span({L.basis_vector(1)}) && r.is_full() && reg.nilregular && !reg.solregular;
  return {ok, fmt::format("r2/GF(3): N = {}, R = {}, nilregular {}, solregular {}", format_subspace(L, n),
                          r.is_full() ? "L" : format_subspace(L, r), yes_no(reg.nilregular), yes_no(reg.solregular))};
}

Result filiform() {
  Settings s;
  Rng rng(s.seed);
  bool ok = true;
  std::string detail;
  for (std::size_t n = 5; n <= 8; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto L = build_filiform(PrimeField(5), n);
    const auto cls = nilpotency_class(L, L.full_space());
    const auto dl = derived_length(L, L.full_space());
    const auto reg = regularity(L, L.full_space(), s, rng);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && cls == n - 1 && dl == 2u && reg.nilregular == (n - 1 < 4) && reg.solregular && secs < 1.0;
    detail += fmt::format("{}n={}: class {}, dl {}, nilreg {}, solreg {} ({:.3f} s)", detail.empty() ? "" : "; ", n,
                          opt_str(cls), opt_str(dl), yes_no(reg.nilregular), yes_no(reg.solregular), secs);
  }
  return {ok, detail};
}

Result block_form() {
  Settings s;
  Rng rng(s.seed);
  bool ok = true;
  std::string detail;
  for (std::uint32_t p : {5u, 7u}) {
    const auto L = build_trunc_tensor(build_sl2(PrimeField(p)), 1);
    const auto n = nilradical(L, s, rng);
    const auto r = solvable_radical(L, s, rng);
    const auto cls = nilpotency_class(L, n);
    const auto dl = derived_length(L, r);
    ok = ok && cls == p - 1 && dl == ceil_log2(p);
    detail += fmt::format("{}p={}: class(N) {} (want {}), dl(R) {} (want {})", detail.empty() ? "" : "; ", p,
                          opt_str(cls), p - 1, opt_str(dl), ceil_log2(p));
  }
  return {ok, detail};
}

SuiteReport& full_suite() {
  static SuiteReport r = run_suite(builtin_corpus(), Settings{}, SuiteOptions{});
  return r;
}

Result suite() {
  const SuiteReport& r = full_suite();
  const std::set<std::string> named = {"t:gennil", "t:centgnil", "t:rad",    "t:centhat", "p:equal", "p:double",
                                       "p:hdouble", "p:sum",     "p:tildesum", "t:cent",  "c:der",   "t:phi"};
  std::size_t named_pass = 0, named_fail = 0, exhaustive_cent = 0, phi_small = 0, phi_small_bad = 0;
  std::string first_fail;
  std::map<std::string, std::pair<std::uint32_t, std::size_t>> shape;  // algebra -> (char, dim)
  for (const auto& d : builtin_corpus()) shape[d.name] = {characteristic_of(d.algebra), dim_of(d.algebra)};
  for (const auto& e : r.entries) {
    if (e.outcome.status == Status::fail && first_fail.empty())
      first_fail = fmt::format("{} {}: {}", e.algebra, e.id, e.outcome.detail);
    if (!named.count(e.id)) continue;
    if (e.outcome.status == Status::pass) ++named_pass;
    if (e.outcome.status == Status::fail) ++named_fail;
    if (e.id == "t:cent" && e.outcome.detail.find("exhaustive") != std::string::npos) ++exhaustive_cent;
    if (e.id == "t:phi") {
      const auto it = shape.find(e.algebra);
      if (it != shape.end() && (it->second.first == 2 || it->second.first == 3) && it->second.second <= 5) {
        ++phi_small;
        if (e.outcome.status != Status::pass) ++phi_small_bad;
      }
    }
  }
  const bool ok = r.fail == 0 && r.algebras >= 15 && named_fail == 0 && phi_small > 0 && phi_small_bad == 0;
  std::string detail = fmt::format(
      "{} algebras ({} shipped + generated); {} pass, {} fail, {} n/a, {} capacity-skipped; named checks {} pass; "
      "t:cent exhaustive on {}; t:phi on {} small GF(2)/GF(3) fixtures",
      r.algebras, shape.size(), r.pass, r.fail, r.not_applicable, r.capacity_skipped, named_pass, exhaustive_cent,
      phi_small - phi_small_bad);
  if (!first_fail.empty()) detail += "; first failure: " + first_fail;
  return {ok, detail};
}

Result pasha() {
  const auto L = build_pasha(7, 1);
  std::vector<Vec<PrimeField>> av, plus;
  for (std::size_t i = 0; i + 1 < L.dim(); ++i) {
    av.push_back(L.basis_vector(i));
    if (i >= 3) plus.push_back(L.basis_vector(i));
  }
  const auto A = L.span(av), Aplus = L.span(plus);
  const nlohmann::json hints = {{"minimal_ideals", nlohmann::json::array({subspace_to_json(A)})}};
  Analysis<PrimeField> a(L, Settings{}, hints);
  const bool qm = a.quasi_minimal(A), qs = a.quasi_simple(A);
  const auto& mc = a.mcomp();
  const bool mcomp_is_a = mc.components.size() == 1 && mc.components[0] == A && mc.verified[0];
  const bool ndag = a.n_dagger() == A;
  const bool fix = a.series(SeriesKind::star).fixpoint == Aplus;
  const bool inner = a.restriction(A).pull(a.sub(A).n_dagger()) == Aplus;
  const bool ehat = a.scomp().span.is_zero(), nhat = a.n_hat().is_zero();
  const bool cent = centraliser(L, a.n_hat()).is_full();
  const bool ok = qm && !qs && mcomp_is_a && ndag && fix && inner && ehat && nhat && cent;
  return {ok, fmt::format("pasha(7,1): quasi-minimal {}, quasi-simple {}, MComp = {{A}} {}, N† = A {}, star fixpoint = "
                          "A+ {}, N†(N†) = A+ {}, Ê = 0 {}, N̂ = 0 {}, C_L(N̂) = L {}",
                          yes_no(qm), yes_no(qs), yes_no(mcomp_is_a), yes_no(ndag), yes_no(fix), yes_no(inner),
                          yes_no(ehat), yes_no(nhat), yes_no(cent))};
}

Result oracle() {
  Settings s;
  std::size_t algebras = 0, targets = 0;
  std::string diff;
  for (const auto& d : builtin_corpus()) {
    const auto* L = std::get_if<LieAlgebra<PrimeField>>(&d.algebra);
    if (!L || L->field().modulus() > 3 || L->dim() > 4) continue;
    ++algebras;
    const auto ov = oracle_values(*L, enumerate_lattice(*L, s.subspace_cap));
    Analysis<PrimeField> a(*L, s, d.hints);
    const std::pair<const char*, bool> cmp[] = {{"nilradical", a.nilradical() == ov.nilradical},
                                                {"radical", a.radical() == ov.radical},
                                                {"frattini", a.frattini().ideal == ov.frattini},
                                                {"socle", a.minimal_ideals().socle == ov.socle}};
    for (const auto& [name, same] : cmp) {
      ++targets;
      if (!same && diff.empty()) diff = fmt::format("{} differs on {}", name, d.name);
    }
  }
  return {diff.empty() && algebras > 0,
          fmt::format("{} algebras, {} comparisons{}", algebras, targets, diff.empty() ? "" : "; " + diff)};
}

Result linalg() {
  std::size_t checks = 0;
  std::vector<std::string> bad;
  auto add = [&](const test::PropertyStats& st, const std::string& field) {
    checks += st.checks;
    for (const auto& v : st.violations) bad.push_back(field + ": " + v);
  };
  add(test::run_linalg_properties(Rationals{}, 1000, 101), "Q");
  add(test::run_linalg_properties(PrimeField(2), 1000, 102), "GF(2)");
  add(test::run_linalg_properties(PrimeField(3), 1000, 103), "GF(3)");
  add(test::run_linalg_properties(PrimeField(7), 1000, 107), "GF(7)");
  return {bad.empty(), fmt::format("{} checks over Q, GF(2), GF(3), GF(7); {} violations{}", checks, bad.size(),
                                   bad.empty() ? "" : " (first: " + bad.front() + ")")};
}

Result strictness() {
  const SuiteReport& r = full_suite();
  const auto j = suite_to_json(r);
  std::size_t equal_pass = 0, equal_other = 0;
  for (const auto& e : r.entries)
    if (e.id == "p:equal") (e.outcome.status == Status::pass ? equal_pass : equal_other)++;
  const std::string status = j["strict_inclusion"]["status"];
  const bool recorded = r.strict_equal_witnesses.empty() ? status == "unverified-by-example" : status == "witnessed";
  return {recorded && equal_other == 0 && equal_pass == r.algebras,
          fmt::format("N* ⊆ Ñ holds on {}/{} algebras; strict case recorded as '{}'", equal_pass, r.algebras, status)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> skip;
  std::optional<int> only;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--skip") && i + 1 < argc)
      skip.insert(std::atoi(argv[++i]));
    else if (!std::strcmp(argv[i], "--only") && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else {
      std::cerr << "usage: radlie_acceptance [--only N] [--skip N]...\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, 1, bokut},   {2, 1, r2},      {3, 4, filiform}, {4, 5, block_form},  {5, 120, suite},
      {6, 30, pasha},  {7, 60, oracle}, {8, 10, linalg},  {9, 120, strictness},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (skip.count(c.id) || (only && *only != c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result v{false, ""};
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    all = all && pass;
    std::cout << fmt::format("criterion {}  {}  {}  [{:.2f} s, limit {} s{}]\n", c.id, pass ? "PASS" : "FAIL", v.detail,
                             secs, c.limit_seconds, in_time ? "" : ", exceeded")
              << std::flush;
  }
  return all ? 0 : 1;
}
