// radlie: validate, analyze and check Lie algebra documents.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "radlie/theorems.hpp"

namespace fs = std::filesystem;
using namespace radlie;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kSuiteFail = 1, kInput = 2, kCapacity = 3 };

struct Caps {
  std::optional<std::uint64_t> enum_cap, seed;
  std::optional<std::size_t> spin_seeds;
};

std::optional<std::uint64_t> env_u64(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw InputError(fmt::format("{} is not a non-negative integer: {}", name, v));
  }
}

Settings make_settings(const Caps& c) {
  Settings s;
  if (auto e = env_u64("RADLIE_ENUM_CAP")) s.enum_cap = *e;
  if (auto e = env_u64("RADLIE_SEED")) s.seed = *e;
  if (c.enum_cap) s.enum_cap = *c.enum_cap;
  if (c.seed) s.seed = *c.seed;
  if (c.spin_seeds) s.spin_seeds = *c.spin_seeds;
  return s;
}

void add_caps(CLI::App* cmd, Caps& c) {
  cmd->add_option("--enum-cap", c.enum_cap, "projective points enumerated per splitting test");
  cmd->add_option("--spin-seeds", c.spin_seeds, "random elements tried per splitting test");
  cmd->add_option("--seed", c.seed, "RNG seed");
}

// ---- analyze -----------------------------------------------------------------

struct Field {
  std::string name;
  json value;        // subspace JSON, or null when not computed
  std::string text;  // rendered subspace, or the reason it is missing
  std::string provenance;
};

template <class K>
class Report {
 public:
  Report(Analysis<K>& a, bool allow_partial) : a_(a), allow_partial_(allow_partial) {}

  template <class F>
  void subspace(const std::string& name, F&& f, const std::string& provenance = "proved") {
    Field fd{name, nullptr, "", provenance};
    try {
      const Subspace<K> s = f();
      fd.value = subspace_to_json(s);
      fd.text = format_subspace(a_.algebra(), s);
    } catch (const RegimeError& e) {
      fd.provenance = "out-of-regime";
      fd.text = e.what();
    } catch (const CapacityError& e) {
      if (!allow_partial_) throw;
      fd.provenance = "capacity";
      fd.text = e.what();
    }
    fields_.push_back(std::move(fd));
  }

  template <class F>
  void series(const std::string& name, F&& f) {
    try {
      const IteratedSeries<K>& s = f();
      json terms = json::array();
      std::vector<std::string> dims;
      for (const auto& t : s.terms) {
        terms.push_back(subspace_to_json(t));
        dims.push_back(std::to_string(t.dim()));
      }
      series_[name] = {{"terms", terms}, {"fixpoint", subspace_to_json(s.fixpoint)}};
      series_text_.push_back(fmt::format("{} dims: {}; fixpoint {}", name, fmt::join(dims, " ⊇ "),
                                         format_subspace(a_.algebra(), s.fixpoint)));
    } catch (const RegimeError& e) {
      series_[name] = {{"error", e.what()}};
      series_text_.push_back(fmt::format("{}: {}", name, e.what()));
    } catch (const CapacityError& e) {
      if (!allow_partial_) throw;
      series_[name] = {{"error", e.what()}};
      series_text_.push_back(fmt::format("{}: {}", name, e.what()));
    }
  }

  json to_json(const std::string& name) const {
    json out = json::object();
    out["name"] = name;
    out["dim"] = a_.algebra().dim();
    out["characteristic"] = a_.characteristic();
    json radicals = json::object();
    for (const auto& f : fields_) radicals[f.name] = {{"basis", f.value}, {"provenance", f.provenance}, {"text", f.text}};
    out["radicals"] = radicals;
    out["series"] = series_;
    return out;
  }

  void print(std::ostream& os, const std::string& name) const {
    os << fmt::format("{}: dim {}, characteristic {}\n", name, a_.algebra().dim(), a_.characteristic());
    for (const auto& f : fields_) {
      os << fmt::format("  {:<14} {}", f.name, f.text);
      if (f.provenance != "proved") os << fmt::format("  [{}]", f.provenance);
      os << "\n";
    }
    for (const auto& t : series_text_) os << "  " << t << "\n";
  }

 private:
  Analysis<K>& a_;
  bool allow_partial_;
  std::vector<Field> fields_;
  json series_ = json::object();
  std::vector<std::string> series_text_;
};

template <class K>
int analyze(const AlgebraDoc& doc, const LieAlgebra<K>& L, const Settings& s, bool as_json, bool allow_partial) {
  Analysis<K> a(L, s, doc.hints);
  Report<K> r(a, allow_partial);
  const std::string socle_prov = doc.hints.empty() ? "proved" : "certified-given-hints";
  r.subspace("centre", [&] { return a.centre(); });
  r.subspace("nilradical", [&] { return a.nilradical(); });
  r.subspace("radical", [&] { return a.radical(); });
  r.subspace("R_c(C_L(N))", [&] { return characteristic_radical(L, a.cn(), s, a.rng()).of_s; });
  r.subspace("frattini", [&] { return a.frattini().ideal; });
  r.subspace("E_dagger", [&] { return a.mcomp().span; }, socle_prov);
  r.subspace("E_hat", [&] { return a.scomp().span; }, socle_prov);
  r.subspace("N_dagger", [&] { return a.n_dagger(); }, socle_prov);
  r.subspace("N_star", [&] { return a.n_star().value; }, socle_prov);
  r.subspace("N_hat", [&] { return a.n_hat(); }, socle_prov);
  r.subspace("N_tilde", [&] { return a.n_tilde(); }, socle_prov);
  r.series("star", [&]() -> const IteratedSeries<K>& { return a.series(SeriesKind::star); });
  r.series("tilde", [&]() -> const IteratedSeries<K>& { return a.series(SeriesKind::tilde); });
  json extra = json::object();
  std::string extra_text;
  if (const auto c = nilpotency_class(L, L.full_space())) {
    extra["nilpotency_class"] = *c;
    extra_text += fmt::format("  nilpotency class {}\n", *c);
  }
  if (const auto d = derived_length(L, L.full_space())) {
    extra["derived_length"] = *d;
    extra_text += fmt::format("  derived length {}\n", *d);
  }
  if (as_json) {
    json out = r.to_json(doc.name);
    out["invariants"] = extra;
    std::cout << out.dump(2) << "\n";
  } else {
    r.print(std::cout, doc.name);
    std::cout << extra_text;
  }
  return kOk;
}

// ---- check -------------------------------------------------------------------

int check(const std::vector<AlgebraDoc>& docs, const Settings& s, SuiteOptions opt, bool as_json, bool verbose) {
  const SuiteReport r = run_suite(docs, s, opt);
  if (as_json) {
    std::cout << suite_to_json(r).dump(2) << "\n";
  } else {
    for (const auto& e : r.entries)
      if (verbose || e.outcome.status == Status::fail || e.outcome.status == Status::capacity_skipped)
        std::cout << fmt::format("{:<28} {:<16} {:<16} {}\n", e.algebra, e.id, status_name(e.outcome.status),
                                 e.outcome.detail);
    std::cout << fmt::format("{} algebras, seed {}: {} pass, {} fail, {} not applicable, {} capacity-skipped\n",
                             r.algebras, r.seed, r.pass, r.fail, r.not_applicable, r.capacity_skipped);
    if (r.strict_equal_witnesses.empty())
      std::cout << "N* strictly inside Ñ: unverified-by-example\n";
    else
      std::cout << fmt::format("N* strictly inside Ñ: {}\n", fmt::join(r.strict_equal_witnesses, ", "));
  }
  return r.fail == 0 ? kOk : kSuiteFail;
}

// ---- oracle ------------------------------------------------------------------

int oracle(const AlgebraDoc& doc, const Settings& s, const std::vector<std::string>& targets) {
  const auto* Lp = std::get_if<LieAlgebra<PrimeField>>(&doc.algebra);
  if (!Lp) throw InputError("oracle: characteristic 0 is unsupported (needs a finite field)");
  const auto& L = *Lp;
  for (const auto& t : targets)
    if (t != "nilradical" && t != "radical" && t != "frattini" && t != "socle")
      throw InputError("oracle: unknown target " + t);
  const SubspaceLattice lat = enumerate_lattice(L, s.subspace_cap);
  const OracleValues ov = oracle_values(L, lat);
  Analysis<PrimeField> a(L, s, doc.hints);
  bool same = true;
  std::cout << fmt::format("{}: {} subalgebras, {} ideals\n", doc.name, lat.subalgebras.size(), lat.ideals.size());
  for (const auto& t : targets) {
    Subspace<PrimeField> mine = L.zero_space(), brute = L.zero_space();
    if (t == "nilradical") {
      mine = a.nilradical();
      brute = ov.nilradical;
    } else if (t == "radical") {
      mine = a.radical();
      brute = ov.radical;
    } else if (t == "frattini") {
      mine = a.frattini().ideal;
      brute = ov.frattini;
    } else {
      mine = a.minimal_ideals().socle;
      brute = ov.socle;
    }
    const bool eq = mine == brute;
    same = same && eq;
    std::cout << fmt::format("  {:<11} {:<5} {}", t, eq ? "agree" : "DIFF", format_subspace(L, mine));
    if (!eq) std::cout << " vs enumerated " << format_subspace(L, brute);
    std::cout << "\n";
  }
  return same ? kOk : kSuiteFail;
}

// ---- corpus emit -------------------------------------------------------------

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InputError("cannot write " + p.string());
  out << text;
}

int emit(const fs::path& dir) {
  fs::create_directories(dir / "rejected");
  std::size_t n = 0;
  for (const auto& d : builtin_corpus()) {
    write_text(dir / (d.name + ".json"), save_doc(d));
    ++n;
  }
  write_text(dir / "rejected" / "bokut7.json", save_doc(bokut7_doc()));
  std::cout << fmt::format("wrote {} documents to {} and 1 to {}\n", n, dir.string(), (dir / "rejected").string());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radlie: radicals and generalised nilradicals of finite-dimensional Lie algebras"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> files;
  Caps caps;

  auto* validate = app.add_subcommand("validate", "load and check a document");
  validate->add_option("file", file)->required();

  bool as_json = false, allow_partial = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "compute the radicals of an algebra");
  analyze_cmd->add_option("file", file)->required();
  analyze_cmd->add_flag("--json", as_json, "machine-readable output");
  analyze_cmd->add_flag("--allow-partial", allow_partial, "report capacity failures instead of exiting");
  add_caps(analyze_cmd, caps);

  std::string suite = "all";
  bool no_generate = false, verbose = false;
  auto* check_cmd = app.add_subcommand("check", "run the theorem suite (builtin corpus when no files given)");
  check_cmd->add_option("files", files);
  check_cmd->add_option("--suite", suite, "all, or a comma-separated list of theorem ids");
  check_cmd->add_flag("--no-generate", no_generate, "skip generated direct sums and quotients");
  check_cmd->add_flag("--json", as_json, "machine-readable output");
  check_cmd->add_flag("-v,--verbose", verbose, "print every outcome");
  add_caps(check_cmd, caps);

  std::string targets = "nilradical,radical,frattini,socle";
  auto* oracle_cmd = app.add_subcommand("oracle", "compare against full subspace enumeration");
  oracle_cmd->add_option("file", file)->required();
  oracle_cmd->add_option("--targets", targets, "comma-separated: nilradical, radical, frattini, socle");
  add_caps(oracle_cmd, caps);

  std::string out_dir;
  auto* corpus_cmd = app.add_subcommand("corpus", "corpus utilities");
  corpus_cmd->require_subcommand(1);
  auto* emit_cmd = corpus_cmd->add_subcommand("emit", "write the builtin fixtures as documents");
  emit_cmd->add_option("dir", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (validate->parsed()) {
      const AlgebraDoc d = load_file(file);
      std::cout << fmt::format("{}: ok ({}-dimensional, characteristic {})\n", d.name, dim_of(d.algebra),
                               characteristic_of(d.algebra));
      return kOk;
    }
    const Settings s = make_settings(caps);
    if (analyze_cmd->parsed()) {
      const AlgebraDoc d = load_file(file);
      return std::visit([&](const auto& L) { return analyze(d, L, s, as_json, allow_partial); }, d.algebra);
    }
    if (check_cmd->parsed()) {
      std::vector<AlgebraDoc> docs;
      if (files.empty()) docs = builtin_corpus();
      for (const auto& f : files) docs.push_back(load_file(f));
      SuiteOptions opt;
      opt.generate = !no_generate;
      if (suite != "all") {
        std::stringstream ss(suite);
        for (std::string id; std::getline(ss, id, ',');)
          if (!id.empty()) opt.ids.push_back(id);
      }
      return check(docs, s, opt, as_json, verbose);
    }
    if (oracle_cmd->parsed()) {
      std::vector<std::string> ts;
      std::stringstream ss(targets);
      for (std::string t; std::getline(ss, t, ',');)
        if (!t.empty()) ts.push_back(t);
      return oracle(load_file(file), s, ts);
    }
    if (emit_cmd->parsed()) return emit(out_dir);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const RegimeError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kInput;
  } catch (const CertificateError& e) {
    std::cerr << "certificate: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
