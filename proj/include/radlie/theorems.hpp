#pragma once

// Registry of checkable statements about the radicals.  Each id maps to one
// check that evaluates the statement on an Analysis, or reports why it does
// not apply.  The suite runner applies the registry to a corpus, including
// direct sums and quotients generated from it.

#include <string>
#include <vector>

#include "radlie/corpus.hpp"
#include "radlie/genrad.hpp"

namespace radlie {

enum class Status { pass, fail, not_applicable, capacity_skipped };
const char* status_name(Status s);

struct Outcome {
  Status status;
  std::string detail;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// All registered ids in a fixed order.
const std::vector<TheoremInfo>& theorem_registry();
bool is_theorem_id(const std::string& id);

/// Runs one check.  Throws InputError for an unknown id.  CapacityError
/// becomes capacity_skipped, RegimeError becomes not_applicable.
template <class K>
Outcome check_theorem(Analysis<K>& a, const std::string& id);

/// Compares every expectation recorded in the document against the analysis.
/// One outcome per key, named "expect:<key>".
template <class K>
std::vector<std::pair<std::string, Outcome>> check_expectations(Analysis<K>& a, const nlohmann::json& expectations);

struct SuiteEntry {
  std::string algebra, id;
  Outcome outcome;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<SuiteEntry> entries;
  std::size_t algebras = 0;
  std::size_t pass = 0, fail = 0, not_applicable = 0, capacity_skipped = 0;
  /// Algebras where N* is strictly smaller than Ñ; empty means the strict
  /// case stays unverified by example.
  std::vector<std::string> strict_equal_witnesses;
  std::uint64_t seed = 0;
};

struct SuiteOptions {
  std::vector<std::string> ids;   // empty: all
  bool generate = true;           // add direct sums and quotients of small members
  bool expectations = true;
  std::size_t sum_max_dim = 3;    // summands for generated direct sums
  std::size_t quotient_max_dim = 8;
};

SuiteReport run_suite(const std::vector<AlgebraDoc>& docs, const Settings& s, const SuiteOptions& opt);

nlohmann::json suite_to_json(const SuiteReport& r);

}  // namespace radlie
