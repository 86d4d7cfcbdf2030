#include <doctest.h>

#include <set>

#include "radlie/theorems.hpp"
#include "support.hpp"

using namespace radlie;
using test::fixture;

TEST_SUITE("theorems") {
  TEST_CASE("registry ids are unique and cover the required set") {
    std::set<std::string> ids;
    for (const auto& t : theorem_registry()) {
      CHECK(ids.insert(t.id).second);
      CHECK_FALSE(t.statement.empty());
    }
    for (const char* id :
         {"t:nil", "t:solv", "t:minp", "c:minp", "t:block", "t:rad", "c:cent0", "l:centre", "l:phi", "l:mchar",
          "l:irred", "p:sub", "c:cent", "c:comp", "l:sub", "p:soc", "t:gennil", "p:double", "p:quotient", "p:sum",
          "p:ideal2", "p:idealdagger", "t:cent", "c:der", "t:centgnil", "t:der-rep", "p:gensoc", "p:char0",
          "p:phistar", "p:starseries", "c:starseries", "l:nirred", "l:sub1", "l:sub2", "p:comp", "c:scomp",
          "t:equiv", "c:ssoc", "c:gennil2", "p:hideal", "p:hdouble", "p:phihat", "t:centhat", "t:phifree",
          "p:equal", "p:factor", "p:phifactor3", "p:tildesum", "p:prop-i", "p:prop-ii", "p:prop-iii", "p:prop-iv",
          "p:prop-v", "p:prop-vi", "p:prop-vii", "p:prop-viii", "p:prop-ix", "p:prop-x", "c:tildeinf", "t:phi"})
      CHECK_MESSAGE(is_theorem_id(id), id);
    CHECK_FALSE(is_theorem_id("bogus"));
  }

  TEST_CASE("unknown ids are input errors") {
    Analysis<Rationals> a(build_r2(Rationals{}), Settings{});
    CHECK_THROWS_AS(check_theorem(a, "bogus"), InputError);
    CHECK_THROWS_AS(run_suite({fixture("r2-q")}, Settings{}, {{"bogus"}}), InputError);
  }

  TEST_CASE("single checks on small fixtures") {
    const auto d = fixture("r2-gf3");
    Analysis<PrimeField> a(std::get<LieAlgebra<PrimeField>>(d.algebra), Settings{});
    CHECK(check_theorem(a, "t:rad").status == Status::pass);
    CHECK(check_theorem(a, "t:gennil").status == Status::pass);
    CHECK(check_theorem(a, "t:phi").status == Status::pass);
    CHECK(check_theorem(a, "t:cent").detail.find("exhaustive") != std::string::npos);
    Analysis<Rationals> g(build_gl2(Rationals{}), Settings{});
    CHECK(check_theorem(g, "t:centgnil").status == Status::pass);
    CHECK(check_theorem(g, "t:phi").status == Status::not_applicable);
    CHECK(check_theorem(g, "t:block").status == Status::not_applicable);
  }

  TEST_CASE("the sum checks apply only to constructed direct sums") {
    Analysis<Rationals> a(direct_sum(build_sl2(Rationals{}), build_r2(Rationals{})), Settings{});
    CHECK(check_theorem(a, "p:sum").status == Status::not_applicable);
    a.summand_split = 3;
    CHECK(check_theorem(a, "p:sum").status == Status::pass);
    CHECK(check_theorem(a, "p:tildesum").status == Status::pass);
    CHECK(check_theorem(a, "p:prop-x").status == Status::pass);
  }

  TEST_CASE("a wrong split is detected") {
    // Splitting sl2 + r2 after two basis vectors is not a decomposition into
    // ideals.
    Analysis<Rationals> a(direct_sum(build_sl2(Rationals{}), build_r2(Rationals{})), Settings{});
    a.summand_split = 2;
    CHECK_THROWS_AS(check_theorem(a, "p:sum"), InputError);
  }

  TEST_CASE("expectations are compared") {
    const auto d = fixture("r2-gf3");
    Analysis<PrimeField> a(std::get<LieAlgebra<PrimeField>>(d.algebra), Settings{});
    const auto out = check_expectations(a, d.expectations);
    CHECK(out.size() == d.expectations.size());
    for (const auto& [k, o] : out) CHECK_MESSAGE(o.status == Status::pass, k);
    nlohmann::json wrong = {{"nilradical", subspace_to_json(a.algebra().full_space())}, {"dim", 3}, {"nonsense", 1}};
    for (const auto& [k, o] : check_expectations(a, wrong)) CHECK_MESSAGE(o.status == Status::fail, k);
  }

  TEST_CASE("suite is deterministic under a fixed seed") {
    std::vector<AlgebraDoc> docs = {fixture("gl2-gf3"), fixture("heis-gf2"), fixture("sl2+r2-q")};
    SuiteOptions opt;
    Settings s;
    s.seed = 7;
    auto strip = [](nlohmann::json j) {
      for (auto& e : j["entries"]) e.erase("seconds");
      return j;
    };
    const auto a = strip(suite_to_json(run_suite(docs, s, opt)));
    const auto b = strip(suite_to_json(run_suite(docs, s, opt)));
    CHECK(a == b);
    CHECK(a["summary"]["fail"] == 0);
    CHECK(a["seed"] == 7);
    CHECK(a["strict_inclusion"]["status"] == "unverified-by-example");
  }
}
