#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "radlie/corpus.hpp"

using namespace radlie;
namespace fs = std::filesystem;

namespace {

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kR2 = R"({"schema": "radlie-algebra/1", "name": "r2", "field": {"characteristic": 3}, "dim": 2,
  "brackets": [{"i": 0, "j": 1, "terms": [{"k": 1, "coeff": "1"}]}]})";

}  // namespace

TEST_SUITE("corpus") {
  TEST_CASE("builtin corpus size and round trip") {
    const auto docs = builtin_corpus();
    CHECK(docs.size() >= 15);
    for (const auto& d : docs) {
      const std::string text = save_doc(d);
      const AlgebraDoc back = load_doc(text);
      CHECK(back.name == d.name);
      CHECK(save_doc(back) == text);
      std::visit(
          [&](const auto& L) {
            using L_t = std::decay_t<decltype(L)>;
            CHECK(std::get<L_t>(back.algebra).same_table(L));
          },
          d.algebra);
    }
  }

  TEST_CASE("golden files match the builtin corpus") {
    const fs::path dir = fs::path(RADLIE_SOURCE_DIR) / "corpus";
    std::size_t n = 0;
    for (const auto& d : builtin_corpus()) {
      const fs::path p = dir / (d.name + ".json");
      REQUIRE_MESSAGE(fs::exists(p), p.string());
      CHECK_MESSAGE(read(p) == save_doc(d), d.name);
      ++n;
    }
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".json") ++files;
    CHECK(files == n);
    CHECK(read(dir / "rejected" / "bokut7.json") == save_doc(bokut7_doc()));
  }

  TEST_CASE("bokut7 is rejected by the loader") {
    CHECK_THROWS_WITH_AS(load_doc(save_doc(bokut7_doc())), doctest::Contains("Jacobi"), InputError);
  }

  TEST_CASE("loader validation") {
    CHECK(load_doc(kR2).name == "r2");
    CHECK(dim_of(load_doc(kR2).algebra) == 2);
    CHECK(characteristic_of(load_doc(kR2).algebra) == 3);
    auto broken = [](const std::string& from, const std::string& to) {
      std::string t = kR2;
      t.replace(t.find(from), from.size(), to);
      return t;
    };
    CHECK_THROWS_AS(load_doc("{"), InputError);
    CHECK_THROWS_AS(load_doc(broken("\"k\": 1", "\"k\": 2")), InputError);
    CHECK_THROWS_AS(load_doc(broken("\"i\": 0", "\"i\": 1")), InputError);
    CHECK_THROWS_AS(load_doc(broken("\"1\"", "\"1/3\"")), InputError);
    CHECK_THROWS_AS(load_doc(broken("\"characteristic\": 3", "\"characteristic\": 4")), InputError);
    CHECK_THROWS_AS(load_doc(broken("radlie-algebra/1", "other/9")), InputError);
    CHECK_THROWS_AS(load_doc(broken("\"dim\": 2,", "")), InputError);
    CHECK_THROWS_AS(load_file("/nonexistent/file.json"), InputError);
  }

  TEST_CASE("rational coefficients") {
    std::string t = kR2;
    t.replace(t.find("\"characteristic\": 3"), 19, "\"characteristic\": 0");
    t.replace(t.find("\"1\""), 3, "\"-2/4\"");
    const auto d = load_doc(t);
    const auto& L = std::get<LieAlgebra<Rationals>>(d.algebra);
    CHECK(L.basis_bracket(0, 1)[1] == mpq_class(-1, 2));
    CHECK(save_doc(d).find("\"-1/2\"") != std::string::npos);
  }

  TEST_CASE("subspace json round trip") {
    const auto L = build_gl2(Rationals{});
    Rng rng(2);
    for (int t = 0; t < 10; ++t) {
      const auto s = L.span({random_vec(L.field(), 4, rng), random_vec(L.field(), 4, rng)});
      CHECK(subspace_from_json(L, subspace_to_json(s)) == s);
    }
    CHECK_THROWS_AS(subspace_from_json(L, nlohmann::json::array({{1, 2}})), InputError);
  }
}
