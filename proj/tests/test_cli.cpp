#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : "env " + env + " ") + std::string(RADLIE_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden(const std::string& name) {
  return (fs::path(RADLIE_SOURCE_DIR) / "corpus" / (name + ".json")).string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate") {
    CHECK(run("validate " + golden("r2-gf3")).code == 0);
    CHECK(run("validate " + (fs::path(RADLIE_SOURCE_DIR) / "corpus/rejected/bokut7.json").string()).code == 2);
    CHECK(run("validate /nonexistent.json").code == 2);
    CHECK(run("frobnicate").code == 2);
  }

  TEST_CASE("analyze text and json") {
    const Run t = run("analyze " + golden("r2-q"));
    CHECK(t.code == 0);
    CHECK(t.out.find("nilradical     <e2>") != std::string::npos);
    const Run j = run("analyze --json " + golden("heis-gf2"));
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
    CHECK(doc["radicals"]["frattini"]["basis"] == nlohmann::json::array({{"0", "0", "1"}}));
  }

  TEST_CASE("analyze reports capacity failures") {
    CHECK(run("analyze --enum-cap 1 --spin-seeds 1 " + golden("pasha7")).code == 3);
    CHECK(run("analyze --allow-partial --enum-cap 1 --spin-seeds 1 " + golden("pasha7")).code == 0);
  }

  TEST_CASE("check") {
    CHECK(run("check --suite t:gennil " + golden("gl2-q")).code == 0);
    CHECK(run("check --suite bogus " + golden("gl2-q")).code == 2);
    const Run j = run("check --json --no-generate --seed 5 " + golden("r2-gf3"));
    REQUIRE(j.code == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["seed"] == 5);
    CHECK(doc["summary"]["fail"] == 0);
  }

  TEST_CASE("oracle") {
    CHECK(run("oracle " + golden("r2-gf3")).code == 0);
    const Run h = run("oracle --targets frattini " + golden("heis-gf2"));
    CHECK(h.code == 0);
    CHECK(h.out.find("frattini    agree <z>") != std::string::npos);
    CHECK(run("oracle " + golden("r2-q")).code == 2);
    CHECK(run("oracle --targets nope " + golden("r2-gf3")).code == 2);
  }

  TEST_CASE("environment settings, flags win") {
    const std::string r2 = golden("r2-gf3");
    CHECK(nlohmann::json::parse(run("check --json --no-generate " + r2).out)["seed"] == 1);
    CHECK(nlohmann::json::parse(run("check --json --no-generate " + r2, "RADLIE_SEED=9").out)["seed"] == 9);
    CHECK(nlohmann::json::parse(run("check --json --no-generate --seed 4 " + r2, "RADLIE_SEED=9").out)["seed"] == 4);
    CHECK(run("check --no-generate " + r2, "RADLIE_ENUM_CAP=abc").code == 2);
  }

  TEST_CASE("corpus emit") {
    const fs::path dir = fs::temp_directory_path() / "radlie_emit_test";
    fs::remove_all(dir);
    CHECK(run("corpus emit " + dir.string()).code == 0);
    CHECK(fs::exists(dir / "pasha7.json"));
    CHECK(fs::exists(dir / "rejected" / "bokut7.json"));
    fs::remove_all(dir);
  }
}
