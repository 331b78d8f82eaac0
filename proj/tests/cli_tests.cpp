#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "epstein/json_io.hpp"
#include "epstein/parse.hpp"
#include "epstein/print.hpp"

#include <sys/wait.h>

namespace {

using epstein::Json;

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(EPSTEIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::filesystem::path scratch_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("epstein_cli_" + name);
}

std::string write_scratch(const std::string& name, const std::string& content) {
  std::filesystem::path path = scratch_file(name);
  std::ofstream out(path);
  out << content;
  return path.string();
}

const char* kFiveLineProof = R"json({
  "system": "F",
  "lines": [
    {"formula": "(p ^ q) <-> ((p ~> q) & (p & q))", "just": {"type": "schema", "name": "A2"}},
    {"formula": "(p ~> q) -> (p -> q)", "just": {"type": "schema", "name": "A1"}},
    {"formula": "((p ^ q) <-> ((p ~> q) & (p & q))) -> (((p ~> q) -> (p -> q)) -> ((p ^ q) -> (p -> q)))", "just": {"type": "cpl"}},
    {"formula": "((p ~> q) -> (p -> q)) -> ((p ^ q) -> (p -> q))", "just": {"type": "mp", "imp": 2, "ant": 0}},
    {"formula": "(p ^ q) -> (p -> q)", "just": {"type": "mp", "imp": 3, "ant": 1}}
  ]
})json";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("theorem splits valid from invalid by exit code") {
    RunResult valid = run_cli("theorem --quiet \"(p ~> q) -> (p -> q)\"");
    CHECK(valid.code == 0);
    CHECK(valid.out == "valid\n");

    RunResult invalid = run_cli("theorem --quiet \"p ~> p\"");
    CHECK(invalid.code == 1);
    CHECK(invalid.out == "invalid\n");
  }

  TEST_CASE("theorem countermodel survives a round trip through eval") {
    RunResult invalid = run_cli("theorem \"p ~> p\"");
    REQUIRE(invalid.code == 1);
    Json doc = Json::parse(invalid.out);
    REQUIRE(doc.contains("countermodel"));
    std::string path = write_scratch("countermodel.json", doc["countermodel"].dump());

    RunResult eval = run_cli("eval --model " + path + " --quiet \"p ~> p\"");
    CHECK(eval.code == 1);
    CHECK(eval.out == "false\n");
  }

  TEST_CASE("eval reads a model file and reports the truth value") {
    std::string path = write_scratch(
        "model.json",
        R"({"valuation": {"default": 0, "true": ["p", "q"]},
            "relation": {"kind": "finite", "pairs": [["p", "p"]]}})");

    CHECK(run_cli("eval --model " + path + " --quiet \"p & q\"").out == "true\n");
    RunResult related = run_cli("eval --model " + path + " --quiet \"p ^ q\"");
    CHECK(related.code == 1);
    CHECK(related.out == "false\n");
  }

  TEST_CASE("validate accepts bare relation files and model files alike") {
    std::string rel = write_scratch("relation.json",
                                    R"({"kind": "finite", "pairs": [["p", "p"]]})");
    CHECK(run_cli("validate --model " + rel + " --quiet \"p ~> p\"").code == 0);
    CHECK(run_cli("validate --model " + rel + " --quiet \"q ~> q\"").code == 1);
    CHECK(run_cli("validate --model " + rel + " --quiet \"p\"").code == 1);
    CHECK(run_cli("validate --model " + rel + " --quiet \"!p\"").code == 1);
  }

  TEST_CASE("translate prints the classical image") {
    CHECK(run_cli("translate --quiet \"p ^ q\"").out == "p & q & a<p,q>\n");
    CHECK(run_cli("translate --quiet \"p ~> q\"").out == "(p -> q) & a<p,q>\n");
  }

  TEST_CASE("proof check accepts the five line derivation and flags a bad detach") {
    std::string good = write_scratch("proof.json", kFiveLineProof);
    RunResult accepted = run_cli("proof check --quiet --proof " + good);
    CHECK(accepted.code == 0);
    CHECK(accepted.out == "accepted\n");

    std::string tampered = kFiveLineProof;
    tampered.replace(tampered.find("\"ant\": 0"), 8, "\"ant\": 1");
    std::string bad = write_scratch("proof_bad.json", tampered);
    RunResult rejected = run_cli("proof check --proof " + bad);
    CHECK(rejected.code == 1);
    Json verdict = Json::parse(rejected.out);
    CHECK(verdict["ok"] == false);
  }

  TEST_CASE("interpolate emits a verified interpolant") {
    RunResult r = run_cli("interpolate --quiet \"(p ^ q) -> (p | s)\"");
    CHECK(r.code == 0);
    CHECK(r.out == "p\n");

    RunResult full = run_cli("interpolate \"((p ~> q) & p) -> (q | r)\"");
    CHECK(full.code == 0);
    Json doc = Json::parse(full.out);
    CHECK(doc["interpolant"] == "q");
    CHECK(doc["checks"]["left"] == true);
    CHECK(doc["checks"]["right"] == true);
    CHECK(doc["checks"]["vars"] == true);

    CHECK(run_cli("interpolate --quiet \"p -> q\"").code == 1);
  }

  TEST_CASE("invariance fuzz separates pair atoms from translations") {
    RunResult bare = run_cli("invariance fuzz --quiet --cpl \"a<T,F>\"");
    CHECK(bare.code == 0);
    CHECK(bare.out == "violation found\n");

    RunResult translated = run_cli("invariance fuzz --quiet --formula \"(p ~> q) -> !q\"");
    CHECK(translated.code == 1);
    CHECK(translated.out == "no violation found\n");
  }

  TEST_CASE("identical invocations produce identical bytes") {
    std::string args = "sset sample --model " +
                       write_scratch("seed_model.json",
                                     R"({"valuation": {"default": 0, "true": ["p"]},
                                         "relation": {"kind": "finite",
                                                      "pairs": [["p", "q"]]}})") +
                       " --samples 5 --seed 7";
    CHECK(run_cli(args).out == run_cli(args).out);
    CHECK(run_cli("demo incompleteness").out == run_cli("demo incompleteness").out);
  }

  TEST_CASE("usage problems exit with 2") {
    CHECK(run_cli("theorem \"p ~>\"").code == 2);
    CHECK(run_cli("frobnicate").code == 2);
    CHECK(run_cli("theorem").code == 2);
    CHECK(run_cli("eval --model /definitely/missing.json --quiet p").code == 2);
    CHECK(run_cli("proof").code == 2);
    CHECK(run_cli("").code == 2);
  }
}
