#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "unip/cli.hpp"
#include "unip/symbols.hpp"

using namespace unip;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json j() const { return json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("chain brauer") {
  auto r = call({"chain", "brauer", "--type", "2A", "--n", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = r.j();
  CHECK(j["schema_version"] == 1);
  REQUIRE(j["steps"].size() == 1);
  CHECK(j["steps"][0]["certificate"]["d"] == 6);
  CHECK(j["steps"][0]["from"] == "[2,1]");

  r = call({"chain", "brauer", "--type", "D", "--n", "5"});
  CHECK(r.code == 1);
  CHECK(r.err.find("no chain") != std::string::npos);
  CHECK(call({"chain", "brauer", "--type", "2A", "--n", "3", "--q", "2"}).code == 1);
  CHECK(call({"chain", "lusztig", "--type", "B", "--a", "2", "--format", "json"}).j()["steps"].size() == 2);
}

TEST_CASE("zsigmondy") {
  auto r = call({"zsigmondy", "--q", "2", "--d", "6", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.j()["primes"] == json::array());
  r = call({"zsigmondy", "--q", "2", "--d", "67", "--format", "json"});
  CHECK(r.j()["primes"].size() == 2);
  CHECK(call({"zsigmondy", "--q", "1", "--d", "3"}).code == 1);
}

TEST_CASE("degree") {
  auto r = call({"degree", "symbol", "[[0,1,2],[]]", "--family", "B", "--q", "3", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["degree"] == "2^-1*q^1*Phi1^2");
  CHECK(r.j()["value"] == 6);
  r = call({"degree", "symbol", "[[0,1,2],[]]", "--family", "B", "--q", "3"});
  CHECK(r.out.find("2^-1*q^1*Phi1^2") != std::string::npos);
  CHECK(call({"degree", "partition", "[2,1]", "--family", "B"}).code == 1);
}

TEST_CASE("exit codes") {
  CHECK(call({"lr", "[2,x]", "[1]", "[1]"}).code == 2);
  CHECK(call({"degree", "symbol", "[[0,1],[1", "--family", "B"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"info", "--type", "E", "--n", "6"}).code == 2);
  CHECK(call({"info", "--type", "B", "--n", "0"}).code == 1);
  CHECK(call({"info", "--type", "D", "--a", "3"}).code == 1);
  CHECK(call({"--help"}).code == 0);
  CHECK(call({"lr", "[2,1]", "[1]", "[1,1]"}).out == "1\n");
}

TEST_CASE("labels in JSON reparse") {
  for (auto fam : {"A", "2A", "B", "C", "D", "2D"}) {
    const std::string f = fam;
    auto r = call({"blocks", "--type", f, "--n", "4", "--d", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const Family family = parse_family(f);
    for (const auto& b : r.j()["blocks"])
      for (const auto& l : b["labels"]) {
        const auto s = l.get<std::string>();
        const Label parsed = parse_label(s, family);
        CHECK(to_grammar(parsed) == s);
      }
  }
  auto r = call({"cuspidal", "--type", "D", "--n", "16", "--format", "json"});
  CHECK(to_grammar(parse_label(r.j()["label"].get<std::string>(), Family::D)) == r.j()["label"]);
}

TEST_CASE("census and info") {
  auto r = call({"census", "--max-n", "20", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(r.j()["families"].size() == 6);
  r = call({"info", "--type", "B", "--n", "6", "--format", "json"});
  CHECK(r.j()["d_G"] == 8);
  CHECK(r.j()["cuspidal"] == "[[0,1,2,3,4],[]]");
}

TEST_CASE("verify lemmas") {
  for (auto args : std::vector<std::vector<std::string>>{{"verify", "--lemma", "def0", "--max-a", "4"},
                                                         {"verify", "--lemma", "chain", "--max-a", "3"},
                                                         {"verify", "--lemma", "mult1", "--max-a", "2"},
                                                         {"verify", "--lemma", "census"}}) {
    args.insert(args.end(), {"--format", "json"});
    auto r = call(args);
    CHECK(r.code == 0);
    CHECK(r.j()["passed"] == true);
  }
}

TEST_CASE("verify a chain file") {
  const auto path = std::filesystem::temp_directory_path() / "unip_test_chain.json";
  auto r = call({"chain", "brauer", "--type", "B", "--n", "6", "--q", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  { std::ofstream(path) << r.out; }
  CHECK(call({"verify", "--chain", path.string()}).code == 0);

  auto doc = r.j();
  doc["steps"][0]["certificate"]["d"] = 6;
  { std::ofstream(path) << doc.dump(); }
  auto bad = call({"verify", "--chain", path.string(), "--format", "json"});
  CHECK(bad.code == 1);
  CHECK(bad.j()["passed"] == false);

  { std::ofstream(path) << "{not json"; }
  CHECK(call({"verify", "--chain", path.string()}).code == 2);
  std::filesystem::remove(path);
}
