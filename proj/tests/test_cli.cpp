#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"
#include "printed_formulas.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = moore::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream in(std::string(MOORE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in);
  return json::parse(in);
}

std::string strip_space(std::string s) {
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  return s;
}

std::string strip_index_braces(std::string s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '{' && i + 2 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])) && s[i + 2] == '}') {
      out += s[i + 1];
      i += 2;
      continue;
    }
    out += s[i];
  }
  return out;
}

}  // namespace

TEST_CASE("golden enumerations and expansions") {
  for (int n = 1; n <= 4; ++n) {
    auto s = run({"sposet", "--n", std::to_string(n), "--json"});
    REQUIRE(s.code == 0);
    CHECK(json::parse(s.out) == golden("sposet_" + std::to_string(n) + ".json"));
    auto p = run({"pairs", "--n", std::to_string(n), "--format", "json"});
    REQUIRE(p.code == 0);
    CHECK(json::parse(p.out) == golden("pairs_" + std::to_string(n) + ".json"));
  }
  for (int n = 1; n <= 3; ++n) {
    auto e = run({"peiffer", "expand", "--n", std::to_string(n), "--json"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out) == golden("expand_" + std::to_string(n) + ".json"));
  }
}

TEST_CASE("sposet text output") {
  auto r = run({"sposet", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "S(3): () < (2) < (1) < (2,1) < (0) < (2,0) < (1,0) < (2,1,0)\n");
}

TEST_CASE("latex expansions match the printed table up to whitespace") {
  auto r = run({"peiffer", "expand", "--n", "3", "--format", "latex"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::vector<std::string> got;
  for (std::string l; std::getline(lines, l);) got.push_back(strip_space(l.substr(l.find('=') + 1)));
  REQUIRE(got.size() == 6);
  std::size_t matched = 0;
  for (const auto& f : printed_formulas())
    if (f.pair.n == 3)
      for (const auto& g : got) matched += g == strip_space(strip_index_braces(f.rhs));
  CHECK(matched == 6);
}

TEST_CASE("exit codes") {
  CHECK(run({"verify", "theorem-a", "--model", "cech:s3", "--n", "2"}).code == 0);
  CHECK(run({"verify", "simplicial", "--model", "cech:s3", "--nmax", "2"}).code == 0);
  CHECK(run({"verify", "crossed-complex", "--model", "constant:z2", "--nmax", "3"}).code == 0);
  auto cc = run({"verify", "crossed-complex", "--model", "nilcarlsson:z2", "--nmax", "2", "--json"});
  CHECK(cc.code == 1);
  CHECK_FALSE(json::parse(cc.out)["witness"].is_null());
  CHECK(run({"homotopy", "--model", "carlsson", "--pi", "z3", "--degree", "2", "--bound", "2"}).code == 2);
  CHECK(run({"sposet"}).code == 64);
  CHECK(run({"nonsense"}).code == 64);
  CHECK(run({"sposet", "--n", "3", "--format", "yaml"}).code == 64);
  CHECK(run({"verify", "theorem-a", "--model", "cech:nosuch", "--n", "2"}).code == 64);
  CHECK(run({"homotopy", "--model", "carlsson", "--pi", "s3", "--degree", "2"}).code == 64);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("homotopy json schema") {
  auto r = run({"homotopy", "--model", "carlsson", "--pi", "z2", "--degree", "2", "--bound", "4", "--json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["degree"] == 2);
  CHECK(j["method"] == "rs_snf");
  CHECK(j["bound"] == 4);
  CHECK(j["stable"] == true);
  CHECK(j["invariants"].is_array());
  auto t = json::parse(run({"tensor", "--pi", "z2", "--json"}).out);
  CHECK(t["invariants"] == j["invariants"]);
  CHECK(t["agree"] == true);
}

TEST_CASE("certificate json") {
  auto r = run({"peiffer", "certify", "--model", "nilcarlsson:z2", "--n", "2", "--word", "s0(1@0)*s1(1@0)"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["reconstructs"] == true);
  CHECK(j["nu"].size() == 1);
  CHECK(j["components"].size() == 3);
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"verify", "crossed-complex", "--model", "carlsson:z2", "--nmax", "3", "--json"};
  CHECK(run(args).out == run(args).out);
}
