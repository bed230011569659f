#include <stdexcept>
#include <sstream>

#include "clusterword/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace clusterword;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto result = run(args);
  REQUIRE(result.code == kExitOk);
  return json::parse(result.out);
}

}  // namespace

TEST_CASE("bwt") {
  CHECK(run({"bwt", "1322313223"}).out == "3333222211\n");
  CHECK(run({"bwt", "21"}).out == "21\n");
  CHECK(run({"bwt", ""}).code == kExitUsage);
  CHECK(run({"--alphabet", "a,b", "bwt", "ba"}).out == "ba\n");
  CHECK(run({"--alphabet", "a,b,c", "bwt", "abacab"}).out == run({"--alphabet", "a,b,c", "bwt", "a,b,a,c,a,b"}).out);
  const auto j = run_json({"bwt", "122131313"});
  CHECK(j["bwt"] == "333221111");
  CHECK(j["input"] == "122131313");
}

TEST_CASE("unbwt") {
  CHECK(run({"unbwt", "3333222211"}).out == "non-primitive: (13223)^2\n");
  CHECK(run({"unbwt", "32221"}).out == "no antecedent\n");
  CHECK(run({"unbwt", "211"}).out == "primitive: 112\n");
  CHECK(run({"unbwt", "21"}).out == "primitive: 12\n");
  const auto j = run_json({"unbwt", "3333222211"});
  CHECK(j["status"] == "non-primitive");
  CHECK(j["power"] == 2);
  CHECK(j["root"] == "13223");
  const auto none = run_json({"unbwt", "32221"});
  CHECK(none["status"] == "none");
  CHECK(none["root"].is_null());
}

TEST_CASE("cluster") {
  CHECK(run({"cluster", "122131313"}).out == "clustering pi=3,2,1 perfect\n");
  CHECK(run({"cluster", "4123231312412"}).out == "clustering pi=4,3,1,2 not perfect\n");
  CHECK(run({"cluster", "123131312"}).out == "not clustering\n");
  CHECK(run({"cluster", "11"}).out == "not clustering\n");
  // Flags after the subcommand are accepted too.
  CHECK(json::parse(run({"cluster", "122131313", "--json"}).out)["perfect"] == true);
  const auto j = run_json({"cluster", "122131313"});
  CHECK(j["clustering"] == true);
  CHECK(j["permutation"] == "3,2,1");
  CHECK(j["perfect"] == true);
  CHECK(run_json({"cluster", "11"})["permutation"].is_null());
}

TEST_CASE("iet") {
  CHECK(run({"iet", "4,2,3", "3,2,1", "--minimal"}).out == "minimal\n");
  CHECK(run({"iet", "4,2,3", "3,2,1", "--word"}).out == "122131313\n");
  CHECK(run({"iet", "2,2,4", "3,2,1", "--minimal"}).out == "non-minimal\n");
  CHECK(run({"iet", "3,1,2,3", "4,3,2,1", "--orbits"}).out == "14\n14\n14\n233\n");
  CHECK(run({"iet", "3,1,2,3", "4,3,2,1", "--witness"}).out == "14\n");
  CHECK(run({"iet", "3,1,2,3", "4,3,2,1"}).out ==
        "minimal: non-minimal\nword: none\norbits: 14 14 14 233\nwitness: 14\n");
  const auto j = run_json({"iet", "4,2,3", "3,2,1"});
  CHECK(j["minimal"] == true);
  CHECK(j["offsets"] == json::array({5, -1, -6}));
  CHECK(j["word"] == "122131313");
  CHECK(j["witness"].is_null());
  CHECK(j["orbits"].size() == 1);
}

TEST_CASE("continuous exchanges") {
  CHECK(run({"cont", "4/9,2/9,3/9", "3,2,1", "0", "9"}).out == "122131313\n");
  const auto j = run_json({"cont", "4/9,2/9,3/9", "3,2,1", "0", "9"});
  CHECK(j["taus"] == json::array({"5/9", "-1/9", "-2/3"}));
  CHECK(run({"sturmian", "golden", "12"}).out == "121121211211\n");
  CHECK(run({"sturmian", "golden", "10"}).out == "1211212112\n");
  // 6/9 -> 0 -> 5/9 -> 4/9.
  CHECK(run({"keane", "4/9,2/9,3/9", "3,2,1", "20"}).out == "collision: T^3(gamma_3) = gamma_2\n");
  CHECK(run({"keane", "1/2+sqrt(5),-1/2", "2,1", "100"}).code == kExitUsage);
  CHECK(run({"keane", "3/2-1/2*sqrt(5),-1/2+1/2*sqrt(5)", "2,1", "100"}).out == "no collision up to depth 100\n");
  const auto k = run_json({"keane", "3/2-1/2*sqrt(5),-1/2+1/2*sqrt(5)", "2,1", "100"});
  CHECK(k["verdict"] == "no-collision");
  CHECK(k["depth"] == 100);
}

TEST_CASE("verify and census") {
  const auto ok = run({"verify", "theorem1", "--r", "2", "--nmax", "8"});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("failures: 0") != std::string::npos);
  const auto j = run_json({"verify", "nonsurjectivity", "--r", "3", "--nmax", "8"});
  CHECK(j["ok"] == true);
  CHECK(j["suite"] == "nonsurjectivity");
  CHECK(run({"census", "2", "2"}).out == "12 2,1\n");
  CHECK(run({"census", "2", "5"}).out == "11112 2,1\n11212 2,1\n12122 2,1\n12222 2,1\n");
  CHECK(run({"verify", "injectivity", "--r", "2", "--nmax", "8"}).out.find("failures: 0") != std::string::npos);
  CHECK(run_json({"census", "3", "3"})["count"] == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"bwt"}).code == kExitUsage);
  CHECK(run({"bwt", "120"}).code == kExitUsage);
  CHECK(run({"iet", "4,0,3", "3,2,1"}).code == kExitUsage);
  CHECK(run({"verify", "nonsense", "--r", "2", "--nmax", "4"}).code == kExitUsage);
  CHECK(run({"cont", "1/2,1/3", "2,1", "0", "3"}).code == kExitUsage);
  const auto bad = run({"--alphabet", "a,b", "bwt", "az"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("unknown token") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}
