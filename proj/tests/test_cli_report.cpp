#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ercd/report.hpp"

using namespace ercd;
using nlohmann::json;

namespace {

std::string ercdBin() {
  const char* env = std::getenv("ERCD_BIN");
  return env ? env : "./ercd";
}

std::string goldenDir() {
  const char* env = std::getenv("ERCD_GOLDEN_DIR");
  return env ? env : "fixtures";
}

int runCli(const std::string& args) {
  const int st = std::system((ercdBin() + " " + args).c_str());
  return WEXITSTATUS(st);
}

std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

VerificationReport sampleReport() {
  VerificationReport r;
  r.suite = "sample";
  r.checks.push_back({"sample.ok", "Eq. (1)", CheckStatus::Pass, ""});
  r.checks.push_back({"sample.bad", "Eq. (2)", CheckStatus::Fail, "broken\nhere"});
  r.checks.push_back({"sample.note", "Sec. 1", CheckStatus::Discrepancy, "sign"});
  return r;
}

// structural validation against the shipped schema: required keys, no
// extras, status values from the enumeration
void checkAgainstSchema(const json& rep) {
  const char* env = std::getenv("ERCD_SCHEMA");
  const json schema =
      json::parse(readFile(env ? env : "../schema/report.schema.json"));
  const json& def = schema["$defs"]["report"];
  for (const auto& key : def["required"]) CHECK(rep.contains(key.get<std::string>()));
  for (const auto& [key, val] : rep.items())
    CHECK(def["properties"].contains(key));
  const json& allowed = def["properties"]["checks"]["items"]["properties"]["status"]["enum"];
  for (const auto& c : rep["checks"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("paper_ref"));
    bool ok = false;
    for (const auto& s : allowed) ok = ok || (s == c["status"]);
    CHECK(ok);
  }
  for (const auto& key : {"pass", "fail", "discrepancy"})
    CHECK(rep["summary"][key].is_number_integer());
}

}  // namespace

TEST_CASE("json emission matches the shipped schema and round-trips") {
  const VerificationReport r = sampleReport();
  const json j = json::parse(emitJson(r));
  checkAgainstSchema(j);
  CHECK(j["suite"] == "sample");
  CHECK(j["engine_version"] == kEngineVersion);
  CHECK(j["mass_mode"] == "symbolic");
  CHECK(j["checks"].size() == 3);
  CHECK(j["checks"][0]["status"] == "pass");
  CHECK(!j["checks"][0].contains("witness"));
  CHECK(j["checks"][1]["witness"] == "broken\nhere");
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 1);
  CHECK(j["summary"]["discrepancy"] == 1);

  // round trip: rebuild the report from the JSON and re-emit
  VerificationReport back;
  back.suite = j["suite"];
  for (const auto& c : j["checks"]) {
    CheckStatus st = c["status"] == "pass"               ? CheckStatus::Pass
                     : c["status"] == "fail"             ? CheckStatus::Fail
                                                         : CheckStatus::Discrepancy;
    back.checks.push_back({c["id"], c["paper_ref"], st,
                           c.contains("witness") ? c["witness"].get<std::string>() : ""});
  }
  CHECK(emitJson(back) == emitJson(r));
}

TEST_CASE("empty report emits a valid zero-count summary") {
  VerificationReport r;
  r.suite = "empty";
  const json j = json::parse(emitJson(r));
  checkAgainstSchema(j);
  CHECK(j["checks"].empty());
  CHECK(j["summary"]["pass"] == 0);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["discrepancy"] == 0);
}

TEST_CASE("text emission is line oriented: one check per line plus summary") {
  const VerificationReport r = sampleReport();
  const std::string text = emitText(r);
  std::istringstream is(text);
  std::vector<std::string> lines;
  for (std::string l; std::getline(is, l);) lines.push_back(l);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "pass  sample.ok  [Eq. (1)]");
  CHECK(lines[1] == "fail  sample.bad  [Eq. (2)]  -- broken; here");
  CHECK(lines[3] == "# sample: pass=1 fail=1 discrepancy=1");

  auto so6 = runSuite("so6");
  std::istringstream is2(emitText(so6));
  int n = 0;
  for (std::string l; std::getline(is2, l);) ++n;
  CHECK(n == static_cast<int>(so6.checks.size()) + 1);
}

TEST_CASE("cli: exit codes") {
  CHECK(runCli("verify gamma7 --out /dev/null") == 0);
  CHECK(runCli("verify foo 2>/dev/null") == 2);
  CHECK(runCli("verify 2>/dev/null") == 2);
  CHECK(runCli("bogus-command 2>/dev/null") == 2);
  CHECK(runCli("verify gamma7 --mass -1 2>/dev/null") == 2);
  CHECK(runCli("verify gamma7 --format yaml 2>/dev/null") == 2);
  CHECK(runCli("dump 2>/dev/null") == 2);
  CHECK(runCli("dump --catalog nope 2>/dev/null") == 2);
  CHECK(runCli("verify gamma7 --mutate-gamma 2,0,0 --out /dev/null") == 1);
}

TEST_CASE("cli: json report for one suite validates against the schema") {
  REQUIRE(runCli("verify maximality --format json --out cli_max.json") == 0);
  const json j = json::parse(readFile("cli_max.json"));
  checkAgainstSchema(j);
  CHECK(j["suite"] == "maximality");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["discrepancy"] == 1);
  std::remove("cli_max.json");
}

TEST_CASE("cli: several suites emit a json array") {
  REQUIRE(runCli("verify gamma7 so15 --format json --out cli_two.json") == 0);
  const json j = json::parse(readFile("cli_two.json"));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 2);
  for (const auto& rep : j) checkAgainstSchema(rep);
  CHECK(j[0]["suite"] == "gamma7");
  CHECK(j[1]["suite"] == "so15");
  std::remove("cli_two.json");
}

TEST_CASE("cli: pinned mass keeps the pass/fail pattern and is recorded") {
  REQUIRE(runCli("verify gamma7 --mass 3/2 --format json --out cli_mass.json") == 0);
  const json j = json::parse(readFile("cli_mass.json"));
  CHECK(j["mass_mode"] == "rational 3/2");
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["pass"] == 28);
  std::remove("cli_mass.json");
}

TEST_CASE("golden regression: catalog and generator dumps are byte exact") {
  const std::string dir = goldenDir();
  for (const auto& name : {"cd16", "ercd64", "a32"})
    CHECK(dumpCatalog(name) == readFile(dir + "/catalogs/" + name + ".txt"));
  for (const auto& name :
       {"local-pd", "standard-pd", "induced-pd", "fw-fermi", "fw-bose", "pd-bose"})
    CHECK(dumpSet(name) == readFile(dir + "/generators/" + std::string(name) + ".txt"));
}

TEST_CASE("cli dump matches the library rendering") {
  REQUIRE(runCli("dump --catalog cd16 --out cli_cd16.txt") == 0);
  CHECK(readFile("cli_cd16.txt") == dumpCatalog("cd16"));
  std::remove("cli_cd16.txt");
  REQUIRE(runCli("dump --set local-pd --out cli_lpd.txt") == 0);
  CHECK(readFile("cli_lpd.txt") == dumpSet("local-pd"));
  std::remove("cli_lpd.txt");
}
