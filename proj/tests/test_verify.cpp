#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ercd/verify.hpp"

using namespace ercd;

namespace {

bool allPass(const VerificationReport& r) {
  return r.failCount() == 0 && r.discrepancyCount() == 0 &&
         r.passCount() == static_cast<int>(r.checks.size());
}

}  // namespace

TEST_CASE("suite name registry") {
  auto names = suiteNames();
  CHECK(names.size() == 23);
  for (const auto& n : names) CHECK(isSuite(n));
  CHECK(!isSuite("all"));
  CHECK(!isSuite("foo"));
  CHECK(isSuite("poincare-fw-bose"));
  CHECK(isSuite("casimir-local-pd"));
  CHECK_THROWS_AS(runSuite("foo"), std::invalid_argument);
}

TEST_CASE("status names") {
  CHECK(statusName(CheckStatus::Pass) == "pass");
  CHECK(statusName(CheckStatus::Fail) == "fail");
  CHECK(statusName(CheckStatus::Discrepancy) == "recorded-discrepancy");
}

TEST_CASE("gamma7: 28 anticommutator checks") {
  auto r = runSuite("gamma7");
  CHECK(r.suite == "gamma7");
  CHECK(r.checks.size() == 28);
  CHECK(allPass(r));
  CHECK(r.checks.front().id == "gamma7.11");
  CHECK(r.checks.back().id == "gamma7.77");
}

TEST_CASE("catalog suites: dimensions and closure") {
  auto cd = runSuite("cd16");
  CHECK(cd.checks.size() == 3);
  CHECK(allPass(cd));
  auto e = runSuite("ercd64");
  CHECK(e.checks.size() == 2);
  CHECK(allPass(e));
}

TEST_CASE("so15 closure: 105 pairs") {
  auto r = runSuite("so15");
  CHECK(r.checks.size() == 105);
  CHECK(allPass(r));
}

TEST_CASE("so6 closure: 105 pairs plus 15 epsilon centrality checks") {
  auto r = runSuite("so6");
  CHECK(r.checks.size() == 120);
  CHECK(allPass(r));
}

TEST_CASE("a32 symmetry scan") {
  auto r = runSuite("a32");
  CHECK(r.checks.size() == 32);
  CHECK(allPass(r));
}

TEST_CASE("maximality: dimension 32 with the counting discrepancy recorded") {
  auto r = runSuite("maximality");
  CHECK(r.checks.size() == 3);
  CHECK(r.failCount() == 0);
  CHECK(r.passCount() == 2);
  CHECK(r.discrepancyCount() == 1);
  CHECK(r.checks[2].id == "maximality.count-31-vs-32");
  CHECK(r.checks[2].status == CheckStatus::Discrepancy);
  CHECK(!r.checks[2].witness.empty());
}

TEST_CASE("lorentz closure of the four constant families") {
  auto r = runSuite("lorentz");
  CHECK(r.checks.size() == 96);  // 4 x 15 pairwise + 36 cross commutators
  CHECK(allPass(r));
}

TEST_CASE("bose transform suite") {
  auto r = runSuite("bose-transform");
  CHECK(r.checks.size() == 25);
  CHECK(allPass(r));
}

TEST_CASE("spinor suite") {
  auto r = runSuite("spinors");
  CHECK(r.checks.size() == 20);
  CHECK(allPass(r));
}

TEST_CASE("fw transform suite") {
  auto r = runSuite("fw-transform");
  CHECK(r.checks.size() == 17);
  CHECK(allPass(r));
}

TEST_CASE("job count changes nothing in the report") {
  auto a = runSuite("so6", 1);
  auto b = runSuite("so6", 4);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].id == b.checks[i].id);
    CHECK(a.checks[i].paperRef == b.checks[i].paperRef);
    CHECK(a.checks[i].status == b.checks[i].status);
    CHECK(a.checks[i].witness == b.checks[i].witness);
  }
}

TEST_CASE("every check carries an id and a paper reference") {
  for (const auto& s : {"gamma7", "maximality", "bose-transform"}) {
    auto r = runSuite(s);
    for (const auto& c : r.checks) {
      CHECK(!c.id.empty());
      CHECK(!c.paperRef.empty());
      if (c.status != CheckStatus::Pass) CHECK(!c.witness.empty());
    }
  }
}
