// Acceptance gate: twelve criteria, one pass/fail line each.  Criteria 1-10
// are evaluated from a single full CLI run; 11 and 12 spawn extra processes
// for mutation soundness and determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

using nlohmann::json;

namespace {

std::string ercdBin() {
  const char* env = std::getenv("ERCD_BIN");
  return env ? env : "./ercd";
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

json gAll;          // the parsed full run
double gSeconds = 0;  // wall time of the full run

const json& suite(const std::string& name) {
  for (const auto& rep : gAll)
    if (rep["suite"] == name) return rep;
  static json empty;
  REQUIRE(false);
  return empty;
}

int countStatus(const json& rep, const std::string& status,
                const std::string& idPrefix = "") {
  int n = 0;
  for (const auto& c : rep["checks"])
    if (c["status"] == status &&
        (idPrefix.empty() ||
         c["id"].get<std::string>().rfind(idPrefix, 0) == 0))
      ++n;
  return n;
}

bool hasStatus(const json& rep, const std::string& id, const std::string& status) {
  for (const auto& c : rep["checks"])
    if (c["id"] == id) return c["status"] == status;
  return false;
}

bool suiteClean(const std::string& name) {
  return suite(name)["summary"]["fail"] == 0;
}

void report(int n, const std::string& what, bool ok) {
  std::printf("%s  criterion %2d: %s\n", ok ? "pass" : "FAIL", n, what.c_str());
  std::fflush(stdout);
  CHECK(ok);
}

}  // namespace

TEST_CASE("full verification run") {
  const auto t0 = std::chrono::steady_clock::now();
  REQUIRE(runCli("verify all --format json --jobs 1 --out acc_run1.json") == 0);
  gSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  gAll = json::parse(readFile("acc_run1.json"));
  REQUIRE(gAll.is_array());
  REQUIRE(gAll.size() == 23);
  int total = 0;
  for (const auto& rep : gAll) total += static_cast<int>(rep["checks"].size());
  std::printf("info: %d checks across %zu suites in %.1fs\n", total, gAll.size(),
              gSeconds);
  CHECK(total >= 250);
  CHECK(gSeconds < 60.0);
}

TEST_CASE("acceptance criteria") {
  REQUIRE(gAll.is_array());

  // 1. seven-gamma anticommutation, all 28 unordered pairs
  {
    const json& g = suite("gamma7");
    report(1, "gamma_A gamma_B + gamma_B gamma_A = -2 delta_AB for all 28 pairs",
           g["checks"].size() == 28 && g["summary"]["pass"] == 28);
  }

  // 2. ERCD real dimension 64
  report(2, "real dimension of the 64 constructed orts is 64",
         hasStatus(suite("ercd64"), "ercd64.real-rank", "pass") &&
             suiteClean("ercd64"));

  // 3. SO(1,5) and SO(6) closure including epsilon centrality
  {
    const json& a = suite("so15");
    const json& b = suite("so6");
    report(3, "SO(1,5) and SO(6) closure hold pairwise, including [s_AB, eps] = 0",
           a["summary"]["pass"] == 105 && b["summary"]["pass"] == 120 &&
               countStatus(b, "pass", "so6.eps.") == 15);
  }

  // 4. maximality: dimension 32, contains A32, bookkeeping as discrepancy
  {
    const json& m = suite("maximality");
    report(4, "FW matrix symmetry space has dimension 32; 31-vs-32 recorded",
           hasStatus(m, "maximality.dimension", "pass") &&
               hasStatus(m, "maximality.contains-a32", "pass") &&
               hasStatus(m, "maximality.count-31-vs-32", "recorded-discrepancy") &&
               m["summary"]["fail"] == 0);
  }

  // 5. Poincare closure: raw for (4), (19), (34); on-shell for (46), (49)
  //    with raw status reported per pair
  {
    bool ok = true;
    for (const auto& s : {"local-pd", "induced-pd", "fw-fermi"}) {
      const json& rep = suite("poincare-" + std::string(s));
      ok = ok && countStatus(rep, "pass", "poincare-") == 100 &&
           rep["summary"]["fail"] == 0;
    }
    for (const auto& s : {"fw-bose", "pd-bose"}) {
      const json& rep = suite("poincare-" + std::string(s));
      int raw = 0, onshell = 0;
      for (const auto& c : rep["checks"]) {
        const std::string id = c["id"];
        if (id.find(".raw") != std::string::npos) ++raw;
        if (id.find(".onshell") != std::string::npos && c["status"] == "pass")
          ++onshell;
      }
      ok = ok && raw == 45 && onshell == 45 && rep["summary"]["fail"] == 0;
    }
    report(5, "Poincare relations: raw for (4)/(19)/(34), on-shell for (46)/(49)", ok);
  }

  // 6. invariance of the wave equations under every generator and every A32 ort
  {
    bool ok = suite("a32")["summary"]["fail"] == 0;
    for (const auto& s : {"induced-pd", "pd-bose", "fw-fermi", "fw-bose"}) {
      const json& rep = suite("poincare-" + std::string(s));
      ok = ok && countStatus(rep, "pass", "poincare-" + std::string(s) + ".inv.") == 10;
    }
    report(6, "equation invariance for sets (19)/(49)/(34)/(46) and all A32 elements",
           ok);
  }

  // 7. Casimirs
  {
    bool ok = true;
    for (const auto& s : {"induced-pd", "fw-fermi", "fw-bose", "pd-bose"}) {
      const json& rep = suite("casimir-" + std::string(s));
      ok = ok &&
           hasStatus(rep, "casimir-" + std::string(s) + ".p2-standard", "pass") &&
           rep["summary"]["fail"] == 0;
    }
    for (const auto& s : {"fw-bose", "pd-bose"})
      ok = ok && hasStatus(suite("casimir-" + std::string(s)),
                           "casimir-" + std::string(s) + ".w2-spectrum", "pass");
    for (const auto& s : {"induced-pd", "fw-fermi"})
      ok = ok &&
           hasStatus(suite("casimir-" + std::string(s)),
                     "casimir-" + std::string(s) + ".w2", "pass") &&
           hasStatus(suite("casimir-" + std::string(s)),
                     "casimir-" + std::string(s) + ".w2-eq23-sign",
                     "recorded-discrepancy");
    ok = ok && hasStatus(suite("casimir-local-pd"), "casimir-local-pd.w2", "pass") &&
         suiteClean("casimir-local-pd") && suiteClean("casimir-standard-pd");
    report(7, "p^2 = m^2, Bose W spectrum m^2{-2,-2,-2,0}, Fermi W sign recorded", ok);
  }

  // 8. FW transform
  {
    const json& f = suite("fw-transform");
    report(8, "V inverse, equation conjugation, Eq. (27) closed form, pd = V^-1 fw V",
           f["summary"]["fail"] == 0 &&
               hasStatus(f, "fw-transform.v-inverse", "pass") &&
               countStatus(f, "pass", "fw-transform.pd-bose.") == 10);
  }

  // 9. Bose transform and Lorentz closure of the constant families
  {
    const json& b = suite("bose-transform");
    report(9, "W unitary, twelve conjugated spins match Eq. (45) and are C-free",
           b["summary"]["fail"] == 0 &&
               countStatus(b, "pass", "bose-transform.conj.") == 12 &&
               countStatus(b, "pass", "bose-transform.cfree.") == 12 &&
               suite("lorentz")["summary"]["fail"] == 0);
  }

  // 10. spinors
  {
    const json& s = suite("spinors");
    report(10, "Eq. (28) eigenrelations and negatives, V v = D, Gram and completeness",
           s["summary"]["fail"] == 0 &&
               countStatus(s, "pass", "spinors.eigen.") == 6 &&
               hasStatus(s, "spinors.gram", "pass") &&
               hasStatus(s, "spinors.completeness", "pass"));
  }

  // 11. mutation soundness: a perturbed gamma2 breaks at least three suites
  {
    const int rc = runCli(
        "verify gamma7 so6 maximality --mutate-gamma 2,0,0 --format json "
        "--out acc_mut.json");
    bool ok = (rc == 1);
    if (ok) {
      const json mut = json::parse(readFile("acc_mut.json"));
      int broken = 0;
      for (const auto& rep : mut)
        if (rep["summary"]["fail"] > 0) ++broken;
      ok = broken >= 3;
    }
    std::remove("acc_mut.json");
    report(11, "perturbing one gamma2 entry fails at least three suites", ok);
  }

  // 12. determinism: byte-identical consecutive runs; jobs 1 vs jobs 8
  {
    REQUIRE(runCli("verify all --format json --jobs 1 --out acc_run2.json") == 0);
    REQUIRE(runCli("verify all --format json --jobs 8 --out acc_run3.json") == 0);
    const std::string r1 = readFile("acc_run1.json");
    const bool ok = r1 == readFile("acc_run2.json") && r1 == readFile("acc_run3.json");
    std::remove("acc_run1.json");
    std::remove("acc_run2.json");
    std::remove("acc_run3.json");
    report(12, "byte-identical reports across consecutive runs and job counts", ok);
  }
}
