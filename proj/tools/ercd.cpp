#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "ercd/report.hpp"

namespace {

int writeOut(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "ercd: cannot open " << path << " for writing\n";
    return 2;
  }
  f << content;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifier for the extended real Clifford-Dirac algebra"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites;
  std::string mass, format = "text", out, mutate;
  int jobs = 1;
  verify->add_option("suites", suites, "Suite names, or 'all'")->required();
  verify->add_option("--mass", mass, "Pin the mass to a positive rational p/q");
  verify->add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);
  verify->add_option("--out", out, "Write the report to a file instead of stdout");
  verify->add_option("--mutate-gamma", mutate, "idx,row,col: perturb one gamma entry")
      ->group("");  // soundness-testing hook, hidden from help

  // dump
  auto* dump = app.add_subcommand("dump", "Render catalogs or generator sets");
  std::string catalogName, setName, dumpOut;
  auto* optCat = dump->add_option("--catalog", catalogName, "cd16, ercd64 or a32");
  auto* optSet = dump->add_option("--set", setName, "Generator set name");
  dump->add_option("--out", dumpOut, "Write the dump to a file instead of stdout");
  optCat->excludes(optSet);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << (e.get_exit_code() == 0 ? "" : "ercd: ") << e.what() << "\n";
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (dump->parsed()) {
      if (catalogName.empty() == setName.empty()) {
        std::cerr << "ercd dump: exactly one of --catalog / --set is required\n";
        return 2;
      }
      std::string content;
      try {
        content = catalogName.empty() ? ercd::dumpSet(setName)
                                      : ercd::dumpCatalog(catalogName);
      } catch (const std::invalid_argument& e) {
        std::cerr << "ercd dump: " << e.what() << "\n";
        return 2;
      }
      return writeOut(dumpOut, content);
    }

    // verify
    std::vector<std::string> selected;
    for (const auto& s : suites) {
      if (s == "all") {
        for (const auto& n : ercd::suiteNames()) selected.push_back(n);
      } else if (ercd::isSuite(s)) {
        selected.push_back(s);
      } else {
        std::cerr << "ercd verify: unknown suite '" << s << "'\n";
        return 2;
      }
    }
    if (!mass.empty()) {
      try {
        mpq_class q(mass);
        q.canonicalize();
        ercd::MassMode::pin(q);
      } catch (const std::exception& e) {
        std::cerr << "ercd verify: bad --mass value '" << mass << "': " << e.what()
                  << "\n";
        return 2;
      }
    }
    if (!mutate.empty()) {
      int idx, row, col;
      if (std::sscanf(mutate.c_str(), "%d,%d,%d", &idx, &row, &col) != 3) {
        std::cerr << "ercd verify: bad --mutate-gamma value '" << mutate << "'\n";
        return 2;
      }
      try {
        ercd::mutateGammaEntry(idx, row, col);
      } catch (const std::invalid_argument& e) {
        std::cerr << "ercd verify: " << e.what() << "\n";
        return 2;
      }
    }

    std::vector<ercd::VerificationReport> reports;
    for (const auto& s : selected) reports.push_back(ercd::runSuite(s, jobs));

    std::string content;
    if (format == "json")
      content = (reports.size() == 1) ? ercd::emitJson(reports[0])
                                      : ercd::emitJson(reports);
    else
      content = ercd::emitText(reports);
    const int wr = writeOut(out, content);
    if (wr != 0) return wr;

    for (const auto& r : reports)
      if (r.failCount() > 0) return 1;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "ercd: internal invariant breach: " << e.what() << "\n";
    return 3;
  }
}
