#include "ercd/report.hpp"

#include <nlohmann/json.hpp>

#include "ercd/mass.hpp"

namespace ercd {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json reportJson(const VerificationReport& r) {
  ordered_json j;
  j["suite"] = r.suite;
  j["engine_version"] = kEngineVersion;
  j["mass_mode"] = MassMode::description();
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    e["paper_ref"] = c.paperRef;
    e["status"] = statusName(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.passCount()},
                  {"fail", r.failCount()},
                  {"discrepancy", r.discrepancyCount()}};
  return j;
}

std::string flattened(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '\n') {
      if (!out.empty() && out.back() != ' ') out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

}  // namespace

std::string emitJson(const VerificationReport& r) { return reportJson(r).dump(2) + "\n"; }

std::string emitJson(const std::vector<VerificationReport>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) arr.push_back(reportJson(r));
  return arr.dump(2) + "\n";
}

std::string emitText(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += statusName(c.status) + "  " + c.id + "  [" + c.paperRef + "]";
    if (!c.witness.empty()) out += "  -- " + flattened(c.witness);
    out += "\n";
  }
  out += "# " + r.suite + ": pass=" + std::to_string(r.passCount()) +
         " fail=" + std::to_string(r.failCount()) +
         " discrepancy=" + std::to_string(r.discrepancyCount()) + "\n";
  return out;
}

std::string emitText(const std::vector<VerificationReport>& rs) {
  std::string out;
  for (const auto& r : rs) out += emitText(r);
  return out;
}

std::string dumpCatalog(const std::string& name) {
  std::vector<LabeledOp> cat;
  if (name == "cd16")
    cat = catalogCd16();
  else if (name == "ercd64")
    cat = catalogErcd64();
  else if (name == "a32")
    cat = catalogA32();
  else
    throw std::invalid_argument("unknown catalog " + name);
  std::string out = "# catalog " + name + "\n";
  for (const auto& [label, op] : cat) out += "## " + label + "\n" + op.str();
  return out;
}

std::string dumpSet(const std::string& name) {
  GeneratorSet s = generatorSet(name);
  std::string out = "# set " + s.name + "\n";
  for (int mu = 0; mu < 4; ++mu)
    out += "## p" + std::to_string(mu) + "\n" + s.p[mu].str() + "\n";
  for (int i = 0; i < 6; ++i) {
    auto [mu, nu] = kPairs[i];
    out += "## j" + std::to_string(mu) + std::to_string(nu) + "\n" + s.j[i].str() + "\n";
  }
  out += "## equation " + s.equation.name + "\n" + s.equation.expr.str() + "\n";
  return out;
}

}  // namespace ercd
