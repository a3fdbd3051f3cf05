#include "qcover/report.hpp"

#include "qcover/errors.hpp"

namespace qcover {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "true";
    case Verdict::Fail: return "false";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "indeterminate";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 1;
    default: return 3;
  }
}

void VerificationReport::require(bool ok, const std::string& what) {
  if (ok) return;
  if (pass == Verdict::Pass) pass = Verdict::Fail;
  witnesses.push_back({{"failed", what}});
}

namespace {

int severity(Verdict v) {
  switch (v) {
    case Verdict::Pass: return 0;
    case Verdict::NotApplicable: return 1;
    case Verdict::Indeterminate: return 2;
    case Verdict::Fail: return 3;
  }
  return 2;
}

}  // namespace

void absorb(VerificationReport& into, const VerificationReport& sub) {
  into.witnesses.push_back(sub.to_json());
  if (severity(sub.pass) > severity(into.pass)) into.pass = sub.pass;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["instance"] = instance;
  switch (pass) {
    case Verdict::Pass: j["pass"] = true; break;
    case Verdict::Fail: j["pass"] = false; break;
    default: j["pass"] = verdict_name(pass);
  }
  j["witnesses"] = witnesses;
  j["caps"] = caps;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  try {
    r.claim = j.at("claim").get<std::string>();
    r.instance = j.at("instance");
    const auto& p = j.at("pass");
    if (p.is_boolean()) {
      r.pass = p.get<bool>() ? Verdict::Pass : Verdict::Fail;
    } else {
      auto s = p.get<std::string>();
      if (s == "not-applicable") r.pass = Verdict::NotApplicable;
      else if (s == "indeterminate") r.pass = Verdict::Indeterminate;
      else throw SchemaError("unknown pass value '" + s + "'");
    }
    r.witnesses = j.at("witnesses");
    r.caps = j.at("caps");
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed report: ") + e.what());
  }
  return r;
}

}  // namespace qcover
