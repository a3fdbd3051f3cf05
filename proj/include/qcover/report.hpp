#pragma once

#include <json.hpp>
#include <string>

namespace qcover {

enum class Verdict { Pass, Fail, NotApplicable, Indeterminate };

std::string verdict_name(Verdict v);
/// Exit code contract of the command-line tool: 0 pass, 1 fail, 3 otherwise.
int verdict_exit_code(Verdict v);

struct VerificationReport {
  std::string claim;
  nlohmann::json instance = nlohmann::json::object();
  Verdict pass = Verdict::Pass;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json caps = nlohmann::json::object();

  /// Folds a sub-check into the verdict; failures are recorded as witnesses.
  void require(bool ok, const std::string& what);
  void note(nlohmann::json w) { witnesses.push_back(std::move(w)); }
  bool passed() const { return pass == Verdict::Pass; }

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Records a sub-report as a witness; the verdict becomes the worse of the two
/// (fail, then indeterminate, then not-applicable, then pass).
void absorb(VerificationReport& into, const VerificationReport& sub);

}  // namespace qcover
