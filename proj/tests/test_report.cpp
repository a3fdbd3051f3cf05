#include <doctest.h>

#include <stdexcept>

#include "golden.hpp"
#include "qcover/errors.hpp"
#include "qcover/suite.hpp"

using namespace qcover;

TEST_CASE("report JSON round-trips for every verdict") {
  for (Verdict v : {Verdict::Pass, Verdict::Fail, Verdict::NotApplicable, Verdict::Indeterminate}) {
    VerificationReport r;
    r.claim = "Corres";
    r.instance = {{"n", 2}, {"window", {-3, 3}}};
    r.pass = v;
    r.note({{"orbit_classes", 6}});
    r.caps = {{"dimcap", 64}};
    CHECK(VerificationReport::from_json(r.to_json()) == r);
    CHECK(VerificationReport::from_json(nlohmann::json::parse(r.to_json().dump())) == r);
  }
}

TEST_CASE("exit codes follow the pass field") {
  CHECK(verdict_exit_code(Verdict::Pass) == 0);
  CHECK(verdict_exit_code(Verdict::Fail) == 1);
  CHECK(verdict_exit_code(Verdict::NotApplicable) == 3);
  CHECK(verdict_exit_code(Verdict::Indeterminate) == 3);
}

TEST_CASE("absorb keeps the worst verdict") {
  auto make = [](Verdict v) {
    VerificationReport r;
    r.claim = "x";
    r.pass = v;
    return r;
  };
  VerificationReport r = make(Verdict::Pass);
  absorb(r, make(Verdict::NotApplicable));
  CHECK(r.pass == Verdict::NotApplicable);
  absorb(r, make(Verdict::Pass));
  CHECK(r.pass == Verdict::NotApplicable);
  absorb(r, make(Verdict::Indeterminate));
  CHECK(r.pass == Verdict::Indeterminate);
  absorb(r, make(Verdict::Fail));
  CHECK(r.pass == Verdict::Fail);
  absorb(r, make(Verdict::Indeterminate));
  CHECK(r.pass == Verdict::Fail);
  CHECK(r.witnesses.size() == 5);
}

TEST_CASE("claim runner") {
  auto nak = golden::nakayama();
  // rad^2 = 0, so the Loewy length is 2
  CHECK(default_window(*nak, 1) == 3 * 2 * 3);
  CHECK(default_window(*nak, 2) == 3 * 2 * 4);

  SuiteInstance inst = make_instance(nak, 3, 1);
  VerificationReport a = run_claim("Main1", inst);
  CHECK(a.pass == Verdict::Pass);
  CHECK(a.claim == "Main1");
  CHECK(a.instance["window"] == nlohmann::json({-3, 3}));
  // identical inputs give byte-identical reports
  CHECK(run_claim("Main1", inst).to_json().dump() == a.to_json().dump());
  CHECK_THROWS_AS(run_claim("Main3", inst), std::invalid_argument);
  CHECK(claim_ids().size() == 11);

  // too narrow for the resolutions: the domain error is reported, not thrown
  VerificationReport s = run_claim("SelfinjCriteria", make_instance(nak, 1, 1));
  CHECK(s.pass == Verdict::Indeterminate);
  CHECK(s.witnesses.back()["error"] == "WindowTooSmall");
}

TEST_CASE("claims on the trivial grading of kA_3") {
  SuiteInstance inst = make_instance(golden::a3(), 2, 1);
  // P and I together are not 1-precluster tilting for A_3: the simple in the
  // middle is missing, so Main1 has an unmet hypothesis
  CHECK(run_claim("Main1", inst).pass == Verdict::NotApplicable);
  VerificationReport t = run_claim("TiltingPushdown", inst);
  CHECK(t.pass == Verdict::Pass);
  CHECK(t.witnesses[0]["downstairs_pairs"] == 14);
}
