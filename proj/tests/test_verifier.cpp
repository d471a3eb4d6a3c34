#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "cdv/verifier.hpp"
#include "support.hpp"

using namespace cdv;
using support::corpus;

namespace {

Corpus with_replaced(const GroupRecord& g) {
  Corpus c;
  for (const auto& [name, rec] : corpus().records()) c.add(name == g.name ? g : rec);
  return c;
}

std::map<std::string, std::pair<Verdict, std::string>> by_assertion(const VerificationReport& r) {
  std::map<std::string, std::pair<Verdict, std::string>> out;
  for (const auto& s : r.results)
    out[std::to_string(s.step) + " " + describe(s.result.assertion.kind) + " " +
        std::string(severity_name(s.result.assertion.severity))] = {s.result.verdict, s.result.witness};
  return out;
}

}  // namespace

TEST_CASE("every built-in script passes on the bundled corpus") {
  CHECK(builtin_socles().size() == 10);
  for (const auto& socle : builtin_socles()) {
    INFO(socle);
    ProofScript s = builtin_script(socle);
    VerificationReport r = run_script(s, corpus());
    CHECK(r.passed);
    CHECK(r.recompute_passed());
    CHECK(r.results.size() == s.steps.size());
    CHECK(r.step_verdicts.size() == 4);
    for (const auto& sv : r.step_verdicts) CHECK(sv.passed);
    for (const auto& f : r.advisory_findings) CHECK(f.assertion.severity == Severity::advisory);
  }
}

TEST_CASE("a tampered degree fails with its witness") {
  GroupRecord j22 = corpus().at("J2.2");
  auto entries = j22.degrees.entries();
  entries.erase(std::find_if(entries.begin(), entries.end(), [](const auto& e) { return e.degree == 28; }));
  j22.degrees = DegreeMultiset(entries);
  Corpus tampered = with_replaced(j22);

  VerificationReport r = run_script(builtin_script("J2"), tampered);
  CHECK_FALSE(r.passed);
  bool found = false;
  for (const auto& s : r.results) {
    if (s.result.verdict == Verdict::fail && s.result.assertion.severity == Severity::required &&
        s.result.witness.find("28") != std::string::npos)
      found = true;
  }
  CHECK(found);
  CHECK(r.step_verdicts.back().passed == false);
}

TEST_CASE("an absent group gives missing-data and an overall fail") {
  ProofScript s = parse_script("script X\nH X.2\nstep 1 FrobeniusEliminated X.2\nstep 2 NoPrimePowerDegree J2.2\n");
  VerificationReport r = run_script(s, corpus());
  CHECK_FALSE(r.passed);
  REQUIRE(r.results.size() == 2);
  CHECK(r.results[0].result.verdict == Verdict::missing_data);
  CHECK(r.results[1].result.verdict == Verdict::pass);
  CHECK_FALSE(r.step_verdicts[0].passed);
  CHECK(r.step_verdicts[1].passed);
}

TEST_CASE("scripts never short-circuit") {
  ProofScript s = parse_script(
      "script J2\nH J2.2\n"
      "step 1 DegreePresent J2.2 29\n"
      "step 1 DegreePresent J2.2 28\n"
      "step 2 FrobeniusEliminated S3\n"
      "step 3 NotDegree J2 28\n");
  VerificationReport r = run_script(s, corpus());
  REQUIRE(r.results.size() == 4);
  CHECK(r.results[1].result.verdict == Verdict::pass);
  CHECK(r.results[3].result.verdict == Verdict::pass);
  CHECK_FALSE(r.passed);
}

TEST_CASE("advisory failures do not fail a script") {
  ProofScript s = parse_script("script J3\nH J3.2\nstep 1 NoPerfectPowerDegree J3.2 advisory\n");
  VerificationReport r = run_script(s, corpus());
  CHECK(r.passed);
  REQUIRE(r.advisory_findings.size() == 1);
  CHECK(r.advisory_findings[0].witness.find("324") != std::string::npos);
}

TEST_CASE("results do not depend on evaluation order") {
  std::mt19937 rng(7);
  for (const auto& socle : builtin_socles()) {
    ProofScript s = builtin_script(socle);
    VerificationReport base = run_script(s, corpus());
    for (int trial = 0; trial < 5; ++trial) {
      ProofScript shuffled = s;
      std::shuffle(shuffled.steps.begin(), shuffled.steps.end(), rng);
      VerificationReport r = run_script(shuffled, corpus());
      CHECK(r.recompute_passed() == base.passed);
      CHECK(by_assertion(r) == by_assertion(base));
    }
  }
}
