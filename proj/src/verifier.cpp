#include "cdv/verifier.hpp"

#include <stdexcept>

namespace cdv {

namespace {

bool required_ok(const AssertionResult& r) {
  return r.assertion.severity != Severity::required || r.verdict == Verdict::pass;
}

}  // namespace

ProofScript builtin_script(std::string_view socle) { return parse_script(builtin_script_text(socle)); }

bool VerificationReport::recompute_passed() const {
  for (const auto& r : results)
    if (!required_ok(r.result)) return false;
  return true;
}

VerificationReport run_script(const ProofScript& s, const Corpus& corpus) {
  VerificationReport rep;
  rep.socle = s.socle;
  rep.automorphism_group = s.automorphism_group;
  for (const auto& st : s.steps) {
    AssertionResult r = evaluate(st.assertion, corpus);
    if (rep.step_verdicts.empty() || rep.step_verdicts.back().step != st.step)
      rep.step_verdicts.push_back({st.step, true});
    if (!required_ok(r)) {
      rep.step_verdicts.back().passed = false;
      rep.passed = false;
    }
    if (r.assertion.severity == Severity::advisory && r.verdict != Verdict::pass) rep.advisory_findings.push_back(r);
    rep.results.push_back({st.step, std::move(r)});
  }
  return rep;
}

}  // namespace cdv
