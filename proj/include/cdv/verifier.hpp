#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cdv/assertions.hpp"
#include "cdv/corpus.hpp"
#include "cdv/script.hpp"

namespace cdv {

/// J2, HS, J3, McL, He, Suz, O'N, Fi22, HN, Fi24'.
const std::vector<std::string>& builtin_socles();

/// Throws std::invalid_argument listing the valid names for any other socle.
ProofScript builtin_script(std::string_view socle);

/// Script text as embedded in the binary.
std::string_view builtin_script_text(std::string_view socle);

struct StepResult {
  int step = 1;
  AssertionResult result;
};

struct StepVerdict {
  int step = 1;
  bool passed = true;
};

struct VerificationReport {
  std::string socle;
  std::string automorphism_group;
  /// Script order.
  std::vector<StepResult> results;
  std::vector<StepVerdict> step_verdicts;
  bool passed = true;
  /// Advisory assertions that did not pass.
  std::vector<AssertionResult> advisory_findings;

  /// Overall verdict recomputed from results.
  bool recompute_passed() const;
};

/// Evaluates every assertion; never stops at the first failure.
VerificationReport run_script(const ProofScript& s, const Corpus& corpus);

}  // namespace cdv
