#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdv/assertions.hpp"

namespace cdv {

struct ScriptStep {
  int step = 1;
  Assertion assertion;

  bool operator==(const ScriptStep&) const = default;
};

struct ProofScript {
  std::string socle;
  std::string automorphism_group;
  /// Step tags are non-decreasing.
  std::vector<ScriptStep> steps;

  bool operator==(const ProofScript&) const = default;
};

class ScriptParseError : public std::runtime_error {
public:
  ScriptParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Parses the line-oriented script format:
///
///   script <socle>
///   H <automorphism group>
///   step <1-4> <Kind> <args...> [advisory|required] ["label"]
///
/// Names are single tokens. Integers are decimal or factored ("2^3*3^2*5").
/// Sets are written {a,b,c}; commas inside parentheses belong to names.
/// An empty script yields an empty ProofScript and a warning.
ProofScript parse_script(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Canonical text; parse_script(format_script(s)) == s.
std::string format_script(const ProofScript& s);

}  // namespace cdv
