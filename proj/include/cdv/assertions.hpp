#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "cdv/arith.hpp"
#include "cdv/corpus.hpp"

namespace cdv {

using IntSet = std::vector<BigInt>;
using NameSet = std::vector<std::string>;

namespace kinds {

struct DegreePresent {
  std::string group;
  BigInt d;
  bool operator==(const DegreePresent&) const = default;
};
struct NotDegree {
  std::string group;
  BigInt d;
  bool operator==(const NotDegree&) const = default;
};
struct DividesSomeDegree {
  std::string group;
  BigInt n;
  bool operator==(const DividesSomeDegree&) const = default;
};
struct DividesNoDegree {
  std::string group;
  BigInt n;
  bool operator==(const DividesNoDegree&) const = default;
};
/// No maximal-subgroup index of group divides a member of s.
struct NoMaximalIndexDividing {
  std::string group;
  IntSet s;
  bool operator==(const NoMaximalIndexDividing&) const = default;
};
struct MinMaximalIndexAtLeast {
  std::string group;
  BigInt n;
  bool operator==(const MinMaximalIndexAtLeast&) const = default;
};
struct SchurMultiplierOrder {
  std::string group;
  BigInt c;
  bool operator==(const SchurMultiplierOrder&) const = default;
};
/// Each chi/|H0:K| with chi in cd(H) divisible by |H0:K| divides a member of t.
struct QuotientSetDividesInto {
  std::string h0;
  std::string k;
  std::string h;
  IntSet t;
  bool operator==(const QuotientSetDividesInto&) const = default;
};
/// Maximal K of H0 whose index divides a degree of H are exactly `expected`.
struct IndexCandidates {
  std::string h0;
  std::string h;
  NameSet expected;
  bool operator==(const IndexCandidates&) const = default;
};
struct NoProjectiveDegreeDividingAny {
  std::string group;
  IntSet s;
  bool operator==(const NoProjectiveDegreeDividingAny&) const = default;
};
struct MinProjectiveDegreeAtLeast {
  std::string group;
  BigInt n;
  bool operator==(const MinProjectiveDegreeAtLeast&) const = default;
};
/// Projective degrees of group dividing a member of s are exactly `expected`.
struct ProjectiveDegreesDividing {
  std::string group;
  IntSet s;
  IntSet expected;
  bool operator==(const ProjectiveDegreesDividing&) const = default;
};
/// Every member of s is odd and group is flagged nonsolvable.
struct OddQuotientSolvabilityContradiction {
  std::string group;
  IntSet s;
  bool operator==(const OddQuotientSolvabilityContradiction&) const = default;
};
/// No m >= 2 with m * b dividing a degree of h.
struct NoProperMultipleDividesDegree {
  std::string h;
  BigInt b;
  bool operator==(const NoProperMultipleDividesDegree&) const = default;
};
/// d in cd(cover), d not in cd(h0), d divides no degree of h.
struct CoverDegreeContradiction {
  std::string cover;
  std::string h0;
  std::string h;
  BigInt d;
  bool operator==(const CoverDegreeContradiction&) const = default;
};
/// Every quotient chi/|H0:K| is below n.
struct MaxQuotientBelow {
  std::string h0;
  std::string k;
  std::string h;
  BigInt n;
  bool operator==(const MaxQuotientBelow&) const = default;
};
struct FrobeniusEliminated {
  std::string h;
  bool operator==(const FrobeniusEliminated&) const = default;
};
struct ChiefFactorUnique {
  std::string h;
  std::string h0;
  bool operator==(const ChiefFactorUnique&) const = default;
};
struct NoConsecutiveDegrees {
  std::string h;
  bool operator==(const NoConsecutiveDegrees&) const = default;
};
struct NoPrimePowerDegree {
  std::string h;
  bool operator==(const NoPrimePowerDegree&) const = default;
};
struct NoPerfectPowerDegree {
  std::string h;
  bool operator==(const NoPerfectPowerDegree&) const = default;
};
struct DegreeSetsEqual {
  std::string a;
  std::string b;
  bool operator==(const DegreeSetsEqual&) const = default;
};
struct DegreeSetsDiffer {
  std::string a;
  std::string b;
  bool operator==(const DegreeSetsDiffer&) const = default;
};

}  // namespace kinds

using AssertionKind =
    std::variant<kinds::DegreePresent, kinds::NotDegree, kinds::DividesSomeDegree, kinds::DividesNoDegree,
                 kinds::NoMaximalIndexDividing, kinds::MinMaximalIndexAtLeast, kinds::SchurMultiplierOrder,
                 kinds::QuotientSetDividesInto, kinds::IndexCandidates, kinds::NoProjectiveDegreeDividingAny,
                 kinds::MinProjectiveDegreeAtLeast, kinds::ProjectiveDegreesDividing,
                 kinds::OddQuotientSolvabilityContradiction, kinds::NoProperMultipleDividesDegree,
                 kinds::CoverDegreeContradiction, kinds::MaxQuotientBelow, kinds::FrobeniusEliminated,
                 kinds::ChiefFactorUnique, kinds::NoConsecutiveDegrees, kinds::NoPrimePowerDegree,
                 kinds::NoPerfectPowerDegree, kinds::DegreeSetsEqual, kinds::DegreeSetsDiffer>;

/// Calls f on each argument of a kind, in script order.
template <class A, class F>
void for_each_field(A& a, F&& f) {
  using T = std::remove_const_t<A>;
  using namespace kinds;
  if constexpr (std::is_same_v<T, DegreePresent> || std::is_same_v<T, NotDegree>) {
    f(a.group), f(a.d);
  } else if constexpr (std::is_same_v<T, DividesSomeDegree> || std::is_same_v<T, DividesNoDegree> ||
                       std::is_same_v<T, MinMaximalIndexAtLeast> || std::is_same_v<T, MinProjectiveDegreeAtLeast>) {
    f(a.group), f(a.n);
  } else if constexpr (std::is_same_v<T, NoMaximalIndexDividing> || std::is_same_v<T, NoProjectiveDegreeDividingAny> ||
                       std::is_same_v<T, OddQuotientSolvabilityContradiction>) {
    f(a.group), f(a.s);
  } else if constexpr (std::is_same_v<T, SchurMultiplierOrder>) {
    f(a.group), f(a.c);
  } else if constexpr (std::is_same_v<T, QuotientSetDividesInto>) {
    f(a.h0), f(a.k), f(a.h), f(a.t);
  } else if constexpr (std::is_same_v<T, IndexCandidates>) {
    f(a.h0), f(a.h), f(a.expected);
  } else if constexpr (std::is_same_v<T, ProjectiveDegreesDividing>) {
    f(a.group), f(a.s), f(a.expected);
  } else if constexpr (std::is_same_v<T, NoProperMultipleDividesDegree>) {
    f(a.h), f(a.b);
  } else if constexpr (std::is_same_v<T, CoverDegreeContradiction>) {
    f(a.cover), f(a.h0), f(a.h), f(a.d);
  } else if constexpr (std::is_same_v<T, MaxQuotientBelow>) {
    f(a.h0), f(a.k), f(a.h), f(a.n);
  } else if constexpr (std::is_same_v<T, FrobeniusEliminated> || std::is_same_v<T, NoConsecutiveDegrees> ||
                       std::is_same_v<T, NoPrimePowerDegree> || std::is_same_v<T, NoPerfectPowerDegree>) {
    f(a.h);
  } else if constexpr (std::is_same_v<T, ChiefFactorUnique>) {
    f(a.h), f(a.h0);
  } else if constexpr (std::is_same_v<T, DegreeSetsEqual> || std::is_same_v<T, DegreeSetsDiffer>) {
    f(a.a), f(a.b);
  } else {
    static_assert(sizeof(T) == 0, "unhandled assertion kind");
  }
}

enum class Severity { required, advisory };

struct Assertion {
  AssertionKind kind;
  Severity severity = Severity::required;
  std::string label;

  bool operator==(const Assertion&) const = default;
};

/// Keyword used in script files, e.g. "DegreePresent".
std::string_view kind_name(const AssertionKind& k);
const std::vector<std::string_view>& all_kind_names();

/// "DegreePresent(J2.2, 28)".
std::string describe(const AssertionKind& k);

enum class Verdict { pass, fail, missing_data };

std::string_view verdict_name(Verdict v);
std::string_view severity_name(Severity s);

struct AssertionResult {
  Assertion assertion;
  Verdict verdict = Verdict::missing_data;
  /// Numeric evidence; always set on fail and missing-data.
  std::string witness;
};

/// Deterministic, total. Unresolved names and absent fields give missing-data.
AssertionResult evaluate(const Assertion& a, const Corpus& corpus);

/// Indices |H0:K| for maximal K of H0 dividing some degree of H, with the
/// quotient sets. Names of H0's maximal subgroups, in record order.
struct IndexCandidate {
  std::string name;
  BigInt index;
  /// Sorted distinct chi/index over chi in cd(H) divisible by index.
  std::vector<BigInt> quotients;
};
std::vector<IndexCandidate> index_candidates(const GroupRecord& h0, const GroupRecord& h);

/// Degree set of a record or of a cover (e.g. "2.J2"); null when unknown.
const DegreeMultiset* resolve_degrees(std::string_view name, const Corpus& corpus);

}  // namespace cdv
