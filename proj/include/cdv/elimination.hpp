#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdv/arith.hpp"
#include "cdv/corpus.hpp"
#include "cdv/degrees.hpp"

namespace cdv {

/// A feasible (f, r, a) triple: f = |G:F| is a degree, r^a the order of an
/// elementary abelian kernel with a the order of r modulo f.
struct FrobeniusCertificate {
  BigInt f;
  BigInt r;
  BigInt a;
  /// r^a, left empty when it would exceed 4096 bits.
  std::optional<BigInt> kernel_order;
  /// f satisfies every constraint without help from r; r is then the
  /// smallest prime coprime to f.
  bool no_r_needed = false;

  bool operator==(const FrobeniusCertificate&) const = default;
};

struct FrobeniusTraceEntry {
  BigInt f;
  /// Empty for the index-only check.
  std::optional<BigInt> r;
  bool feasible = false;
  std::string reason;
};

/// Per-prime summary of the constraints forced on f.
struct PrimeBoundSummary {
  BigInt r;
  /// Least a with r^a - 1 >= smallest nontrivial degree.
  unsigned long min_exponent = 0;
  /// Divisibility-maximal degrees chi with 2 v_r(chi) < min_exponent; f must
  /// divide each of them.
  std::vector<BigInt> forced_multiples;
  /// gcd of forced_multiples (0 when there are none).
  BigInt forced_gcd;
  /// Nontrivial degrees coprime to r dividing forced_gcd.
  std::vector<BigInt> admissible_degrees;
  /// Isolated degrees chi with 2 v_r(chi) < min_exponent; f must equal each.
  std::vector<BigInt> forced_equal;
};

struct EliminationReport {
  bool prime_power_case_ruled_out = false;
  std::vector<PrimePowerDegree> prime_power_degrees;
  std::vector<BigInt> isolated;
  std::vector<BigInt> divisibility_maximal;
  std::vector<BigInt> candidate_primes;
  /// Sorted by f, then r.
  std::vector<FrobeniusCertificate> certificates;
  std::vector<FrobeniusTraceEntry> trace;
  std::vector<PrimeBoundSummary> prime_summaries;

  bool eliminated() const { return prime_power_case_ruled_out && certificates.empty(); }
};

/// Searches every (f, r) with f a nontrivial degree and r a prime dividing a
/// divisibility-maximal degree, plus the index-only case. Throws
/// std::invalid_argument for fewer than two degrees.
EliminationReport frobenius_search(const DegreeMultiset& d);

/// Whether the certificate satisfies r^a = 1 mod f, gcd(r, f) = 1 and
/// f <= r^a - 1, recomputed from scratch.
bool certificate_well_formed(const FrobeniusCertificate& c);

/// The 26 sporadic groups and the Tits group, in ATLAS order.
const std::vector<std::string>& sporadic_group_names();

struct SporadicCandidate {
  std::string name;
  bool divides_into = false;
  /// Degrees of S dividing no degree of H.
  std::vector<BigInt> uncovered;
  bool is_socle = false;
  /// Smallest extendible degree of S outside cd(H).
  std::optional<BigInt> killing_degree;
  bool extendible_data_missing = false;
};

struct ChiefFactorReport {
  std::string h;
  std::string h0;
  bool power_case_ruled_out = false;
  std::vector<PerfectPowerDegree> perfect_power_degrees;
  bool alternating_ruled_out = false;
  std::vector<ConsecutivePair> consecutive_pairs;
  bool lie_type_ruled_out = false;
  std::vector<PrimePowerDegree> prime_power_degrees;
  /// One entry per sporadic group, ATLAS order.
  std::vector<SporadicCandidate> candidates;
  /// S with every degree dividing a degree of H.
  std::vector<std::string> survivors;
  /// Survivors not killed by an extendible degree.
  std::vector<std::string> remaining;

  /// Alternating and Lie-type cases ruled out and H0 the only remaining
  /// sporadic candidate. The power case is advisory and not included.
  bool unique() const {
    return alternating_ruled_out && lie_type_ruled_out && remaining.size() == 1 && remaining.front() == h0;
  }
};

/// Throws CorpusError naming any sporadic group without a corpus record.
ChiefFactorReport chief_factor_filter(const GroupRecord& h, const GroupRecord& h0, const Corpus& corpus);

}  // namespace cdv
