#pragma once

#include <vector>

#include "cdv/arith.hpp"
#include "cdv/corpus.hpp"

namespace cdv {

struct ConsecutivePair {
  BigInt low;
  BigInt high;

  bool operator==(const ConsecutivePair&) const = default;
};

struct PrimePowerDegree {
  BigInt degree;
  BigInt prime;
  unsigned long exponent = 0;

  bool operator==(const PrimePowerDegree&) const = default;
};

struct PerfectPowerDegree {
  BigInt degree;
  BigInt base;
  unsigned long exponent = 0;

  bool operator==(const PerfectPowerDegree&) const = default;
};

/// Analytics over the nontrivial degrees of one group. Every list is
/// ascending by degree.
struct DegreeAnalysis {
  std::vector<BigInt> isolated;
  std::vector<BigInt> divisibility_maximal;
  std::vector<ConsecutivePair> consecutive_pairs;
  std::vector<PrimePowerDegree> prime_power_degrees;
  std::vector<PerfectPowerDegree> perfect_power_degrees;
};

/// d > 1 such that no other degree e > 1 divides d or is divisible by d.
std::vector<BigInt> isolated_degrees(const DegreeMultiset& d);

/// d > 1 with no proper multiple in the set.
std::vector<BigInt> divisibility_maximal_degrees(const DegreeMultiset& d);

/// All (d, d + 1) with d > 1 and both present.
std::vector<ConsecutivePair> consecutive_pairs(const DegreeMultiset& d);

/// Nontrivial degrees of the form p^e, e >= 1.
std::vector<PrimePowerDegree> prime_power_degrees(const DegreeMultiset& d);

/// Nontrivial degrees of the form b^k, k >= 2 maximal.
std::vector<PerfectPowerDegree> perfect_power_degrees(const DegreeMultiset& d);

DegreeAnalysis analyze_degrees(const DegreeMultiset& d);

struct Coverage {
  bool covered = true;
  /// Degrees of the source dividing no degree of the target.
  std::vector<BigInt> uncovered;
};

/// Whether every degree of src divides some degree of dst.
Coverage covers_divisibility(const DegreeMultiset& src, const DegreeMultiset& dst);

/// Equality of the underlying degree sets; multiplicities are ignored.
bool degree_sets_equal(const DegreeMultiset& a, const DegreeMultiset& b);

/// Whether n divides at least one member of d.
bool divides_some_degree(const BigInt& n, const DegreeMultiset& d);

}  // namespace cdv
