#include "cdv/degrees.hpp"

#include <algorithm>

namespace cdv {

std::vector<BigInt> isolated_degrees(const DegreeMultiset& d) {
  const auto nt = d.nontrivial();
  std::vector<BigInt> out;
  for (const auto& x : nt) {
    bool isolated = true;
    for (const auto& e : nt) {
      if (e == x) continue;
      if (divides(e, x) || divides(x, e)) {
        isolated = false;
        break;
      }
    }
    if (isolated) out.push_back(x);
  }
  return out;
}

std::vector<BigInt> divisibility_maximal_degrees(const DegreeMultiset& d) {
  const auto nt = d.nontrivial();
  std::vector<BigInt> out;
  for (std::size_t i = 0; i < nt.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < nt.size(); ++j) {
      if (divides(nt[i], nt[j])) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(nt[i]);
  }
  return out;
}

std::vector<ConsecutivePair> consecutive_pairs(const DegreeMultiset& d) {
  std::vector<ConsecutivePair> out;
  const auto& e = d.entries();
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i].degree > 1 && e[i + 1].degree == e[i].degree + 1) out.push_back({e[i].degree, e[i + 1].degree});
  return out;
}

std::vector<PrimePowerDegree> prime_power_degrees(const DegreeMultiset& d) {
  std::vector<PrimePowerDegree> out;
  for (const auto& x : d.nontrivial())
    if (auto pp = prime_power(x)) out.push_back({x, pp->base, pp->exponent});
  return out;
}

std::vector<PerfectPowerDegree> perfect_power_degrees(const DegreeMultiset& d) {
  std::vector<PerfectPowerDegree> out;
  for (const auto& x : d.nontrivial())
    if (auto pp = perfect_power(x)) out.push_back({x, pp->base, pp->exponent});
  return out;
}

DegreeAnalysis analyze_degrees(const DegreeMultiset& d) {
  return {isolated_degrees(d), divisibility_maximal_degrees(d), consecutive_pairs(d), prime_power_degrees(d),
          perfect_power_degrees(d)};
}

bool divides_some_degree(const BigInt& n, const DegreeMultiset& d) {
  return std::any_of(d.entries().begin(), d.entries().end(),
                     [&](const DegreeEntry& e) { return divides(n, e.degree); });
}

Coverage covers_divisibility(const DegreeMultiset& src, const DegreeMultiset& dst) {
  Coverage c;
  for (const auto& e : src.entries()) {
    if (!divides_some_degree(e.degree, dst)) {
      c.covered = false;
      c.uncovered.push_back(e.degree);
    }
  }
  return c;
}

bool degree_sets_equal(const DegreeMultiset& a, const DegreeMultiset& b) { return a.degrees() == b.degrees(); }

}  // namespace cdv
