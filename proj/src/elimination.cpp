#include "cdv/elimination.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cdv {

namespace {

constexpr unsigned long kMaxKernelBits = 4096;

std::optional<BigInt> kernel_power(const BigInt& r, const BigInt& a) {
  const auto bits = mpz_sizeinbase(r.get_mpz_t(), 2);
  if (!a.fits_ulong_p() || a.get_ui() > kMaxKernelBits / bits) return std::nullopt;
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), r.get_mpz_t(), a.get_ui());
  return out;
}

BigInt smallest_coprime_prime(const BigInt& f) {
  BigInt p = 2;
  while (divides(p, f)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

// r^a divides chi^2 iff a <= 2 v_r(chi).
bool kernel_divides_square(const BigInt& a, const BigInt& r, const BigInt& chi) {
  return a <= BigInt(2 * valuation(chi, r));
}

std::string str(const BigInt& n) { return n.get_str(); }

}  // namespace

EliminationReport frobenius_search(const DegreeMultiset& d) {
  if (d.size() < 2) throw std::invalid_argument("frobenius_search needs at least two degrees");

  EliminationReport rep;
  const auto nontrivial = d.nontrivial();
  rep.prime_power_degrees = prime_power_degrees(d);
  rep.prime_power_case_ruled_out = rep.prime_power_degrees.empty();
  rep.isolated = isolated_degrees(d);
  rep.divisibility_maximal = divisibility_maximal_degrees(d);

  std::set<BigInt> primes;
  for (const auto& x : rep.divisibility_maximal)
    for (const auto& p : factorize(x).primes()) primes.insert(p);
  rep.candidate_primes.assign(primes.begin(), primes.end());

  for (const auto& f : nontrivial) {
    const FactoredInt ff = factorize(f, rep.candidate_primes);

    FrobeniusTraceEntry index_only{f, std::nullopt, true, "feasible without a kernel prime"};
    for (const auto& chi : rep.divisibility_maximal) {
      if (!divides(f, chi)) {
        index_only = {f, std::nullopt, false, "f does not divide maximal degree " + str(chi)};
        break;
      }
    }
    if (index_only.feasible) {
      for (const auto& chi : rep.isolated) {
        if (f != chi) {
          index_only = {f, std::nullopt, false, "f differs from isolated degree " + str(chi)};
          break;
        }
      }
    }
    if (index_only.feasible) {
      const BigInt r = smallest_coprime_prime(f);
      const BigInt a = *multiplicative_order(r, ff);
      rep.certificates.push_back({f, r, a, kernel_power(r, a), true});
    }
    rep.trace.push_back(std::move(index_only));

    for (const auto& r : rep.candidate_primes) {
      if (divides(r, f)) {
        rep.trace.push_back({f, r, false, "r divides f"});
        continue;
      }
      const BigInt a = *multiplicative_order(r, ff);
      std::string why;
      for (const auto& chi : rep.divisibility_maximal) {
        if (!divides(f, chi) && !kernel_divides_square(a, r, chi)) {
          why = "a = " + str(a) + ": f does not divide maximal degree " + str(chi) + " and r^a does not divide its square";
          break;
        }
      }
      if (why.empty()) {
        for (const auto& chi : rep.isolated) {
          if (f != chi && !kernel_divides_square(a, r, chi)) {
            why = "a = " + str(a) + ": f differs from isolated degree " + str(chi) + " and r^a does not divide its square";
            break;
          }
        }
      }
      if (why.empty()) {
        rep.certificates.push_back({f, r, a, kernel_power(r, a), false});
        rep.trace.push_back({f, r, true, "a = " + str(a) + ": feasible"});
      } else {
        rep.trace.push_back({f, r, false, std::move(why)});
      }
    }
  }

  std::sort(rep.certificates.begin(), rep.certificates.end(), [](const auto& x, const auto& y) {
    if (x.f != y.f) return x.f < y.f;
    if (x.r != y.r) return x.r < y.r;
    return x.no_r_needed && !y.no_r_needed;
  });
  rep.certificates.erase(std::unique(rep.certificates.begin(), rep.certificates.end(),
                                     [](const auto& x, const auto& y) { return x.f == y.f && x.r == y.r; }),
                         rep.certificates.end());

  const BigInt& smallest = nontrivial.front();
  for (const auto& r : rep.candidate_primes) {
    PrimeBoundSummary s;
    s.r = r;
    BigInt power = r;
    s.min_exponent = 1;
    while (power - 1 < smallest) {
      power *= r;
      ++s.min_exponent;
    }
    s.forced_gcd = 0;
    for (const auto& chi : rep.divisibility_maximal) {
      if (2 * valuation(chi, r) < s.min_exponent) {
        s.forced_multiples.push_back(chi);
        s.forced_gcd = gcd(s.forced_gcd, chi);
      }
    }
    for (const auto& x : nontrivial)
      if (!divides(r, x) && divides(x, s.forced_gcd)) s.admissible_degrees.push_back(x);
    for (const auto& chi : rep.isolated)
      if (2 * valuation(chi, r) < s.min_exponent) s.forced_equal.push_back(chi);
    rep.prime_summaries.push_back(std::move(s));
  }
  return rep;
}

bool certificate_well_formed(const FrobeniusCertificate& c) {
  if (c.f < 2 || !is_prime(c.r) || c.a < 1) return false;
  if (gcd(c.r, c.f) != 1) return false;
  BigInt residue;
  mpz_powm(residue.get_mpz_t(), c.r.get_mpz_t(), c.a.get_mpz_t(), c.f.get_mpz_t());
  if (residue != 1) return false;
  if (multiplicative_order(c.r, c.f) != c.a) return false;
  if (c.kernel_order) {
    if (kernel_power(c.r, c.a) != c.kernel_order) return false;
    if (c.f > *c.kernel_order - 1) return false;
  }
  return true;
}

const std::vector<std::string>& sporadic_group_names() {
  static const std::vector<std::string> names = {
      "M11", "M12", "J1",  "M22", "J2",  "M23", "2F4(2)'", "HS",  "J3",    "M24", "McL", "He", "Ru", "Suz",
      "O'N", "Co3", "Co2", "Fi22", "HN", "Ly",  "Th",      "Fi23", "Co1", "J4",  "Fi24'", "B", "M"};
  return names;
}

ChiefFactorReport chief_factor_filter(const GroupRecord& h, const GroupRecord& h0, const Corpus& corpus) {
  ChiefFactorReport rep;
  rep.h = h.name;
  rep.h0 = h0.name;
  const DegreeMultiset& cd = h.degrees;

  rep.perfect_power_degrees = perfect_power_degrees(cd);
  rep.power_case_ruled_out = rep.perfect_power_degrees.empty();
  rep.consecutive_pairs = consecutive_pairs(cd);
  rep.alternating_ruled_out = rep.consecutive_pairs.empty();
  rep.prime_power_degrees = prime_power_degrees(cd);
  rep.lie_type_ruled_out = rep.prime_power_degrees.empty();

  for (const auto& name : sporadic_group_names()) {
    const GroupRecord* s = corpus.find(name);
    if (!s) throw CorpusError("chief-factor filter needs a corpus record for sporadic group " + name);
    SporadicCandidate c;
    c.name = name;
    c.is_socle = name == h0.name;
    auto cov = covers_divisibility(s->degrees, cd);
    c.divides_into = cov.covered;
    c.uncovered = std::move(cov.uncovered);
    if (c.divides_into) {
      rep.survivors.push_back(name);
      bool killed = false;
      if (!c.is_socle) {
        if (!s->extendible_degrees) {
          c.extendible_data_missing = true;
        } else {
          for (const auto& x : *s->extendible_degrees) {
            if (x > 1 && !cd.contains(x)) {
              c.killing_degree = x;
              killed = true;
              break;
            }
          }
        }
      }
      if (!killed) rep.remaining.push_back(name);
    }
    rep.candidates.push_back(std::move(c));
  }
  return rep;
}

}  // namespace cdv
