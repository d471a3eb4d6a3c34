#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cdv {

using BigInt = mpz_class;

struct PrimePower {
  BigInt prime;
  unsigned long exponent = 0;

  bool operator==(const PrimePower& other) const {
    return prime == other.prime && exponent == other.exponent;
  }
};

/// A positive integer together with its prime factorization.
///
/// Factors are kept sorted by prime, each with exponent >= 1; the value 1 has
/// an empty factor list.
class FactoredInt {
public:
  FactoredInt() : value_(1) {}

  /// Throws std::invalid_argument if the factors are unsorted, repeat a
  /// prime, carry a zero exponent, or list a non-prime.
  explicit FactoredInt(std::vector<PrimePower> factors);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  /// Exponent of p in the factorization (0 if absent).
  unsigned long valuation(const BigInt& p) const;
  std::vector<BigInt> primes() const;

  /// "2^3 * 3^2 * 5 * 7"; "1" for the unit.
  std::string to_string() const;

  bool operator==(const FactoredInt& other) const {
    return value_ == other.value_ && factors_ == other.factors_;
  }

private:
  BigInt value_;
  std::vector<PrimePower> factors_;
};

bool is_prime(const BigInt& n);

/// Complete factorization of n >= 1. Division by the ascending hint primes
/// comes first; any cofactor > 1 falls back to trial division.
FactoredInt factorize(const BigInt& n, std::span<const BigInt> hint_primes = {});

/// Exponent of p in n, for n > 0 and prime p.
unsigned long valuation(const BigInt& n, const BigInt& p);

/// Euler's phi from a factorization.
BigInt euler_phi(const FactoredInt& f);

/// Smallest a >= 1 with r^a = 1 (mod f). Empty when gcd(r, f) > 1.
/// Requires f >= 2.
std::optional<BigInt> multiplicative_order(const BigInt& r, const FactoredInt& f);
std::optional<BigInt> multiplicative_order(const BigInt& r, const BigInt& f);

struct PowerDecomposition {
  BigInt base;
  unsigned long exponent = 0;

  bool operator==(const PowerDecomposition& other) const {
    return base == other.base && exponent == other.exponent;
  }
};

/// (p, e) with n = p^e and p prime, for n >= 2.
std::optional<PowerDecomposition> prime_power(const BigInt& n);
std::optional<PowerDecomposition> prime_power(const FactoredInt& n);

/// (b, k) with n = b^k and k >= 2 maximal, for n >= 2.
std::optional<PowerDecomposition> perfect_power(const BigInt& n);
std::optional<PowerDecomposition> perfect_power(const FactoredInt& n);

BigInt gcd(const BigInt& a, const BigInt& b);
bool divides(const BigInt& d, const BigInt& n);

/// Parses a non-negative decimal literal. Returns empty on any other input.
std::optional<BigInt> parse_decimal(std::string_view text);

/// Parses "2^3*3^2*5*7" or a plain decimal literal. Whitespace around
/// '*' and '^' is tolerated. Returns empty on malformed input.
std::optional<BigInt> parse_product(std::string_view text);

std::string to_string(const BigInt& n);

}  // namespace cdv
