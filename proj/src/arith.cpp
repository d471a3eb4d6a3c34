#include "cdv/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cdv {

namespace {

// Below this bound is_prime uses plain trial division.
const BigInt kTrialDivisionLimit("1000000000000");

void strip_factor(BigInt& n, const BigInt& p, std::map<BigInt, unsigned long>& out) {
  unsigned long e = 0;
  while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  if (e > 0) out[p] += e;
}

std::vector<PrimePower> to_factor_list(const std::map<BigInt, unsigned long>& m) {
  std::vector<PrimePower> out;
  out.reserve(m.size());
  for (const auto& [p, e] : m) out.push_back({p, e});
  return out;
}

void trial_divide(BigInt& n, std::map<BigInt, unsigned long>& out) {
  strip_factor(n, 2, out);
  for (BigInt d = 3; d * d <= n; d += 2) strip_factor(n, d, out);
  if (n > 1) {
    out[n] += 1;
    n = 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

FactoredInt::FactoredInt(std::vector<PrimePower> factors) : value_(1), factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.exponent == 0) throw std::invalid_argument("zero exponent for prime " + f.prime.get_str());
    if (i > 0 && !(factors_[i - 1].prime < f.prime))
      throw std::invalid_argument("primes not strictly increasing at " + f.prime.get_str());
    if (!is_prime(f.prime)) throw std::invalid_argument(f.prime.get_str() + " is not prime");
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    value_ *= pe;
  }
}

unsigned long FactoredInt::valuation(const BigInt& p) const {
  for (const auto& f : factors_)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::vector<BigInt> FactoredInt::primes() const {
  std::vector<BigInt> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::string FactoredInt::to_string() const {
  if (factors_.empty()) return "1";
  std::string s;
  for (const auto& f : factors_) {
    if (!s.empty()) s += " * ";
    s += f.prime.get_str();
    if (f.exponent > 1) s += "^" + std::to_string(f.exponent);
  }
  return s;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n < kTrialDivisionLimit) {
    for (BigInt d = 3; d * d <= n; d += 2)
      if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

FactoredInt factorize(const BigInt& n, std::span<const BigInt> hint_primes) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::map<BigInt, unsigned long> found;
  BigInt rest = n;
  for (const auto& p : hint_primes) {
    if (rest == 1) break;
    strip_factor(rest, p, found);
  }
  if (rest > 1) trial_divide(rest, found);
  return FactoredInt(to_factor_list(found));
}

unsigned long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  BigInt rest = n;
  unsigned long e = 0;
  while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

BigInt euler_phi(const FactoredInt& f) {
  BigInt phi = 1;
  for (const auto& [p, e] : f.factors()) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe * (p - 1);
  }
  return phi;
}

std::optional<BigInt> multiplicative_order(const BigInt& r, const FactoredInt& f) {
  if (f.value() < 2) throw std::invalid_argument("multiplicative_order requires modulus >= 2");
  if (gcd(r, f.value()) != 1) return std::nullopt;

  // Factor phi(f) = prod p^(e-1) (p - 1) piecewise; every piece is small.
  std::map<BigInt, unsigned long> phi_factors;
  for (const auto& [p, e] : f.factors()) {
    if (e > 1) phi_factors[p] += e - 1;
    BigInt pm1 = p - 1;
    if (pm1 > 1) trial_divide(pm1, phi_factors);
  }

  BigInt order = euler_phi(f);
  const BigInt& modulus = f.value();
  BigInt base = r % modulus;
  if (base < 0) base += modulus;
  for (const auto& [q, e] : phi_factors) {
    for (unsigned long i = 0; i < e; ++i) {
      if (mpz_divisible_p(order.get_mpz_t(), q.get_mpz_t()) == 0) break;
      BigInt candidate = order / q;
      BigInt power;
      mpz_powm(power.get_mpz_t(), base.get_mpz_t(), candidate.get_mpz_t(), modulus.get_mpz_t());
      if (power != 1) break;
      order = candidate;
    }
  }
  return order;
}

std::optional<BigInt> multiplicative_order(const BigInt& r, const BigInt& f) {
  return multiplicative_order(r, factorize(f));
}

std::optional<PowerDecomposition> perfect_power(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("perfect_power requires n >= 2");
  const auto max_exp = static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
  for (unsigned long k = max_exp; k >= 2; --k) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0 && root >= 2) return PowerDecomposition{root, k};
  }
  return std::nullopt;
}

std::optional<PowerDecomposition> perfect_power(const FactoredInt& n) {
  if (n.value() < 2) throw std::invalid_argument("perfect_power requires n >= 2");
  unsigned long g = 0;
  for (const auto& f : n.factors()) g = std::gcd(g, f.exponent);
  if (g < 2) return std::nullopt;
  BigInt base = 1;
  for (const auto& [p, e] : n.factors()) {
    BigInt pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / g);
    base *= pe;
  }
  return PowerDecomposition{base, g};
}

std::optional<PowerDecomposition> prime_power(const BigInt& n) {
  if (n < 2) throw std::invalid_argument("prime_power requires n >= 2");
  if (auto pp = perfect_power(n)) {
    if (is_prime(pp->base)) return pp;
    return std::nullopt;
  }
  if (is_prime(n)) return PowerDecomposition{n, 1};
  return std::nullopt;
}

std::optional<PowerDecomposition> prime_power(const FactoredInt& n) {
  if (n.value() < 2) throw std::invalid_argument("prime_power requires n >= 2");
  if (n.factors().size() != 1) return std::nullopt;
  return PowerDecomposition{n.factors().front().prime, n.factors().front().exponent};
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool divides(const BigInt& d, const BigInt& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::optional<BigInt> parse_decimal(std::string_view text) {
  text = trim(text);
  if (text.empty() || text.size() > 4096) return std::nullopt;
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  return BigInt(std::string(text), 10);
}

std::optional<BigInt> parse_product(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  BigInt product = 1;
  while (true) {
    const auto star = text.find('*');
    std::string_view term = trim(text.substr(0, star));
    const auto caret = term.find('^');
    auto base = parse_decimal(term.substr(0, caret));
    if (!base) return std::nullopt;
    if (caret == std::string_view::npos) {
      product *= *base;
    } else {
      auto exp = parse_decimal(term.substr(caret + 1));
      if (!exp || !exp->fits_ulong_p()) return std::nullopt;
      BigInt pe;
      mpz_pow_ui(pe.get_mpz_t(), base->get_mpz_t(), exp->get_ui());
      product *= pe;
    }
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
  }
  return product;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

}  // namespace cdv
