#pragma once

// Brute-force reference implementations on machine integers, written from the
// definitions with no shared code paths.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Ascending (p, e) by trial division.
inline std::vector<std::pair<u64, unsigned>> factor(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

inline u64 gcd(u64 a, u64 b) {
  while (b) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Smallest a >= 1 with r^a = 1 mod f by stepping powers; empty if none.
inline std::optional<u64> order(u64 r, u64 f) {
  if (gcd(r, f) != 1) return std::nullopt;
  u64 x = r % f;
  for (u64 a = 1; a <= f; ++a) {
    if (x == 1 % f) return a;
    x = static_cast<u64>((static_cast<unsigned __int128>(x) * r) % f);
  }
  return std::nullopt;
}

inline bool pow_equals(u64 b, unsigned k, u64 n) {
  unsigned __int128 x = 1;
  for (unsigned i = 0; i < k; ++i) {
    x *= b;
    if (x > n) return false;
  }
  return x == n;
}

/// (b, k) with b^k = n, k >= 2 maximal, by scanning every base.
inline std::optional<std::pair<u64, unsigned>> perfect_power(u64 n) {
  for (u64 b = 2; b * b <= n; ++b) {
    unsigned k = 0;
    unsigned __int128 x = 1;
    while (x < n) {
      x *= b;
      ++k;
    }
    if (x == n && k >= 2) return std::pair{b, k};
  }
  return std::nullopt;
}

/// (p, e) with n = p^e.
inline std::optional<std::pair<u64, unsigned>> prime_power(u64 n) {
  if (n < 2) return std::nullopt;
  auto f = factor(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

template <class T>
std::vector<T> nontrivial(std::vector<T> d) {
  std::vector<T> out;
  for (const T& x : d)
    if (x > 1) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Quadratic scan over all pairs.
template <class T>
std::vector<T> isolated(const std::vector<T>& d) {
  auto nt = nontrivial(d);
  std::vector<T> out;
  for (const T& x : nt) {
    bool ok = true;
    for (const T& y : nt)
      if (y != x && (x % y == 0 || y % x == 0)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

template <class T>
std::vector<T> divisibility_maximal(const std::vector<T>& d) {
  auto nt = nontrivial(d);
  std::vector<T> out;
  for (const T& x : nt) {
    bool ok = true;
    for (const T& y : nt)
      if (y != x && y % x == 0) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

/// Every member of src divides some member of dst.
template <class T>
bool covers(const std::vector<T>& src, const std::vector<T>& dst) {
  for (const T& s : src) {
    bool hit = false;
    for (const T& t : dst)
      if (t % s == 0) hit = true;
    if (!hit) return false;
  }
  return true;
}

inline std::vector<std::pair<u64, u64>> consecutive(const std::vector<u64>& d) {
  auto nt = nontrivial(d);
  std::vector<std::pair<u64, u64>> out;
  for (u64 x : nt)
    if (std::find(nt.begin(), nt.end(), x + 1) != nt.end()) out.push_back({x, x + 1});
  return out;
}

inline unsigned val(u64 n, u64 p) {
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

struct Certificate {
  u64 f;
  u64 r;
  u64 a;
  bool operator<(const Certificate& o) const { return f != o.f ? f < o.f : r < o.r; }
  bool operator==(const Certificate& o) const { return f == o.f && r == o.r && a == o.a; }
};

/// Exhaustive Frobenius search over every nontrivial f and every prime r
/// dividing a divisibility-maximal degree, plus the index-only case
/// represented by the least prime coprime to f.
inline std::vector<Certificate> frobenius(const std::vector<u64>& d) {
  auto nt = nontrivial(d);
  auto mx = divisibility_maximal(d);
  auto iso = isolated(d);
  std::vector<u64> primes;
  for (u64 x : mx)
    for (auto [p, e] : factor(x))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::sort(primes.begin(), primes.end());

  std::vector<Certificate> out;
  for (u64 f : nt) {
    bool index_only = true;
    for (u64 chi : mx)
      if (chi % f != 0) index_only = false;
    for (u64 chi : iso)
      if (chi != f) index_only = false;
    if (index_only) {
      u64 r = 2;
      while (f % r == 0 || !is_prime(r)) ++r;
      out.push_back({f, r, *order(r, f)});
    }
    for (u64 r : primes) {
      if (f % r == 0) continue;
      u64 a = *order(r, f);
      bool ok = true;
      for (u64 chi : mx)
        if (chi % f != 0 && a > 2 * val(chi, r)) ok = false;
      for (u64 chi : iso)
        if (chi != f && a > 2 * val(chi, r)) ok = false;
      if (ok) out.push_back({f, r, a});
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.f == y.f && x.r == y.r; }),
            out.end());
  return out;
}

/// Random degree sets with a bias toward shared small factors so that
/// divisibility relations actually occur.
class DegreeSetGen {
public:
  explicit DegreeSetGen(u64 seed) : rng_(seed) {}

  std::vector<u64> next() {
    std::uniform_int_distribution<int> len(1, 12);
    std::uniform_int_distribution<int> pick(0, 9);
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13};
    int n = len(rng_);
    std::vector<u64> out{1};
    for (int i = 0; i < n; ++i) {
      u64 x = 1;
      int factors = 1 + pick(rng_) % 4;
      for (int j = 0; j < factors; ++j) x *= small[pick(rng_) % 6];
      if (pick(rng_) == 0) x = 1 + rng_() % 5000;
      out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
