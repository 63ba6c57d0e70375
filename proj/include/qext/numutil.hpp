#pragma once

// Small-integer number theory helpers shared across the library.
// Everything here works on machine integers; group orders are capped
// well below any overflow boundary.

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qext {

using std::int64_t;
using std::uint32_t;
using std::uint64_t;

inline int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }
inline int64_t lcm64(int64_t a, int64_t b) { return std::lcm(a, b); }

inline bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization as (prime, exponent) pairs, ascending primes.
inline std::vector<std::pair<int64_t, int>> factorize(int64_t n) {
  std::vector<std::pair<int64_t, int>> out;
  for (int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      out.emplace_back(p, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<int64_t> prime_divisors(int64_t n) {
  std::vector<int64_t> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

inline int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

inline std::vector<int64_t> divisors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  std::sort(out.begin(), out.end());
  return out;
}

/// x^e mod m via binary exponentiation (m < 2^31 so products fit).
inline int64_t pow_mod(int64_t x, int64_t e, int64_t m) {
  int64_t r = 1 % m;
  x %= m;
  if (x < 0) x += m;
  while (e > 0) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return r;
}

/// Modular inverse; requires gcd(a, m) = 1.
inline int64_t inv_mod(int64_t a, int64_t m) {
  int64_t t = 0, nt = 1, r = m, nr = a % m;
  if (nr < 0) nr += m;
  while (nr != 0) {
    int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
  return t < 0 ? t + m : t;
}

/// A set of primes pi; supports pi-part decompositions of integers.
class PrimeSet {
 public:
  PrimeSet() = default;
  PrimeSet(std::initializer_list<int64_t> primes)
      : PrimeSet(std::vector<int64_t>(primes)) {}
  explicit PrimeSet(std::vector<int64_t> primes) : primes_(std::move(primes)) {
    std::sort(primes_.begin(), primes_.end());
    primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    for (int64_t p : primes_)
      if (!is_prime(p)) throw std::invalid_argument("PrimeSet: non-prime entry");
  }

  const std::vector<int64_t>& primes() const { return primes_; }
  bool empty() const { return primes_.empty(); }
  bool contains(int64_t p) const {
    return std::binary_search(primes_.begin(), primes_.end(), p);
  }

  /// pi-part of n: the largest divisor whose prime factors lie in pi.
  int64_t part(int64_t n) const {
    int64_t r = 1;
    for (auto& [p, e] : factorize(n))
      if (contains(p))
        for (int i = 0; i < e; ++i) r *= p;
    return r;
  }
  int64_t coprime_part(int64_t n) const { return n / part(n); }

  /// True when every prime divisor of n lies in pi (1 is a pi-number).
  bool is_pi_number(int64_t n) const { return part(n) == n; }
  bool is_pi_prime_number(int64_t n) const { return part(n) == 1; }

  bool subset_of(const PrimeSet& other) const {
    for (int64_t p : primes_)
      if (!other.contains(p)) return false;
    return true;
  }

  bool operator==(const PrimeSet& o) const { return primes_ == o.primes_; }

  std::string to_string() const {
    std::string s = "{";
    for (size_t i = 0; i < primes_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(primes_[i]);
    }
    return s + "}";
  }

 private:
  std::vector<int64_t> primes_;
};

/// All subsets of the prime divisors of n, as PrimeSets (empty set first,
/// then by increasing popcount / lexicographic order). Deterministic.
inline std::vector<PrimeSet> prime_subsets(int64_t n) {
  auto ps = prime_divisors(n);
  std::vector<PrimeSet> out;
  size_t m = ps.size();
  std::vector<std::vector<int64_t>> by_mask(1u << m);
  for (uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<int64_t> sel;
    for (size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) sel.push_back(ps[i]);
    by_mask[mask] = sel;
  }
  std::sort(by_mask.begin(), by_mask.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (auto& sel : by_mask) out.push_back(PrimeSet(sel));
  return out;
}

}  // namespace qext
