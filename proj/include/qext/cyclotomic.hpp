#pragma once

// Exact elements of cyclotomic fields Q(zeta_n), the scalar type of all
// character and cocycle values. Canonical storage: minimal conductor n
// (never 2 mod 4), coordinates on the power basis {zeta_n^i : i < phi(n)}
// reduced modulo the n-th cyclotomic polynomial, sparse and sorted.
// Equality of values is then equality of representations.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "qext/numutil.hpp"

namespace qext {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Cyclotomic {
 public:
  using Term = std::pair<uint32_t, Rational>;  // (exponent, coefficient)

  Cyclotomic() = default;  // zero
  explicit Cyclotomic(const Rational& r);
  explicit Cyclotomic(int64_t v) : Cyclotomic(Rational(v)) {}

  /// zeta_n^k, exactly.
  static Cyclotomic root_of_unity(int64_t n, int64_t k);
  /// Raw constructor: terms on exponents mod n, then canonicalized.
  static Cyclotomic from_terms(int64_t n, std::vector<Term> terms);

  int64_t conductor() const { return n_; }
  const std::vector<Term>& terms() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()
  bool is_one() const { return is_rational() && rational_value() == 1; }

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator*(const Rational& r) const;
  Cyclotomic inverse() const;  // throws on zero
  Cyclotomic conj() const;     // complex conjugation
  Cyclotomic galois(int64_t k) const;  // zeta -> zeta^k, gcd(k, n) = 1
  Cyclotomic pow(int64_t e) const;     // e >= 0, or any e for nonzero values

  bool operator==(const Cyclotomic& o) const {
    return n_ == o.n_ && c_ == o.c_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// All power-basis coordinates are integers (Z[zeta_n] is the full ring
  /// of integers of Q(zeta_n)).
  bool is_algebraic_integer() const;

  /// If this is a root of unity, its order; 0 otherwise.
  int64_t root_of_unity_order() const;

  std::string to_string() const;

 private:
  uint32_t n_ = 1;
  std::vector<Term> c_;
  void canonicalize(int64_t n, std::vector<Term> raw);
};

/// Fixed total order (conductor, then coordinates lexicographically).
bool cyclo_less(const Cyclotomic& a, const Cyclotomic& b);

/// Dense accumulator in Z[x]/(x^L - 1): cheap term-by-term accumulation,
/// one reduction at the end. L must be a multiple of every participating
/// conductor (and not 2 mod 4).
class CycloAccum {
 public:
  explicit CycloAccum(int64_t L);
  void add(const Cyclotomic& a);
  void add_scaled(const Cyclotomic& a, const Rational& s);
  /// += a * b (conjugating b if conj_b) * s
  void add_mul(const Cyclotomic& a, const Cyclotomic& b, bool conj_b,
               const Rational& s);
  Cyclotomic finish(const Rational& divide_by = Rational(1)) const;

 private:
  int64_t L_;
  std::vector<Rational> dense_;
};

/// Least common conductor, normalized away from 2 mod 4.
int64_t common_conductor(int64_t a, int64_t b);

}  // namespace qext
