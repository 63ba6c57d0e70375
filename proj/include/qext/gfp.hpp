#pragma once

// Dense linear algebra over GF(p) for the class-matrix character table
// method: common eigenbasis splitting of commuting matrices.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qext {

struct GfpCtx {
  uint64_t p;
  uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return (unsigned __int128)a * b % p;
  }
  uint64_t pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p;
    a %= p;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint64_t inv(uint64_t a) const {
    if (a % p == 0) throw std::domain_error("GF(p) inverse of zero");
    return pow(a, p - 2);
  }
  uint64_t neg(uint64_t a) const { return a % p == 0 ? 0 : p - a % p; }
};

struct GfpMat {
  size_t n = 0;
  std::vector<uint64_t> a;  // row-major n x n
  uint64_t& at(size_t r, size_t c) { return a[r * n + c]; }
  uint64_t at(size_t r, size_t c) const { return a[r * n + c]; }
  static GfpMat zero(size_t n) { return GfpMat{n, std::vector<uint64_t>(n * n, 0)}; }
};

using GfpVec = std::vector<uint64_t>;

/// Thrown when a matrix fails to split over GF(p); callers retry with the
/// next admissible prime.
struct SplitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Common eigenbasis of pairwise commuting, diagonalizable matrices:
/// returns n one-dimensional common eigenvectors (deterministic order).
std::vector<GfpVec> eigen_split(const std::vector<GfpMat>& mats, const GfpCtx& F);

/// Streaming variant: matrices are produced on demand (index -> matrix),
/// count many; splitting stops early once all subspaces are lines.
std::vector<GfpVec> eigen_split_stream(
    size_t dim, size_t count,
    const std::function<GfpMat(size_t)>& matrix_at, const GfpCtx& F);

/// Characteristic polynomial (monic, ascending coefficients).
std::vector<uint64_t> charpoly(const GfpMat& A, const GfpCtx& F);

/// Kernel basis of A (deterministic echelon form), vectors of length n.
std::vector<GfpVec> kernel_basis(const GfpMat& A, const GfpCtx& F);

/// Smallest prime p = 1 (mod e) with p > lower.
int64_t dixon_prime(int64_t e, int64_t lower);

}  // namespace qext
