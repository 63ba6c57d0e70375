#pragma once

// Smith normal form over Z and exact linear solving mod M.
// The solver decides solvability of A*x = b (mod M) and also reports the
// minimal k >= 1 such that k*b is solvable -- the "class order" primitive
// used by the cohomology machinery.

#include <vector>

#include "qext/cyclotomic.hpp"  // BigInt

namespace qext {

using IntMat = std::vector<std::vector<BigInt>>;
using IntVec = std::vector<BigInt>;

struct SnfResult {
  IntMat U, D, V;  // D = U * A * V, U and V unimodular, D diagonal with
                   // d_i | d_{i+1}, entries nonnegative
};

SnfResult smith_normal_form(const IntMat& A);

struct SolveModResult {
  bool solvable = false;  // A*x = b (mod M) has a solution
  IntVec x;               // one solution when solvable (verified)
  int64_t minimal_k = 1;  // least k >= 1 with A*x = k*b (mod M) solvable
};

SolveModResult solve_mod(const IntMat& A, const IntVec& b, int64_t M);

IntVec mat_vec_mod(const IntMat& A, const IntVec& x, int64_t M);

}  // namespace qext
