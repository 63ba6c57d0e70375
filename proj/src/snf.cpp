#include "qext/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace qext {

namespace {

BigInt babs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

/// Diagonalize W by unimodular row/col operations. Row operations are
/// mirrored on *U and *c (when given), column operations on *V.
void diagonalize(IntMat& W, IntMat* U, IntMat* V, IntVec* c) {
  size_t m = W.size(), n = m ? W[0].size() : 0;
  auto row_sub = [&](size_t dst, size_t src, const BigInt& q) {
    for (size_t j = 0; j < n; ++j) W[dst][j] -= q * W[src][j];
    if (U)
      for (size_t j = 0; j < (*U)[dst].size(); ++j)
        (*U)[dst][j] -= q * (*U)[src][j];
    if (c) (*c)[dst] -= q * (*c)[src];
  };
  auto col_sub = [&](size_t dst, size_t src, const BigInt& q) {
    for (size_t i = 0; i < m; ++i) W[i][dst] -= q * W[i][src];
    if (V)
      for (size_t i = 0; i < (*V).size(); ++i)
        (*V)[i][dst] -= q * (*V)[i][src];
  };
  auto row_swap = [&](size_t a, size_t b) {
    std::swap(W[a], W[b]);
    if (U) std::swap((*U)[a], (*U)[b]);
    if (c) std::swap((*c)[a], (*c)[b]);
  };
  auto col_swap = [&](size_t a, size_t b) {
    for (size_t i = 0; i < m; ++i) std::swap(W[i][a], W[i][b]);
    if (V)
      for (size_t i = 0; i < (*V).size(); ++i)
        std::swap((*V)[i][a], (*V)[i][b]);
  };

  size_t t = 0;
  while (t < m && t < n) {
    // locate smallest nonzero entry in the remaining block
    size_t pi = t, pj = t;
    BigInt best = 0;
    for (size_t i = t; i < m; ++i)
      for (size_t j = t; j < n; ++j)
        if (W[i][j] != 0 && (best == 0 || babs(W[i][j]) < best)) {
          best = babs(W[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < m; ++i) {
        if (W[i][t] == 0) continue;
        BigInt q = W[i][t] / W[t][t];
        row_sub(i, t, q);
        if (W[i][t] != 0) {  // remainder smaller than pivot: swap up
          row_swap(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (W[t][j] == 0) continue;
        BigInt q = W[t][j] / W[t][t];
        col_sub(j, t, q);
        if (W[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    ++t;
  }
}

}  // namespace

SnfResult smith_normal_form(const IntMat& A) {
  size_t m = A.size(), n = m ? A[0].size() : 0;
  SnfResult r;
  r.D = A;
  r.U.assign(m, IntVec(m, 0));
  r.V.assign(n, IntVec(n, 0));
  for (size_t i = 0; i < m; ++i) r.U[i][i] = 1;
  for (size_t j = 0; j < n; ++j) r.V[j][j] = 1;
  diagonalize(r.D, &r.U, &r.V, nullptr);
  // enforce the divisibility chain d_i | d_{i+1}
  size_t k = std::min(m, n);
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < k; ++i) {
      BigInt a = r.D[i][i], b = r.D[i + 1][i + 1];
      if (a != 0 && b % a == 0) continue;
      if (a == 0 && b == 0) continue;
      // fold column i+1 into column i and rediagonalize
      for (size_t rr = 0; rr < m; ++rr) r.D[rr][i] += r.D[rr][i + 1];
      for (size_t rr = 0; rr < n; ++rr) r.V[rr][i] += r.V[rr][i + 1];
      diagonalize(r.D, &r.U, &r.V, nullptr);
      again = true;
      break;
    }
  }
  for (size_t i = 0; i < k; ++i)
    if (r.D[i][i] < 0) {
      r.D[i][i] = -r.D[i][i];
      for (size_t j = 0; j < m; ++j) r.U[i][j] = -r.U[i][j];
    }
  return r;
}

IntVec mat_vec_mod(const IntMat& A, const IntVec& x, int64_t M) {
  IntVec out(A.size(), 0);
  for (size_t i = 0; i < A.size(); ++i) {
    BigInt acc = 0;
    for (size_t j = 0; j < x.size(); ++j) acc += A[i][j] * x[j];
    acc %= M;
    if (acc < 0) acc += M;
    out[i] = acc;
  }
  return out;
}

SolveModResult solve_mod(const IntMat& A, const IntVec& b, int64_t M) {
  if (M < 1) throw std::invalid_argument("solve_mod: M < 1");
  size_t m = A.size(), n = m ? A[0].size() : 0;
  IntMat W = A;
  IntVec c = b;
  IntMat V(n, IntVec(n, 0));
  for (size_t j = 0; j < n; ++j) V[j][j] = 1;
  diagonalize(W, nullptr, &V, &c);

  SolveModResult res;
  BigInt Mb = M;
  // per-row conditions d_i * w_i = c_i (mod M); rows past the diagonal need
  // c_i = 0 (mod M)
  int64_t k = 1;
  bool ok1 = true;
  IntVec w(n, 0);
  for (size_t i = 0; i < m; ++i) {
    BigInt d = (i < n) ? W[i][i] : BigInt(0);
    BigInt g = boost::multiprecision::gcd(babs(d), Mb);
    if (g == 0) g = Mb;
    BigInt ci = c[i] % Mb;
    if (ci < 0) ci += Mb;
    BigInt r = ci % g;
    if (r != 0) {
      ok1 = false;
      BigInt gi = boost::multiprecision::gcd(r, g);
      k = std::lcm(k, (int64_t)(g / gi));
    } else if (i < n && d != 0) {
      // w_i = (c_i / g) * inverse(d/g) mod M/g
      BigInt dd = babs(d) / g, mm = Mb / g, cc = ci / g;
      // extended gcd inverse of dd mod mm
      if (mm > 1) {
        BigInt t = 0, nt = 1, rr = mm, nr = dd % mm;
        while (nr != 0) {
          BigInt q = rr / nr;
          BigInt tmp = t - q * nt;
          t = nt;
          nt = tmp;
          tmp = rr - q * nr;
          rr = nr;
          nr = tmp;
        }
        if (t < 0) t += mm;
        BigInt wi = cc * t % mm;
        if (d < 0) wi = (mm - wi) % mm;
        w[i] = wi;
      } else {
        w[i] = 0;
      }
    }
  }
  res.minimal_k = ok1 ? 1 : k;
  res.solvable = ok1;
  if (ok1 && n > 0) {
    res.x.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      BigInt acc = 0;
      for (size_t j = 0; j < n; ++j) acc += V[i][j] * w[j];
      acc %= Mb;
      if (acc < 0) acc += Mb;
      res.x[i] = acc;
    }
    // verify exactly
    auto chk = mat_vec_mod(A, res.x, M);
    for (size_t i = 0; i < m; ++i) {
      BigInt bi = b[i] % Mb;
      if (bi < 0) bi += Mb;
      if (chk[i] != bi) throw std::logic_error("solve_mod: verification failed");
    }
  } else if (ok1) {
    res.x.clear();
  }
  return res;
}

}  // namespace qext
