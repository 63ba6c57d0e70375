#include "qext/gfp.hpp"

#include <functional>

#include "qext/numutil.hpp"

namespace qext {

std::vector<uint64_t> charpoly(const GfpMat& A, const GfpCtx& F) {
  size_t n = A.n;
  GfpMat H = A;
  // Hessenberg form by similarity transforms
  for (size_t col = 0; col + 2 < n; ++col) {
    size_t piv = 0;
    for (size_t r = col + 1; r < n; ++r)
      if (H.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv == 0) continue;
    if (piv != col + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(H.at(piv, j), H.at(col + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(H.at(i, piv), H.at(i, col + 1));
    }
    uint64_t ip = F.inv(H.at(col + 1, col));
    for (size_t r = col + 2; r < n; ++r) {
      uint64_t f = F.mul(H.at(r, col), ip);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j)
        H.at(r, j) = F.sub(H.at(r, j), F.mul(f, H.at(col + 1, j)));
      for (size_t i = 0; i < n; ++i)
        H.at(i, col + 1) = F.add(H.at(i, col + 1), F.mul(f, H.at(i, r)));
    }
  }
  // charpoly recurrence on the Hessenberg matrix
  std::vector<std::vector<uint64_t>> p(n + 1);
  p[0] = {1};
  for (size_t k = 1; k <= n; ++k) {
    // p_k = (x - H[k-1][k-1]) p_{k-1} - sum_i H[i][k-1] (prod subdiag) p_i
    std::vector<uint64_t> pk(k + 1, 0);
    for (size_t j = 0; j < k; ++j) {
      pk[j + 1] = F.add(pk[j + 1], p[k - 1][j]);
      pk[j] = F.sub(pk[j], F.mul(H.at(k - 1, k - 1), p[k - 1][j]));
    }
    uint64_t prod = 1;
    for (size_t i = k - 1; i-- > 0;) {
      prod = F.mul(prod, H.at(i + 1, i));
      if (prod == 0) break;
      uint64_t coef = F.mul(H.at(i, k - 1), prod);
      if (coef == 0) continue;
      for (size_t j = 0; j < p[i].size(); ++j)
        pk[j] = F.sub(pk[j], F.mul(coef, p[i][j]));
    }
    p[k] = std::move(pk);
  }
  return p[n];
}

std::vector<GfpVec> kernel_basis(const GfpMat& A, const GfpCtx& F) {
  size_t n = A.n;
  GfpMat W = A;
  std::vector<int64_t> pivot_col_of_row(n, -1);
  std::vector<int64_t> pivot_row_of_col(n, -1);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < n; ++col) {
    size_t pr = n;
    for (size_t r = rank; r < n; ++r)
      if (W.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr == n) continue;
    for (size_t j = 0; j < n; ++j) std::swap(W.at(pr, j), W.at(rank, j));
    uint64_t ip = F.inv(W.at(rank, col));
    for (size_t j = 0; j < n; ++j) W.at(rank, j) = F.mul(W.at(rank, j), ip);
    for (size_t r = 0; r < n; ++r) {
      if (r == rank) continue;
      uint64_t f = W.at(r, col);
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j)
        W.at(r, j) = F.sub(W.at(r, j), F.mul(f, W.at(rank, j)));
    }
    pivot_col_of_row[rank] = col;
    pivot_row_of_col[col] = rank;
    ++rank;
  }
  std::vector<GfpVec> out;
  for (size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    GfpVec v(n, 0);
    v[col] = 1;
    for (size_t r = 0; r < rank; ++r) {
      int64_t pc = pivot_col_of_row[r];
      v[pc] = F.neg(W.at(r, col));
    }
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct Subspace {
  // basis vectors (columns of the ambient space), each length dim
  std::vector<GfpVec> basis;
  // row-reduced copy for coordinate solving
  std::vector<GfpVec> echelon;
  std::vector<size_t> pivots;
};

Subspace make_subspace(std::vector<GfpVec> basis, const GfpCtx& F) {
  Subspace s;
  s.basis = std::move(basis);
  size_t n = s.basis.empty() ? 0 : s.basis[0].size();
  // echelonize copies, tracking the transform back to basis coords:
  // store [vector | coords] rows of length n + d
  size_t d = s.basis.size();
  std::vector<GfpVec> rows(d, GfpVec(n + d, 0));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < n; ++j) rows[i][j] = s.basis[i][j];
    rows[i][n + i] = 1;
  }
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < d; ++col) {
    size_t pr = d;
    for (size_t r = rank; r < d; ++r)
      if (rows[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr == d) continue;
    std::swap(rows[pr], rows[rank]);
    uint64_t ip = F.inv(rows[rank][col]);
    for (size_t j = 0; j < n + d; ++j) rows[rank][j] = F.mul(rows[rank][j], ip);
    for (size_t r = 0; r < d; ++r) {
      if (r == rank) continue;
      uint64_t f = rows[r][col];
      if (f == 0) continue;
      for (size_t j = 0; j < n + d; ++j)
        rows[r][j] = F.sub(rows[r][j], F.mul(f, rows[rank][j]));
    }
    s.pivots.push_back(col);
    ++rank;
  }
  if (rank != d) throw std::logic_error("subspace basis not independent");
  s.echelon = std::move(rows);
  return s;
}

/// coordinates of v (in-space) with respect to s.basis
GfpVec coords_of(const Subspace& s, const GfpVec& v, const GfpCtx& F) {
  size_t n = v.size(), d = s.basis.size();
  GfpVec coords(d, 0);
  GfpVec resid = v;
  for (size_t r = 0; r < d; ++r) {
    uint64_t f = resid[s.pivots[r]];
    if (f == 0) continue;
    for (size_t j = 0; j < n; ++j)
      resid[j] = F.sub(resid[j], F.mul(f, s.echelon[r][j]));
    for (size_t j = 0; j < d; ++j)
      coords[j] = F.add(coords[j], F.mul(f, s.echelon[r][n + j]));
  }
  for (uint64_t x : resid)
    if (x != 0) throw SplitError("vector escapes invariant subspace");
  return coords;
}

}  // namespace

std::vector<GfpVec> eigen_split_stream(
    size_t dim, size_t count,
    const std::function<GfpMat(size_t)>& matrix_at, const GfpCtx& F) {
  std::vector<Subspace> spaces;
  {
    std::vector<GfpVec> full;
    for (size_t i = 0; i < dim; ++i) {
      GfpVec e(dim, 0);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    spaces.push_back(make_subspace(std::move(full), F));
  }
  for (size_t mi = 0; mi < count; ++mi) {
    bool all_lines = true;
    for (auto& s : spaces)
      if (s.basis.size() > 1) all_lines = false;
    if (all_lines) break;
    GfpMat M = matrix_at(mi);
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      size_t d = s.basis.size();
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // restricted action matrix
      GfpMat A = GfpMat::zero(d);
      for (size_t j = 0; j < d; ++j) {
        GfpVec img(dim, 0);
        for (size_t r = 0; r < dim; ++r) {
          uint64_t acc = 0;
          for (size_t cidx = 0; cidx < dim; ++cidx)
            acc = F.add(acc, F.mul(M.at(r, cidx), s.basis[j][cidx]));
          img[r] = acc;
        }
        GfpVec co = coords_of(s, img, F);
        for (size_t i = 0; i < d; ++i) A.at(i, j) = co[i];
      }
      auto cp = charpoly(A, F);
      // roots by scanning the field
      std::vector<uint64_t> roots;
      for (uint64_t lam = 0; lam < F.p; ++lam) {
        uint64_t acc = 0;
        for (size_t j = cp.size(); j-- > 0;) acc = F.add(F.mul(acc, lam), cp[j]);
        if (acc == 0) roots.push_back(lam);
      }
      size_t found = 0;
      for (uint64_t lam : roots) {
        GfpMat B = A;
        for (size_t i = 0; i < d; ++i) B.at(i, i) = F.sub(B.at(i, i), lam);
        auto ker = kernel_basis(B, F);
        if (ker.empty()) continue;
        found += ker.size();
        std::vector<GfpVec> sub;
        for (auto& kv : ker) {
          GfpVec v(dim, 0);
          for (size_t i = 0; i < d; ++i) {
            if (kv[i] == 0) continue;
            for (size_t j = 0; j < dim; ++j)
              v[j] = F.add(v[j], F.mul(kv[i], s.basis[i][j]));
          }
          sub.push_back(std::move(v));
        }
        next.push_back(make_subspace(std::move(sub), F));
      }
      if (found != d)
        throw SplitError("matrix not diagonalizable over GF(p)");
    }
    spaces = std::move(next);
  }
  std::vector<GfpVec> out;
  // a subspace surviving every matrix did so because each acted as a
  // scalar on it, so each of its basis vectors is a common eigenvector
  for (auto& s : spaces)
    for (auto& v : s.basis) out.push_back(v);
  return out;
}

std::vector<GfpVec> eigen_split(const std::vector<GfpMat>& mats, const GfpCtx& F) {
  if (mats.empty()) throw std::invalid_argument("eigen_split: no matrices");
  size_t dim = mats[0].n;
  return eigen_split_stream(dim, mats.size(),
                            [&](size_t i) { return mats[i]; }, F);
}

int64_t dixon_prime(int64_t e, int64_t lower) {
  for (int64_t p = e + 1;; p += e) {
    if (p <= lower) continue;
    if (is_prime(p)) return p;
    if (p > 100000000) throw std::runtime_error("dixon_prime: search exhausted");
  }
}

}  // namespace qext
