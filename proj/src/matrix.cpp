#include "qext/matrix.hpp"

namespace qext {

std::vector<CycloVec> cyclo_kernel(const CycloMatrix& A) {
  size_t m = A.rows, n = A.cols;
  CycloMatrix W = A;
  std::vector<int64_t> pivot_row_of_col(n, -1);
  std::vector<int64_t> pivot_col_of_row(m, -1);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pr = m;
    for (size_t r = rank; r < m; ++r)
      if (!W.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr == m) continue;
    for (size_t j = 0; j < n; ++j) std::swap(W.at(pr, j), W.at(rank, j));
    Cyclotomic ip = W.at(rank, col).inverse();
    for (size_t j = 0; j < n; ++j) W.at(rank, j) = W.at(rank, j) * ip;
    for (size_t r = 0; r < m; ++r) {
      if (r == rank || W.at(r, col).is_zero()) continue;
      Cyclotomic f = W.at(r, col);
      for (size_t j = 0; j < n; ++j)
        W.at(r, j) = W.at(r, j) - f * W.at(rank, j);
    }
    pivot_row_of_col[col] = rank;
    pivot_col_of_row[rank] = col;
    ++rank;
  }
  std::vector<CycloVec> out;
  for (size_t col = 0; col < n; ++col) {
    if (pivot_row_of_col[col] >= 0) continue;
    CycloVec v(n, Cyclotomic());
    v[col] = Cyclotomic(1);
    for (size_t r = 0; r < rank; ++r) {
      int64_t pc = pivot_col_of_row[r];
      v[pc] = -W.at(r, col);
    }
    out.push_back(std::move(v));
  }
  return out;
}

CycloMatrix cyclo_inverse(const CycloMatrix& A) {
  if (A.rows != A.cols) throw std::invalid_argument("cyclo_inverse: not square");
  size_t n = A.rows;
  CycloMatrix W(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) W.at(i, j) = A.at(i, j);
    W.at(i, n + i) = Cyclotomic(1);
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pr = n;
    for (size_t r = col; r < n; ++r)
      if (!W.at(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr == n) throw std::domain_error("cyclo_inverse: singular matrix");
    for (size_t j = 0; j < 2 * n; ++j) std::swap(W.at(pr, j), W.at(col, j));
    Cyclotomic ip = W.at(col, col).inverse();
    for (size_t j = 0; j < 2 * n; ++j) W.at(col, j) = W.at(col, j) * ip;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || W.at(r, col).is_zero()) continue;
      Cyclotomic f = W.at(r, col);
      for (size_t j = 0; j < 2 * n; ++j)
        W.at(r, j) = W.at(r, j) - f * W.at(col, j);
    }
  }
  CycloMatrix out(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out.at(i, j) = W.at(i, n + j);
  return out;
}

}  // namespace qext
