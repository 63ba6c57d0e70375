#pragma once

// Small dense matrices over exact scalar types (Cyclotomic, Rational).

#include <stdexcept>
#include <vector>

#include "qext/cyclotomic.hpp"

namespace qext {

template <class T>
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}

  T& at(size_t r, size_t c) { return a[r * cols + c]; }
  const T& at(size_t r, size_t c) const { return a[r * cols + c]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat: shape mismatch");
    Mat r(rows, o.cols);
    for (size_t i = 0; i < rows; ++i)
      for (size_t k = 0; k < cols; ++k) {
        const T& x = at(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < o.cols; ++j) {
          const T& y = o.at(k, j);
          if (y.is_zero()) continue;
          r.at(i, j) = r.at(i, j) + x * y;
        }
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  T trace() const {
    T t(0);
    for (size_t i = 0; i < rows && i < cols; ++i) t = t + at(i, i);
    return t;
  }
};

using CycloMatrix = Mat<Cyclotomic>;
using CycloVec = std::vector<Cyclotomic>;

/// Kernel basis over the cyclotomic field (deterministic echelon order).
std::vector<CycloVec> cyclo_kernel(const CycloMatrix& A);

/// Inverse of a square cyclotomic matrix; throws when singular.
CycloMatrix cyclo_inverse(const CycloMatrix& A);

}  // namespace qext
