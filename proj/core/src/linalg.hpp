#pragma once

#include <cstddef>
#include <vector>

#include "toricmld/rational.hpp"

// Small exact linear algebra used by the fan engine. Matrices are dense,
// row-major, square and tiny (d <= ~8).
namespace toricmld::detail {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Exact determinant via Bareiss fraction-free elimination.
inline Int determinant(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Solve a * x = b by Gauss-Jordan elimination over the rationals.
/// Throws InternalConsistencyError if a is singular.
inline std::vector<Rational> solve_linear(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw InternalConsistencyError("singular cone matrix");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const Rational inv = a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] /= inv;
    b[col] /= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace toricmld::detail
