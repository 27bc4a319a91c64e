#pragma once

// Dense Gaussian elimination for the small exact systems used throughout
// (Bernstein coefficient solves, dual recovery, affine rank).

#include <vector>

#include "affdia/errors.hpp"
#include "affdia/rational.hpp"
#include "affdia/vec.hpp"

namespace affdia {

// Solves M x = rhs for square M. Throws SingularSystem if no unique solution.
template <class R>
std::vector<R> solve_linear(std::vector<std::vector<R>> m, std::vector<R> rhs, double eps = 1e-12) {
  const size_t n = m.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && ScalarTraits<R>::sign(m[piv][col], eps) == 0) ++piv;
    if constexpr (!ScalarTraits<R>::exact) {
      piv = col;
      for (size_t r = col + 1; r < n; ++r)
        if (std::fabs(ScalarTraits<R>::dbl(m[r][col])) > std::fabs(ScalarTraits<R>::dbl(m[piv][col]))) piv = r;
      if (ScalarTraits<R>::sign(m[piv][col], eps) == 0) piv = n;
    }
    require(piv < n, Err::SingularSystem, "singular linear system");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      if (ScalarTraits<R>::sign(m[r][col], 0.0) == 0) continue;
      R f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<R> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Rank of a (rows x cols) matrix.
template <class R>
int matrix_rank(std::vector<std::vector<R>> m, double eps = 1e-9) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && ScalarTraits<R>::sign(m[piv][col], eps) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      if (ScalarTraits<R>::sign(m[r][col], 0.0) == 0) continue;
      R f = m[r][col] / m[rank][col];
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

// Dimension of the affine hull of a point set.
template <class R>
int affine_rank(const std::vector<Vec<R>>& pts, double eps = 1e-9) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<R>> diffs;
  diffs.reserve(pts.size() - 1);
  for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
  return matrix_rank(std::move(diffs), eps);
}

}  // namespace affdia
