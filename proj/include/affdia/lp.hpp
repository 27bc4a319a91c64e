#pragma once

// Dense two-phase simplex for small standard-form programs
//   min c.x  s.t.  A x = b, x >= 0
// with Bland's pivoting rule throughout, so the method terminates on every
// input in exact arithmetic. Infeasible and unbounded programs are reported
// as distinct statuses, never by exception.

#include <vector>

#include "affdia/errors.hpp"
#include "affdia/linsolve.hpp"
#include "affdia/rational.hpp"

namespace affdia {

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <class R>
struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  R value{};
  std::vector<R> x;
  std::vector<R> dual;  // one multiplier per (surviving) input row, 0 for dropped rows
};

template <class R>
class SimplexSolver {
 public:
  SimplexSolver(std::vector<std::vector<R>> a, std::vector<R> b, std::vector<R> c, double eps)
      : a0_(a), c_(std::move(c)), eps_(eps), n_(a.empty() ? 0 : a[0].size()) {
    const size_t m = a.size();
    row_ids_.resize(m);
    for (size_t i = 0; i < m; ++i) row_ids_[i] = static_cast<int>(i);
    tab_ = std::move(a);
    rhs_ = std::move(b);
    for (size_t i = 0; i < m; ++i)
      if (sign(rhs_[i]) < 0) {
        for (auto& v : tab_[i]) v = -v;
        rhs_[i] = -rhs_[i];
      }
  }

  LpSolution<R> solve() {
    LpSolution<R> out;
    if (!phase1()) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    if (!phase2()) {
      out.status = LpStatus::Unbounded;
      return out;
    }
    out.status = LpStatus::Optimal;
    out.x.assign(n_, R{});
    for (size_t i = 0; i < tab_.size(); ++i) out.x[basis_[i]] = rhs_[i];
    for (size_t j = 0; j < n_; ++j) out.value += c_[j] * out.x[j];
    out.dual = recover_dual();
    return out;
  }

 private:
  int sign(const R& v) const { return ScalarTraits<R>::sign(v, eps_); }

  void pivot(size_t row, size_t col) {
    R p = tab_[row][col];
    for (auto& v : tab_[row]) v = v / p;
    rhs_[row] = rhs_[row] / p;
    for (size_t r = 0; r < tab_.size(); ++r) {
      if (r == row) continue;
      R f = tab_[r][col];
      if (ScalarTraits<R>::sign(f, 0.0) == 0) continue;
      for (size_t j = 0; j < tab_[r].size(); ++j) tab_[r][j] -= f * tab_[row][j];
      rhs_[r] -= f * rhs_[row];
    }
    R f = zrow_[col];
    if (ScalarTraits<R>::sign(f, 0.0) != 0) {
      for (size_t j = 0; j < zrow_.size(); ++j) zrow_[j] -= f * tab_[row][j];
      zval_ -= f * rhs_[row];
    }
    basis_[row] = static_cast<int>(col);
  }

  // Returns false on unboundedness.
  bool iterate(size_t ncols) {
    for (;;) {
      size_t enter = ncols;
      for (size_t j = 0; j < ncols; ++j)
        if (sign(zrow_[j]) < 0) {  // Bland: smallest improving index
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      size_t leave = tab_.size();
      for (size_t i = 0; i < tab_.size(); ++i) {
        if (sign(tab_[i][enter]) <= 0) continue;
        if (leave == tab_.size()) {
          leave = i;
          continue;
        }
        R lhs = rhs_[i] * tab_[leave][enter];
        R rhsv = rhs_[leave] * tab_[i][enter];
        int cmp = ScalarTraits<R>::sign(lhs - rhsv, 0.0);
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == tab_.size()) return false;
      pivot(leave, enter);
    }
  }

  bool phase1() {
    const size_t m = tab_.size();
    for (size_t i = 0; i < m; ++i) {
      for (size_t k = 0; k < m; ++k) tab_[i].push_back(i == k ? R{1} : R{});
      basis_.push_back(static_cast<int>(n_ + i));
    }
    zrow_.assign(n_ + m, R{});
    zval_ = R{};
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < n_; ++j) zrow_[j] -= tab_[i][j];
      zval_ -= rhs_[i];
    }
    if (!iterate(n_ + m)) fail(Err::InternalError, "phase-1 unbounded");
    if (sign(-zval_) > 0) return false;  // positive artificial residue

    // drive artificials out of the basis; fully dependent rows are dropped
    for (size_t i = 0; i < tab_.size();) {
      if (basis_[i] < static_cast<int>(n_)) {
        ++i;
        continue;
      }
      size_t col = n_;
      for (size_t j = 0; j < n_; ++j)
        if (ScalarTraits<R>::sign(tab_[i][j], eps_) != 0) {
          col = j;
          break;
        }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        tab_.erase(tab_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        basis_.erase(basis_.begin() + i);
        row_ids_.erase(row_ids_.begin() + i);
      }
    }
    for (auto& row : tab_) row.resize(n_);
    return true;
  }

  bool phase2() {
    zrow_ = c_;
    zval_ = R{};
    for (size_t i = 0; i < tab_.size(); ++i) {
      R cb = c_[basis_[i]];
      if (ScalarTraits<R>::sign(cb, 0.0) == 0) continue;
      for (size_t j = 0; j < n_; ++j) zrow_[j] -= cb * tab_[i][j];
      zval_ -= cb * rhs_[i];
    }
    return iterate(n_);
  }

  std::vector<R> recover_dual() const {
    // solve B^T y = c_B on the surviving rows of the original system
    const size_t k = tab_.size();
    std::vector<std::vector<R>> bt(k, std::vector<R>(k));
    std::vector<R> cb(k);
    for (size_t i = 0; i < k; ++i) {
      cb[i] = c_[basis_[i]];
      for (size_t r = 0; r < k; ++r) bt[i][r] = a0_[row_ids_[r]][basis_[i]];
    }
    std::vector<R> y = solve_linear(std::move(bt), std::move(cb), eps_);
    std::vector<R> full(a0_.size(), R{});
    for (size_t r = 0; r < k; ++r) full[row_ids_[r]] = y[r];
    return full;
  }

  std::vector<std::vector<R>> a0_;
  std::vector<R> c_;
  double eps_;
  size_t n_;
  std::vector<std::vector<R>> tab_;
  std::vector<R> rhs_;
  std::vector<R> zrow_;
  R zval_{};
  std::vector<int> basis_;
  std::vector<int> row_ids_;
};

template <class R>
LpSolution<R> solve_lp(std::vector<std::vector<R>> a, std::vector<R> b, std::vector<R> c,
                       double eps = 1e-9) {
  require(!a.empty() && a.size() == b.size(), Err::InvalidInput, "bad LP shape");
  for (const auto& row : a)
    require(row.size() == c.size(), Err::InvalidInput, "bad LP shape");
  SimplexSolver<R> s(std::move(a), std::move(b), std::move(c), eps);
  return s.solve();
}

template <class R>
bool lp_feasible(const std::vector<std::vector<R>>& a, const std::vector<R>& b, double eps = 1e-9) {
  std::vector<R> c(a[0].size(), R{});
  return solve_lp(a, b, c, eps).status == LpStatus::Optimal;
}

// Membership z in conv(points): barycentric feasibility program.
template <class R>
bool in_convex_hull_lp(const std::vector<Vec<R>>& points, const Vec<R>& z, double eps = 1e-9) {
  const size_t dim = z.size(), k = points.size();
  std::vector<std::vector<R>> a(dim + 1, std::vector<R>(k));
  std::vector<R> b(dim + 1);
  for (size_t d = 0; d < dim; ++d) {
    for (size_t i = 0; i < k; ++i) a[d][i] = points[i][d];
    b[d] = z[d];
  }
  for (size_t i = 0; i < k; ++i) a[dim][i] = R{1};
  b[dim] = R{1};
  return lp_feasible(a, b, eps);
}

}  // namespace affdia
