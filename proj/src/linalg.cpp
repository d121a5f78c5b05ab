#include "skewcal/linalg.hpp"

namespace skewcal {

namespace {

size_t weight(const RatExpr& e) {
  return e.num().term_count() + e.den().term_count();
}

} // namespace

RMat rmat_zero(const ChartPtr& chart, int rows, int cols) {
  return RMat(static_cast<size_t>(rows),
              RVec(static_cast<size_t>(cols), RatExpr::zero(chart)));
}

RMat rmat_identity(const ChartPtr& chart, int n) {
  RMat m = rmat_zero(chart, n, n);
  for (int i = 0; i < n; ++i) {
    m[static_cast<size_t>(i)][static_cast<size_t>(i)] = RatExpr(Expr(chart, Rat(1)));
  }
  return m;
}

RMat rmat_from_expr(const std::vector<std::vector<Expr>>& m) {
  RMat r;
  r.reserve(m.size());
  for (const auto& row : m) {
    RVec rr;
    rr.reserve(row.size());
    for (const auto& e : row) {
      rr.emplace_back(e);
    }
    r.push_back(std::move(rr));
  }
  return r;
}

RMat rmat_mul(const RMat& a, const RMat& b) {
  if (a.empty() || b.empty() || a.front().size() != b.size()) {
    throw ShapeError("rmat_mul: shape mismatch");
  }
  const size_t n = a.size(), k = b.size(), m = b.front().size();
  const ChartPtr& ch = a.front().front().chart();
  RMat r = rmat_zero(ch, static_cast<int>(n), static_cast<int>(m));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) {
      RatExpr acc = RatExpr::zero(ch);
      for (size_t l = 0; l < k; ++l) {
        if (!a[i][l].is_zero() && !b[l][j].is_zero()) {
          acc += a[i][l] * b[l][j];
        }
      }
      r[i][j] = std::move(acc);
    }
  }
  return r;
}

RMat rmat_transpose(const RMat& a) {
  if (a.empty()) {
    return a;
  }
  RMat r(a.front().size(), RVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a[i].size(); ++j) {
      r[j][i] = a[i][j];
    }
  }
  return r;
}

bool rmat_equal(const RMat& a, const RMat& b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) {
      return false;
    }
    for (size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != b[i][j]) {
        return false;
      }
    }
  }
  return true;
}

RatExpr rmat_det(RMat a) {
  const size_t n = a.size();
  if (n == 0 || a.front().size() != n) {
    throw ShapeError("rmat_det: matrix must be square");
  }
  const ChartPtr& ch = a.front().front().chart();
  RatExpr det(Expr(ch, Rat(1)));
  for (size_t col = 0; col < n; ++col) {
    // Pick the lightest nonzero pivot in this column to keep entries small.
    size_t pivot = n;
    for (size_t r = col; r < n; ++r) {
      if (!a[r][col].is_zero() && (pivot == n || weight(a[r][col]) < weight(a[pivot][col]))) {
        pivot = r;
      }
    }
    if (pivot == n) {
      return RatExpr::zero(ch);
    }
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) {
        continue;
      }
      RatExpr f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) {
        a[r][c] -= f * a[col][c];
      }
    }
  }
  return det;
}

std::optional<RMat> rmat_inverse(const RMat& a) {
  const size_t n = a.size();
  if (n == 0 || a.front().size() != n) {
    throw ShapeError("rmat_inverse: matrix must be square");
  }
  const ChartPtr& ch = a.front().front().chart();
  RMat work = a;
  RMat inv = rmat_identity(ch, static_cast<int>(n));
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = n;
    for (size_t r = col; r < n; ++r) {
      if (!work[r][col].is_zero() && (pivot == n || weight(work[r][col]) < weight(work[pivot][col]))) {
        pivot = r;
      }
    }
    if (pivot == n) {
      return std::nullopt;
    }
    if (pivot != col) {
      std::swap(work[pivot], work[col]);
      std::swap(inv[pivot], inv[col]);
    }
    RatExpr p = work[col][col];
    for (size_t c = 0; c < n; ++c) {
      work[col][c] /= p;
      inv[col][c] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col].is_zero()) {
        continue;
      }
      RatExpr f = work[r][col];
      for (size_t c = 0; c < n; ++c) {
        work[r][c] -= f * work[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  // Exact multiply-back check; elimination bugs must not escape silently.
  if (!rmat_equal(rmat_mul(a, inv), rmat_identity(ch, static_cast<int>(n)))) {
    throw Error("rmat_inverse: verification A*A^{-1} == I failed");
  }
  return inv;
}

std::optional<RVec> rmat_solve(RMat a, RVec b) {
  const size_t m = a.size();
  if (m == 0 || b.size() != m) {
    throw ShapeError("rmat_solve: shape mismatch");
  }
  const size_t n = a.front().size();
  if (m < n) {
    return std::nullopt; // underdetermined
  }
  const ChartPtr& ch = a.front().front().chart();
  const RMat a0 = a;
  const RVec b0 = b;
  size_t row = 0;
  std::vector<size_t> pivot_row(n);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = m;
    for (size_t r = row; r < m; ++r) {
      if (!a[r][col].is_zero() && (pivot == m || weight(a[r][col]) < weight(a[pivot][col]))) {
        pivot = r;
      }
    }
    if (pivot == m) {
      return std::nullopt; // rank deficient in the unknowns
    }
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    for (size_t r = row + 1; r < m; ++r) {
      if (a[r][col].is_zero()) {
        continue;
      }
      RatExpr f = a[r][col] / a[row][col];
      for (size_t c = col; c < n; ++c) {
        a[r][c] -= f * a[row][c];
      }
      b[r] -= f * b[row];
    }
    pivot_row[col] = row;
    ++row;
  }
  // Remaining rows must have reduced to 0 = 0, else inconsistent.
  for (size_t r = row; r < m; ++r) {
    if (!b[r].is_zero()) {
      return std::nullopt;
    }
  }
  RVec x(n, RatExpr::zero(ch));
  for (size_t col = n; col-- > 0;) {
    size_t r = pivot_row[col];
    RatExpr acc = b[r];
    for (size_t c = col + 1; c < n; ++c) {
      acc -= a[r][c] * x[c];
    }
    x[col] = acc / a[r][col];
  }
  // Verified back-substitution: substitute into the original system.
  for (size_t r = 0; r < m; ++r) {
    RatExpr acc = RatExpr::zero(ch);
    for (size_t c = 0; c < n; ++c) {
      acc += a0[r][c] * x[c];
    }
    if (acc != b0[r]) {
      throw Error("rmat_solve: verification A*x == b failed");
    }
  }
  return x;
}

} // namespace skewcal
