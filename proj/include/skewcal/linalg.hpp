#ifndef SKEWCAL_LINALG_HPP
#define SKEWCAL_LINALG_HPP

#include <vector>

#include "skewcal/ratexpr.hpp"

namespace skewcal {

using RVec = std::vector<RatExpr>;
using RMat = std::vector<std::vector<RatExpr>>;

RMat rmat_zero(const ChartPtr& chart, int rows, int cols);
RMat rmat_identity(const ChartPtr& chart, int n);
RMat rmat_from_expr(const std::vector<std::vector<Expr>>& m);
RMat rmat_mul(const RMat& a, const RMat& b);
RMat rmat_transpose(const RMat& a);
bool rmat_equal(const RMat& a, const RMat& b);

/// Determinant by exact fraction-field elimination.
RatExpr rmat_det(RMat a);

/// Inverse by Gauss-Jordan elimination; nullopt when singular. The product
/// A * A^{-1} is re-checked against the identity before returning (exact).
std::optional<RMat> rmat_inverse(const RMat& a);

/// Unique exact solution of A x = b for an m x n system (m >= n), found by
/// elimination and verified by substitution; nullopt when the system is
/// singular, inconsistent, or underdetermined.
std::optional<RVec> rmat_solve(RMat a, RVec b);

} // namespace skewcal

#endif
