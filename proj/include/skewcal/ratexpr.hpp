#ifndef SKEWCAL_RATEXPR_HPP
#define SKEWCAL_RATEXPR_HPP

#include "skewcal/expr.hpp"

namespace skewcal {

/// Element of the fraction field over Expr. No gcd machinery: the
/// denominator's unit content (rational coefficient and exponential factor of
/// the leading term) is normalized into the numerator, and an exact-division
/// cancellation is attempted, which collapses the unit and single-term
/// denominators these pipelines mostly produce. Zero tests and equality are
/// exact via cross multiplication.
class RatExpr {
public:
  RatExpr() = default;
  RatExpr(Expr num); // NOLINT(google-explicit-constructor): ring embedding
  RatExpr(Expr num, Expr den);
  RatExpr(const ChartPtr& chart, const Rat& c) : RatExpr(Expr(chart, c)) {}

  static RatExpr zero(const ChartPtr& chart) { return RatExpr(Expr(chart)); }

  const Expr& num() const { return m_num; }
  const Expr& den() const { return m_den; }
  const ChartPtr& chart() const { return m_num.chart(); }

  bool is_zero() const { return m_num.is_zero(); }
  /// True when the denominator is the constant 1.
  bool is_polynomial() const;
  /// The numerator if denominator is 1, else nullopt.
  std::optional<Expr> as_expr() const;
  /// The numerator if denominator is 1, else throws Error with `what`.
  Expr expect_expr(const char* what) const;

  RatExpr operator-() const;
  RatExpr& operator+=(const RatExpr& o);
  RatExpr& operator-=(const RatExpr& o);
  RatExpr& operator*=(const RatExpr& o);
  RatExpr& operator/=(const RatExpr& o);
  friend RatExpr operator+(RatExpr a, const RatExpr& b) { return a += b; }
  friend RatExpr operator-(RatExpr a, const RatExpr& b) { return a -= b; }
  friend RatExpr operator*(RatExpr a, const RatExpr& b) { return a *= b; }
  friend RatExpr operator/(RatExpr a, const RatExpr& b) { return a /= b; }
  RatExpr operator*(const Rat& c) const { return RatExpr(m_num * c, m_den); }

  bool operator==(const RatExpr& o) const;
  bool operator!=(const RatExpr& o) const { return !(*this == o); }

  /// Quotient-rule derivative with respect to chart coordinate i.
  RatExpr diff(int i) const;
  RatExpr extended(const ChartPtr& bigger) const;

  /// Exact evaluation; throws Error if the denominator vanishes at the point.
  ExactValue eval(const std::vector<Rat>& point) const;
  /// nullopt when the denominator is numerically tiny at the point.
  std::optional<double> eval_double(const std::vector<double>& point) const;

  std::string str() const;

private:
  Expr m_num;
  Expr m_den; // canonical: leading coeff 1, leading exp weight 0; never zero
  void normalize();
};

} // namespace skewcal

#endif
