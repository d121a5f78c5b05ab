#ifndef SKEWCAL_EXPR_HPP
#define SKEWCAL_EXPR_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewcal/chart.hpp"

namespace skewcal {

/// Exact rational scalar.
using Rat = mpq_class;

std::string rat_str(const Rat& r);
Rat rat_pow(const Rat& base, int k);

/// One additive term: coeff * x1^m1*...*xn^mn * exp(w1*x1 + ... + wn*xn).
struct ExprTerm {
  Rat coeff;
  std::vector<int> mono;
  std::vector<Rat> expw;
};

/// Exact value of an expression at a rational point: a finite sum
/// sum_q c_q * exp(q) with distinct rational exponents q.
class ExactValue {
public:
  ExactValue() = default;
  explicit ExactValue(std::map<Rat, Rat> parts);

  /// True when the value carries no genuine exponential, i.e. it is c*exp(0).
  bool is_rational() const;
  /// The rational value; throws Error if a nonzero exp(q), q != 0 part remains.
  Rat rational_value() const;
  bool is_zero() const { return m_parts.empty(); }
  double to_double() const;
  const std::map<Rat, Rat>& parts() const { return m_parts; }
  std::string str() const;

private:
  std::map<Rat, Rat> m_parts; // exp argument -> coefficient, no zero coeffs
};

/// Element of the exact function ring over a chart: a finite rational linear
/// combination of monomials times exponentials of rational-linear forms in
/// the coordinates. Closed under +, *, and coordinate derivatives; kept in a
/// canonical normal form (terms sorted by (expw, mono), like terms merged,
/// zero coefficients dropped) so equality and zero-testing are structural.
class Expr {
public:
  Expr() = default; // zero over a null chart; usable only as a placeholder
  explicit Expr(ChartPtr chart);                 // zero
  Expr(ChartPtr chart, const Rat& constant);
  Expr(ChartPtr chart, long constant);

  static Expr coordinate(const ChartPtr& chart, int i);
  static Expr coordinate(const ChartPtr& chart, const std::string& name);
  /// exp(sum_i weights[i] * x_i); weights.size() must equal the chart dim.
  static Expr exponential(const ChartPtr& chart, std::vector<Rat> weights);
  /// Build directly from terms (normalized here).
  static Expr from_terms(ChartPtr chart, std::vector<ExprTerm> terms);

  const ChartPtr& chart() const { return m_chart; }
  bool is_zero() const { return m_terms.empty(); }
  /// Constant value if the expression is one (zero counts), else nullopt.
  std::optional<Rat> constant_value() const;
  const std::vector<ExprTerm>& terms() const { return m_terms; }

  Expr operator-() const;
  Expr& operator+=(const Expr& o);
  Expr& operator-=(const Expr& o);
  Expr& operator*=(const Expr& o);
  friend Expr operator+(Expr a, const Expr& b) { return a += b; }
  friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
  friend Expr operator*(const Expr& a, const Expr& b);
  Expr operator*(const Rat& c) const;
  friend Expr operator*(const Rat& c, const Expr& e) { return e * c; }

  bool operator==(const Expr& o) const;
  bool operator!=(const Expr& o) const { return !(*this == o); }

  /// Partial derivative with respect to chart coordinate i.
  Expr diff(int i) const;
  Expr diff(const std::string& coord) const;
  /// Nonnegative integer power.
  Expr pow(int k) const;

  /// Reinterpret over a chart containing this one's coordinates (match by
  /// name, new coordinates unused). Throws ChartMismatch if not a superset.
  Expr extended(const ChartPtr& bigger) const;

  /// Exact evaluation at a rational point (one value per chart coordinate).
  ExactValue eval(const std::vector<Rat>& point) const;
  double eval_double(const std::vector<double>& point) const;

  size_t term_count() const { return m_terms.size(); }
  /// Printable and re-parseable representation.
  std::string str() const;

private:
  ChartPtr m_chart;
  std::vector<ExprTerm> m_terms;

  void normalize();
  friend std::optional<Expr> divide_exact(const Expr& num, const Expr& den);
};

/// Exact quotient num/den in the expression ring, or nullopt when den does
/// not divide num (den == 0 throws). Long division by the leading term under
/// the canonical order, which is multiplicative, so exact quotients are
/// always found.
std::optional<Expr> divide_exact(const Expr& num, const Expr& den);

} // namespace skewcal

#endif
