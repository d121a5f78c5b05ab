#include "skewcal/ratexpr.hpp"

#include <cmath>

namespace skewcal {

RatExpr::RatExpr(Expr num) : m_num(std::move(num)) {
  m_den = Expr(m_num.chart(), Rat(1));
}

RatExpr::RatExpr(Expr num, Expr den) : m_num(std::move(num)), m_den(std::move(den)) {
  require_same_chart(m_num.chart(), m_den.chart(), "RatExpr");
  if (m_den.is_zero()) {
    throw Error("RatExpr: zero denominator");
  }
  normalize();
}

void RatExpr::normalize() {
  const ChartPtr& ch = m_num.chart();
  if (m_num.is_zero()) {
    m_den = Expr(ch, Rat(1));
    return;
  }
  // Move the denominator's unit content (lead coefficient, lead exp weight)
  // over to the numerator so denominators compare equal across routes.
  const ExprTerm& lead = m_den.terms().back();
  Rat c = lead.coeff;
  std::vector<Rat> w = lead.expw;
  bool unit_w = false;
  for (const auto& wi : w) {
    if (wi != 0) {
      unit_w = true;
    }
  }
  if (c != 1 || unit_w) {
    std::vector<Rat> neg(w.size());
    for (size_t i = 0; i < w.size(); ++i) {
      neg[i] = -w[i];
    }
    Expr scale = Expr::exponential(ch, std::move(neg)) * (Rat(1) / c);
    m_num = m_num * scale;
    m_den = m_den * scale;
  }
  if (auto cv = m_den.constant_value()) {
    if (*cv == 1) {
      return;
    }
  }
  if (auto q = divide_exact(m_num, m_den)) {
    m_num = std::move(*q);
    m_den = Expr(ch, Rat(1));
  }
}

bool RatExpr::is_polynomial() const {
  auto cv = m_den.constant_value();
  return cv && *cv == 1;
}

std::optional<Expr> RatExpr::as_expr() const {
  if (is_polynomial()) {
    return m_num;
  }
  return std::nullopt;
}

Expr RatExpr::expect_expr(const char* what) const {
  if (auto e = as_expr()) {
    return *e;
  }
  throw Error(std::string(what) + ": value is not polynomial in the expression ring: " + str());
}

RatExpr RatExpr::operator-() const {
  RatExpr r = *this;
  r.m_num = -r.m_num;
  return r;
}

RatExpr& RatExpr::operator+=(const RatExpr& o) {
  require_same_chart(chart(), o.chart(), "RatExpr +");
  if (m_den == o.m_den) {
    m_num += o.m_num;
    normalize();
    return *this;
  }
  m_num = m_num * o.m_den + o.m_num * m_den;
  m_den = m_den * o.m_den;
  normalize();
  return *this;
}

RatExpr& RatExpr::operator-=(const RatExpr& o) {
  return *this += (-o);
}

RatExpr& RatExpr::operator*=(const RatExpr& o) {
  require_same_chart(chart(), o.chart(), "RatExpr *");
  m_num = m_num * o.m_num;
  m_den = m_den * o.m_den;
  normalize();
  return *this;
}

RatExpr& RatExpr::operator/=(const RatExpr& o) {
  require_same_chart(chart(), o.chart(), "RatExpr /");
  if (o.is_zero()) {
    throw Error("RatExpr: division by zero");
  }
  m_num = m_num * o.m_den;
  m_den = m_den * o.m_num;
  normalize();
  return *this;
}

bool RatExpr::operator==(const RatExpr& o) const {
  if (!chart() || !o.chart()) {
    return is_zero() && o.is_zero();
  }
  return m_num * o.m_den == o.m_num * m_den;
}

RatExpr RatExpr::diff(int i) const {
  Expr dn = m_num.diff(i);
  if (is_polynomial()) {
    return RatExpr(std::move(dn));
  }
  Expr dd = m_den.diff(i);
  return RatExpr(dn * m_den - m_num * dd, m_den * m_den);
}

RatExpr RatExpr::extended(const ChartPtr& bigger) const {
  return RatExpr(m_num.extended(bigger), m_den.extended(bigger));
}

ExactValue RatExpr::eval(const std::vector<Rat>& point) const {
  ExactValue n = m_num.eval(point);
  ExactValue d = m_den.eval(point);
  if (d.is_zero()) {
    throw Error("RatExpr::eval: denominator vanishes at the sample point");
  }
  if (d.parts().size() != 1) {
    // 1/(c1 exp(q1) + c2 exp(q2) + ...) leaves the exact value domain.
    throw Error("RatExpr::eval: denominator value mixes exp() parts at the sample point");
  }
  const Rat& qd = d.parts().begin()->first;
  const Rat& cd = d.parts().begin()->second;
  std::map<Rat, Rat> parts;
  for (const auto& [q, c] : n.parts()) {
    parts[q - qd] += c / cd;
  }
  return ExactValue(std::move(parts));
}

std::optional<double> RatExpr::eval_double(const std::vector<double>& point) const {
  double d = m_den.eval_double(point);
  if (std::abs(d) < 1e-12) {
    return std::nullopt;
  }
  return m_num.eval_double(point) / d;
}

std::string RatExpr::str() const {
  if (is_polynomial()) {
    return m_num.str();
  }
  return "(" + m_num.str() + ") / (" + m_den.str() + ")";
}

} // namespace skewcal
