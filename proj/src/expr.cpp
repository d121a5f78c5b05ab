#include "skewcal/expr.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace skewcal {

std::string rat_str(const Rat& r) {
  return r.get_str();
}

Rat rat_pow(const Rat& base, int k) {
  if (k < 0) {
    throw ShapeError("rat_pow: negative exponent");
  }
  Rat acc = 1;
  for (int i = 0; i < k; ++i) {
    acc *= base;
  }
  return acc;
}

namespace {

// Total order on term keys: lexicographic on the exp weight vector, then on
// the monomial exponent vector. Translation-invariant, so leading terms are
// multiplicative and long division is well behaved.
int key_cmp(const ExprTerm& a, const ExprTerm& b) {
  for (size_t i = 0; i < a.expw.size(); ++i) {
    int c = cmp(a.expw[i], b.expw[i]);
    if (c != 0) {
      return c;
    }
  }
  for (size_t i = 0; i < a.mono.size(); ++i) {
    if (a.mono[i] != b.mono[i]) {
      return a.mono[i] < b.mono[i] ? -1 : 1;
    }
  }
  return 0;
}

bool key_less(const ExprTerm& a, const ExprTerm& b) {
  return key_cmp(a, b) < 0;
}

} // namespace

ExactValue::ExactValue(std::map<Rat, Rat> parts) : m_parts(std::move(parts)) {
  for (auto it = m_parts.begin(); it != m_parts.end();) {
    if (it->second == 0) {
      it = m_parts.erase(it);
    } else {
      ++it;
    }
  }
}

bool ExactValue::is_rational() const {
  return m_parts.empty() || (m_parts.size() == 1 && m_parts.begin()->first == 0);
}

Rat ExactValue::rational_value() const {
  if (m_parts.empty()) {
    return Rat(0);
  }
  if (!is_rational()) {
    throw Error("value has a transcendental exp() part: " + str());
  }
  return m_parts.begin()->second;
}

double ExactValue::to_double() const {
  double acc = 0.0;
  for (const auto& [q, c] : m_parts) {
    acc += c.get_d() * std::exp(q.get_d());
  }
  return acc;
}

std::string ExactValue::str() const {
  if (m_parts.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, c] : m_parts) {
    if (!first) {
      os << " + ";
    }
    first = false;
    if (q == 0) {
      os << rat_str(c);
    } else {
      os << rat_str(c) << "*exp(" << rat_str(q) << ")";
    }
  }
  return os.str();
}

Expr::Expr(ChartPtr chart) : m_chart(std::move(chart)) {}

Expr::Expr(ChartPtr chart, const Rat& constant) : m_chart(std::move(chart)) {
  if (constant != 0) {
    ExprTerm t;
    t.coeff = constant;
    t.mono.assign(static_cast<size_t>(m_chart->dim()), 0);
    t.expw.assign(static_cast<size_t>(m_chart->dim()), Rat(0));
    m_terms.push_back(std::move(t));
  }
}

Expr::Expr(ChartPtr chart, long constant) : Expr(std::move(chart), Rat(constant)) {}

Expr Expr::coordinate(const ChartPtr& chart, int i) {
  if (i < 0 || i >= chart->dim()) {
    throw ShapeError("coordinate index out of range");
  }
  Expr e(chart);
  ExprTerm t;
  t.coeff = 1;
  t.mono.assign(static_cast<size_t>(chart->dim()), 0);
  t.mono[static_cast<size_t>(i)] = 1;
  t.expw.assign(static_cast<size_t>(chart->dim()), Rat(0));
  e.m_terms.push_back(std::move(t));
  return e;
}

Expr Expr::coordinate(const ChartPtr& chart, const std::string& name) {
  auto i = chart->index_of(name);
  if (!i) {
    throw ShapeError("no coordinate named '" + name + "' in chart");
  }
  return coordinate(chart, *i);
}

Expr Expr::exponential(const ChartPtr& chart, std::vector<Rat> weights) {
  if (static_cast<int>(weights.size()) != chart->dim()) {
    throw ShapeError("exp weight vector has wrong length");
  }
  Expr e(chart);
  ExprTerm t;
  t.coeff = 1;
  t.mono.assign(static_cast<size_t>(chart->dim()), 0);
  t.expw = std::move(weights);
  e.m_terms.push_back(std::move(t));
  return e;
}

Expr Expr::from_terms(ChartPtr chart, std::vector<ExprTerm> terms) {
  Expr e(std::move(chart));
  const size_t dim = static_cast<size_t>(e.m_chart->dim());
  for (auto& t : terms) {
    if (t.mono.size() != dim || t.expw.size() != dim) {
      throw ShapeError("term vectors do not match chart dimension");
    }
    for (int m : t.mono) {
      if (m < 0) {
        throw ShapeError("negative monomial exponent");
      }
    }
  }
  e.m_terms = std::move(terms);
  e.normalize();
  return e;
}

void Expr::normalize() {
  std::sort(m_terms.begin(), m_terms.end(), key_less);
  std::vector<ExprTerm> merged;
  merged.reserve(m_terms.size());
  for (auto& t : m_terms) {
    if (!merged.empty() && key_cmp(merged.back(), t) == 0) {
      merged.back().coeff += t.coeff;
      if (merged.back().coeff == 0) {
        merged.pop_back();
      }
    } else if (t.coeff != 0) {
      merged.push_back(std::move(t));
    }
  }
  m_terms = std::move(merged);
}

std::optional<Rat> Expr::constant_value() const {
  if (m_terms.empty()) {
    return Rat(0);
  }
  if (m_terms.size() != 1) {
    return std::nullopt;
  }
  const auto& t = m_terms.front();
  for (int m : t.mono) {
    if (m != 0) {
      return std::nullopt;
    }
  }
  for (const auto& w : t.expw) {
    if (w != 0) {
      return std::nullopt;
    }
  }
  return t.coeff;
}

Expr Expr::operator-() const {
  Expr r = *this;
  for (auto& t : r.m_terms) {
    t.coeff = -t.coeff;
  }
  return r;
}

Expr& Expr::operator+=(const Expr& o) {
  require_same_chart(m_chart, o.m_chart, "Expr +");
  // Merge two sorted term lists.
  std::vector<ExprTerm> out;
  out.reserve(m_terms.size() + o.m_terms.size());
  size_t i = 0, j = 0;
  while (i < m_terms.size() && j < o.m_terms.size()) {
    int c = key_cmp(m_terms[i], o.m_terms[j]);
    if (c < 0) {
      out.push_back(std::move(m_terms[i++]));
    } else if (c > 0) {
      out.push_back(o.m_terms[j++]);
    } else {
      ExprTerm t = std::move(m_terms[i++]);
      t.coeff += o.m_terms[j++].coeff;
      if (t.coeff != 0) {
        out.push_back(std::move(t));
      }
    }
  }
  for (; i < m_terms.size(); ++i) {
    out.push_back(std::move(m_terms[i]));
  }
  for (; j < o.m_terms.size(); ++j) {
    out.push_back(o.m_terms[j]);
  }
  m_terms = std::move(out);
  return *this;
}

Expr& Expr::operator-=(const Expr& o) {
  return *this += (-o);
}

Expr operator*(const Expr& a, const Expr& b) {
  require_same_chart(a.m_chart, b.m_chart, "Expr *");
  Expr r(a.m_chart);
  if (a.is_zero() || b.is_zero()) {
    return r;
  }
  const size_t dim = a.m_terms.front().mono.size();
  r.m_terms.reserve(a.m_terms.size() * b.m_terms.size());
  for (const auto& ta : a.m_terms) {
    for (const auto& tb : b.m_terms) {
      ExprTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.mono.resize(dim);
      t.expw.resize(dim);
      for (size_t k = 0; k < dim; ++k) {
        t.mono[k] = ta.mono[k] + tb.mono[k];
        t.expw[k] = ta.expw[k] + tb.expw[k];
      }
      r.m_terms.push_back(std::move(t));
    }
  }
  r.normalize();
  return r;
}

Expr& Expr::operator*=(const Expr& o) {
  *this = *this * o;
  return *this;
}

Expr Expr::operator*(const Rat& c) const {
  Expr r = *this;
  if (c == 0) {
    r.m_terms.clear();
    return r;
  }
  for (auto& t : r.m_terms) {
    t.coeff *= c;
  }
  return r;
}

bool Expr::operator==(const Expr& o) const {
  if (!m_chart || !o.m_chart) {
    return m_terms.empty() && o.m_terms.empty();
  }
  require_same_chart(m_chart, o.m_chart, "Expr ==");
  if (m_terms.size() != o.m_terms.size()) {
    return false;
  }
  for (size_t i = 0; i < m_terms.size(); ++i) {
    if (m_terms[i].coeff != o.m_terms[i].coeff ||
        m_terms[i].mono != o.m_terms[i].mono ||
        m_terms[i].expw != o.m_terms[i].expw) {
      return false;
    }
  }
  return true;
}

Expr Expr::diff(int i) const {
  if (!m_chart) {
    throw Error("diff on placeholder expression");
  }
  if (i < 0 || i >= m_chart->dim()) {
    throw ShapeError("diff: coordinate index out of range");
  }
  const size_t ii = static_cast<size_t>(i);
  Expr r(m_chart);
  for (const auto& t : m_terms) {
    if (t.mono[ii] > 0) {
      ExprTerm d = t;
      d.coeff *= t.mono[ii];
      d.mono[ii] -= 1;
      r.m_terms.push_back(std::move(d));
    }
    if (t.expw[ii] != 0) {
      ExprTerm d = t;
      d.coeff *= t.expw[ii];
      r.m_terms.push_back(std::move(d));
    }
  }
  r.normalize();
  return r;
}

Expr Expr::diff(const std::string& coord) const {
  auto i = m_chart->index_of(coord);
  if (!i) {
    throw ShapeError("no coordinate named '" + coord + "' in chart");
  }
  return diff(*i);
}

Expr Expr::pow(int k) const {
  if (k < 0) {
    throw ShapeError("Expr::pow: negative exponent");
  }
  Expr acc(m_chart, Rat(1));
  for (int i = 0; i < k; ++i) {
    acc = acc * (*this);
  }
  return acc;
}

Expr Expr::extended(const ChartPtr& bigger) const {
  if (!m_chart) {
    throw Error("extend on placeholder expression");
  }
  if (*m_chart == *bigger) {
    Expr r = *this;
    r.m_chart = bigger;
    return r;
  }
  if (!m_chart->subset_of(*bigger)) {
    throw ChartMismatch("extended: target chart is not a superset");
  }
  std::vector<size_t> where(static_cast<size_t>(m_chart->dim()));
  for (int i = 0; i < m_chart->dim(); ++i) {
    where[static_cast<size_t>(i)] = static_cast<size_t>(*bigger->index_of(m_chart->name(i)));
  }
  const size_t bdim = static_cast<size_t>(bigger->dim());
  Expr r(bigger);
  r.m_terms.reserve(m_terms.size());
  for (const auto& t : m_terms) {
    ExprTerm u;
    u.coeff = t.coeff;
    u.mono.assign(bdim, 0);
    u.expw.assign(bdim, Rat(0));
    for (size_t i = 0; i < where.size(); ++i) {
      u.mono[where[i]] = t.mono[i];
      u.expw[where[i]] = t.expw[i];
    }
    r.m_terms.push_back(std::move(u));
  }
  r.normalize(); // key order may differ in the bigger chart
  return r;
}

ExactValue Expr::eval(const std::vector<Rat>& point) const {
  if (!m_chart) {
    return ExactValue();
  }
  if (static_cast<int>(point.size()) != m_chart->dim()) {
    throw ShapeError("eval: point dimension mismatch");
  }
  std::map<Rat, Rat> parts;
  for (const auto& t : m_terms) {
    Rat v = t.coeff;
    Rat q = 0;
    for (size_t i = 0; i < point.size(); ++i) {
      if (t.mono[i] != 0) {
        v *= rat_pow(point[i], t.mono[i]);
      }
      if (t.expw[i] != 0) {
        q += t.expw[i] * point[i];
      }
    }
    parts[q] += v;
  }
  return ExactValue(std::move(parts));
}

double Expr::eval_double(const std::vector<double>& point) const {
  if (!m_chart) {
    return 0.0;
  }
  if (static_cast<int>(point.size()) != m_chart->dim()) {
    throw ShapeError("eval_double: point dimension mismatch");
  }
  double acc = 0.0;
  for (const auto& t : m_terms) {
    double v = t.coeff.get_d();
    double q = 0.0;
    for (size_t i = 0; i < point.size(); ++i) {
      for (int k = 0; k < t.mono[i]; ++k) {
        v *= point[i];
      }
      if (t.expw[i] != 0) {
        q += t.expw[i].get_d() * point[i];
      }
    }
    acc += v * std::exp(q);
  }
  return acc;
}

namespace {

// Appends "c * x^m... * exp(...)" for one term to os (sign handled by caller,
// coeff passed positive).
void term_str(std::ostringstream& os, const Chart& chart, const ExprTerm& t,
              const Rat& coeff) {
  std::vector<std::string> factors;
  bool coeff_needed = true;
  std::string cs = rat_str(coeff);
  for (size_t i = 0; i < t.mono.size(); ++i) {
    if (t.mono[i] == 0) {
      continue;
    }
    std::string f = chart.name(static_cast<int>(i));
    if (t.mono[i] > 1) {
      f += "^" + std::to_string(t.mono[i]);
    }
    factors.push_back(std::move(f));
  }
  bool any_w = false;
  std::ostringstream ws;
  for (size_t i = 0; i < t.expw.size(); ++i) {
    if (t.expw[i] == 0) {
      continue;
    }
    Rat w = t.expw[i];
    if (any_w) {
      ws << (w > 0 ? " + " : " - ");
      if (w < 0) {
        w = -w;
      }
    } else if (w < 0) {
      ws << "-";
      w = -w;
    }
    any_w = true;
    if (w == 1) {
      ws << chart.name(static_cast<int>(i));
    } else {
      ws << rat_str(w) << "*" << chart.name(static_cast<int>(i));
    }
  }
  if (any_w) {
    factors.push_back("exp(" + ws.str() + ")");
  }
  if (coeff == 1 && !factors.empty()) {
    coeff_needed = false;
  }
  bool first = true;
  if (coeff_needed) {
    os << cs;
    first = false;
  }
  for (const auto& f : factors) {
    if (!first) {
      os << "*";
    }
    first = false;
    os << f;
  }
}

} // namespace

std::string Expr::str() const {
  if (m_terms.empty()) {
    return "0";
  }
  std::ostringstream os;
  // Print in descending key order so polynomial leading terms come first.
  for (size_t k = m_terms.size(); k-- > 0;) {
    const auto& t = m_terms[k];
    bool lead = (k + 1 == m_terms.size());
    if (t.coeff < 0) {
      os << (lead ? "-" : " - ");
      term_str(os, *m_chart, t, -t.coeff);
    } else {
      if (!lead) {
        os << " + ";
      }
      term_str(os, *m_chart, t, t.coeff);
    }
  }
  return os.str();
}

std::optional<Expr> divide_exact(const Expr& num, const Expr& den) {
  require_same_chart(num.chart(), den.chart(), "divide_exact");
  if (den.is_zero()) {
    throw Error("divide_exact: division by zero");
  }
  if (num.is_zero()) {
    return Expr(num.chart());
  }
  const ExprTerm& lead = den.m_terms.back();
  const size_t dim = lead.mono.size();
  Expr rem = num;
  std::vector<ExprTerm> quot;
  while (!rem.is_zero()) {
    const ExprTerm rl = rem.m_terms.back(); // copy: rem is about to change
    ExprTerm q;
    q.coeff = rl.coeff / lead.coeff;
    q.mono.resize(dim);
    q.expw.resize(dim);
    for (size_t i = 0; i < dim; ++i) {
      int m = rl.mono[i] - lead.mono[i];
      if (m < 0) {
        return std::nullopt; // leading monomial does not divide
      }
      q.mono[i] = m;
      q.expw[i] = rl.expw[i] - lead.expw[i];
    }
    Expr qe = Expr::from_terms(num.chart(), {q});
    rem -= qe * den;
    // Guard against non-termination: the leading key must strictly drop.
    if (!rem.is_zero() && key_cmp(rem.m_terms.back(), rl) >= 0) {
      return std::nullopt;
    }
    quot.push_back(std::move(q));
  }
  return Expr::from_terms(num.chart(), std::move(quot));
}

} // namespace skewcal
