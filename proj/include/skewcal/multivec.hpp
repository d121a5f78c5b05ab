#ifndef SKEWCAL_MULTIVEC_HPP
#define SKEWCAL_MULTIVEC_HPP

#include <map>
#include <string>
#include <vector>

#include "skewcal/algebroid.hpp"
#include "skewcal/expr.hpp"

namespace skewcal {

namespace detail {
/// Sorts idx ascending in place; returns the permutation sign, or 0 when an
/// index repeats.
int sort_index_tuple(std::vector<int>& idx);
/// All strictly increasing tuples of length k drawn from {0, ..., rank-1}.
std::vector<std::vector<int>> increasing_tuples(int rank, int k);
/// Sign of merging two disjoint increasing tuples into one sorted tuple
/// (left tuple kept before right); 0 if they intersect. On success `merged`
/// holds the sorted union.
int merge_sign(const std::vector<int>& left, const std::vector<int>& right,
               std::vector<int>& merged);
} // namespace detail

/// Alternating array of Expr coefficients over strictly increasing frame
/// index tuples. Shared representation for multivector fields and
/// alternating cosections; `Derived` tags which of the two it is.
template <typename Derived>
class Alternating {
public:
  Alternating(ChartPtr chart, int rank, int degree)
      : m_chart(std::move(chart)), m_rank(rank), m_degree(degree) {
    if (!m_chart) throw ShapeError("Alternating: null chart");
    if (m_rank <= 0) throw ShapeError("Alternating: rank must be positive");
    if (m_degree < 0) throw ShapeError("Alternating: negative degree");
  }

  const ChartPtr& chart() const { return m_chart; }
  int rank() const { return m_rank; }
  int degree() const { return m_degree; }
  bool is_zero() const { return m_coeffs.empty(); }

  /// Nonzero coefficients over increasing index tuples.
  const std::map<std::vector<int>, Expr>& coeffs() const { return m_coeffs; }

  /// Coefficient at an arbitrary index tuple (antisymmetric lookup).
  Expr coeff(std::vector<int> idx) const {
    check_tuple_shape(idx);
    const int sign = detail::sort_index_tuple(idx);
    if (sign == 0) return Expr(m_chart);
    auto it = m_coeffs.find(idx);
    if (it == m_coeffs.end()) return Expr(m_chart);
    return sign > 0 ? it->second : -it->second;
  }

  /// Adds v at an arbitrary index tuple (antisymmetric accumulate).
  void add_coeff(std::vector<int> idx, const Expr& v) {
    check_tuple_shape(idx);
    require_same_chart(m_chart, v.chart(), "Alternating coefficient");
    const int sign = detail::sort_index_tuple(idx);
    if (sign == 0 || v.is_zero()) return;
    Expr& slot = m_coeffs.try_emplace(idx, Expr(m_chart)).first->second;
    slot += sign > 0 ? v : -v;
    if (slot.is_zero()) m_coeffs.erase(idx);
  }

  Derived operator-() const {
    Derived out = self();
    for (auto& [k, v] : out.m_coeffs) v = -v;
    return out;
  }

  /// Same coefficients viewed over a different frame count. Shrinking is
  /// allowed only when no stored index reaches the new rank.
  Derived with_rank(int new_rank) const {
    Derived out(m_chart, new_rank, m_degree);
    for (const auto& [k, v] : m_coeffs) out.add_coeff(k, v);
    return out;
  }

  /// Same coefficients over a chart extending this one.
  Derived extended(const ChartPtr& bigger) const {
    Derived out(bigger, m_rank, m_degree);
    for (const auto& [k, v] : m_coeffs) out.add_coeff(k, v.extended(bigger));
    return out;
  }

  Derived& operator+=(const Derived& o) {
    require_compatible(o, "addition");
    for (const auto& [k, v] : o.m_coeffs) {
      Expr& slot = m_coeffs.try_emplace(k, Expr(m_chart)).first->second;
      slot += v;
      if (slot.is_zero()) m_coeffs.erase(k);
    }
    return static_cast<Derived&>(*this);
  }

  Derived& operator-=(const Derived& o) {
    require_compatible(o, "subtraction");
    for (const auto& [k, v] : o.m_coeffs) {
      Expr& slot = m_coeffs.try_emplace(k, Expr(m_chart)).first->second;
      slot -= v;
      if (slot.is_zero()) m_coeffs.erase(k);
    }
    return static_cast<Derived&>(*this);
  }

  friend Derived operator+(Derived a, const Derived& b) { return a += b; }
  friend Derived operator-(Derived a, const Derived& b) { return a -= b; }

  Derived operator*(const Expr& f) const {
    Derived out(m_chart, m_rank, m_degree);
    for (const auto& [k, v] : m_coeffs) {
      Expr prod = v * f;
      if (!prod.is_zero()) out.m_coeffs.emplace(k, std::move(prod));
    }
    return out;
  }
  friend Derived operator*(const Expr& f, const Derived& a) { return a * f; }
  Derived operator*(const Rat& r) const { return *this * Expr(m_chart, r); }

  bool operator==(const Derived& o) const {
    if (m_rank != o.m_rank || m_degree != o.m_degree ||
        !(*m_chart == *o.m_chart) || m_coeffs.size() != o.m_coeffs.size())
      return false;
    auto it = o.m_coeffs.begin();
    for (auto jt = m_coeffs.begin(); jt != m_coeffs.end(); ++jt, ++it)
      if (jt->first != it->first || !(jt->second == it->second)) return false;
    return true;
  }

  /// Wedge product within the same family.
  friend Derived wedge(const Derived& a, const Derived& b) {
    a.require_compatible_base(b, "wedge");
    Derived out(a.m_chart, a.m_rank, a.m_degree + b.m_degree);
    std::vector<int> merged;
    for (const auto& [ka, va] : a.m_coeffs) {
      for (const auto& [kb, vb] : b.m_coeffs) {
        const int sign = detail::merge_sign(ka, kb, merged);
        if (sign == 0) continue;
        Expr prod = va * vb;
        if (sign < 0) prod = -prod;
        if (prod.is_zero()) continue;
        Expr& slot =
            out.m_coeffs.try_emplace(merged, Expr(a.m_chart)).first->second;
        slot += prod;
        if (slot.is_zero()) out.m_coeffs.erase(merged);
      }
    }
    return out;
  }

  std::string str(const std::string& symbol) const {
    if (m_coeffs.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : m_coeffs) {
      if (!out.empty()) out += " + ";
      out += "(" + v.str() + ")";
      for (int i : k) out += "*" + symbol + std::to_string(i + 1);
    }
    return out;
  }

private:
  Derived& self() { return static_cast<Derived&>(*this); }
  const Derived& self() const { return static_cast<const Derived&>(*this); }

  void check_tuple_shape(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != m_degree)
      throw ShapeError("Alternating: tuple length must equal degree");
    for (int i : idx)
      if (i < 0 || i >= m_rank)
        throw ShapeError("Alternating: frame index out of range");
  }

  void require_compatible_base(const Alternating& o, const char* what) const {
    require_same_chart(m_chart, o.m_chart, what);
    if (m_rank != o.m_rank)
      throw ShapeError(std::string("Alternating ") + what + ": rank mismatch");
  }

  void require_compatible(const Alternating& o, const char* what) const {
    require_compatible_base(o, what);
    if (m_degree != o.m_degree)
      throw ShapeError(std::string("Alternating ") + what +
                       ": degree mismatch");
  }

  ChartPtr m_chart;
  int m_rank;
  int m_degree;
  std::map<std::vector<int>, Expr> m_coeffs;
};

/// Multivector field in the frame: degree-k element of the exterior algebra
/// of the bundle.
class MultiVec : public Alternating<MultiVec> {
public:
  using Alternating::Alternating;
  /// Degree-1 multivector from a section.
  static MultiVec from_section(const Section& x);
  /// Degree-0 multivector from a function.
  static MultiVec from_function(int rank, const Expr& f);
  /// Basis element e_{i1} ^ ... ^ e_{ik}.
  static MultiVec basis(const ChartPtr& chart, int rank, std::vector<int> idx);
  /// Degree-1 multivector back to a section.
  Section to_section() const;
  /// The unique degree-0 coefficient.
  Expr scalar() const;
};

/// Alternating cosection in the coframe: degree-k element of the exterior
/// algebra of the dual bundle.
class CoSec : public Alternating<CoSec> {
public:
  using Alternating::Alternating;
  /// Degree-1 cosection from components (xi = sum_a comps[a] e^a).
  static CoSec from_components(const ChartPtr& chart, std::vector<Expr> comps);
  /// Degree-0 cosection from a function.
  static CoSec from_function(int rank, const Expr& f);
  /// Basis element e^{i1} ^ ... ^ e^{ik}.
  static CoSec basis(const ChartPtr& chart, int rank, std::vector<int> idx);
  /// The unique degree-0 coefficient.
  Expr scalar() const;
};

/// Full pairing <D, w> = sum over increasing tuples D_I w_I; both arguments
/// must have equal degree. The convention makes the coframe dual to the
/// frame: <e_I, e^J> = delta_IJ on increasing tuples.
Expr pair_full(const MultiVec& d, const CoSec& w);

/// Coefficient-preserving reinterpretation between the two families, for
/// moving objects to the dual bundle (where frame and coframe swap roles).
CoSec as_cosec(const MultiVec& d);
MultiVec as_multivec(const CoSec& w);

/// Contraction of a degree-1 cosection into a multivector (degree drops by
/// one): adjoint of wedging, <contract(phi, D), w> = <D, wedge(phi, w)>.
MultiVec contract(const CoSec& phi, const MultiVec& d);

/// Insertion of a section into the first slot of a cosection.
CoSec insert_section(const Section& x, const CoSec& w);

/// Evaluation w(x_1, ..., x_k) by iterated first-slot insertion.
Expr eval_cosec(const CoSec& w, const std::vector<Section>& xs);

} // namespace skewcal

#endif
