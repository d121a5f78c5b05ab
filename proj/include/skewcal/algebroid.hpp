#ifndef SKEWCAL_ALGEBROID_HPP
#define SKEWCAL_ALGEBROID_HPP

#include <string>
#include <vector>

#include "skewcal/expr.hpp"

namespace skewcal {

/// Section of the bundle, written in the fixed frame: X = sum_a comps[a] e_a.
class Section {
public:
  Section(ChartPtr chart, std::vector<Expr> comps);
  static Section zero(const ChartPtr& chart, int rank);
  /// Frame element e_a.
  static Section frame(const ChartPtr& chart, int rank, int a);

  const ChartPtr& chart() const { return m_chart; }
  int rank() const { return static_cast<int>(m_comps.size()); }
  const Expr& comp(int a) const;
  const std::vector<Expr>& comps() const { return m_comps; }
  bool is_zero() const;

  Section operator-() const;
  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  Section operator*(const Expr& f) const;
  friend Section operator*(const Expr& f, const Section& s) { return s * f; }
  bool operator==(const Section& o) const;

  /// Same components over a chart extending this one.
  Section extended(const ChartPtr& bigger) const;

  std::string str(const std::vector<std::string>& labels) const;

private:
  ChartPtr m_chart;
  std::vector<Expr> m_comps;
};

/// Outcome of the anchor-morphism check: residual vector fields
/// rho([e_a,e_b]) - [rho(e_a), rho(e_b)] for each frame pair.
struct AnchorMorphismReport {
  bool ok = true;
  /// Failing frame pairs (a, b), a < b.
  std::vector<std::pair<int, int>> failing;
  /// One residual per failing pair, as vector-field components.
  std::vector<std::vector<Expr>> residuals;
};

/// Skew algebroid on a trivialized bundle over a coordinate chart: an anchor
/// matrix rho (rank x dim of Expr) and antisymmetric structure functions
/// c^c_{ab} for the frame brackets [e_a, e_b] = sum_c c^c_{ab} e_c. The
/// bracket on general sections is the Leibniz extension. Nothing here assumes
/// the Jacobi identity; Lie-ness is a property to be checked.
class AlgebroidDef {
public:
  struct StructureEntry {
    int a, b, c; // [e_a, e_b] component along e_c, requires a < b
    Expr val;
  };

  AlgebroidDef(ChartPtr chart, int rank, std::vector<std::vector<Expr>> anchor,
               const std::vector<StructureEntry>& structure,
               std::vector<std::string> labels = {});

  /// Tangent algebroid of the chart: identity anchor, zero structure.
  static AlgebroidDef tangent(const ChartPtr& chart);

  const ChartPtr& chart() const { return m_chart; }
  int rank() const { return m_rank; }
  int dim() const { return m_chart->dim(); }
  const std::vector<std::string>& labels() const { return m_labels; }

  const Expr& anchor_entry(int a, int i) const;
  /// Signed structure function c^c_{ab} (antisymmetric in a, b).
  const Expr& structure(int a, int b, int c) const;
  bool structure_is_zero() const;

  Section frame(int a) const { return Section::frame(m_chart, m_rank, a); }
  /// [e_a, e_b] as a section.
  Section bracket_frame(int a, int b) const;

  /// Vector-field components of rho(X).
  std::vector<Expr> anchor_vector(const Section& x) const;
  /// Derivation rho(X) applied to a function.
  Expr anchor_apply(const Section& x, const Expr& f) const;

  /// Leibniz-extended bracket of two sections.
  Section bracket(const Section& x, const Section& y) const;
  /// [[x,y],z] + [[y,z],x] + [[z,x],y].
  Section jacobiator(const Section& x, const Section& y, const Section& z) const;

  /// rho([e_a,e_b]) - [rho(e_a), rho(e_b)] over all frame pairs.
  AnchorMorphismReport check_anchor_morphism() const;

  /// Structural equality (chart, rank, anchor, structure functions).
  bool operator==(const AlgebroidDef& o) const;

private:
  ChartPtr m_chart;
  int m_rank;
  std::vector<std::string> m_labels;
  std::vector<std::vector<Expr>> m_anchor;          // rank x dim
  std::vector<std::vector<std::vector<Expr>>> m_c;  // rank x rank x rank, antisymmetrized
};

} // namespace skewcal

#endif
