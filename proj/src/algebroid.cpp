#include "skewcal/algebroid.hpp"

#include <sstream>

namespace skewcal {

Section::Section(ChartPtr chart, std::vector<Expr> comps)
    : m_chart(std::move(chart)), m_comps(std::move(comps)) {
  if (!m_chart) throw ShapeError("Section: null chart");
  for (const Expr& e : m_comps)
    require_same_chart(m_chart, e.chart(), "Section component");
}

Section Section::zero(const ChartPtr& chart, int rank) {
  if (rank < 0) throw ShapeError("Section::zero: negative rank");
  return Section(chart, std::vector<Expr>(static_cast<size_t>(rank), Expr(chart)));
}

Section Section::frame(const ChartPtr& chart, int rank, int a) {
  if (a < 0 || a >= rank) throw ShapeError("Section::frame: index out of range");
  Section s = zero(chart, rank);
  s.m_comps[static_cast<size_t>(a)] = Expr(chart, Rat(1));
  return s;
}

const Expr& Section::comp(int a) const {
  if (a < 0 || a >= rank()) throw ShapeError("Section::comp: index out of range");
  return m_comps[static_cast<size_t>(a)];
}

bool Section::is_zero() const {
  for (const Expr& e : m_comps)
    if (!e.is_zero()) return false;
  return true;
}

Section Section::operator-() const {
  Section s = *this;
  for (Expr& e : s.m_comps) e = -e;
  return s;
}

Section& Section::operator+=(const Section& o) {
  require_same_chart(m_chart, o.m_chart, "Section addition");
  if (rank() != o.rank()) throw ShapeError("Section addition: rank mismatch");
  for (size_t a = 0; a < m_comps.size(); ++a) m_comps[a] += o.m_comps[a];
  return *this;
}

Section& Section::operator-=(const Section& o) {
  require_same_chart(m_chart, o.m_chart, "Section subtraction");
  if (rank() != o.rank()) throw ShapeError("Section subtraction: rank mismatch");
  for (size_t a = 0; a < m_comps.size(); ++a) m_comps[a] -= o.m_comps[a];
  return *this;
}

Section Section::operator*(const Expr& f) const {
  Section s = *this;
  for (Expr& e : s.m_comps) e = e * f;
  return s;
}

bool Section::operator==(const Section& o) const {
  if (rank() != o.rank() || !(*m_chart == *o.m_chart)) return false;
  for (size_t a = 0; a < m_comps.size(); ++a)
    if (!(m_comps[a] == o.m_comps[a])) return false;
  return true;
}

Section Section::extended(const ChartPtr& bigger) const {
  std::vector<Expr> comps;
  comps.reserve(m_comps.size());
  for (const Expr& e : m_comps) comps.push_back(e.extended(bigger));
  return Section(bigger, std::move(comps));
}

std::string Section::str(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  bool first = true;
  for (int a = 0; a < rank(); ++a) {
    if (comp(a).is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string label = a < static_cast<int>(labels.size())
                                  ? labels[static_cast<size_t>(a)]
                                  : "e" + std::to_string(a + 1);
    os << "(" << comp(a).str() << ")*" << label;
  }
  if (first) os << "0";
  return os.str();
}

AlgebroidDef::AlgebroidDef(ChartPtr chart, int rank,
                           std::vector<std::vector<Expr>> anchor,
                           const std::vector<StructureEntry>& structure,
                           std::vector<std::string> labels)
    : m_chart(std::move(chart)), m_rank(rank), m_labels(std::move(labels)),
      m_anchor(std::move(anchor)) {
  if (!m_chart) throw ShapeError("AlgebroidDef: null chart");
  if (m_rank <= 0) throw ShapeError("AlgebroidDef: rank must be positive");
  const size_t r = static_cast<size_t>(m_rank);
  const size_t n = static_cast<size_t>(m_chart->dim());
  if (m_anchor.size() != r)
    throw ShapeError("AlgebroidDef: anchor must have one row per frame element");
  for (const auto& row : m_anchor) {
    if (row.size() != n)
      throw ShapeError("AlgebroidDef: anchor row length must equal chart dimension");
    for (const Expr& e : row) require_same_chart(m_chart, e.chart(), "anchor entry");
  }
  if (m_labels.empty()) {
    for (int a = 1; a <= m_rank; ++a) m_labels.push_back("e" + std::to_string(a));
  }
  if (m_labels.size() != r)
    throw ShapeError("AlgebroidDef: label count must equal rank");
  m_c.assign(r, std::vector<std::vector<Expr>>(
                    r, std::vector<Expr>(r, Expr(m_chart))));
  for (const StructureEntry& s : structure) {
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.a >= m_rank || s.b >= m_rank ||
        s.c >= m_rank)
      throw ShapeError("AlgebroidDef: structure index out of range");
    if (s.a >= s.b)
      throw ShapeError("AlgebroidDef: structure entries require a < b");
    require_same_chart(m_chart, s.val.chart(), "structure function");
    const auto a = static_cast<size_t>(s.a), b = static_cast<size_t>(s.b),
               c = static_cast<size_t>(s.c);
    m_c[a][b][c] += s.val;
    m_c[b][a][c] -= s.val;
  }
}

AlgebroidDef AlgebroidDef::tangent(const ChartPtr& chart) {
  const int n = chart->dim();
  std::vector<std::vector<Expr>> anchor(static_cast<size_t>(n),
                                        std::vector<Expr>());
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      anchor[static_cast<size_t>(i)].push_back(
          Expr(chart, i == j ? Rat(1) : Rat(0)));
    labels.push_back("d_" + chart->name(i));
  }
  return AlgebroidDef(chart, n, std::move(anchor), {}, std::move(labels));
}

const Expr& AlgebroidDef::anchor_entry(int a, int i) const {
  if (a < 0 || a >= m_rank || i < 0 || i >= dim())
    throw ShapeError("anchor_entry: index out of range");
  return m_anchor[static_cast<size_t>(a)][static_cast<size_t>(i)];
}

const Expr& AlgebroidDef::structure(int a, int b, int c) const {
  if (a < 0 || a >= m_rank || b < 0 || b >= m_rank || c < 0 || c >= m_rank)
    throw ShapeError("structure: index out of range");
  return m_c[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(c)];
}

bool AlgebroidDef::structure_is_zero() const {
  for (const auto& plane : m_c)
    for (const auto& row : plane)
      for (const Expr& e : row)
        if (!e.is_zero()) return false;
  return true;
}

Section AlgebroidDef::bracket_frame(int a, int b) const {
  std::vector<Expr> comps;
  comps.reserve(static_cast<size_t>(m_rank));
  for (int c = 0; c < m_rank; ++c) comps.push_back(structure(a, b, c));
  return Section(m_chart, std::move(comps));
}

std::vector<Expr> AlgebroidDef::anchor_vector(const Section& x) const {
  require_same_chart(m_chart, x.chart(), "anchor_vector");
  if (x.rank() != m_rank) throw ShapeError("anchor_vector: rank mismatch");
  std::vector<Expr> v(static_cast<size_t>(dim()), Expr(m_chart));
  for (int a = 0; a < m_rank; ++a) {
    if (x.comp(a).is_zero()) continue;
    for (int i = 0; i < dim(); ++i)
      v[static_cast<size_t>(i)] += x.comp(a) * anchor_entry(a, i);
  }
  return v;
}

Expr AlgebroidDef::anchor_apply(const Section& x, const Expr& f) const {
  require_same_chart(m_chart, f.chart(), "anchor_apply");
  const std::vector<Expr> v = anchor_vector(x);
  Expr out(m_chart);
  for (int i = 0; i < dim(); ++i) out += v[static_cast<size_t>(i)] * f.diff(i);
  return out;
}

Section AlgebroidDef::bracket(const Section& x, const Section& y) const {
  require_same_chart(m_chart, x.chart(), "bracket");
  require_same_chart(m_chart, y.chart(), "bracket");
  if (x.rank() != m_rank || y.rank() != m_rank)
    throw ShapeError("bracket: rank mismatch");
  std::vector<Expr> comps(static_cast<size_t>(m_rank), Expr(m_chart));
  for (int a = 0; a < m_rank; ++a) {
    if (x.comp(a).is_zero()) continue;
    for (int b = 0; b < m_rank; ++b) {
      if (y.comp(b).is_zero()) continue;
      const Expr xy = x.comp(a) * y.comp(b);
      for (int c = 0; c < m_rank; ++c) {
        const Expr& s = structure(a, b, c);
        if (!s.is_zero()) comps[static_cast<size_t>(c)] += xy * s;
      }
    }
  }
  for (int b = 0; b < m_rank; ++b)
    comps[static_cast<size_t>(b)] += anchor_apply(x, y.comp(b));
  for (int a = 0; a < m_rank; ++a)
    comps[static_cast<size_t>(a)] -= anchor_apply(y, x.comp(a));
  return Section(m_chart, std::move(comps));
}

Section AlgebroidDef::jacobiator(const Section& x, const Section& y,
                                 const Section& z) const {
  return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) +
         bracket(bracket(z, x), y);
}

AnchorMorphismReport AlgebroidDef::check_anchor_morphism() const {
  AnchorMorphismReport report;
  for (int a = 0; a < m_rank; ++a) {
    for (int b = a + 1; b < m_rank; ++b) {
      std::vector<Expr> residual(static_cast<size_t>(dim()), Expr(m_chart));
      bool nonzero = false;
      for (int i = 0; i < dim(); ++i) {
        // rho of the frame bracket, through the structure functions.
        Expr lhs(m_chart);
        for (int c = 0; c < m_rank; ++c)
          lhs += structure(a, b, c) * anchor_entry(c, i);
        // Commutator of the two anchor vector fields.
        Expr rhs(m_chart);
        for (int j = 0; j < dim(); ++j)
          rhs += anchor_entry(a, j) * anchor_entry(b, i).diff(j) -
                 anchor_entry(b, j) * anchor_entry(a, i).diff(j);
        Expr res = lhs - rhs;
        if (!res.is_zero()) nonzero = true;
        residual[static_cast<size_t>(i)] = std::move(res);
      }
      if (nonzero) {
        report.ok = false;
        report.failing.emplace_back(a, b);
        report.residuals.push_back(std::move(residual));
      }
    }
  }
  return report;
}

bool AlgebroidDef::operator==(const AlgebroidDef& o) const {
  if (m_rank != o.m_rank || !(*m_chart == *o.m_chart)) return false;
  for (int a = 0; a < m_rank; ++a)
    for (int i = 0; i < dim(); ++i)
      if (!(anchor_entry(a, i) == o.anchor_entry(a, i))) return false;
  for (int a = 0; a < m_rank; ++a)
    for (int b = 0; b < m_rank; ++b)
      for (int c = 0; c < m_rank; ++c)
        if (!(structure(a, b, c) == o.structure(a, b, c))) return false;
  return true;
}

} // namespace skewcal
