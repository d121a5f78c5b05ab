#include "skewcal/poissonization.hpp"

namespace skewcal {

namespace {

void require_twist(const AlgebroidDef& alg, const CoSec& phi0,
                   const char* what) {
  require_same_chart(alg.chart(), phi0.chart(), what);
  if (phi0.rank() != alg.rank() || phi0.degree() != 1)
    throw ShapeError(std::string(what) +
                     ": twist must be a degree-1 cosection on the algebroid");
}

Expr exp_minus(const ChartPtr& chart, int coord_index) {
  std::vector<Rat> w(static_cast<size_t>(chart->dim()), Rat(0));
  w[static_cast<size_t>(coord_index)] = Rat(-1);
  return Expr::exponential(chart, w);
}

} // namespace

AlgebroidDef bar_realization(const AlgebroidDef& alg, const CoSec& phi0,
                             const std::string& coord) {
  require_twist(alg, phi0, "bar_realization");
  const ChartPtr ext = extend_chart(alg.chart(), coord);
  const int r = alg.rank();
  std::vector<std::vector<Expr>> anchor;
  anchor.reserve(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) {
    std::vector<Expr> row;
    row.reserve(static_cast<size_t>(ext->dim()));
    for (int i = 0; i < alg.dim(); ++i)
      row.push_back(alg.anchor_entry(a, i).extended(ext));
    row.push_back(phi0.coeff({a}).extended(ext));
    anchor.push_back(std::move(row));
  }
  std::vector<AlgebroidDef::StructureEntry> structure;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const Expr& s = alg.structure(a, b, c);
        if (!s.is_zero()) structure.push_back({a, b, c, s.extended(ext)});
      }
  return AlgebroidDef(ext, r, std::move(anchor), structure, alg.labels());
}

AlgebroidDef hat_realization(const AlgebroidDef& alg, const CoSec& phi0,
                             const std::string& coord) {
  require_twist(alg, phi0, "hat_realization");
  const ChartPtr ext = extend_chart(alg.chart(), coord);
  const Expr scale = exp_minus(ext, ext->dim() - 1);
  const int r = alg.rank();
  std::vector<std::vector<Expr>> anchor;
  anchor.reserve(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) {
    std::vector<Expr> row;
    row.reserve(static_cast<size_t>(ext->dim()));
    for (int i = 0; i < alg.dim(); ++i)
      row.push_back(alg.anchor_entry(a, i).extended(ext) * scale);
    row.push_back(phi0.coeff({a}).extended(ext) * scale);
    anchor.push_back(std::move(row));
  }
  std::vector<AlgebroidDef::StructureEntry> structure;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        Expr s = alg.structure(a, b, c).extended(ext);
        if (c == b) s -= phi0.coeff({a}).extended(ext);
        if (c == a) s += phi0.coeff({b}).extended(ext);
        if (!s.is_zero()) structure.push_back({a, b, c, s * scale});
      }
    }
  }
  return AlgebroidDef(ext, r, std::move(anchor), structure, alg.labels());
}

MultiVec poissonize(const MultiVec& pi, const ChartPtr& extended_chart,
                    const std::string& coord) {
  const auto idx = extended_chart->index_of(coord);
  if (!idx)
    throw ShapeError("poissonize: chart has no coordinate named '" + coord +
                     "'");
  const Expr scale = exp_minus(extended_chart, *idx);
  return pi.extended(extended_chart) * scale;
}

} // namespace skewcal
