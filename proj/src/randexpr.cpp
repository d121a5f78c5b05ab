#include "skewcal/randexpr.hpp"

namespace skewcal {

int RandGen::uniform(int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(m_rng);
}

Rat RandGen::coeff() {
  switch (uniform(0, 4)) {
    case 0: return Rat(1);
    case 1: return Rat(-1);
    case 2: return Rat(2);
    case 3: return Rat(-2);
    default: return Rat(1, 2);
  }
}

Expr RandGen::expr(const ChartPtr& chart, int max_terms) {
  const int dim = chart->dim();
  auto tcoord = chart->index_of("t");
  Expr acc(chart);
  const int nterms = uniform(1, max_terms);
  for (int n = 0; n < nterms; ++n) {
    ExprTerm t;
    t.coeff = coeff();
    t.mono.assign(static_cast<size_t>(dim), 0);
    t.expw.assign(static_cast<size_t>(dim), Rat(0));
    const int degree = uniform(0, 2);
    for (int d = 0; d < degree; ++d) {
      t.mono[static_cast<size_t>(uniform(0, dim - 1))] += 1;
    }
    if (tcoord) {
      t.expw[static_cast<size_t>(*tcoord)] = Rat(uniform(-1, 1));
    }
    acc += Expr::from_terms(chart, {t});
  }
  return acc;
}

} // namespace skewcal
