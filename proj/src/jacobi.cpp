#include "skewcal/jacobi.hpp"

#include "skewcal/calculus.hpp"

namespace skewcal {

namespace {

void require_phi0(const AlgebroidDef& alg, const CoSec& phi0,
                  const char* what) {
  require_same_chart(alg.chart(), phi0.chart(), what);
  if (phi0.rank() != alg.rank() || phi0.degree() != 1)
    throw ShapeError(std::string(what) +
                     ": twist must be a degree-1 cosection on the algebroid");
}

} // namespace

MultiVec phi_schouten(const AlgebroidDef& alg, const CoSec& phi0,
                      const MultiVec& d1, const MultiVec& d2) {
  require_phi0(alg, phi0, "phi_schouten");
  MultiVec out = schouten(alg, d1, d2);
  const int a1 = d1.degree();
  const int a2 = d2.degree();
  if (a1 != 1 && a2 >= 1) {
    MultiVec t = wedge(d1, contract(phi0, d2));
    const Rat factor(a1 - 1);
    out += t * factor;
  }
  if (a2 != 1 && a1 >= 1) {
    MultiVec t = wedge(contract(phi0, d1), d2);
    Rat factor(a2 - 1);
    if ((a1 + 1) % 2 == 0) factor = -factor;
    out += t * factor;
  }
  return out;
}

CoSec phi_differential(const AlgebroidDef& alg, const CoSec& phi0,
                       const CoSec& w) {
  require_phi0(alg, phi0, "phi_differential");
  return differential(alg, w) + wedge(phi0, w);
}

CoSec phi_lie_derivative(const AlgebroidDef& alg, const CoSec& phi0,
                         const Section& x, const CoSec& w) {
  require_phi0(alg, phi0, "phi_lie_derivative");
  const Expr pairing = eval_cosec(phi0, {x});
  return lie_derivative(alg, x, w) + w * pairing;
}

MultiVec phi_lie_derivative(const AlgebroidDef& alg, const CoSec& phi0,
                            const Section& x, const MultiVec& d) {
  return phi_schouten(alg, phi0, MultiVec::from_section(x), d);
}

Section sharp(const MultiVec& pi, const CoSec& xi) {
  if (pi.degree() != 2) throw ShapeError("sharp: bivector must have degree 2");
  return contract(xi, pi).to_section();
}

Expr bivector_eval(const MultiVec& pi, const CoSec& xi, const CoSec& eta) {
  return pair_full(MultiVec::from_section(sharp(pi, xi)), eta);
}

MultiVec jacobi_residual(const AlgebroidDef& alg, const CoSec& phi0,
                         const MultiVec& pi) {
  if (pi.degree() != 2)
    throw ShapeError("jacobi_residual: bivector must have degree 2");
  return phi_schouten(alg, phi0, pi, pi);
}

CoSec induced_bracket(const AlgebroidDef& alg, const CoSec& phi0,
                      const MultiVec& pi, const CoSec& xi, const CoSec& eta) {
  require_phi0(alg, phi0, "induced_bracket");
  if (xi.degree() != 1 || eta.degree() != 1)
    throw ShapeError("induced_bracket: arguments must have degree 1");
  const CoSec lx = phi_lie_derivative(alg, phi0, sharp(pi, xi), eta);
  const CoSec ly = phi_lie_derivative(alg, phi0, sharp(pi, eta), xi);
  const CoSec dpair = phi_differential(
      alg, phi0,
      CoSec::from_function(alg.rank(), bivector_eval(pi, xi, eta)));
  return lx - ly - dpair;
}

InducedDual build_induced_dual(const AlgebroidDef& alg, const CoSec& phi0,
                               const MultiVec& pi) {
  require_phi0(alg, phi0, "build_induced_dual");
  const ChartPtr& chart = alg.chart();
  const int r = alg.rank();
  std::vector<std::vector<Expr>> anchor;
  anchor.reserve(static_cast<size_t>(r));
  std::vector<std::string> labels;
  for (int a = 0; a < r; ++a) {
    const Section sa = sharp(pi, CoSec::basis(chart, r, {a}));
    anchor.push_back(alg.anchor_vector(sa));
    labels.push_back("eps" + std::to_string(a + 1));
  }
  std::vector<AlgebroidDef::StructureEntry> structure;
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      const CoSec br = induced_bracket(alg, phi0, pi,
                                       CoSec::basis(chart, r, {a}),
                                       CoSec::basis(chart, r, {b}));
      for (int c = 0; c < r; ++c) {
        Expr v = br.coeff({c});
        if (!v.is_zero()) structure.push_back({a, b, c, std::move(v)});
      }
    }
  }
  AlgebroidDef dual(chart, r, std::move(anchor), structure, std::move(labels));
  const Section minus_x0 = sharp(pi, phi0);
  std::vector<Expr> comps;
  comps.reserve(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) comps.push_back(-minus_x0.comp(a));
  return InducedDual{std::move(dual),
                     CoSec::from_components(chart, std::move(comps))};
}

Section bracket_identity_residual(const AlgebroidDef& alg, const CoSec& phi0,
                                  const MultiVec& pi, const CoSec& xi,
                                  const CoSec& eta) {
  const MultiVec res = jacobi_residual(alg, phi0, pi);
  const Section lhs =
      contract(eta, contract(xi, res)).to_section() * Expr(alg.chart(), Rat(1, 2));
  const Section rhs =
      alg.bracket(sharp(pi, xi), sharp(pi, eta)) -
      sharp(pi, induced_bracket(alg, phi0, pi, xi, eta));
  return lhs - rhs;
}

} // namespace skewcal
