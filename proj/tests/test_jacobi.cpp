#include "doctest.h"

#include "skewcal/calculus.hpp"
#include "skewcal/jacobi.hpp"
#include "skewcal/oplusr.hpp"
#include "skewcal/parser.hpp"
#include "skewcal/randexpr.hpp"

using namespace skewcal;

namespace {

Expr P(const std::string& s, const ChartPtr& c) { return parse_expr_or_throw(s, c); }

Section random_section(RandGen& rng, const ChartPtr& chart, int rank) {
  std::vector<Expr> comps;
  for (int a = 0; a < rank; ++a) comps.push_back(rng.expr(chart, 2));
  return Section(chart, std::move(comps));
}

MultiVec random_multivec(RandGen& rng, const ChartPtr& chart, int rank,
                         int degree) {
  MultiVec out(chart, rank, degree);
  for (const auto& key : detail::increasing_tuples(rank, degree))
    out.add_coeff(key, rng.expr(chart, 2));
  return out;
}

CoSec random_cosec(RandGen& rng, const ChartPtr& chart, int rank, int degree) {
  CoSec out(chart, rank, degree);
  for (const auto& key : detail::increasing_tuples(rank, degree))
    out.add_coeff(key, rng.expr(chart, 2));
  return out;
}

AlgebroidDef heisenberg_frame() {
  auto c = make_chart({"x", "y", "z"});
  std::vector<std::vector<Expr>> anchor = {
      {P("1", c), Expr(c), P("y", c)},
      {Expr(c), P("1", c), Expr(c)},
      {Expr(c), Expr(c), P("1", c)},
  };
  return AlgebroidDef(c, 3, anchor, {{0, 1, 2, P("-1", c)}});
}

/// Closed non-constant twist on the frame above: d(x e^1 + e^2) = 0.
CoSec closed_twist(const AlgebroidDef& alg) {
  const ChartPtr& c = alg.chart();
  return CoSec::from_components(c, {P("x", c), P("1", c), Expr(c)});
}

} // namespace

TEST_CASE("twisted bracket with zero twist is the plain bracket") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  CoSec zero_twist(c, 3, 1);
  RandGen rng(7);
  for (int iter = 0; iter < 4; ++iter) {
    for (int a1 : {0, 1, 2}) {
      for (int a2 : {0, 1, 2}) {
        MultiVec d1 = random_multivec(rng, c, 3, a1);
        MultiVec d2 = random_multivec(rng, c, 3, a2);
        CHECK(phi_schouten(alg, zero_twist, d1, d2) == schouten(alg, d1, d2));
      }
    }
  }
}

TEST_CASE("twisted bracket on sections and functions") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  CoSec phi0 = closed_twist(alg);
  RandGen rng(17);
  for (int iter = 0; iter < 6; ++iter) {
    Section x = random_section(rng, c, 3);
    Section y = random_section(rng, c, 3);
    Expr f = rng.expr(c, 2);
    // degree-1 pairs see no twist
    CHECK(phi_schouten(alg, phi0, MultiVec::from_section(x),
                       MultiVec::from_section(y)).to_section() ==
          alg.bracket(x, y));
    // against functions the anchor is twisted by <phi0, X>
    CHECK(phi_schouten(alg, phi0, MultiVec::from_section(x),
                       MultiVec::from_function(3, f)).scalar() ==
          alg.anchor_apply(x, f) + eval_cosec(phi0, {x}) * f);
  }
}

TEST_CASE("twisted bracket graded antisymmetry") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  CoSec phi0 = closed_twist(alg);
  RandGen rng(27);
  for (int iter = 0; iter < 3; ++iter) {
    for (int a1 : {1, 2, 3}) {
      for (int a2 : {1, 2}) {
        MultiVec d1 = random_multivec(rng, c, 3, a1);
        MultiVec d2 = random_multivec(rng, c, 3, a2);
        MultiVec rhs = phi_schouten(alg, phi0, d2, d1);
        if (((a1 - 1) * (a2 - 1)) % 2 == 0) rhs = -rhs;
        CHECK(phi_schouten(alg, phi0, d1, d2) == rhs);
      }
    }
  }
}

TEST_CASE("twisted self-bracket expands as plain bracket plus wedge term") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  CoSec phi0 = closed_twist(alg);
  RandGen rng(37);
  for (int iter = 0; iter < 4; ++iter) {
    MultiVec pi = random_multivec(rng, c, 3, 2);
    MultiVec lhs = jacobi_residual(alg, phi0, pi);
    MultiVec rhs = schouten(alg, pi, pi) +
                   wedge(pi, contract(phi0, pi)) * Rat(2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("twisted differential squares to wedging by the twist's differential") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(47);
  // non-closed twist: d e^3 = e^1 ^ e^2 on this frame
  CoSec bad = CoSec::basis(c, 3, {2});
  CoSec dbad = differential(alg, bad);
  CHECK_FALSE(dbad.is_zero());
  for (int iter = 0; iter < 5; ++iter) {
    for (int deg : {0, 1}) {
      CoSec w = random_cosec(rng, c, 3, deg);
      CoSec dd = phi_differential(alg, bad, phi_differential(alg, bad, w));
      CHECK(dd == wedge(dbad, w));
      // closed twist: complex
      CoSec good = closed_twist(alg);
      CHECK(differential(alg, good).is_zero());
      CoSec dd2 = phi_differential(alg, good, phi_differential(alg, good, w));
      CHECK(dd2.is_zero());
    }
  }
}

TEST_CASE("twisted lie derivative on functions matches the twisted bracket") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  CoSec phi0 = closed_twist(alg);
  RandGen rng(57);
  for (int iter = 0; iter < 5; ++iter) {
    Section x = random_section(rng, c, 3);
    Expr f = rng.expr(c, 2);
    CHECK(phi_lie_derivative(alg, phi0, x, CoSec::from_function(3, f)).scalar() ==
          phi_lie_derivative(alg, phi0, x, MultiVec::from_function(3, f)).scalar());
  }
}

TEST_CASE("contact pair is compatible on the extended algebroid") {
  // 3-dimensional standard contact form
  auto c = make_chart({"x", "y", "z"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  AlgebroidDef ext = build_oplus(tm);
  CoSec eta = CoSec::from_components(c, {P("-y", c), Expr(c), P("1", c)});
  ContactToJacobi ctj = contact_to_jacobi(tm, eta);
  MultiVec pi = flat_pair(ctj.lambda, MultiVec::from_section(ctj.reeb));
  CoSec phi0 = CoSec::basis(c, 4, {3});
  CHECK(jacobi_residual(ext, phi0, pi).is_zero());

  // the plain (untwisted) self-bracket does NOT vanish
  CHECK_FALSE(schouten(ext, pi, pi).is_zero());

  // 5-dimensional example
  auto c5 = make_chart({"x1", "y1", "x2", "y2", "z"});
  AlgebroidDef tm5 = AlgebroidDef::tangent(c5);
  AlgebroidDef ext5 = build_oplus(tm5);
  CoSec eta5 = CoSec::from_components(
      c5, {P("-y1", c5), Expr(c5), P("-y2", c5), Expr(c5), P("1", c5)});
  ContactToJacobi ctj5 = contact_to_jacobi(tm5, eta5);
  MultiVec pi5 = flat_pair(ctj5.lambda, MultiVec::from_section(ctj5.reeb));
  CoSec phi05 = CoSec::basis(c5, 6, {5});
  CHECK(jacobi_residual(ext5, phi05, pi5).is_zero());
}

TEST_CASE("flat bivector on the plane: dual algebroid and cross-checks") {
  auto c = make_chart({"x", "y"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  MultiVec pi(c, 2, 2);
  pi.add_coeff({0, 1}, P("1", c));
  CoSec no_twist(c, 2, 1);
  CHECK(jacobi_residual(tm, no_twist, pi).is_zero());

  InducedDual dual = build_induced_dual(tm, no_twist, pi);
  // sharp(dx) = d_y, sharp(dy) = -d_x
  CHECK(dual.dual.anchor_entry(0, 0).is_zero());
  CHECK(dual.dual.anchor_entry(0, 1) == P("1", c));
  CHECK(dual.dual.anchor_entry(1, 0) == P("-1", c));
  CHECK(dual.dual.anchor_entry(1, 1).is_zero());
  CHECK(dual.dual.structure_is_zero());
  CHECK(dual.x0.is_zero());
  // the dual is again a flat frame
  CHECK(dual.dual.check_anchor_morphism().ok);

  // agreement: formula bracket on random cosections equals the dual
  // algebroid's extension of its structure functions
  RandGen rng(67);
  for (int iter = 0; iter < 6; ++iter) {
    CoSec xi = random_cosec(rng, c, 2, 1);
    CoSec eta = random_cosec(rng, c, 2, 1);
    CoSec lhs = induced_bracket(tm, no_twist, pi, xi, eta);
    Section xs(c, {xi.coeff({0}), xi.coeff({1})});
    Section es(c, {eta.coeff({0}), eta.coeff({1})});
    Section rhs = dual.dual.bracket(xs, es);
    for (int a = 0; a < 2; ++a) CHECK(lhs.coeff({a}) == rhs.comp(a));
  }
}

TEST_CASE("poisson differential on the dual equals bracketing the bivector") {
  auto c = make_chart({"x", "y"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  MultiVec pi(c, 2, 2);
  pi.add_coeff({0, 1}, P("1", c));
  CoSec no_twist(c, 2, 1);
  InducedDual dual = build_induced_dual(tm, no_twist, pi);
  RandGen rng(77);
  for (int iter = 0; iter < 6; ++iter) {
    // degree 0
    Expr f = rng.expr(c, 2);
    CoSec lhs0 = differential(dual.dual, CoSec::from_function(2, f));
    MultiVec rhs0 = schouten(tm, pi, MultiVec::from_function(2, f));
    CHECK(lhs0 == as_cosec(rhs0));
    // degree 1
    MultiVec d = random_multivec(rng, c, 2, 1);
    CoSec lhs1 = differential(dual.dual, as_cosec(d));
    MultiVec rhs1 = schouten(tm, pi, d);
    CHECK(lhs1 == as_cosec(rhs1));
  }
}

TEST_CASE("induced dual of the contact pair is a flat frame") {
  auto c = make_chart({"x", "y", "z"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  AlgebroidDef ext = build_oplus(tm);
  CoSec eta = CoSec::from_components(c, {P("-y", c), Expr(c), P("1", c)});
  ContactToJacobi ctj = contact_to_jacobi(tm, eta);
  MultiVec pi = flat_pair(ctj.lambda, MultiVec::from_section(ctj.reeb));
  CoSec phi0 = CoSec::basis(c, 4, {3});
  InducedDual dual = build_induced_dual(ext, phi0, pi);
  // Jacobi bivector makes the dual a flat frame (jacobiator + morphism)
  CHECK(dual.dual.check_anchor_morphism().ok);
  RandGen rng(87);
  for (int iter = 0; iter < 3; ++iter) {
    Section x = random_section(rng, c, 4);
    Section y = random_section(rng, c, 4);
    Section z = random_section(rng, c, 4);
    CHECK(dual.dual.jacobiator(x, y, z).is_zero());
  }
  // agreement between formula bracket and dual-algebroid bracket
  for (int iter = 0; iter < 4; ++iter) {
    CoSec xi = random_cosec(rng, c, 4, 1);
    CoSec eta2 = random_cosec(rng, c, 4, 1);
    CoSec lhs = induced_bracket(ext, phi0, pi, xi, eta2);
    std::vector<Expr> xc, ec;
    for (int a = 0; a < 4; ++a) {
      xc.push_back(xi.coeff({a}));
      ec.push_back(eta2.coeff({a}));
    }
    Section rhs = dual.dual.bracket(Section(c, xc), Section(c, ec));
    for (int a = 0; a < 4; ++a) CHECK(lhs.coeff({a}) == rhs.comp(a));
  }
  // x0 = -sharp(pi, phi0) = -reeb, viewed over the dual frame
  for (int a = 0; a < 3; ++a)
    CHECK(dual.x0.coeff({a}) == -ctj.reeb.comp(a));
  CHECK(dual.x0.coeff({3}).is_zero());
}

TEST_CASE("comparison identity between sharp images and the induced bracket") {
  // arbitrary (non-compatible) bivector, zero twist, flat frame
  auto c = make_chart({"x", "y", "z"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  MultiVec pi(c, 3, 2);
  pi.add_coeff({1, 2}, P("z", c));
  pi.add_coeff({0, 2}, P("-x", c));
  pi.add_coeff({0, 1}, P("y", c));
  CoSec no_twist(c, 3, 1);
  CHECK_FALSE(jacobi_residual(tm, no_twist, pi).is_zero());
  RandGen rng(97);
  for (int iter = 0; iter < 4; ++iter) {
    CoSec xi = random_cosec(rng, c, 3, 1);
    CoSec eta = random_cosec(rng, c, 3, 1);
    CHECK(bracket_identity_residual(tm, no_twist, pi, xi, eta).is_zero());
  }
  // with a twist and a curved frame
  AlgebroidDef alg = heisenberg_frame();
  CoSec phi0 = closed_twist(alg);
  for (int iter = 0; iter < 4; ++iter) {
    MultiVec pi2 = random_multivec(rng, alg.chart(), 3, 2);
    CoSec xi = random_cosec(rng, alg.chart(), 3, 1);
    CoSec eta = random_cosec(rng, alg.chart(), 3, 1);
    CHECK(bracket_identity_residual(alg, phi0, pi2, xi, eta).is_zero());
  }
}
