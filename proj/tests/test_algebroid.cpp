#include "doctest.h"

#include "skewcal/algebroid.hpp"
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

} // namespace

TEST_CASE("tangent algebroid brackets reduce to vector field commutators") {
  auto c = make_chart({"x", "y"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  CHECK(tm.rank() == 2);
  CHECK(tm.structure_is_zero());

  // [d_x, x*d_y] = d_y
  Section dx = tm.frame(0);
  Section xdy(c, {Expr(c), P("x", c)});
  Section expect_dy = tm.frame(1);
  CHECK(tm.bracket(dx, xdy) == expect_dy);

  // [x*d_x, y*d_y] = 0 (commuting scalings of distinct coordinates)
  Section xdx(c, {P("x", c), Expr(c)});
  Section ydy(c, {Expr(c), P("y", c)});
  CHECK(tm.bracket(xdx, ydy).is_zero());

  // [d_x + y*d_y, y*d_x] = (y-... ) hand value:
  // V = d_x + y d_y, W = y d_x. [V,W] = V(y) d_x - W(1) d_x - W(y) d_y = y d_x.
  Section v(c, {P("1", c), P("y", c)});
  Section w(c, {P("y", c), Expr(c)});
  Section vw = tm.bracket(v, w);
  CHECK(vw.comp(0) == P("y", c));
  CHECK(vw.comp(1).is_zero());
}

TEST_CASE("anchor application is the directional derivative") {
  auto c = make_chart({"x", "y"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  Section v(c, {P("y", c), P("x^2", c)});
  Expr f = P("x*y + y^2", c);
  // (y d_x + x^2 d_y) f = y*y + x^2*(x + 2y)
  CHECK(tm.anchor_apply(v, f) == P("y^2 + x^3 + 2*x^2*y", c));
}

TEST_CASE("constant-structure bracket on a two-element frame") {
  auto c = make_chart({"s"});
  // [e1, e2] = e2, zero anchor: the non-abelian two-dimensional algebra.
  std::vector<std::vector<Expr>> anchor(2, std::vector<Expr>{Expr(c)});
  AlgebroidDef aff(c, 2, anchor, {{0, 1, 1, Expr(c, Rat(1))}});
  CHECK(aff.bracket_frame(0, 1) == aff.frame(1));
  CHECK(aff.bracket_frame(1, 0) == -aff.frame(1));
  CHECK(aff.bracket_frame(0, 0).is_zero());
  // With zero anchor the bracket is bilinear over functions:
  Section x = aff.frame(0) * P("s", c);
  Section y = aff.frame(1) * P("s^2", c);
  Section b = aff.bracket(x, y);
  CHECK(b.comp(0).is_zero());
  CHECK(b.comp(1) == P("s^3", c));
  // Frame jacobiator vanishes (it is a Lie algebra).
  CHECK(aff.jacobiator(aff.frame(0), aff.frame(1), aff.frame(0)).is_zero());
  CHECK(aff.check_anchor_morphism().ok);
}

TEST_CASE("bracket is antisymmetric and Leibniz in the second slot") {
  auto c = make_chart({"x", "y", "t"});
  // A non-Lie test bed: structure c^1_{12} = y with a nontrivial anchor.
  std::vector<std::vector<Expr>> anchor = {
      {P("1", c), Expr(c), Expr(c)},
      {Expr(c), P("x", c), P("1", c)},
  };
  AlgebroidDef alg(c, 2, anchor, {{0, 1, 0, P("y", c)}});

  RandGen rng(99);
  for (int iter = 0; iter < 25; ++iter) {
    Section x = random_section(rng, c, 2);
    Section y = random_section(rng, c, 2);
    Expr f = rng.expr(c, 2);
    CHECK(alg.bracket(x, y) == -alg.bracket(y, x));
    // [X, fY] = f [X,Y] + (rho(X) f) Y
    Section lhs = alg.bracket(x, y * f);
    Section rhs = alg.bracket(x, y) * f + y * alg.anchor_apply(x, f);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("jacobiator and anchor morphism detect a broken frame") {
  auto c = make_chart({"x", "y", "z"});
  std::vector<std::vector<Expr>> anchor = {
      {P("1", c), Expr(c), Expr(c)},
      {Expr(c), P("1", c), Expr(c)},
      {P("1", c), Expr(c), Expr(c)},
  };
  AlgebroidDef broken(c, 3, anchor,
                      {{0, 1, 2, P("x", c)}, {0, 2, 1, P("1", c)}});

  // Brute-force frame jacobiator:
  //   [e1,e2] = x e3, [[e1,e2],e3] = [x e3, e3] = -(rho(e3) x) e3 = -e3
  //   [e2,e3] = 0, [e3,e1] = -e2, [[e3,e1],e2] = [-e2, e2] = 0
  Section j = broken.jacobiator(broken.frame(0), broken.frame(1), broken.frame(2));
  CHECK(j == -broken.frame(2));

  AnchorMorphismReport rep = broken.check_anchor_morphism();
  CHECK_FALSE(rep.ok);
  REQUIRE(rep.failing.size() == 2);
  // rho([e1,e2]) = x d_x while [rho e1, rho e2] = [d_x, d_y] = 0.
  CHECK(rep.failing[0] == std::pair<int, int>(0, 1));
  CHECK(rep.residuals[0][0] == P("x", c));
  CHECK(rep.residuals[0][1].is_zero());
  CHECK(rep.residuals[0][2].is_zero());
  // rho([e1,e3]) = rho(e2) = d_y while [rho e1, rho e3] = [d_x, d_x] = 0.
  CHECK(rep.failing[1] == std::pair<int, int>(0, 2));
  CHECK(rep.residuals[1][0].is_zero());
  CHECK(rep.residuals[1][1] == P("1", c));
  CHECK(rep.residuals[1][2].is_zero());
}

TEST_CASE("tangent algebroids satisfy jacobi and anchor morphism") {
  auto c = make_chart({"x", "y", "t"});
  AlgebroidDef tm = AlgebroidDef::tangent(c);
  CHECK(tm.check_anchor_morphism().ok);
  RandGen rng(5);
  for (int iter = 0; iter < 10; ++iter) {
    Section x = random_section(rng, c, 3);
    Section y = random_section(rng, c, 3);
    Section z = random_section(rng, c, 3);
    CHECK(tm.jacobiator(x, y, z).is_zero());
  }
}

TEST_CASE("structure entries validate shape") {
  auto c = make_chart({"x"});
  std::vector<std::vector<Expr>> anchor = {{Expr(c)}, {Expr(c)}};
  CHECK_THROWS_AS(AlgebroidDef(c, 2, anchor, {{1, 0, 0, Expr(c, Rat(1))}}),
                  ShapeError);
  CHECK_THROWS_AS(AlgebroidDef(c, 2, anchor, {{0, 1, 5, Expr(c, Rat(1))}}),
                  ShapeError);
  CHECK_THROWS_AS(AlgebroidDef(c, 2, {{Expr(c)}}, {}), ShapeError);
}
