#include "doctest.h"

#include "skewcal/expr.hpp"
#include "skewcal/linalg.hpp"
#include "skewcal/parser.hpp"
#include "skewcal/randexpr.hpp"
#include "skewcal/ratexpr.hpp"

using namespace skewcal;

namespace {

ChartPtr xy() { return make_chart({"x", "y"}); }
ChartPtr xyt() { return make_chart({"x", "y", "t"}); }

Expr P(const std::string& s, const ChartPtr& c) { return parse_expr_or_throw(s, c); }

} // namespace

TEST_CASE("coordinate derivative of a monomial") {
  auto c = xy();
  Expr f = P("x^2*y", c);
  CHECK(f.diff("x") == P("2*x*y", c));
  CHECK(f.diff("y") == P("x^2", c));
  CHECK(f.diff("x").diff("x") == P("2*y", c));
}

TEST_CASE("derivative of an exponential term") {
  auto c = xyt();
  Expr f = P("exp(-2*t)", c);
  CHECK(f.diff("t") == P("-2*exp(-2*t)", c));
  CHECK(f.diff("x").is_zero());
}

TEST_CASE("product with exponential cross terms cancels") {
  auto c = xyt();
  Expr p = P("(x + exp(t)) * (x - exp(t))", c);
  CHECK(p == P("x^2 - exp(2*t)", c));
}

TEST_CASE("exact zero recognition after expansion") {
  auto c = xy();
  Expr z = P("(x+1)^2 - x^2 - 2*x - 1", c);
  CHECK(z.is_zero());
  CHECK(z == Expr(c));
}

TEST_CASE("canonical form merges like terms across orderings") {
  auto c = xy();
  Expr a = P("x*y + y*x", c);
  CHECK(a == P("2*x*y", c));
  CHECK(a.term_count() == 1);
  CHECK(P("x - x", c).is_zero());
}

TEST_CASE("constant_value detects constants only") {
  auto c = xy();
  CHECK(*P("3/4", c).constant_value() == Rat(3, 4));
  CHECK(*Expr(c).constant_value() == 0);
  CHECK(!P("x", c).constant_value());
  CHECK(!P("exp(x)", c).constant_value());
}

TEST_CASE("exact evaluation keeps the exp channel symbolic") {
  auto c = xyt();
  Expr f = P("x*exp(t) + y", c);
  ExactValue v = f.eval({Rat(2), Rat(5), Rat(3)});
  REQUIRE(v.parts().size() == 2);
  CHECK(v.parts().at(Rat(0)) == 5);
  CHECK(v.parts().at(Rat(3)) == 2);
  CHECK(!v.is_rational());
  CHECK(v.to_double() == doctest::Approx(2 * std::exp(3.0) + 5));

  ExactValue w = P("x + 2*y", c).eval({Rat(1, 2), Rat(1), Rat(0)});
  CHECK(w.is_rational());
  CHECK(w.rational_value() == Rat(5, 2));
}

TEST_CASE("exp parts that cancel at a point merge exactly") {
  auto c = xyt();
  // exp(t)*exp(-t) = 1 identically; also x*exp(t) - x*exp(t) = 0.
  CHECK(P("exp(t)*exp(-t)", c) == P("1", c));
  Expr g = P("x*exp(t) - x*exp(t)", c);
  CHECK(g.is_zero());
}

TEST_CASE("extend_chart embeds and respects arithmetic") {
  auto small = xy();
  auto big = xyt();
  Expr f = P("x^2 + y", small);
  Expr g = P("x - 2*y", small);
  Expr fb = f.extended(big);
  CHECK(fb.diff("t").is_zero());
  CHECK((f * g).extended(big) == fb * g.extended(big));
  CHECK((f + g).extended(big) == fb + g.extended(big));
  CHECK(fb == P("x^2 + y", big));
  CHECK_THROWS_AS(P("t", big).extended(small), ChartMismatch);
}

TEST_CASE("chart mismatch is rejected") {
  Expr a = P("x", xy());
  Expr b = P("x", make_chart({"x", "z"}));
  CHECK_THROWS_AS(a + b, ChartMismatch);
}

TEST_CASE("ring axioms on randomized expressions") {
  auto c = xyt();
  RandGen gen(2024);
  for (int i = 0; i < 50; ++i) {
    Expr a = gen.expr(c), b = gen.expr(c), d = gen.expr(c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("derivations: Leibniz rule and commuting partials") {
  auto c = xyt();
  RandGen gen(7);
  for (int i = 0; i < 50; ++i) {
    Expr f = gen.expr(c), g = gen.expr(c);
    for (int k = 0; k < c->dim(); ++k) {
      CHECK((f * g).diff(k) == f.diff(k) * g + f * g.diff(k));
    }
    CHECK(f.diff(0).diff(2) == f.diff(2).diff(0));
    CHECK(f.diff(1).diff(0) == f.diff(0).diff(1));
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  auto c = xyt();
  RandGen gen(99);
  std::vector<Rat> pt = {Rat(1, 3), Rat(-2), Rat(1, 2)};
  for (int i = 0; i < 30; ++i) {
    Expr a = gen.expr(c), b = gen.expr(c);
    auto va = a.eval(pt), vb = b.eval(pt), vs = (a + b).eval(pt), vp = (a * b).eval(pt);
    CHECK(va.to_double() + vb.to_double() == doctest::Approx(vs.to_double()));
    CHECK(va.to_double() * vb.to_double() == doctest::Approx(vp.to_double()));
  }
}

TEST_CASE("exact division in the expression ring") {
  auto c = xyt();
  Expr num = P("x^2 - exp(2*t)", c);
  Expr den = P("x - exp(t)", c);
  auto q = divide_exact(num, den);
  REQUIRE(q.has_value());
  CHECK(*q == P("x + exp(t)", c));
  CHECK((*q) * den == num);

  CHECK(!divide_exact(P("x^2 + y", c), P("x + 1", c)).has_value());
  CHECK(divide_exact(Expr(c), den).has_value());
  CHECK_THROWS_AS(divide_exact(num, Expr(c)), Error);

  // Dividing by a unit (rational multiple of an exponential) always works.
  auto u = divide_exact(P("x + y^2", c), P("-2*exp(-t)", c));
  REQUIRE(u.has_value());
  CHECK(*u * P("-2*exp(-t)", c) == P("x + y^2", c));
}

TEST_CASE("randomized exact division round trip") {
  auto c = xyt();
  RandGen gen(31);
  for (int i = 0; i < 40; ++i) {
    Expr a = gen.expr(c), b = gen.expr(c);
    if (b.is_zero()) {
      continue;
    }
    auto q = divide_exact(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
}

TEST_CASE("printer output re-parses to the same expression") {
  auto c = xyt();
  RandGen gen(1234);
  for (int i = 0; i < 60; ++i) {
    Expr a = gen.expr(c, 4);
    CHECK(P(a.str(), c) == a);
  }
  CHECK(Expr(c).str() == "0");
  CHECK(P("1/2*y - 3*x^2*exp(-t)", c).str() == "1/2*y - 3*x^2*exp(-t)");
  CHECK(P("-y^2", c) == -P("y", c).pow(2));
  CHECK(P("-y^2 + x", c).str() == "x - y^2");
}

TEST_CASE("parser rejects out-of-grammar input with positions") {
  auto c = xyt();
  auto r1 = parse_expr("x^-1", c);
  CHECK(!r1.ok());
  CHECK(r1.pos.col == 3);
  auto r2 = parse_expr("exp(x^2)", c);
  CHECK(!r2.ok());
  auto r3 = parse_expr("2x", c);
  CHECK(!r3.ok());
  auto r4 = parse_expr("1/0", c);
  CHECK(!r4.ok());
  auto r5 = parse_expr("(x + ", c);
  CHECK(!r5.ok());
  auto r6 = parse_expr("x + q", c);
  CHECK(!r6.ok());
  CHECK(r6.message.find("unknown coordinate") != std::string::npos);
  auto r7 = parse_expr("exp(1 + t)", c);
  CHECK(!r7.ok());
  auto r8 = parse_expr("x/2", c);
  CHECK(!r8.ok());
  auto r9 = parse_expr("x @ y", c);
  CHECK(!r9.ok());
  CHECK(r9.pos.col == 3);
}

TEST_CASE("parser accepts the full grammar") {
  auto c = xyt();
  CHECK(P("  -  x ", c) == -Expr::coordinate(c, 0));
  CHECK(P("3/4*x^2*y - 1/2", c) == Expr::coordinate(c, 0).pow(2) * Expr::coordinate(c, 1) * Rat(3, 4) - Expr(c, Rat(1, 2)));
  CHECK(P("exp(-t + 1/2*x)", c) == Expr::exponential(c, {Rat(1, 2), Rat(0), Rat(-1)}));
  CHECK(P("exp(t)^2", c) == Expr::exponential(c, {Rat(0), Rat(0), Rat(2)}));
  CHECK(P("(x + y)^2", c) == P("x^2 + 2*x*y + y^2", c));
  CHECK(P("exp(2*t - t)", c) == P("exp(t)", c));
}

TEST_CASE("standalone rational parsing") {
  CHECK(*parse_rat("3") == 3);
  CHECK(*parse_rat("-3/6") == Rat(-1, 2));
  CHECK(*parse_rat(" 7/2 ") == Rat(7, 2));
  CHECK(!parse_rat("3/0"));
  CHECK(!parse_rat("x"));
  CHECK(!parse_rat("1.5"));
}

TEST_CASE("fraction field arithmetic and normalization") {
  auto c = xyt();
  RatExpr half(P("x", c), P("2*exp(t)", c)); // unit denominator content absorbed
  CHECK(half.is_polynomial());
  CHECK(half == RatExpr(P("1/2*x*exp(-t)", c)));

  RatExpr a(P("1", c), P("x + 1", c));
  RatExpr b(P("1", c), P("x - 1", c));
  RatExpr s = a + b;
  CHECK(s == RatExpr(P("2*x", c), P("x^2 - 1", c)));
  CHECK((a * b) == RatExpr(P("1", c), P("x^2 - 1", c)));
  CHECK((a - a).is_zero());
  CHECK((a / b) == RatExpr(P("x - 1", c), P("x + 1", c)));
  CHECK_THROWS_AS(a / RatExpr::zero(c), Error);

  // Exact cancellation collapses to a polynomial.
  RatExpr q(P("x^2 - 1", c), P("x + 1", c));
  CHECK(q.is_polynomial());
  CHECK(q == RatExpr(P("x - 1", c)));
}

TEST_CASE("fraction field derivative via quotient rule") {
  auto c = xy();
  RatExpr f(P("x", c), P("y", c));
  RatExpr expect(P("-x", c), P("y^2", c));
  CHECK(f.diff(1) == expect);
  CHECK(f.diff(0) == RatExpr(P("1", c), P("y", c)));
}

TEST_CASE("fraction field exact evaluation") {
  auto c = xyt();
  RatExpr f(P("x*exp(t)", c), P("y", c));
  ExactValue v = f.eval({Rat(3), Rat(2), Rat(1)});
  CHECK(v.parts().at(Rat(1)) == Rat(3, 2));
  CHECK_THROWS_AS(f.eval({Rat(3), Rat(0), Rat(1)}), Error);
  auto d = f.eval_double({3.0, 2.0, 0.0});
  CHECK(*d == doctest::Approx(1.5));
}

TEST_CASE("exact matrix inverse with verification") {
  auto c = xy();
  RMat m = rmat_from_expr({{P("1", c), P("y", c)}, {P("0", c), P("1", c)}});
  auto inv = rmat_inverse(m);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][1] == RatExpr(P("-y", c)));
  CHECK(rmat_det(m) == RatExpr(P("1", c)));

  RMat sing = rmat_from_expr({{P("x", c), P("x", c)}, {P("1", c), P("1", c)}});
  CHECK(!rmat_inverse(sing).has_value());
  CHECK(rmat_det(sing).is_zero());
}

TEST_CASE("linear solve handles overdetermined consistent systems") {
  auto c = xy();
  // x-dependent 3x2 system with the unique solution (y, 1-y).
  RMat a = rmat_from_expr({{P("1", c), P("1", c)},
                           {P("x", c), P("0", c)},
                           {P("1", c), P("2", c)}});
  RVec b = {RatExpr(P("1", c)), RatExpr(P("x*y", c)), RatExpr(P("2 - y", c))};
  auto sol = rmat_solve(a, b);
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == RatExpr(P("y", c)));
  CHECK((*sol)[1] == RatExpr(P("1 - y", c)));

  RVec bad = {RatExpr(P("1", c)), RatExpr(P("x*y", c)), RatExpr(P("0", c))};
  CHECK(!rmat_solve(a, bad).has_value());
}

TEST_CASE("nondegenerate metric-style inverse with polynomial entries") {
  auto c = make_chart({"x", "y", "z"});
  // Gram matrix of the kind produced by adapted frames: unit determinant.
  RMat g = rmat_from_expr({{P("1 + y^2", c), P("0", c), P("-y", c)},
                           {P("0", c), P("1", c), P("0", c)},
                           {P("-y", c), P("0", c), P("1", c)}});
  CHECK(rmat_det(g) == RatExpr(P("1", c)));
  auto inv = rmat_inverse(g);
  REQUIRE(inv.has_value());
  CHECK((*inv)[0][0] == RatExpr(P("1", c)));
  CHECK((*inv)[0][2] == RatExpr(P("y", c)));
  CHECK((*inv)[2][2] == RatExpr(P("1 + y^2", c)));
}
