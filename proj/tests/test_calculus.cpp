#include "doctest.h"

#include "skewcal/calculus.hpp"
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

/// Independent oracle: the classical formula for the bracket of wedge
/// products of sections,
///   [X_1^..^X_k, Y_1^..^Y_l] =
///     sum_{i,j} (-1)^{i+j} [X_i,Y_j] ^ X_1^..^hat X_i^..^X_k ^ Y_1^..^hat Y_j^..^Y_l.
MultiVec oracle_bracket_decomposable(const AlgebroidDef& alg,
                                     const std::vector<Section>& xs,
                                     const std::vector<Section>& ys) {
  const int k = static_cast<int>(xs.size());
  const int l = static_cast<int>(ys.size());
  MultiVec out(alg.chart(), alg.rank(), k + l - 1);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= l; ++j) {
      MultiVec t = MultiVec::from_section(
          alg.bracket(xs[static_cast<size_t>(i - 1)],
                      ys[static_cast<size_t>(j - 1)]));
      for (int p = 1; p <= k; ++p)
        if (p != i)
          t = wedge(t, MultiVec::from_section(xs[static_cast<size_t>(p - 1)]));
      for (int q = 1; q <= l; ++q)
        if (q != j)
          t = wedge(t, MultiVec::from_section(ys[static_cast<size_t>(q - 1)]));
      if ((i + j) % 2 == 1) t = -t;
      out += t;
    }
  }
  return out;
}

/// Independent oracle: bracket of a wedge of sections with a function,
///   [X_1^..^X_k, f] = sum_i (-1)^{k-i} (rho(X_i) f) X_1^..^hat X_i^..^X_k.
MultiVec oracle_bracket_function(const AlgebroidDef& alg,
                                 const std::vector<Section>& xs,
                                 const Expr& f) {
  const int k = static_cast<int>(xs.size());
  MultiVec out(alg.chart(), alg.rank(), k - 1);
  for (int i = 1; i <= k; ++i) {
    Expr coeff = alg.anchor_apply(xs[static_cast<size_t>(i - 1)], f);
    if ((k - i) % 2 == 1) coeff = -coeff;
    MultiVec t = MultiVec::from_function(alg.rank(), coeff);
    for (int p = 1; p <= k; ++p)
      if (p != i)
        t = wedge(t, MultiVec::from_section(xs[static_cast<size_t>(p - 1)]));
    out += t;
  }
  return out;
}

/// Independent oracle for the differential: build it from its values on
/// generators (d f = sum_a (rho(e_a) f) e^a on functions, d e^c =
/// -sum_{a<b} c^c_{ab} e^a ^ e^b on the coframe) extended by the graded
/// Leibniz rule.
CoSec oracle_differential(const AlgebroidDef& alg, const CoSec& w) {
  const ChartPtr& chart = alg.chart();
  const int r = alg.rank();
  auto d_function = [&](const Expr& f) {
    CoSec out(chart, r, 1);
    for (int a = 0; a < r; ++a)
      out.add_coeff({a}, alg.anchor_apply(alg.frame(a), f));
    return out;
  };
  auto d_basis1 = [&](int c) {
    CoSec out(chart, r, 2);
    for (int a = 0; a < r; ++a)
      for (int b = a + 1; b < r; ++b)
        out.add_coeff({a, b}, -alg.structure(a, b, c));
    return out;
  };
  CoSec out(chart, r, w.degree() + 1);
  for (const auto& [key, f] : w.coeffs()) {
    // d(f e^I) = df ^ e^I + f sum_p (-1)^p e^{i_0..i_{p-1}} ^ de^{i_p} ^ rest
    out += wedge(d_function(f), CoSec::basis(chart, r, key));
    for (size_t p = 0; p < key.size(); ++p) {
      CoSec t = CoSec::basis(chart, r,
                             std::vector<int>(key.begin(),
                                              key.begin() + static_cast<long>(p)));
      t = wedge(t, d_basis1(key[p]));
      t = wedge(t, CoSec::basis(chart, r,
                                std::vector<int>(key.begin() + static_cast<long>(p) + 1,
                                                 key.end())));
      t = t * f;
      if (p % 2 == 1) t = -t;
      out += t;
    }
  }
  return out;
}

AlgebroidDef heisenberg_frame() {
  auto c = make_chart({"x", "y", "z"});
  // Frame e1 = d_x + y d_z, e2 = d_y, e3 = d_z with [e1, e2] = -e3.
  std::vector<std::vector<Expr>> anchor = {
      {P("1", c), Expr(c), P("y", c)},
      {Expr(c), P("1", c), Expr(c)},
      {Expr(c), Expr(c), P("1", c)},
  };
  return AlgebroidDef(c, 3, anchor, {{0, 1, 2, P("-1", c)}});
}

AlgebroidDef broken_frame() {
  auto c = make_chart({"x", "y", "z"});
  std::vector<std::vector<Expr>> anchor = {
      {P("1", c), Expr(c), Expr(c)},
      {Expr(c), P("1", c), Expr(c)},
      {P("1", c), Expr(c), Expr(c)},
  };
  return AlgebroidDef(c, 3, anchor,
                      {{0, 1, 2, P("x", c)}, {0, 2, 1, P("1", c)}});
}

} // namespace

TEST_CASE("wedge product: basis behaviour and graded commutativity") {
  auto c = make_chart({"x", "y"});
  MultiVec e1 = MultiVec::basis(c, 3, {0});
  MultiVec e2 = MultiVec::basis(c, 3, {1});
  MultiVec e12 = wedge(e1, e2);
  CHECK(e12.coeff({0, 1}) == P("1", c));
  CHECK(e12.coeff({1, 0}) == P("-1", c));
  CHECK(wedge(e2, e1) == -e12);
  CHECK(wedge(e1, e1).is_zero());

  RandGen rng(11);
  for (int iter = 0; iter < 10; ++iter) {
    MultiVec a = random_multivec(rng, c, 3, 1);
    MultiVec b = random_multivec(rng, c, 3, 2);
    // a ^ b = (-1)^{1*2} b ^ a
    CHECK(wedge(a, b) == wedge(b, a));
    MultiVec a2 = random_multivec(rng, c, 3, 1);
    CHECK(wedge(a, a2) == -wedge(a2, a));
    // associativity
    CHECK(wedge(wedge(a, a2), b) == wedge(a, wedge(a2, b)));
  }
}

TEST_CASE("pairing: coframe dual to frame, factorization on wedges") {
  auto c = make_chart({"x", "y"});
  MultiVec e12 = MultiVec::basis(c, 2, {0, 1});
  CoSec f12 = CoSec::basis(c, 2, {0, 1});
  CHECK(pair_full(e12, f12) == P("1", c));

  RandGen rng(21);
  for (int iter = 0; iter < 10; ++iter) {
    Section x = random_section(rng, c, 2);
    Section y = random_section(rng, c, 2);
    CoSec al = random_cosec(rng, c, 2, 1);
    CoSec be = random_cosec(rng, c, 2, 1);
    // <X ^ Y, alpha ^ beta> = <X,alpha><Y,beta> - <X,beta><Y,alpha>
    Expr lhs = pair_full(wedge(MultiVec::from_section(x),
                               MultiVec::from_section(y)),
                         wedge(al, be));
    auto p = [&](const Section& s, const CoSec& w) {
      return pair_full(MultiVec::from_section(s), w);
    };
    CHECK(lhs == p(x, al) * p(y, be) - p(x, be) * p(y, al));
  }
}

TEST_CASE("contraction is adjoint to wedging") {
  auto c = make_chart({"x", "y", "t"});
  RandGen rng(31);
  for (int iter = 0; iter < 10; ++iter) {
    CoSec phi = random_cosec(rng, c, 3, 1);
    MultiVec d = random_multivec(rng, c, 3, 2);
    CoSec w = random_cosec(rng, c, 3, 1);
    CHECK(pair_full(contract(phi, d), w) == pair_full(d, wedge(phi, w)));
    MultiVec d3 = random_multivec(rng, c, 3, 3);
    CoSec w2 = random_cosec(rng, c, 3, 2);
    CHECK(pair_full(contract(phi, d3), w2) == pair_full(d3, wedge(phi, w2)));
  }
}

TEST_CASE("insertion and evaluation of cosections") {
  auto c = make_chart({"x", "y"});
  CoSec f12 = CoSec::basis(c, 2, {0, 1});
  Section e1 = Section::frame(c, 2, 0);
  Section e2 = Section::frame(c, 2, 1);
  CHECK(eval_cosec(f12, {e1, e2}) == P("1", c));
  CHECK(eval_cosec(f12, {e2, e1}) == P("-1", c));

  RandGen rng(41);
  for (int iter = 0; iter < 10; ++iter) {
    Section x = random_section(rng, c, 2);
    Section y = random_section(rng, c, 2);
    CoSec w = random_cosec(rng, c, 2, 2);
    // evaluation agrees with the full pairing against the wedge
    CHECK(eval_cosec(w, {x, y}) ==
          pair_full(wedge(MultiVec::from_section(x), MultiVec::from_section(y)), w));
  }
}

TEST_CASE("graded bracket reduces to the algebroid bracket and anchor") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(51);
  for (int iter = 0; iter < 8; ++iter) {
    Section x = random_section(rng, c, 3);
    Section y = random_section(rng, c, 3);
    Expr f = rng.expr(c, 2);
    CHECK(schouten(alg, MultiVec::from_section(x), MultiVec::from_section(y))
              .to_section() == alg.bracket(x, y));
    CHECK(schouten(alg, MultiVec::from_section(x),
                   MultiVec::from_function(3, f)).scalar() ==
          alg.anchor_apply(x, f));
    // [f, X] = -rho(X) f
    CHECK(schouten(alg, MultiVec::from_function(3, f),
                   MultiVec::from_section(x)).scalar() ==
          -alg.anchor_apply(x, f));
  }
}

TEST_CASE("graded bracket matches the decomposable-product oracle") {
  for (const AlgebroidDef& alg : {heisenberg_frame(), broken_frame()}) {
    const ChartPtr& c = alg.chart();
    RandGen rng(61);
    for (int iter = 0; iter < 4; ++iter) {
      std::vector<Section> xs, ys;
      for (int i = 0; i < 2; ++i) xs.push_back(random_section(rng, c, 3));
      for (int i = 0; i < 2; ++i) ys.push_back(random_section(rng, c, 3));
      // degrees (2,2)
      MultiVec d1 = wedge(MultiVec::from_section(xs[0]),
                          MultiVec::from_section(xs[1]));
      MultiVec d2 = wedge(MultiVec::from_section(ys[0]),
                          MultiVec::from_section(ys[1]));
      CHECK(schouten(alg, d1, d2) == oracle_bracket_decomposable(alg, xs, ys));
      // degrees (1,2) and (2,1)
      CHECK(schouten(alg, MultiVec::from_section(xs[0]), d2) ==
            oracle_bracket_decomposable(alg, {xs[0]}, ys));
      CHECK(schouten(alg, d1, MultiVec::from_section(ys[0])) ==
            oracle_bracket_decomposable(alg, xs, {ys[0]}));
      // degrees (3,2)
      std::vector<Section> xs3 = xs;
      xs3.push_back(random_section(rng, c, 3));
      MultiVec d13 = wedge(d1, MultiVec::from_section(xs3[2]));
      CHECK(schouten(alg, d13, d2) == oracle_bracket_decomposable(alg, xs3, ys));
      // against functions, degrees (2,0) and (3,0)
      Expr f = rng.expr(c, 2);
      CHECK(schouten(alg, d1, MultiVec::from_function(3, f)) ==
            oracle_bracket_function(alg, xs, f));
      CHECK(schouten(alg, d13, MultiVec::from_function(3, f)) ==
            oracle_bracket_function(alg, xs3, f));
    }
  }
}

TEST_CASE("graded bracket antisymmetry and derivation rule") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(71);
  for (int iter = 0; iter < 4; ++iter) {
    for (int a1 : {1, 2}) {
      for (int a2 : {1, 2}) {
        MultiVec d1 = random_multivec(rng, c, 3, a1);
        MultiVec d2 = random_multivec(rng, c, 3, a2);
        // [D1, D2] = -(-1)^{(a1-1)(a2-1)} [D2, D1]
        MultiVec rhs = schouten(alg, d2, d1);
        if (((a1 - 1) * (a2 - 1)) % 2 == 0) rhs = -rhs;
        CHECK(schouten(alg, d1, d2) == rhs);
      }
    }
    // [D1, D2 ^ D3] = [D1,D2] ^ D3 + (-1)^{(a1-1) a2} D2 ^ [D1,D3]
    MultiVec d1 = random_multivec(rng, c, 3, 2);
    MultiVec d2 = random_multivec(rng, c, 3, 1);
    MultiVec d3 = random_multivec(rng, c, 3, 1);
    MultiVec lhs = schouten(alg, d1, wedge(d2, d3));
    MultiVec rhs = wedge(schouten(alg, d1, d2), d3) -
                   wedge(d2, schouten(alg, d1, d3));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("graded jacobi identity holds on a flat frame") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(81);
  for (int iter = 0; iter < 2; ++iter) {
    MultiVec d1 = random_multivec(rng, c, 3, 1);
    MultiVec d2 = random_multivec(rng, c, 3, 2);
    MultiVec d3 = random_multivec(rng, c, 3, 2);
    const int a1 = 1, a2 = 2, a3 = 2;
    MultiVec j1 = schouten(alg, schouten(alg, d1, d2), d3);
    if (((a1 - 1) * (a3 - 1)) % 2 == 1) j1 = -j1;
    MultiVec j2 = schouten(alg, schouten(alg, d2, d3), d1);
    if (((a2 - 1) * (a1 - 1)) % 2 == 1) j2 = -j2;
    MultiVec j3 = schouten(alg, schouten(alg, d3, d1), d2);
    if (((a3 - 1) * (a2 - 1)) % 2 == 1) j3 = -j3;
    CHECK((j1 + j2 + j3).is_zero());
  }
}

TEST_CASE("differential on functions and coframe basis") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  // d f has components rho(e_a) f
  Expr f = P("x*z", c);
  CoSec df = differential(alg, CoSec::from_function(3, f));
  CHECK(df.coeff({0}) == P("z + x*y", c)); // (d_x + y d_z)(xz)
  CHECK(df.coeff({1}).is_zero());
  CHECK(df.coeff({2}) == P("x", c));
  // d e^3 = -c^3_{12} e^1 ^ e^2 = e^1 ^ e^2
  CoSec de3 = differential(alg, CoSec::basis(c, 3, {2}));
  CHECK(de3 == CoSec::basis(c, 3, {0, 1}));
  CHECK(differential(alg, CoSec::basis(c, 3, {0})).is_zero());
}

TEST_CASE("differential matches the generator-Leibniz oracle") {
  for (const AlgebroidDef& alg : {heisenberg_frame(), broken_frame()}) {
    const ChartPtr& c = alg.chart();
    RandGen rng(91);
    for (int iter = 0; iter < 5; ++iter) {
      for (int deg : {0, 1, 2}) {
        CoSec w = random_cosec(rng, c, 3, deg);
        CHECK(differential(alg, w) == oracle_differential(alg, w));
      }
    }
  }
}

TEST_CASE("differential is an antiderivation for the wedge") {
  AlgebroidDef alg = broken_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(101);
  for (int iter = 0; iter < 5; ++iter) {
    CoSec a = random_cosec(rng, c, 3, 1);
    CoSec b = random_cosec(rng, c, 3, 1);
    CHECK(differential(alg, wedge(a, b)) ==
          wedge(differential(alg, a), b) - wedge(a, differential(alg, b)));
    Expr f = rng.expr(c, 2);
    CHECK(differential(alg, a * f) ==
          wedge(differential(alg, CoSec::from_function(3, f)), a) +
              differential(alg, a) * f);
  }
}

TEST_CASE("differential squares to zero exactly on flat frames") {
  AlgebroidDef good = heisenberg_frame();
  AlgebroidDef bad = broken_frame();
  RandGen rng(111);
  for (int iter = 0; iter < 5; ++iter) {
    CoSec w0 = random_cosec(rng, good.chart(), 3, 0);
    CoSec w1 = random_cosec(rng, good.chart(), 3, 1);
    CHECK(differential(good, differential(good, w0)).is_zero());
    CHECK(differential(good, differential(good, w1)).is_zero());
  }
  // The broken frame fails d^2 = 0 on a coframe element:
  bool nonzero = false;
  for (int a = 0; a < 3; ++a) {
    CoSec dd = differential(bad, differential(bad, CoSec::basis(bad.chart(), 3, {a})));
    if (!dd.is_zero()) nonzero = true;
  }
  // ... or on a coordinate function (anchor-morphism failure shows here).
  CoSec ddx = differential(
      bad, differential(bad, CoSec::from_function(3, P("x", bad.chart()))));
  CHECK((nonzero || !ddx.is_zero()));
}

TEST_CASE("lie derivative: homotopy formula behaviour") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(121);
  for (int iter = 0; iter < 5; ++iter) {
    Section x = random_section(rng, c, 3);
    Expr f = rng.expr(c, 2);
    CHECK(lie_derivative(alg, x, CoSec::from_function(3, f)).scalar() ==
          alg.anchor_apply(x, f));
    // L_X commutes with d on a flat frame
    CoSec w = random_cosec(rng, c, 3, 1);
    CHECK(differential(alg, lie_derivative(alg, x, w)) ==
          lie_derivative(alg, x, differential(alg, w)));
    // L_X (w(Y)) = (L_X w)(Y) + w([X,Y])
    Section y = random_section(rng, c, 3);
    Expr lhs = alg.anchor_apply(x, eval_cosec(w, {y}));
    Expr rhs = eval_cosec(lie_derivative(alg, x, w), {y}) +
               eval_cosec(w, {alg.bracket(x, y)});
    CHECK(lhs == rhs);
  }
}

TEST_CASE("lie derivative is a derivation of the full pairing") {
  AlgebroidDef alg = heisenberg_frame();
  const ChartPtr& c = alg.chart();
  RandGen rng(131);
  for (int iter = 0; iter < 3; ++iter) {
    Section x = random_section(rng, c, 3);
    for (int deg : {1, 2}) {
      MultiVec d = random_multivec(rng, c, 3, deg);
      CoSec w = random_cosec(rng, c, 3, deg);
      Expr lhs = alg.anchor_apply(x, pair_full(d, w));
      Expr rhs = pair_full(lie_derivative(alg, x, d), w) +
                 pair_full(d, lie_derivative(alg, x, w));
      CHECK(lhs == rhs);
    }
  }
}
