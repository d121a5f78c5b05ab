#include "skewcal/sasaki.hpp"

#include <utility>

#include "skewcal/calculus.hpp"

namespace skewcal {

namespace {

void require_square(const ChartPtr& chart,
                    const std::vector<std::vector<Expr>>& m, int n,
                    const char* what) {
  if (static_cast<int>(m.size()) != n)
    throw ShapeError(std::string(what) + ": expected " + std::to_string(n) +
                     " rows, got " + std::to_string(m.size()));
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n)
      throw ShapeError(std::string(what) + ": ragged or non-square matrix");
    for (const auto& e : row) require_same_chart(chart, e.chart(), what);
  }
}

/// Matrix-vector product with Expr entries over fraction-field components.
RVec mat_apply(const ChartPtr& chart, const std::vector<std::vector<Expr>>& m,
               const RVec& x) {
  const int n = static_cast<int>(m.size());
  RVec out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    RatExpr acc = RatExpr::zero(chart);
    for (int j = 0; j < n; ++j) acc += RatExpr(m[i][j]) * x[j];
    out.push_back(std::move(acc));
  }
  return out;
}

std::vector<Expr> mat_apply(const ChartPtr& chart,
                            const std::vector<std::vector<Expr>>& m,
                            const std::vector<Expr>& x) {
  const int n = static_cast<int>(m.size());
  std::vector<Expr> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    Expr acc(chart);
    for (int j = 0; j < n; ++j) acc += m[i][j] * x[j];
    out.push_back(std::move(acc));
  }
  return out;
}

/// Components of phi(e_j) as fraction-field entries.
RVec phi_column(const AlmostContactTuple& t, int j) {
  RVec out;
  out.reserve(t.dim());
  for (int i = 0; i < t.dim(); ++i) out.emplace_back(t.phi[i][j]);
  return out;
}

RVec unit_vector(const ChartPtr& chart, int rank, int j) {
  RVec out(rank, RatExpr::zero(chart));
  out[j] = RatExpr(Expr(chart, 1));
  return out;
}

RVec section_components(const Section& x) {
  RVec out;
  out.reserve(x.rank());
  for (int a = 0; a < x.rank(); ++a) out.emplace_back(x.comp(a));
  return out;
}

bool all_zero(const RVec& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

/// Derivative of a fraction-field scalar along a general section.
RatExpr section_apply(const AlgebroidDef& alg, const Section& x,
                      const RatExpr& f) {
  RatExpr acc = RatExpr::zero(alg.chart());
  for (int a = 0; a < alg.rank(); ++a)
    acc += RatExpr(x.comp(a)) * frame_apply(alg, a, f);
  return acc;
}

} // namespace

AlmostContactTuple make_almost_contact(ChartPtr chart,
                                       std::vector<std::vector<Expr>> phi,
                                       Section xi, CoSec eta, Metric g,
                                       int q) {
  if (!chart || chart->dim() == 0)
    throw ShapeError("almost contact tuple: empty chart");
  const int n = chart->dim();
  if (n % 2 == 0)
    throw ShapeError("almost contact tuple: chart dimension must be odd");
  require_square(chart, phi, n, "almost contact endomorphism");
  require_same_chart(chart, xi.chart(), "almost contact section");
  if (xi.rank() != n)
    throw ShapeError("almost contact section: rank must match the chart");
  require_same_chart(chart, eta.chart(), "almost contact cosection");
  if (eta.rank() != n || eta.degree() != 1)
    throw ShapeError("almost contact cosection: need a degree-1 cosection of "
                     "matching rank");
  require_same_chart(chart, g.chart(), "almost contact metric");
  if (g.carrier() != Metric::Carrier::bundle)
    throw ShapeError("almost contact metric: gram matrix must be on the frame");
  if (g.rank() != n)
    throw ShapeError("almost contact metric: rank must match the chart");
  if (q < 0) throw ShapeError("almost contact tuple: negative index");
  return AlmostContactTuple{std::move(chart), std::move(phi), std::move(xi),
                            std::move(eta),   std::move(g),   q};
}

RVec phi_apply(const AlmostContactTuple& t, const RVec& x) {
  if (static_cast<int>(x.size()) != t.dim())
    throw ShapeError("phi_apply: component count must match the chart");
  return mat_apply(t.chart, t.phi, x);
}

Section phi_apply(const AlmostContactTuple& t, const Section& x) {
  require_same_chart(t.chart, x.chart(), "phi_apply");
  if (x.rank() != t.dim())
    throw ShapeError("phi_apply: section rank must match the chart");
  return Section(t.chart, mat_apply(t.chart, t.phi, x.comps()));
}

AlmostContactReport almost_contact_check(const AlmostContactTuple& t) {
  const int n = t.dim();
  AlmostContactReport rep;
  rep.square_residual.assign(n, std::vector<Expr>(n, Expr(t.chart)));
  bool ok = true;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Expr acc(t.chart);
      for (int k = 0; k < n; ++k) acc += t.phi[i][k] * t.phi[k][j];
      if (i == j) acc += Expr(t.chart, 1);
      acc -= t.xi.comp(i) * t.eta.coeff({j});
      if (!acc.is_zero()) ok = false;
      rep.square_residual[i][j] = std::move(acc);
    }
  }
  Expr pairing(t.chart, -1);
  for (int i = 0; i < n; ++i) pairing += t.eta.coeff({i}) * t.xi.comp(i);
  if (!pairing.is_zero()) ok = false;
  rep.pairing_residual = std::move(pairing);
  rep.ok = ok;
  return rep;
}

ContactMetricReport contact_pseudo_metric_check(const AlmostContactTuple& t) {
  const int n = t.dim();
  const Rat eps(t.epsilon());
  ContactMetricReport rep;
  rep.almost_ok = almost_contact_check(t).ok;

  rep.metric_ok = true;
  for (int i = 0; i < n && rep.metric_ok; ++i) {
    for (int j = 0; j < n; ++j) {
      RatExpr res = t.g.pair_components(phi_column(t, i), phi_column(t, j));
      res -= t.g.entry(i, j);
      res += RatExpr(t.eta.coeff({i}) * t.eta.coeff({j})) * eps;
      if (!res.is_zero()) {
        rep.metric_ok = false;
        break;
      }
    }
  }

  const AlgebroidDef tm = AlgebroidDef::tangent(t.chart);
  const CoSec deta = differential(tm, t.eta);
  rep.differential_ok = true;
  for (int i = 0; i < n && rep.differential_ok; ++i) {
    Section ei = Section::frame(t.chart, n, i);
    for (int j = 0; j < n; ++j) {
      Section ej = Section::frame(t.chart, n, j);
      RatExpr res = t.g.pair_components(phi_column(t, i),
                                        unit_vector(t.chart, n, j));
      res -= RatExpr(eval_cosec(deta, {ei, ej}));
      if (!res.is_zero()) {
        rep.differential_ok = false;
        break;
      }
    }
  }

  rep.eta_contact = contact_check(tm, t.eta).ok;
  return rep;
}

SasakianReport sasakian_residual(const AlmostContactTuple& t) {
  const int n = t.dim();
  const AlgebroidDef tm = AlgebroidDef::tangent(t.chart);
  const Connection d = koszul(tm, t.g);
  const Rat half(1, 2);
  const Rat half_eps(t.epsilon(), 2);

  SasakianReport rep;
  rep.residual = Tensor3::zero(t.chart, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RVec nabla_phi = d.apply_frame(i, phi_column(t, j));
      RVec phi_nabla = phi_apply(t, d.apply_frame(i, unit_vector(t.chart, n, j)));
      const RatExpr eta_j(t.eta.coeff({j}));
      for (int c = 0; c < n; ++c) {
        RatExpr val = nabla_phi[c];
        val -= phi_nabla[c];
        val += t.g.entry(i, j) * RatExpr(t.xi.comp(c)) * half;
        if (c == i) val -= eta_j * half_eps;
        rep.residual.at(i, j, c) = std::move(val);
      }
    }
  }
  rep.sasakian = rep.residual.is_zero();
  return rep;
}

RMat xi_connection_residual(const AlmostContactTuple& t) {
  const int n = t.dim();
  const Connection d = koszul(AlgebroidDef::tangent(t.chart), t.g);
  const Rat half_eps(t.epsilon(), 2);
  const RVec xi = section_components(t.xi);
  RMat out = rmat_zero(t.chart, n, n);
  for (int i = 0; i < n; ++i) {
    RVec nabla_xi = d.apply_frame(i, xi);
    RVec phi_i = phi_column(t, i);
    for (int c = 0; c < n; ++c) {
      out[i][c] = nabla_xi[c];
      out[i][c] -= phi_i[c] * half_eps;
    }
  }
  return out;
}

RMat xi_metric_lie_residual(const AlmostContactTuple& t) {
  const int n = t.dim();
  const AlgebroidDef tm = AlgebroidDef::tangent(t.chart);
  RMat out = rmat_zero(t.chart, n, n);
  for (int i = 0; i < n; ++i) {
    Section ei = Section::frame(t.chart, n, i);
    Section bi = tm.bracket(t.xi, ei);
    for (int j = 0; j < n; ++j) {
      Section ej = Section::frame(t.chart, n, j);
      RatExpr val = section_apply(tm, t.xi, t.g.entry(i, j));
      val -= t.g.pair(bi, ej);
      val -= t.g.pair(ei, tm.bracket(t.xi, ej));
      out[i][j] = std::move(val);
    }
  }
  return out;
}

Metric big_metric(const AlmostContactTuple& t) {
  const int n = t.dim();
  RMat gram = rmat_zero(t.chart, n + 1, n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = t.g.entry(i, j);
  gram[n][n] = RatExpr(Expr(t.chart, t.epsilon()));
  return Metric(Metric::Carrier::bundle, t.chart, std::move(gram));
}

Theorem38Report theorem38_harness(const AlmostContactTuple& t) {
  const int n = t.dim();
  const Rat eps(t.epsilon());

  Theorem38Report rep;
  rep.almost_contact_ok = almost_contact_check(t).ok;
  rep.contact_metric_ok = contact_pseudo_metric_check(t).ok();

  rep.sasakian = sasakian_residual(t).residual;
  rep.xi_residual = xi_connection_residual(t);
  rep.lie_residual = xi_metric_lie_residual(t);
  rep.sasakian_zero = rep.sasakian.is_zero();
  rep.xi_zero = true;
  for (const auto& row : rep.xi_residual) rep.xi_zero &= all_zero(row);
  rep.lie_zero = true;
  for (const auto& row : rep.lie_residual) rep.lie_zero &= all_zero(row);

  const AlgebroidDef tm = AlgebroidDef::tangent(t.chart);
  const CoSec eps_eta = t.eta * eps;
  const ContactToJacobi ctj = contact_to_jacobi(tm, eps_eta);
  const MultiVec pi = flat_pair(ctj.lambda, MultiVec::from_section(ctj.reeb));
  const AlgebroidDef ext = build_oplus(tm);
  const CoSec phi0 = CoSec::basis(t.chart, n + 1, {n});
  const Metric gstar = dual_metric(big_metric(t));
  rep.compat = compat_residual_jacobi(ext, phi0, pi, gstar);
  rep.compat_zero = rep.compat.is_zero();

  rep.combined_00 = Tensor3::zero(t.chart, n);
  rep.combined_10 = Tensor3::zero(t.chart, n);
  rep.combined_01 = Tensor3::zero(t.chart, n);
  const Rat half_eps(t.epsilon(), 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RatExpr lie_term = rep.lie_residual[i][j] * half_eps;
      for (int k = 0; k < n; ++k) {
        RatExpr base = RatExpr::zero(t.chart);
        RatExpr xi_term = RatExpr::zero(t.chart);
        for (int c = 0; c < n; ++c) {
          base += rep.sasakian.at(i, j, c) * t.g.entry(c, k);
          xi_term += rep.xi_residual[i][c] * t.g.entry(c, k);
        }
        base = base * eps;
        rep.combined_00.at(i, j, k) = base;
        rep.combined_10.at(i, j, k) = base + xi_term;
        base -= lie_term;
        rep.combined_01.at(i, j, k) = std::move(base);
      }
    }
  }
  return rep;
}

std::vector<std::vector<Expr>> build_J(const AlmostContactTuple& t,
                                       const ChartPtr& extended) {
  const int n = t.dim();
  if (!extended || extended->dim() != n + 1)
    throw ShapeError("build_J: chart must extend the tuple's by one "
                     "coordinate");
  std::vector<std::vector<Expr>> out(n + 1,
                                     std::vector<Expr>(n + 1, Expr(extended)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = t.phi[i][j].extended(extended);
  for (int i = 0; i < n; ++i) out[i][n] = t.xi.comp(i).extended(extended);
  for (int j = 0; j < n; ++j) out[n][j] = (-t.eta.coeff({j})).extended(extended);
  return out;
}

NijenhuisReport nijenhuis_J(const AlmostContactTuple& t,
                            const std::string& coord) {
  const ChartPtr ec = extend_chart(t.chart, coord);
  const int m = ec->dim();
  const AlgebroidDef tm = AlgebroidDef::tangent(ec);
  const auto J = build_J(t, ec);

  std::vector<Section> jcol;
  jcol.reserve(m);
  for (int j = 0; j < m; ++j) {
    std::vector<Expr> comps;
    comps.reserve(m);
    for (int i = 0; i < m; ++i) comps.push_back(J[i][j]);
    jcol.emplace_back(ec, std::move(comps));
  }

  NijenhuisReport rep;
  rep.tensor = Tensor3::zero(ec, m);
  for (int i = 0; i < m; ++i) {
    Section ei = Section::frame(ec, m, i);
    for (int j = 0; j < m; ++j) {
      Section ej = Section::frame(ec, m, j);
      Section value = tm.bracket(jcol[i], jcol[j]);
      value -= Section(ec, mat_apply(ec, J, tm.bracket(jcol[i], ej).comps()));
      value -= Section(ec, mat_apply(ec, J, tm.bracket(ei, jcol[j]).comps()));
      value -= tm.bracket(ei, ej);
      for (int c = 0; c < m; ++c)
        rep.tensor.at(i, j, c) = RatExpr(value.comp(c));
    }
  }
  rep.normal = rep.tensor.is_zero();
  return rep;
}

KahlerData build_kahler_data(const AlmostContactTuple& t,
                             const std::string& coord) {
  const int n = t.dim();
  const ChartPtr ec = extend_chart(t.chart, coord);
  AlgebroidDef tm = AlgebroidDef::tangent(ec);

  CoSec eta_big(ec, n + 1, 1);
  for (int j = 0; j < n; ++j) eta_big.add_coeff({j}, t.eta.coeff({j}).extended(ec));
  std::vector<Rat> weights(n + 1, Rat(0));
  weights[n] = Rat(1);
  const Expr et = Expr::exponential(ec, weights);
  CoSec omega = differential(tm, eta_big * et);

  auto J = build_J(t, ec);
  Metric h = big_metric(t).extended(ec).scaled(et);
  return KahlerData{std::move(tm), std::move(omega), std::move(J),
                    std::move(h)};
}

KahlerReport kahler_check(const CoSec& omega,
                          const std::vector<std::vector<Expr>>& J,
                          const Metric& h) {
  const ChartPtr& c = omega.chart();
  const int m = c->dim();
  if (omega.degree() != 2 || omega.rank() != m)
    throw ShapeError("kahler_check: need a degree-2 cosection of the "
                     "coordinate frame");
  require_square(c, J, m, "kahler_check endomorphism");
  require_same_chart(c, h.chart(), "kahler_check metric");
  if (h.carrier() != Metric::Carrier::bundle || h.rank() != m)
    throw ShapeError("kahler_check: metric must be a frame metric of "
                     "matching rank");

  const AlgebroidDef tm = AlgebroidDef::tangent(c);
  KahlerReport rep;
  rep.closed = differential(tm, omega) == CoSec(c, m, 3);

  auto jcol = [&](int j) {
    RVec out;
    out.reserve(m);
    for (int i = 0; i < m; ++i) out.emplace_back(J[i][j]);
    return out;
  };

  rep.hermitian = true;
  rep.omega_matches = true;
  for (int i = 0; i < m; ++i) {
    Section ei = Section::frame(c, m, i);
    for (int j = 0; j < m; ++j) {
      RatExpr herm = h.pair_components(jcol(i), jcol(j));
      herm -= h.entry(i, j);
      if (!herm.is_zero()) rep.hermitian = false;

      RatExpr match = h.pair_components(jcol(i), unit_vector(c, m, j));
      match -= RatExpr(eval_cosec(omega, {ei, Section::frame(c, m, j)}));
      if (!match.is_zero()) rep.omega_matches = false;
    }
  }

  const Connection d = koszul(tm, h);
  rep.parallel = true;
  for (int i = 0; i < m && rep.parallel; ++i) {
    for (int j = 0; j < m; ++j) {
      RVec lhs = d.apply_frame(i, jcol(j));
      RVec rhs = mat_apply(c, J, d.apply_frame(i, unit_vector(c, m, j)));
      for (int k = 0; k < m; ++k) {
        RatExpr diff = lhs[k] - rhs[k];
        if (!diff.is_zero()) {
          rep.parallel = false;
          break;
        }
      }
      if (!rep.parallel) break;
    }
  }
  return rep;
}

} // namespace skewcal
