#include "skewcal/metric.hpp"

#include "skewcal/calculus.hpp"
#include "skewcal/poissonization.hpp"

namespace skewcal {

namespace {

RVec gram_times(const RMat& m, const RVec& v) {
  RVec out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RatExpr acc = RatExpr::zero(row.front().chart());
    for (size_t j = 0; j < row.size(); ++j) acc += row[j] * v[j];
    out.push_back(std::move(acc));
  }
  return out;
}

RVec section_components(const Section& x) {
  RVec out;
  out.reserve(static_cast<size_t>(x.rank()));
  for (int a = 0; a < x.rank(); ++a) out.emplace_back(x.comp(a));
  return out;
}

/// Signed bivector coefficient as a fraction-field value.
RatExpr pi_at(const MultiVec& pi, int a, int b) {
  return RatExpr(pi.coeff({a, b}));
}

Expr exp_at_last(const ChartPtr& chart, int k) {
  std::vector<Rat> w(static_cast<size_t>(chart->dim()), Rat(0));
  w.back() = Rat(k);
  return Expr::exponential(chart, w);
}

} // namespace

Metric::Metric(Carrier carrier, ChartPtr chart, RMat gram)
    : m_carrier(carrier), m_chart(std::move(chart)), m_gram(std::move(gram)) {
  const size_t r = m_gram.size();
  if (r == 0) throw ShapeError("metric: empty gram matrix");
  for (const auto& row : m_gram)
    if (row.size() != r) throw ShapeError("metric: gram matrix is not square");
  for (size_t a = 0; a < r; ++a)
    for (size_t b = 0; b < a; ++b)
      if (m_gram[a][b] != m_gram[b][a])
        throw ShapeError("metric: gram matrix is not symmetric");
  for (const auto& row : m_gram)
    for (const auto& e : row)
      require_same_chart(m_chart, e.chart(), "metric");
}

Metric Metric::on_frame(const ChartPtr& chart,
                        const std::vector<std::vector<Expr>>& gram) {
  return Metric(Carrier::bundle, chart, rmat_from_expr(gram));
}

Metric Metric::on_coframe(const ChartPtr& chart,
                          const std::vector<std::vector<Expr>>& gram) {
  return Metric(Carrier::dual, chart, rmat_from_expr(gram));
}

const RatExpr& Metric::entry(int a, int b) const {
  if (a < 0 || b < 0 || a >= rank() || b >= rank())
    throw ShapeError("metric: gram index out of range");
  return m_gram[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

RatExpr Metric::determinant() const { return rmat_det(m_gram); }

Metric Metric::dual() const {
  auto inv = rmat_inverse(m_gram);
  if (!inv) throw Error("dual metric: gram matrix is singular");
  const Carrier flipped =
      m_carrier == Carrier::bundle ? Carrier::dual : Carrier::bundle;
  return Metric(flipped, m_chart, std::move(*inv));
}

RatExpr Metric::pair_components(const RVec& u, const RVec& v) const {
  if (static_cast<int>(u.size()) != rank() ||
      static_cast<int>(v.size()) != rank())
    throw ShapeError("metric pairing: component count != rank");
  RatExpr acc = RatExpr::zero(m_chart);
  for (int a = 0; a < rank(); ++a)
    for (int b = 0; b < rank(); ++b) acc += entry(a, b) * u[a] * v[b];
  return acc;
}

RatExpr Metric::pair(const Section& x, const Section& y) const {
  require_same_chart(m_chart, x.chart(), "metric pairing");
  require_same_chart(m_chart, y.chart(), "metric pairing");
  return pair_components(section_components(x), section_components(y));
}

RatExpr Metric::pair(const CoSec& a, const CoSec& b) const {
  require_same_chart(m_chart, a.chart(), "metric pairing");
  require_same_chart(m_chart, b.chart(), "metric pairing");
  if (a.degree() != 1 || b.degree() != 1)
    throw ShapeError("metric pairing: cosections must have degree 1");
  RVec u, v;
  for (int c = 0; c < rank(); ++c) {
    u.emplace_back(a.coeff({c}));
    v.emplace_back(b.coeff({c}));
  }
  return pair_components(u, v);
}

Metric Metric::scaled(const Expr& f) const {
  RMat g = m_gram;
  for (auto& row : g)
    for (auto& e : row) e *= RatExpr(f);
  return Metric(m_carrier, m_chart, std::move(g));
}

Metric Metric::extended(const ChartPtr& bigger) const {
  RMat g;
  g.reserve(m_gram.size());
  for (const auto& row : m_gram) {
    RVec out;
    out.reserve(row.size());
    for (const auto& e : row) out.push_back(e.extended(bigger));
    g.push_back(std::move(out));
  }
  return Metric(m_carrier, bigger, std::move(g));
}

Connection::Connection(AlgebroidDef alg, std::vector<RMat> gamma)
    : m_alg(std::move(alg)), m_gamma(std::move(gamma)) {
  const size_t r = static_cast<size_t>(m_alg.rank());
  if (m_gamma.size() != r) throw ShapeError("connection: christoffel shape");
  for (const auto& block : m_gamma) {
    if (block.size() != r) throw ShapeError("connection: christoffel shape");
    for (const auto& row : block)
      if (row.size() != r) throw ShapeError("connection: christoffel shape");
  }
}

const RatExpr& Connection::christoffel(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0 || a >= m_alg.rank() || b >= m_alg.rank() ||
      c >= m_alg.rank())
    throw ShapeError("connection: christoffel index out of range");
  return m_gamma[static_cast<size_t>(a)][static_cast<size_t>(b)]
                [static_cast<size_t>(c)];
}

RVec Connection::apply_frame(int a, const RVec& y) const {
  const int r = m_alg.rank();
  RVec out;
  out.reserve(static_cast<size_t>(r));
  for (int c = 0; c < r; ++c) out.push_back(frame_apply(m_alg, a, y[c]));
  for (int b = 0; b < r; ++b)
    for (int c = 0; c < r; ++c) out[c] += y[b] * christoffel(a, b, c);
  return out;
}

RVec Connection::apply(const RVec& x, const RVec& y) const {
  const int r = m_alg.rank();
  if (static_cast<int>(x.size()) != r || static_cast<int>(y.size()) != r)
    throw ShapeError("connection: component count != rank");
  RVec out(static_cast<size_t>(r), RatExpr::zero(m_alg.chart()));
  for (int a = 0; a < r; ++a) {
    if (x[a].is_zero()) continue;
    RVec da = apply_frame(a, y);
    for (int c = 0; c < r; ++c) out[c] += x[a] * da[c];
  }
  return out;
}

RVec Connection::apply(const Section& x, const Section& y) const {
  require_same_chart(m_alg.chart(), x.chart(), "connection");
  require_same_chart(m_alg.chart(), y.chart(), "connection");
  return apply(section_components(x), section_components(y));
}

Connection Connection::extended(const std::string& coord) const {
  const CoSec no_twist(m_alg.chart(), m_alg.rank(), 1);
  AlgebroidDef lifted = bar_realization(m_alg, no_twist, coord);
  const ChartPtr& ext = lifted.chart();
  std::vector<RMat> gamma;
  gamma.reserve(m_gamma.size());
  for (const auto& block : m_gamma) {
    RMat out_block;
    out_block.reserve(block.size());
    for (const auto& row : block) {
      RVec out_row;
      out_row.reserve(row.size());
      for (const auto& e : row) out_row.push_back(e.extended(ext));
      out_block.push_back(std::move(out_row));
    }
    gamma.push_back(std::move(out_block));
  }
  return Connection(std::move(lifted), std::move(gamma));
}

RatExpr frame_apply(const AlgebroidDef& alg, int a, const RatExpr& f) {
  require_same_chart(alg.chart(), f.chart(), "frame_apply");
  RatExpr out = RatExpr::zero(alg.chart());
  for (int i = 0; i < alg.dim(); ++i) {
    const Expr& rho = alg.anchor_entry(a, i);
    if (!rho.is_zero()) out += RatExpr(rho) * f.diff(i);
  }
  return out;
}

Connection koszul(const AlgebroidDef& alg, const Metric& g) {
  require_same_chart(alg.chart(), g.chart(), "koszul");
  if (g.rank() != alg.rank())
    throw ShapeError("koszul: gram rank != frame rank");
  const int r = alg.rank();
  const auto ginv = rmat_inverse(g.gram());
  if (!ginv) throw Error("koszul: gram matrix is singular");

  // g([e_x, e_y], e_z)
  auto bracket_pair = [&](int x, int y, int z) {
    RatExpr acc = RatExpr::zero(alg.chart());
    for (int d = 0; d < r; ++d) {
      const Expr& c = alg.structure(x, y, d);
      if (!c.is_zero()) acc += RatExpr(c) * g.entry(d, z);
    }
    return acc;
  };

  std::vector<RMat> gamma(
      static_cast<size_t>(r),
      RMat(static_cast<size_t>(r), RVec(static_cast<size_t>(r),
                                        RatExpr::zero(alg.chart()))));
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      RVec k;
      k.reserve(static_cast<size_t>(r));
      for (int c = 0; c < r; ++c) {
        RatExpr v = frame_apply(alg, a, g.entry(b, c)) +
                    frame_apply(alg, b, g.entry(a, c)) -
                    frame_apply(alg, c, g.entry(a, b)) - bracket_pair(b, c, a) -
                    bracket_pair(a, c, b) + bracket_pair(a, b, c);
        k.push_back(std::move(v));
      }
      for (int d = 0; d < r; ++d) {
        RatExpr acc = RatExpr::zero(alg.chart());
        for (int c = 0; c < r; ++c) acc += k[static_cast<size_t>(c)] * (*ginv)[static_cast<size_t>(c)][static_cast<size_t>(d)];
        gamma[static_cast<size_t>(a)][static_cast<size_t>(b)]
             [static_cast<size_t>(d)] = acc * Rat(1, 2);
      }
    }
  }
  return Connection(alg, std::move(gamma));
}

Metric dual_metric(const Metric& g) { return g.dual(); }

Tensor3 Tensor3::zero(const ChartPtr& chart, int rank) {
  Tensor3 t;
  t.chart = chart;
  t.rank = rank;
  t.entries.assign(
      static_cast<size_t>(rank),
      std::vector<RVec>(static_cast<size_t>(rank),
                        RVec(static_cast<size_t>(rank), RatExpr::zero(chart))));
  return t;
}

const RatExpr& Tensor3::at(int a, int b, int c) const {
  return entries[static_cast<size_t>(a)][static_cast<size_t>(b)]
                [static_cast<size_t>(c)];
}

RatExpr& Tensor3::at(int a, int b, int c) {
  return entries[static_cast<size_t>(a)][static_cast<size_t>(b)]
                [static_cast<size_t>(c)];
}

bool Tensor3::is_zero() const { return nonzero_count() == 0; }

int Tensor3::nonzero_count() const {
  int n = 0;
  for (const auto& plane : entries)
    for (const auto& row : plane)
      for (const auto& e : row)
        if (!e.is_zero()) ++n;
  return n;
}

Tensor3 covariant_bivector_derivative(const Connection& d, const MultiVec& pi) {
  const AlgebroidDef& dual = d.algebroid();
  require_same_chart(dual.chart(), pi.chart(), "covariant_bivector_derivative");
  if (pi.rank() != dual.rank() || pi.degree() != 2)
    throw ShapeError(
        "covariant_bivector_derivative: needs a bivector on the dual's rank");
  const int r = dual.rank();
  Tensor3 t = Tensor3::zero(dual.chart(), r);
  for (int a = 0; a < r; ++a) {
    for (int b = 0; b < r; ++b) {
      for (int c = 0; c < r; ++c) {
        RatExpr v = frame_apply(dual, a, pi_at(pi, b, c));
        for (int e = 0; e < r; ++e) {
          v -= d.christoffel(a, b, e) * pi_at(pi, e, c);
          v -= d.christoffel(a, c, e) * pi_at(pi, b, e);
        }
        t.at(a, b, c) = std::move(v);
      }
    }
  }
  return t;
}

namespace {

void require_cometric(const Metric& gstar, const AlgebroidDef& alg,
                      const char* what) {
  require_same_chart(alg.chart(), gstar.chart(), what);
  if (gstar.carrier() != Metric::Carrier::dual)
    throw ShapeError(std::string(what) + ": expects a metric on the coframe");
  if (gstar.rank() != alg.rank())
    throw ShapeError(std::string(what) + ": gram rank != frame rank");
}

} // namespace

Tensor3 compat_residual_poisson(const AlgebroidDef& alg, const MultiVec& pi,
                                const Metric& gstar) {
  require_cometric(gstar, alg, "compat_residual_poisson");
  const CoSec no_twist(alg.chart(), alg.rank(), 1);
  const InducedDual id = build_induced_dual(alg, no_twist, pi);
  const Connection d = koszul(id.dual, gstar);
  return covariant_bivector_derivative(d, pi);
}

Tensor3 compat_residual_jacobi(const AlgebroidDef& alg, const CoSec& phi0,
                               const MultiVec& pi, const Metric& gstar) {
  require_cometric(gstar, alg, "compat_residual_jacobi");
  const InducedDual id = build_induced_dual(alg, phi0, pi);
  const Connection d = koszul(id.dual, gstar);
  Tensor3 t = covariant_bivector_derivative(d, pi);

  const int r = alg.rank();
  RVec x0;
  x0.reserve(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) x0.emplace_back(id.x0.coeff({a}));
  const auto ginv = rmat_inverse(gstar.gram());
  if (!ginv) throw Error("compat_residual_jacobi: gram matrix is singular");
  const RVec binv = gram_times(*ginv, x0);
  RVec pix0;
  pix0.reserve(static_cast<size_t>(r));
  for (int c = 0; c < r; ++c) {
    RatExpr acc = RatExpr::zero(alg.chart());
    for (int e = 0; e < r; ++e) acc += binv[static_cast<size_t>(e)] * pi_at(pi, e, c);
    pix0.push_back(std::move(acc));
  }
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        RatExpr corr = x0[static_cast<size_t>(b)] * pi_at(pi, c, a) +
                       x0[static_cast<size_t>(c)] * pi_at(pi, a, b) +
                       gstar.entry(a, b) * pix0[static_cast<size_t>(c)] -
                       gstar.entry(a, c) * pix0[static_cast<size_t>(b)];
        t.at(a, b, c) += corr * Rat(1, 2);
      }
  return t;
}

CompatTransferReport compat_transfer_check(const AlgebroidDef& alg,
                                           const CoSec& phi0,
                                           const MultiVec& pi,
                                           const Metric& gstar) {
  require_cometric(gstar, alg, "compat_transfer_check");
  CompatTransferReport rep;
  rep.base_residual = compat_residual_jacobi(alg, phi0, pi, gstar);
  rep.pi_is_jacobi = jacobi_residual(alg, phi0, pi).is_zero();

  const AlgebroidDef bar = bar_realization(alg, phi0);
  const ChartPtr& ext = bar.chart();
  const MultiVec tilde_pi = poissonize(pi, ext);
  const Metric tilde_g = gstar.extended(ext).scaled(exp_at_last(ext, -1));
  rep.lifted_residual = compat_residual_poisson(bar, tilde_pi, tilde_g);

  rep.base_zero = rep.base_residual.is_zero();
  rep.lifted_zero = rep.lifted_residual.is_zero();
  const RatExpr scale(exp_at_last(ext, -2));
  rep.identity_ok = true;
  const int r = alg.rank();
  for (int a = 0; a < r && rep.identity_ok; ++a)
    for (int b = 0; b < r && rep.identity_ok; ++b)
      for (int c = 0; c < r && rep.identity_ok; ++c)
        rep.identity_ok = rep.lifted_residual.at(a, b, c) ==
                          scale * rep.base_residual.at(a, b, c).extended(ext);
  return rep;
}

LiftedConnectionReport lifted_connection_formula_check(
    const AlgebroidDef& alg, const CoSec& phi0, const MultiVec& pi,
    const Metric& gstar,
    const std::vector<std::pair<Section, Section>>& samples) {
  require_cometric(gstar, alg, "lifted_connection_formula_check");
  const int r = alg.rank();

  const AlgebroidDef bar = bar_realization(alg, phi0);
  const ChartPtr& ext = bar.chart();
  const int tdx = ext->dim() - 1;
  const MultiVec tilde_pi = poissonize(pi, ext);
  const Metric tilde_g = gstar.extended(ext).scaled(exp_at_last(ext, -1));
  const InducedDual lifted = build_induced_dual(
      bar, CoSec(ext, r, 1), tilde_pi);
  const Connection d_tilde = koszul(lifted.dual, tilde_g);

  const InducedDual base = build_induced_dual(alg, phi0, pi);
  const Connection d_base = koszul(base.dual, gstar);
  const Connection d_base_ext = d_base.extended(ext->name(tdx));

  RVec x0;
  x0.reserve(static_cast<size_t>(r));
  for (int a = 0; a < r; ++a) x0.emplace_back(base.x0.coeff({a}));
  const auto ginv = rmat_inverse(gstar.gram());
  if (!ginv)
    throw Error("lifted_connection_formula_check: gram matrix is singular");
  RVec binv = gram_times(*ginv, x0);
  for (auto& e : binv) e = e.extended(ext);
  for (auto& e : x0) e = e.extended(ext);
  const Metric g_ext = gstar.extended(ext);
  const RatExpr em(exp_at_last(ext, -1));

  LiftedConnectionReport rep;
  rep.ok = true;
  for (const auto& [alpha, beta] : samples) {
    require_same_chart(ext, alpha.chart(), "lifted_connection_formula_check");
    require_same_chart(ext, beta.chart(), "lifted_connection_formula_check");
    const RVec lhs = d_tilde.apply(alpha, beta);
    const RVec dcov = d_base_ext.apply(alpha, beta);
    RatExpr pa = RatExpr::zero(ext);
    RatExpr pb = RatExpr::zero(ext);
    for (int a = 0; a < r; ++a) {
      pa += x0[static_cast<size_t>(a)] * RatExpr(alpha.comp(a));
      pb += x0[static_cast<size_t>(a)] * RatExpr(beta.comp(a));
    }
    const RatExpr gab = g_ext.pair(alpha, beta);
    RVec residual;
    residual.reserve(static_cast<size_t>(r));
    for (int c = 0; c < r; ++c) {
      RatExpr rhs = dcov[static_cast<size_t>(c)] +
                    pa * (RatExpr(beta.comp(c).diff(tdx)) -
                          RatExpr(beta.comp(c)) * Rat(1, 2)) +
                    pb * RatExpr(alpha.comp(c)) * Rat(1, 2) -
                    gab * binv[static_cast<size_t>(c)] * Rat(1, 2);
      RatExpr diff = lhs[static_cast<size_t>(c)] - em * rhs;
      if (!diff.is_zero()) rep.ok = false;
      residual.push_back(std::move(diff));
    }
    rep.residuals.push_back(std::move(residual));
  }
  return rep;
}

namespace {

SymplecticReport symplectic_impl(const AlgebroidDef& alg, const MultiVec& pi,
                                 const CoSec* phi0) {
  require_same_chart(alg.chart(), pi.chart(), "symplectic_correspondence");
  if (pi.rank() != alg.rank() || pi.degree() != 2)
    throw ShapeError("symplectic_correspondence: needs a bivector");
  const int r = alg.rank();
  RMat m = rmat_zero(alg.chart(), r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      m[static_cast<size_t>(b)][static_cast<size_t>(a)] = pi_at(pi, a, b);
  const auto minv = rmat_inverse(m);
  if (!minv) throw Error("symplectic_correspondence: bivector is degenerate");
  CoSec omega(alg.chart(), r, 2);
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      const RatExpr w = -(*minv)[static_cast<size_t>(b)][static_cast<size_t>(a)];
      if (!w.is_zero())
        omega.add_coeff({a, b},
                        w.expect_expr("symplectic_correspondence: inverse "
                                      "bivector is not polynomial"));
    }
  SymplecticReport rep{omega, false};
  const CoSec closure = phi0 ? phi_differential(alg, *phi0, omega)
                             : differential(alg, omega);
  rep.closed = closure.is_zero();
  return rep;
}

} // namespace

SymplecticReport symplectic_correspondence(const AlgebroidDef& alg,
                                           const MultiVec& pi) {
  return symplectic_impl(alg, pi, nullptr);
}

SymplecticReport symplectic_correspondence(const AlgebroidDef& alg,
                                           const CoSec& phi0,
                                           const MultiVec& pi) {
  return symplectic_impl(alg, pi, &phi0);
}

} // namespace skewcal
