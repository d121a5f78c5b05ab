#include "skewcal/oplusr.hpp"

#include "skewcal/calculus.hpp"
#include "skewcal/linalg.hpp"

namespace skewcal {

AlgebroidDef build_oplus(const AlgebroidDef& alg) {
  const ChartPtr& chart = alg.chart();
  const int r = alg.rank();
  std::vector<std::vector<Expr>> anchor;
  anchor.reserve(static_cast<size_t>(r) + 1);
  for (int a = 0; a < r; ++a) {
    std::vector<Expr> row;
    row.reserve(static_cast<size_t>(alg.dim()));
    for (int i = 0; i < alg.dim(); ++i) row.push_back(alg.anchor_entry(a, i));
    anchor.push_back(std::move(row));
  }
  anchor.emplace_back(static_cast<size_t>(alg.dim()), Expr(chart));
  std::vector<AlgebroidDef::StructureEntry> structure;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = 0; c < r; ++c) {
        const Expr& s = alg.structure(a, b, c);
        if (!s.is_zero()) structure.push_back({a, b, c, s});
      }
  std::vector<std::string> labels = alg.labels();
  labels.push_back("u");
  return AlgebroidDef(chart, r + 1, std::move(anchor), structure,
                      std::move(labels));
}

namespace {

template <typename D>
D flat_pair_impl(const D& p, const D& q) {
  require_same_chart(p.chart(), q.chart(), "flat_pair");
  if (p.rank() != q.rank()) throw ShapeError("flat_pair: rank mismatch");
  if (q.degree() + 1 != p.degree())
    throw ShapeError("flat_pair: second degree must be first degree minus one");
  const int r = p.rank();
  D out = p.with_rank(r + 1);
  for (const auto& [k, v] : q.coeffs()) {
    // u ^ e_K: move u past |K| indices to reach sorted position at the end.
    std::vector<int> key = k;
    key.push_back(r);
    out.add_coeff(std::move(key),
                  k.size() % 2 == 0 ? v : -v);
  }
  return out;
}

template <typename D>
std::pair<D, D> split_pair_impl(const D& d) {
  const int r = d.rank() - 1;
  if (r < 1) throw ShapeError("split_pair: rank must be at least 2");
  if (d.degree() < 1) throw ShapeError("split_pair: degree must be at least 1");
  D p(d.chart(), r, d.degree());
  D q(d.chart(), r, d.degree() - 1);
  for (const auto& [k, v] : d.coeffs()) {
    if (k.back() == r) {
      std::vector<int> rest(k.begin(), k.end() - 1);
      const bool even = rest.size() % 2 == 0;
      q.add_coeff(std::move(rest), even ? v : -v);
    } else {
      p.add_coeff(k, v);
    }
  }
  return {std::move(p), std::move(q)};
}

} // namespace

MultiVec flat_pair(const MultiVec& p, const MultiVec& q) {
  return flat_pair_impl(p, q);
}
CoSec flat_pair(const CoSec& p, const CoSec& q) { return flat_pair_impl(p, q); }

std::pair<MultiVec, MultiVec> split_pair(const MultiVec& d) {
  return split_pair_impl(d);
}
std::pair<CoSec, CoSec> split_pair(const CoSec& w) { return split_pair_impl(w); }

ContactReport contact_check(const AlgebroidDef& alg, const CoSec& eta) {
  require_same_chart(alg.chart(), eta.chart(), "contact_check");
  if (eta.rank() != alg.rank() || eta.degree() != 1)
    throw ShapeError("contact_check: expected a degree-1 cosection on the algebroid");
  if (alg.rank() % 2 == 0)
    throw ShapeError("contact_check: rank must be odd");
  const int n = (alg.rank() - 1) / 2;
  const CoSec deta = differential(alg, eta);
  CoSec power = CoSec::from_function(alg.rank(), Expr(alg.chart(), Rat(1)));
  for (int i = 0; i < n; ++i) power = wedge(power, deta);
  const CoSec vol = wedge(eta, power);
  std::vector<int> full(static_cast<size_t>(alg.rank()));
  for (int i = 0; i < alg.rank(); ++i) full[static_cast<size_t>(i)] = i;
  Expr top = vol.coeff(full);
  const bool ok = !top.is_zero();
  return ContactReport(ok, n, std::move(top));
}

ContactToJacobi contact_to_jacobi(const AlgebroidDef& alg, const CoSec& eta) {
  require_same_chart(alg.chart(), eta.chart(), "contact_to_jacobi");
  if (eta.rank() != alg.rank() || eta.degree() != 1)
    throw ShapeError("contact_to_jacobi: expected a degree-1 cosection");
  const ChartPtr& chart = alg.chart();
  const int r = alg.rank();
  const CoSec deta = differential(alg, eta);

  // Kernel pairing matrix: M_{ij} = (d eta)(e_i, e_j) + eta_i eta_j.
  RMat m = rmat_zero(chart, r, r);
  RMat dn = rmat_zero(chart, r, r);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      Expr d_ij = deta.coeff({i, j});
      dn[static_cast<size_t>(i)][static_cast<size_t>(j)] = RatExpr(d_ij);
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          RatExpr(d_ij + eta.coeff({i}) * eta.coeff({j}));
    }
  }
  auto minv = rmat_inverse(m);
  if (!minv)
    throw Error("contact_to_jacobi: kernel pairing is degenerate; the "
                "cosection is not contact");

  // Reeb section: insert(reeb, d eta) = 0 and eta(reeb) = 1, solved as an
  // overdetermined exact system.
  RMat a = rmat_zero(chart, r + 1, r);
  RVec b(static_cast<size_t>(r) + 1, RatExpr(Expr(chart)));
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i)
      a[static_cast<size_t>(j)][static_cast<size_t>(i)] =
          dn[static_cast<size_t>(i)][static_cast<size_t>(j)];
  for (int i = 0; i < r; ++i)
    a[static_cast<size_t>(r)][static_cast<size_t>(i)] = RatExpr(eta.coeff({i}));
  b[static_cast<size_t>(r)] = RatExpr(Expr(chart, Rat(1)));
  auto sol = rmat_solve(a, b);
  if (!sol)
    throw Error("contact_to_jacobi: no section annihilates the differential "
                "while pairing to one; the cosection is not contact");
  std::vector<Expr> reeb_comps;
  reeb_comps.reserve(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i)
    reeb_comps.push_back(
        (*sol)[static_cast<size_t>(i)].expect_expr("reeb component"));

  // lambda_{ab} = sum_{ij} (M^{-1})_{ia} (d eta)_{ij} (M^{-1})_{jb}.
  const RMat lam = rmat_mul(rmat_mul(rmat_transpose(*minv), dn), *minv);
  MultiVec lambda(chart, r, 2);
  for (int a2 = 0; a2 < r; ++a2)
    for (int b2 = a2 + 1; b2 < r; ++b2)
      lambda.add_coeff({a2, b2},
                       lam[static_cast<size_t>(a2)][static_cast<size_t>(b2)]
                           .expect_expr("bivector entry"));
  return ContactToJacobi{std::move(lambda),
                         Section(chart, std::move(reeb_comps))};
}

} // namespace skewcal
