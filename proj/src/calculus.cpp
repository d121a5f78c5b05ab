#include "skewcal/calculus.hpp"

namespace skewcal {

namespace {

MultiVec wedge_basis_rest(const AlgebroidDef& alg, const MultiVec& head,
                          const std::vector<int>& rest) {
  return wedge(head,
               MultiVec::basis(alg.chart(), alg.rank(),
                               std::vector<int>(rest.begin(), rest.end())));
}

/// [f e_a, e_{j_0} ^ ... ]: right-peel of a scaled frame section through a
/// basis multivector.
MultiVec bracket_section_basis(const AlgebroidDef& alg, const Section& x,
                               const std::vector<int>& j) {
  if (j.size() == 1) {
    return MultiVec::from_section(alg.bracket(x, alg.frame(j[0])));
  }
  // [X, e_{j0} ^ S] = [X, e_{j0}] ^ e_S + e_{j0} ^ [X, e_S]
  const std::vector<int> rest(j.begin() + 1, j.end());
  MultiVec first = wedge(
      MultiVec::from_section(alg.bracket(x, alg.frame(j[0]))),
      MultiVec::basis(alg.chart(), alg.rank(), rest));
  MultiVec second = wedge(MultiVec::basis(alg.chart(), alg.rank(), {j[0]}),
                          bracket_section_basis(alg, x, rest));
  return first + second;
}

/// Bracket of single decomposable terms f e_I and g e_J.
MultiVec schouten_term(const AlgebroidDef& alg, const Expr& f,
                       const std::vector<int>& i, const Expr& g,
                       const std::vector<int>& j) {
  const int k = static_cast<int>(i.size());
  const int l = static_cast<int>(j.size());
  const ChartPtr& chart = alg.chart();
  const int rank = alg.rank();

  if (k == 0 && l == 0) return MultiVec(chart, rank, 0);
  if (k == 0) {
    // Graded antisymmetry: [f, Q] = (-1)^{deg Q} [Q, f].
    MultiVec t = schouten_term(alg, g, j, f, i);
    return l % 2 == 0 ? t : -t;
  }
  if (l == 0) {
    if (k == 1) {
      Section x = alg.frame(i[0]) * f;
      return MultiVec::from_function(rank, alg.anchor_apply(x, g));
    }
    // [(f e_{i0}) ^ e_R, g] = (-1)^{k-1} [f e_{i0}, g] ^ e_R
    //                         + (f e_{i0}) ^ [e_R, g]
    const std::vector<int> rest(i.begin() + 1, i.end());
    MultiVec head = schouten_term(alg, f, {i[0]}, g, j); // degree 0
    MultiVec t1 = wedge_basis_rest(alg, head, rest);
    if (k % 2 == 0) t1 = -t1;
    MultiVec t2 = wedge(MultiVec::from_section(alg.frame(i[0]) * f),
                        schouten_term(alg, Expr(chart, Rat(1)), rest, g, j));
    return t1 + t2;
  }
  if (k == 1) {
    // [X, g e_J] = (rho(X) g) e_J + g [X, e_J]
    Section x = alg.frame(i[0]) * f;
    MultiVec out(chart, rank, l);
    out.add_coeff(std::vector<int>(j.begin(), j.end()),
                  alg.anchor_apply(x, g));
    out += bracket_section_basis(alg, x, j) * g;
    return out;
  }
  // [(f e_{i0}) ^ e_R, Q] = (-1)^{(l-1)(k-1)} [f e_{i0}, Q] ^ e_R
  //                         + (f e_{i0}) ^ [e_R, Q]
  const std::vector<int> rest(i.begin() + 1, i.end());
  MultiVec head = schouten_term(alg, f, {i[0]}, g, j); // degree l
  MultiVec t1 = wedge_basis_rest(alg, head, rest);
  if (((l - 1) * (k - 1)) % 2 == 1) t1 = -t1;
  MultiVec t2 = wedge(MultiVec::from_section(alg.frame(i[0]) * f),
                      schouten_term(alg, Expr(chart, Rat(1)), rest, g, j));
  return t1 + t2;
}

} // namespace

MultiVec schouten(const AlgebroidDef& alg, const MultiVec& d1,
                  const MultiVec& d2) {
  require_same_chart(alg.chart(), d1.chart(), "schouten");
  require_same_chart(alg.chart(), d2.chart(), "schouten");
  if (d1.rank() != alg.rank() || d2.rank() != alg.rank())
    throw ShapeError("schouten: rank mismatch");
  const int deg = d1.degree() + d2.degree() == 0
                      ? 0
                      : d1.degree() + d2.degree() - 1;
  MultiVec out(alg.chart(), alg.rank(), deg);
  for (const auto& [ki, vi] : d1.coeffs())
    for (const auto& [kj, vj] : d2.coeffs())
      out += schouten_term(alg, vi, ki, vj, kj);
  return out;
}

CoSec differential(const AlgebroidDef& alg, const CoSec& w) {
  require_same_chart(alg.chart(), w.chart(), "differential");
  if (w.rank() != alg.rank()) throw ShapeError("differential: rank mismatch");
  const int k = w.degree();
  CoSec out(alg.chart(), alg.rank(), k + 1);
  for (const std::vector<int>& a : detail::increasing_tuples(alg.rank(), k + 1)) {
    Expr val(alg.chart());
    // Anchor terms: sum_p (-1)^p rho(e_{a_p}) w_{a \ p}.
    for (size_t p = 0; p < a.size(); ++p) {
      std::vector<int> rest;
      rest.reserve(a.size() - 1);
      for (size_t q = 0; q < a.size(); ++q)
        if (q != p) rest.push_back(a[q]);
      Expr term = alg.anchor_apply(alg.frame(a[p]), w.coeff(rest));
      if (p % 2 == 1) term = -term;
      val += term;
    }
    // Structure terms: sum_{p<q} (-1)^{p+q} w([e_{a_p}, e_{a_q}], rest).
    for (size_t p = 0; p + 1 < a.size(); ++p) {
      for (size_t q = p + 1; q < a.size(); ++q) {
        std::vector<int> rest;
        rest.reserve(a.size() - 1);
        rest.push_back(0); // placeholder for the bracket index
        for (size_t r = 0; r < a.size(); ++r)
          if (r != p && r != q) rest.push_back(a[r]);
        Expr term(alg.chart());
        for (int c = 0; c < alg.rank(); ++c) {
          const Expr& s = alg.structure(a[p], a[q], c);
          if (s.is_zero()) continue;
          rest[0] = c;
          const Expr wc = w.coeff(rest);
          if (!wc.is_zero()) term += s * wc;
        }
        if ((p + q) % 2 == 1) term = -term;
        val += term;
      }
    }
    out.add_coeff(a, val);
  }
  return out;
}

CoSec lie_derivative(const AlgebroidDef& alg, const Section& x,
                     const CoSec& w) {
  CoSec out = insert_section(x, differential(alg, w));
  if (w.degree() > 0) out += differential(alg, insert_section(x, w));
  return out;
}

MultiVec lie_derivative(const AlgebroidDef& alg, const Section& x,
                        const MultiVec& d) {
  return schouten(alg, MultiVec::from_section(x), d);
}

} // namespace skewcal
