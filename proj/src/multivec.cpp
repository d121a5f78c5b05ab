#include "skewcal/multivec.hpp"

namespace skewcal {

namespace detail {

int sort_index_tuple(std::vector<int>& idx) {
  int sign = 1;
  // Insertion sort, counting inversions; tuples are tiny.
  for (size_t i = 1; i < idx.size(); ++i) {
    int v = idx[i];
    size_t j = i;
    while (j > 0 && idx[j - 1] > v) {
      idx[j] = idx[j - 1];
      --j;
      sign = -sign;
    }
    idx[j] = v;
  }
  for (size_t i = 1; i < idx.size(); ++i)
    if (idx[i] == idx[i - 1]) return 0;
  return sign;
}

std::vector<std::vector<int>> increasing_tuples(int rank, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > rank) return out;
  std::vector<int> cur(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i;
  while (true) {
    out.push_back(cur);
    int p = k - 1;
    while (p >= 0 && cur[static_cast<size_t>(p)] == rank - k + p) --p;
    if (p < 0) break;
    ++cur[static_cast<size_t>(p)];
    for (int q = p + 1; q < k; ++q)
      cur[static_cast<size_t>(q)] = cur[static_cast<size_t>(q - 1)] + 1;
  }
  return out;
}

int merge_sign(const std::vector<int>& left, const std::vector<int>& right,
               std::vector<int>& merged) {
  merged.clear();
  merged.reserve(left.size() + right.size());
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) return 0;
    if (left[i] < right[j]) {
      merged.push_back(left[i++]);
    } else {
      // right[j] jumps over the remaining left entries
      if ((left.size() - i) % 2 == 1) sign = -sign;
      merged.push_back(right[j++]);
    }
  }
  while (i < left.size()) merged.push_back(left[i++]);
  while (j < right.size()) merged.push_back(right[j++]);
  return sign;
}

} // namespace detail

MultiVec MultiVec::from_section(const Section& x) {
  MultiVec out(x.chart(), x.rank(), 1);
  for (int a = 0; a < x.rank(); ++a) out.add_coeff({a}, x.comp(a));
  return out;
}

MultiVec MultiVec::from_function(int rank, const Expr& f) {
  MultiVec out(f.chart(), rank, 0);
  out.add_coeff({}, f);
  return out;
}

MultiVec MultiVec::basis(const ChartPtr& chart, int rank,
                         std::vector<int> idx) {
  MultiVec out(chart, rank, static_cast<int>(idx.size()));
  out.add_coeff(std::move(idx), Expr(chart, Rat(1)));
  return out;
}

Section MultiVec::to_section() const {
  if (degree() != 1) throw ShapeError("to_section: degree must be 1");
  std::vector<Expr> comps(static_cast<size_t>(rank()), Expr(chart()));
  for (const auto& [k, v] : coeffs()) comps[static_cast<size_t>(k[0])] = v;
  return Section(chart(), std::move(comps));
}

Expr MultiVec::scalar() const {
  if (degree() != 0) throw ShapeError("scalar: degree must be 0");
  return coeff({});
}

CoSec CoSec::from_components(const ChartPtr& chart, std::vector<Expr> comps) {
  CoSec out(chart, static_cast<int>(comps.size()), 1);
  for (int a = 0; a < static_cast<int>(comps.size()); ++a)
    out.add_coeff({a}, comps[static_cast<size_t>(a)]);
  return out;
}

CoSec CoSec::from_function(int rank, const Expr& f) {
  CoSec out(f.chart(), rank, 0);
  out.add_coeff({}, f);
  return out;
}

CoSec CoSec::basis(const ChartPtr& chart, int rank, std::vector<int> idx) {
  CoSec out(chart, rank, static_cast<int>(idx.size()));
  out.add_coeff(std::move(idx), Expr(chart, Rat(1)));
  return out;
}

Expr CoSec::scalar() const {
  if (degree() != 0) throw ShapeError("scalar: degree must be 0");
  return coeff({});
}

CoSec as_cosec(const MultiVec& d) {
  CoSec out(d.chart(), d.rank(), d.degree());
  for (const auto& [k, v] : d.coeffs()) out.add_coeff(k, v);
  return out;
}

MultiVec as_multivec(const CoSec& w) {
  MultiVec out(w.chart(), w.rank(), w.degree());
  for (const auto& [k, v] : w.coeffs()) out.add_coeff(k, v);
  return out;
}

Expr pair_full(const MultiVec& d, const CoSec& w) {
  require_same_chart(d.chart(), w.chart(), "pair_full");
  if (d.rank() != w.rank() || d.degree() != w.degree())
    throw ShapeError("pair_full: shape mismatch");
  Expr out(d.chart());
  for (const auto& [k, v] : d.coeffs()) {
    const Expr wv = w.coeff(k);
    if (!wv.is_zero()) out += v * wv;
  }
  return out;
}

MultiVec contract(const CoSec& phi, const MultiVec& d) {
  require_same_chart(phi.chart(), d.chart(), "contract");
  if (phi.rank() != d.rank()) throw ShapeError("contract: rank mismatch");
  if (phi.degree() != 1)
    throw ShapeError("contract: contracting cosection must have degree 1");
  if (d.degree() < 1)
    throw ShapeError("contract: multivector degree must be at least 1");
  MultiVec out(d.chart(), d.rank(), d.degree() - 1);
  for (const auto& [k, v] : d.coeffs()) {
    // Split off each index in turn: (i_phi D)_{K \ p} picks up the sign of
    // moving index k[p] to the front.
    for (size_t p = 0; p < k.size(); ++p) {
      const Expr pv = phi.coeff({k[p]});
      if (pv.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(k.size() - 1);
      for (size_t q = 0; q < k.size(); ++q)
        if (q != p) rest.push_back(k[q]);
      Expr term = pv * v;
      if (p % 2 == 1) term = -term;
      out.add_coeff(std::move(rest), term);
    }
  }
  return out;
}

CoSec insert_section(const Section& x, const CoSec& w) {
  require_same_chart(x.chart(), w.chart(), "insert_section");
  if (x.rank() != w.rank()) throw ShapeError("insert_section: rank mismatch");
  if (w.degree() < 1)
    throw ShapeError("insert_section: cosection degree must be at least 1");
  CoSec out(w.chart(), w.rank(), w.degree() - 1);
  for (const auto& [k, v] : w.coeffs()) {
    for (size_t p = 0; p < k.size(); ++p) {
      const Expr& xv = x.comp(k[p]);
      if (xv.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(k.size() - 1);
      for (size_t q = 0; q < k.size(); ++q)
        if (q != p) rest.push_back(k[q]);
      Expr term = xv * v;
      if (p % 2 == 1) term = -term;
      out.add_coeff(std::move(rest), term);
    }
  }
  return out;
}

Expr eval_cosec(const CoSec& w, const std::vector<Section>& xs) {
  if (static_cast<int>(xs.size()) != w.degree())
    throw ShapeError("eval_cosec: argument count must equal degree");
  CoSec cur = w;
  for (const Section& x : xs) cur = insert_section(x, cur);
  return cur.scalar();
}

} // namespace skewcal
